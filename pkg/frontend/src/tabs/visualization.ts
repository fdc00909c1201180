import { renderRadar } from "../radar";
import type { EditorSession } from "../session";

/** Radar chart of the working text plus any toggled corpus profiles. Each
 * toggle re-requests the series so normalization always reflects exactly
 * the corpora shown. */
export function renderVisualizationTab(container: HTMLElement, session: EditorSession): void {
  container.replaceChildren();

  const toggles = document.createElement("div");
  toggles.className = "corpus-toggles";
  for (const name of session.availableCorpora) {
    const label = document.createElement("label");
    const checkbox = document.createElement("input");
    checkbox.type = "checkbox";
    checkbox.value = name;
    checkbox.checked = session.selectedCorpora.includes(name);
    checkbox.addEventListener("change", () => {
      session.toggleCorpus(name);
      void draw();
    });
    label.append(checkbox, document.createTextNode(` ${name}`));
    toggles.appendChild(label);
  }
  const chart = document.createElement("div");
  chart.className = "radar-container";
  container.append(toggles, chart);

  const draw = async () => {
    const response = await session.api.radar(session.currentText, session.selectedCorpora);
    renderRadar(chart, response);
  };
  void draw();
}
