import { colorFor } from "../palette";
import type { EditorSession } from "../session";
import type { Linkage } from "../types";

const LINKAGES: Linkage[] = ["exact", "synonym", "related"];

/** Read-only view of the working text with each chain's member spans
 * highlighted in that chain's color. Chain i always gets palette color i. */
export function renderChainsTab(container: HTMLElement, session: EditorSession): void {
  container.replaceChildren();

  const selector = document.createElement("div");
  selector.className = "linkage-selector";
  for (const linkage of LINKAGES) {
    const label = document.createElement("label");
    const radio = document.createElement("input");
    radio.type = "radio";
    radio.name = "linkage";
    radio.value = linkage;
    radio.checked = session.linkage === linkage;
    radio.addEventListener("change", () => void session.setLinkage(linkage));
    label.append(radio, document.createTextNode(` ${linkage}`));
    selector.appendChild(label);
  }
  container.appendChild(selector);

  const chains = session.latest?.chains ?? [];
  const text = session.currentText;

  // chain index per character position (members never overlap)
  const spans: { start: number; end: number; chain: number }[] = [];
  chains.forEach((chain, chainIndex) => {
    for (const member of chain.members) {
      spans.push({ start: member.start, end: member.end, chain: chainIndex });
    }
  });
  spans.sort((a, b) => a.start - b.start);

  const view = document.createElement("div");
  view.className = "chain-view";
  let pos = 0;
  for (const span of spans) {
    if (span.start > pos) {
      view.appendChild(document.createTextNode(text.slice(pos, span.start)));
    }
    const mark = document.createElement("span");
    mark.className = "chain-member";
    mark.dataset.chain = String(span.chain);
    mark.style.backgroundColor = colorFor(span.chain);
    mark.textContent = text.slice(span.start, span.end);
    view.appendChild(mark);
    pos = span.end;
  }
  view.appendChild(document.createTextNode(text.slice(pos)));
  container.appendChild(view);

  const legend = document.createElement("ul");
  legend.className = "chain-legend";
  chains.forEach((chain, index) => {
    const item = document.createElement("li");
    const swatch = document.createElement("span");
    swatch.className = "legend-swatch";
    swatch.style.background = colorFor(index);
    item.append(
      swatch,
      document.createTextNode(
        ` ${chain.representative_lemma} (${chain.members.length} mentions)`,
      ),
    );
    legend.appendChild(item);
  });
  container.appendChild(legend);
}
