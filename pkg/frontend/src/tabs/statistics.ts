import { formatMetric, METRIC_TITLES } from "../format";
import type { EditorSession } from "../session";
import { EASIER_WHEN_HIGHER, METRIC_ORDER } from "../types";

/** Two-column metric table: the working text next to the frozen original.
 * Every number is the API's value, formatted but never recomputed. */
export function renderStatisticsTab(container: HTMLElement, session: EditorSession): void {
  container.replaceChildren();
  const current = session.latest?.vector;
  const original = session.original?.vector;
  if (!current || !original) {
    const note = document.createElement("p");
    note.className = "empty-note";
    note.textContent = "Load a text to see its statistics.";
    container.appendChild(note);
    return;
  }
  const table = document.createElement("table");
  table.className = "stats-table";
  const head = document.createElement("tr");
  for (const title of ["Metric", "Current", "Original", ""]) {
    const th = document.createElement("th");
    th.textContent = title;
    head.appendChild(th);
  }
  table.appendChild(head);
  for (const metric of METRIC_ORDER) {
    const row = document.createElement("tr");
    row.dataset.metric = metric;
    const name = document.createElement("td");
    name.textContent = METRIC_TITLES[metric];
    const currentCell = document.createElement("td");
    currentCell.className = "stat-current";
    currentCell.textContent = formatMetric(metric, current[metric]);
    const originalCell = document.createElement("td");
    originalCell.className = "stat-original";
    originalCell.textContent = formatMetric(metric, original[metric]);
    const arrow = document.createElement("td");
    arrow.className = "stat-direction";
    // arrow marks which direction reads easier for this metric
    arrow.textContent = EASIER_WHEN_HIGHER.has(metric) ? "↑ easier" : "↓ easier";
    row.append(name, currentCell, originalCell, arrow);
    table.appendChild(row);
  }
  container.appendChild(table);
}
