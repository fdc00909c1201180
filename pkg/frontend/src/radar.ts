import { colorFor } from "./palette";
import type { RadarResponse } from "./types";

const AXIS_LABELS: Record<string, string> = {
  word_count: "word count",
  content_word_frequency: "word frequency",
  grammar_frequency: "grammar frequency",
  specificity: "specificity",
  ambiguity: "ambiguity",
  concept_density: "concept density",
  topic_density: "topic density",
  pct_nouns: "% nouns",
  pct_verbs: "% verbs",
  pct_adjectives: "% adjectives",
  pct_adverbs: "% adverbs",
  chain_count: "chains",
  chain_length: "chain length",
  chain_span: "chain span",
  cross_chains: "cross chains",
};

export function vertex(
  index: number,
  value: number,
  axisCount: number,
  cx: number,
  cy: number,
  radius: number,
): [number, number] {
  const angle = -Math.PI / 2 + (2 * Math.PI * index) / axisCount;
  return [cx + radius * value * Math.cos(angle), cy + radius * value * Math.sin(angle)];
}

export function polygonPoints(
  values: number[],
  cx: number,
  cy: number,
  radius: number,
): string {
  return values
    .map((v, i) => {
      const clamped = Math.max(0, Math.min(1, v));
      const [x, y] = vertex(i, clamped, values.length, cx, cy, radius);
      return `${x.toFixed(2)},${y.toFixed(2)}`;
    })
    .join(" ");
}

/** Render the radar response as an inline SVG; the numbers plotted are the
 * server's easiness values, untouched. */
export function renderRadar(container: HTMLElement, response: RadarResponse): void {
  const size = 460;
  const cx = size / 2;
  const cy = size / 2;
  const radius = size / 2 - 60;
  const n = response.axes.length;
  const svgNS = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(svgNS, "svg");
  svg.setAttribute("viewBox", `0 0 ${size} ${size}`);
  svg.setAttribute("class", "radar-chart");

  for (const frac of [0.25, 0.5, 0.75, 1.0]) {
    const ring = document.createElementNS(svgNS, "polygon");
    ring.setAttribute("points", polygonPoints(new Array(n).fill(frac), cx, cy, radius));
    ring.setAttribute("class", "radar-ring");
    svg.appendChild(ring);
  }
  response.axes.forEach((axis, i) => {
    const [x2, y2] = vertex(i, 1, n, cx, cy, radius);
    const spoke = document.createElementNS(svgNS, "line");
    spoke.setAttribute("x1", String(cx));
    spoke.setAttribute("y1", String(cy));
    spoke.setAttribute("x2", x2.toFixed(2));
    spoke.setAttribute("y2", y2.toFixed(2));
    spoke.setAttribute("class", "radar-spoke");
    svg.appendChild(spoke);
    const [lx, ly] = vertex(i, 1.13, n, cx, cy, radius);
    const label = document.createElementNS(svgNS, "text");
    label.setAttribute("x", lx.toFixed(2));
    label.setAttribute("y", ly.toFixed(2));
    label.setAttribute("class", "radar-label");
    label.setAttribute(
      "text-anchor",
      lx > cx + 4 ? "start" : lx < cx - 4 ? "end" : "middle",
    );
    label.textContent = AXIS_LABELS[axis] ?? axis;
    svg.appendChild(label);
  });

  Object.entries(response.series).forEach(([name, values], index) => {
    const polygon = document.createElementNS(svgNS, "polygon");
    polygon.setAttribute("points", polygonPoints(values, cx, cy, radius));
    polygon.setAttribute("class", "radar-series");
    polygon.setAttribute("data-series", name);
    polygon.setAttribute("fill", colorFor(index));
    polygon.setAttribute("fill-opacity", "0.15");
    polygon.setAttribute("stroke", colorFor(index));
    svg.appendChild(polygon);
  });

  container.replaceChildren(svg);

  const legend = document.createElement("div");
  legend.className = "radar-legend";
  Object.keys(response.series).forEach((name, index) => {
    const item = document.createElement("span");
    item.className = "legend-item";
    const swatch = document.createElement("span");
    swatch.className = "legend-swatch";
    swatch.style.background = colorFor(index);
    item.append(swatch, document.createTextNode(name));
    legend.appendChild(item);
  });
  container.appendChild(legend);
}
