/** Fixed 12-color palette, cycled by index, so chain highlights and radar
 * polygons are reproducible across runs and snapshots. */
export const PALETTE = [
  "#1f77b4",
  "#ff7f0e",
  "#2ca02c",
  "#d62728",
  "#9467bd",
  "#8c564b",
  "#e377c2",
  "#7f7f7f",
  "#bcbd22",
  "#17becf",
  "#aec7e8",
  "#ffbb78",
] as const;

export function colorFor(index: number): string {
  return PALETTE[index % PALETTE.length];
}
