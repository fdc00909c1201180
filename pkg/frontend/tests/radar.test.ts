import { beforeEach, describe, expect, it } from "vitest";

import { polygonPoints, renderRadar } from "../src/radar";
import { EditorSession } from "../src/session";
import { renderVisualizationTab } from "../src/tabs/visualization";
import { RecordedApi, fixtures, flush } from "./helpers";

let container: HTMLElement;

beforeEach(() => {
  container = document.createElement("div");
  document.body.replaceChildren(container);
});

describe("radar rendering", () => {
  it("polygon vertices match the response values exactly", () => {
    renderRadar(container, fixtures.radarWithArticles);
    const size = 460;
    const radius = size / 2 - 60;
    for (const [name, values] of Object.entries(fixtures.radarWithArticles.series)) {
      const polygon = container.querySelector(`polygon[data-series="${name}"]`)!;
      expect(polygon.getAttribute("points")).toBe(
        polygonPoints(values, size / 2, size / 2, radius),
      );
    }
  });

  it("draws one series polygon per response series plus four grid rings", () => {
    renderRadar(container, fixtures.radarWithBoth);
    const polygons = container.querySelectorAll("polygon");
    expect(polygons.length).toBe(4 + Object.keys(fixtures.radarWithBoth.series).length);
  });

  it("all plotted values stay inside the unit disk", () => {
    for (const values of Object.values(fixtures.radarWithBoth.series)) {
      for (const value of values) {
        expect(value).toBeGreaterThanOrEqual(0);
        expect(value).toBeLessThanOrEqual(1);
      }
    }
  });
});

describe("visualization tab", () => {
  async function sessionWithCorpora() {
    const session = new EditorSession(new RecordedApi(), { debounceMs: 0 });
    await session.load(fixtures.sessionText.text);
    session.availableCorpora = ["articles", "snippets"];
    return session;
  }

  it("with no corpora toggled only the target polygon is drawn", async () => {
    const session = await sessionWithCorpora();
    renderVisualizationTab(container, session);
    await flush();
    const series = container.querySelectorAll("polygon[data-series]");
    expect(series.length).toBe(1);
    expect((series[0] as SVGElement).getAttribute("data-series")).toBe("current");
  });

  it("toggling a corpus re-requests and rescales the target polygon", async () => {
    const session = await sessionWithCorpora();
    renderVisualizationTab(container, session);
    await flush();
    const before = container
      .querySelector('polygon[data-series="current"]')!
      .getAttribute("points");

    (container.querySelector('input[value="articles"]') as HTMLInputElement).click();
    await flush();
    const after = container
      .querySelector('polygon[data-series="current"]')!
      .getAttribute("points");
    // the normalization set changed server-side, so the same text plots differently
    expect(after).not.toBe(before);
    expect(container.querySelectorAll("polygon[data-series]").length).toBe(2);

    (container.querySelector('input[value="snippets"]') as HTMLInputElement).click();
    await flush();
    expect(container.querySelectorAll("polygon[data-series]").length).toBe(3);
    const rescaled = container
      .querySelector('polygon[data-series="current"]')!
      .getAttribute("points");
    expect(rescaled).not.toBe(after);
  });

  it("normalization set in the response covers exactly the series shown", () => {
    expect(fixtures.radarTextOnly.normalization_set).toEqual(["current"]);
    expect(fixtures.radarWithArticles.normalization_set.sort()).toEqual(
      ["articles", "current"].sort(),
    );
    expect(fixtures.radarWithBoth.normalization_set.sort()).toEqual(
      ["articles", "current", "snippets"].sort(),
    );
  });
});
