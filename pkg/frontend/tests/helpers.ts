import type { WorkbenchApi } from "../src/api";
import type {
  AnalyzeResponse,
  Linkage,
  LlmResult,
  RadarResponse,
  SpeechAnnotation,
  SsmlResponse,
} from "../src/types";

import analyzeExact from "./fixtures/analyze_exact.json";
import analyzeRelated from "./fixtures/analyze_related.json";
import analyzeAfterAccept from "./fixtures/analyze_after_accept.json";
import radarTextOnly from "./fixtures/radar_text_only.json";
import radarWithArticles from "./fixtures/radar_with_articles.json";
import radarWithBoth from "./fixtures/radar_with_both.json";
import ssmlEmphasis from "./fixtures/ssml_emphasis.json";
import llmSimplify from "./fixtures/llm_simplify.json";
import sessionText from "./fixtures/session_text.json";

export const fixtures = {
  analyzeExact: analyzeExact as unknown as AnalyzeResponse,
  analyzeRelated: analyzeRelated as unknown as AnalyzeResponse,
  analyzeAfterAccept: analyzeAfterAccept as unknown as AnalyzeResponse,
  radarTextOnly: radarTextOnly as unknown as RadarResponse,
  radarWithArticles: radarWithArticles as unknown as RadarResponse,
  radarWithBoth: radarWithBoth as unknown as RadarResponse,
  ssmlEmphasis: ssmlEmphasis as unknown as SsmlResponse,
  llmSimplify: llmSimplify as LlmResult,
  sessionText: sessionText as { text: string; after_accept: string },
};

/** Replays the recorded API responses: analyze answers depend on the exact
 * (text, linkage) pair the recordings were made with, radar on the profile
 * selection. */
export class RecordedApi implements WorkbenchApi {
  calls: { method: string; args: unknown[] }[] = [];

  async analyze(text: string, linkage: Linkage): Promise<AnalyzeResponse> {
    this.calls.push({ method: "analyze", args: [text, linkage] });
    if (text === fixtures.sessionText.text && linkage === "exact") {
      return structuredClone(fixtures.analyzeExact);
    }
    if (text === fixtures.sessionText.text && linkage === "related") {
      return structuredClone(fixtures.analyzeRelated);
    }
    if (text === fixtures.sessionText.after_accept) {
      return structuredClone(fixtures.analyzeAfterAccept);
    }
    throw new Error(`no recording for analyze(${JSON.stringify(text)}, ${linkage})`);
  }

  async radar(_text: string, profiles: string[]): Promise<RadarResponse> {
    this.calls.push({ method: "radar", args: [_text, profiles] });
    const key = [...profiles].sort().join(",");
    if (key === "") return structuredClone(fixtures.radarTextOnly);
    if (key === "articles") return structuredClone(fixtures.radarWithArticles);
    if (key === "articles,snippets") return structuredClone(fixtures.radarWithBoth);
    throw new Error(`no recording for radar(profiles=${key})`);
  }

  async listProfiles(): Promise<string[]> {
    return ["articles", "snippets"];
  }

  async renderSsml(
    text: string,
    annotations: SpeechAnnotation[],
    _detect: boolean,
  ): Promise<SsmlResponse> {
    this.calls.push({ method: "renderSsml", args: [text, annotations, _detect] });
    if (annotations.length === 0) {
      return { ssml: `<speak>${text}</speak>`, annotations: [] };
    }
    return structuredClone(fixtures.ssmlEmphasis);
  }

  async llmSimplify(text: string): Promise<LlmResult> {
    this.calls.push({ method: "llmSimplify", args: [text] });
    return structuredClone(fixtures.llmSimplify);
  }
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
