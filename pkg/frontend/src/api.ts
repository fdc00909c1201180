import type {
  AnalyzeResponse,
  ApiError,
  Linkage,
  LlmResult,
  PromptId,
  RadarResponse,
  SpeechAnnotation,
  SsmlResponse,
} from "./types";

export class ApiRequestError extends Error {
  constructor(
    public readonly status: number,
    public readonly body: ApiError,
  ) {
    super(body.message || `HTTP ${status}`);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(path, init);
  if (!res.ok) {
    let body: ApiError;
    try {
      body = (await res.json()) as ApiError;
    } catch {
      body = { code: "http_error", message: `HTTP ${res.status}` };
    }
    throw new ApiRequestError(res.status, body);
  }
  return (await res.json()) as T;
}

function post<T>(path: string, payload: unknown): Promise<T> {
  return request<T>(path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  });
}

/** Everything the editor needs from the backend; injectable for tests. */
export interface WorkbenchApi {
  analyze(text: string, linkage: Linkage): Promise<AnalyzeResponse>;
  radar(text: string, profiles: string[]): Promise<RadarResponse>;
  listProfiles(): Promise<string[]>;
  renderSsml(
    text: string,
    annotations: SpeechAnnotation[],
    detect: boolean,
  ): Promise<SsmlResponse>;
  llmSimplify(text: string, promptId: PromptId): Promise<LlmResult>;
}

export const httpApi: WorkbenchApi = {
  analyze: (text, linkage) =>
    post("/analyze", { text, options: { linkage } }),
  radar: (text, profiles) => {
    const params = new URLSearchParams({ text, profiles: profiles.join(",") });
    return request(`/radar?${params}`);
  },
  listProfiles: async () => {
    const body = await request<{ profiles: string[] }>("/profiles");
    return body.profiles;
  },
  renderSsml: (text, annotations, detect) =>
    post("/ssml", { text, annotations, detect }),
  llmSimplify: (text, promptId) =>
    post("/llm/simplify", { text, prompt_id: promptId }),
};
