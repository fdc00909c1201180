/** JSON contract of the workbench API. The UI does no metric math: every
 * number it shows comes straight from one of these payloads. */

export const METRIC_ORDER = [
  "word_count",
  "content_word_frequency",
  "grammar_frequency",
  "specificity",
  "ambiguity",
  "concept_density",
  "topic_density",
  "pct_nouns",
  "pct_verbs",
  "pct_adjectives",
  "pct_adverbs",
  "chain_count",
  "chain_length",
  "chain_span",
  "cross_chains",
] as const;

export type MetricName = (typeof METRIC_ORDER)[number];

/** Metrics where a larger value reads easier (arrow direction in the
 * statistics tab); the rest read harder when they grow. */
export const EASIER_WHEN_HIGHER: ReadonlySet<MetricName> = new Set([
  "content_word_frequency",
  "grammar_frequency",
  "pct_verbs",
  "pct_adverbs",
  "chain_length",
  "chain_span",
] as MetricName[]);

export type MetricVector = Record<MetricName, number>;

export type Linkage = "exact" | "synonym" | "related";

export interface ChainMember {
  token_index: number;
  start: number;
  end: number;
  surface: string;
}

export interface Chain {
  linkage: Linkage;
  representative_lemma: string;
  first: number;
  last: number;
  members: ChainMember[];
}

export interface SuggestionCandidate {
  lemma: string;
  freq: number;
}

export interface Suggestion {
  span: [number, number];
  original: string;
  original_freq: number;
  candidates: SuggestionCandidate[];
}

export interface AnalyzeResponse {
  vector: MetricVector;
  radar: Record<MetricName, number>;
  suggestions: Suggestion[];
  chains: Chain[];
}

export interface RadarResponse {
  axes: MetricName[];
  series: Record<string, number[]>;
  normalization_set: string[];
}

export interface SpeechAnnotation {
  span: [number, number];
  kind: "break" | "emphasis" | "prosody" | "soft_voice" | "say_as" | "substitute" | "phoneme";
  duration_ms?: number;
  level?: "reduced" | "moderate" | "strong";
  volume?: string;
  rate?: string;
  pitch?: string;
  format?: "date" | "telephone";
  alias?: string;
  alphabet?: string;
  notation?: string;
}

export interface SsmlResponse {
  ssml: string;
  annotations: SpeechAnnotation[];
}

export interface LlmResult {
  input: string;
  prompt_id: string;
  output: string;
  model_id: string;
  latency_ms: number;
  attempts: number;
}

export interface ApiError {
  code: string;
  message: string;
  detail?: unknown;
}

export const PROMPT_IDS = ["simplified", "easier", "esl", "older", "read_aloud"] as const;
export type PromptId = (typeof PROMPT_IDS)[number];

export const PROMPT_LABELS: Record<PromptId, string> = {
  simplified: "Simplify",
  easier: "Easier to understand",
  esl: "For non-native speakers",
  older: "For older readers",
  read_aloud: "For reading out loud",
};
