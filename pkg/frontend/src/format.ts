import type { MetricName } from "./types";

const PRECISION: Record<MetricName, number> = {
  word_count: 0,
  content_word_frequency: 0,
  grammar_frequency: 0,
  specificity: 2,
  ambiguity: 2,
  concept_density: 2,
  topic_density: 2,
  pct_nouns: 0,
  pct_verbs: 0,
  pct_adjectives: 0,
  pct_adverbs: 0,
  chain_count: 3,
  chain_length: 3,
  chain_span: 3,
  cross_chains: 4,
};

export const METRIC_TITLES: Record<MetricName, string> = {
  word_count: "Word count",
  content_word_frequency: "Content word frequency",
  grammar_frequency: "Grammar frequency",
  specificity: "Specificity",
  ambiguity: "Ambiguity",
  concept_density: "Concept density",
  topic_density: "Topic density",
  pct_nouns: "Nouns (%)",
  pct_verbs: "Verbs (%)",
  pct_adjectives: "Adjectives (%)",
  pct_adverbs: "Adverbs (%)",
  chain_count: "Lexical chains",
  chain_length: "Chain length",
  chain_span: "Chain span",
  cross_chains: "Cross chains",
};

export function formatMetric(name: MetricName, value: number): string {
  const digits = PRECISION[name];
  return digits === 0 ? Math.round(value).toLocaleString("en-US") : value.toFixed(digits);
}
