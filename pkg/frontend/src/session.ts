import type { WorkbenchApi } from "./api";
import type {
  AnalyzeResponse,
  Linkage,
  PromptId,
  SpeechAnnotation,
  Suggestion,
} from "./types";

export interface SessionOptions {
  /** ms to wait after the last edit before re-analyzing */
  debounceMs?: number;
}

type Listener = () => void;

/** One editing session: the original text is frozen at load time and every
 * later state compares against it. At most one analyze request is in
 * flight; responses for stale requests are dropped (latest wins). */
export class EditorSession {
  readonly api: WorkbenchApi;
  originalText = "";
  currentText = "";
  /** analysis of the frozen original text */
  original: AnalyzeResponse | null = null;
  /** analysis matching some recent value of currentText (latest-wins) */
  latest: AnalyzeResponse | null = null;
  linkage: Linkage = "exact";
  selectedCorpora: string[] = [];
  availableCorpora: string[] = [];
  annotations: SpeechAnnotation[] = [];
  promptId: PromptId = "simplified";
  error: string | null = null;

  private debounceMs: number;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private requestSeq = 0;
  private listeners: Listener[] = [];

  constructor(api: WorkbenchApi, options: SessionOptions = {}) {
    this.api = api;
    this.debounceMs = options.debounceMs ?? 300;
  }

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  /** Freeze the original text and analyze it once for both columns. */
  async load(text: string): Promise<void> {
    this.originalText = text;
    this.currentText = text;
    const response = await this.api.analyze(text, this.linkage);
    this.original = response;
    this.latest = response;
    this.notify();
  }

  /** Edit the working text; re-analysis is debounced and latest-wins. */
  edit(text: string): void {
    this.currentText = text;
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.refresh();
    }, this.debounceMs);
    this.notify();
  }

  /** Re-analyze currentText now; stale responses never overwrite newer ones. */
  async refresh(): Promise<void> {
    const seq = ++this.requestSeq;
    try {
      const response = await this.api.analyze(this.currentText, this.linkage);
      if (seq === this.requestSeq) {
        this.latest = response;
        this.error = null;
        this.notify();
      }
    } catch (err) {
      if (seq === this.requestSeq) {
        this.error = err instanceof Error ? err.message : String(err);
        this.notify();
      }
    }
  }

  async setLinkage(linkage: Linkage): Promise<void> {
    this.linkage = linkage;
    await this.refresh();
    this.notify();
  }

  /** Replace the suggested span with a candidate and re-analyze. */
  async acceptSuggestion(suggestion: Suggestion, candidateIndex = 0): Promise<void> {
    const [start, end] = suggestion.span;
    const lemma = suggestion.candidates[candidateIndex].lemma;
    this.currentText =
      this.currentText.slice(0, start) + lemma + this.currentText.slice(end);
    await this.refresh();
  }

  /** Rewrite the whole working text with the chosen prompt. */
  async llmSimplify(): Promise<void> {
    const result = await this.api.llmSimplify(this.currentText, this.promptId);
    this.currentText = result.output;
    await this.refresh();
  }

  toggleCorpus(name: string): void {
    if (this.selectedCorpora.includes(name)) {
      this.selectedCorpora = this.selectedCorpora.filter((n) => n !== name);
    } else {
      this.selectedCorpora = [...this.selectedCorpora, name];
    }
    this.notify();
  }
}
