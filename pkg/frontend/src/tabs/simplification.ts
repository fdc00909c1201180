import type { EditorSession } from "../session";
import { PROMPT_IDS, PROMPT_LABELS, type PromptId } from "../types";

/** Suggestion list + LLM rewrite action. Accepting a suggestion replaces its
 * span in the working text and triggers re-analysis. */
export function renderSimplificationTab(container: HTMLElement, session: EditorSession): void {
  container.replaceChildren();

  const llmRow = document.createElement("div");
  llmRow.className = "llm-row";
  const select = document.createElement("select");
  select.className = "prompt-select";
  for (const id of PROMPT_IDS) {
    const option = document.createElement("option");
    option.value = id;
    option.textContent = PROMPT_LABELS[id];
    option.selected = id === session.promptId;
    select.appendChild(option);
  }
  select.addEventListener("change", () => {
    session.promptId = select.value as PromptId;
  });
  const llmButton = document.createElement("button");
  llmButton.className = "llm-simplify";
  llmButton.textContent = "Rewrite with LLM";
  llmButton.addEventListener("click", () => void session.llmSimplify());
  llmRow.append(select, llmButton);
  container.appendChild(llmRow);

  const list = document.createElement("ul");
  list.className = "suggestion-list";
  const suggestions = session.latest?.suggestions ?? [];
  if (suggestions.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-note";
    empty.textContent = "No simplification suggestions for the current text.";
    container.appendChild(empty);
  }
  suggestions.forEach((suggestion, index) => {
    const item = document.createElement("li");
    item.className = "suggestion";
    item.dataset.index = String(index);
    const word = document.createElement("span");
    word.className = "suggestion-original";
    word.textContent = suggestion.original;
    const freq = document.createElement("span");
    freq.className = "suggestion-freq";
    freq.textContent = String(suggestion.original_freq);
    item.append(word, document.createTextNode(" ("), freq, document.createTextNode(") → "));
    suggestion.candidates.forEach((candidate, candidateIndex) => {
      const button = document.createElement("button");
      button.className = "candidate";
      button.textContent = `${candidate.lemma} (${candidate.freq})`;
      button.addEventListener("click", () =>
        void session.acceptSuggestion(suggestion, candidateIndex),
      );
      item.appendChild(button);
    });
    list.appendChild(item);
  });
  container.appendChild(list);
}
