import { ApiRequestError } from "../api";
import type { EditorSession } from "../session";
import type { SpeechAnnotation } from "../types";

export interface SpeechTabHooks {
  /** how to ask the user for a value (swapped out in tests) */
  promptFn?: (message: string) => string | null;
  /** current selection inside the editor textarea */
  getSelection: () => [number, number];
}

/** Annotation toolbar, SSML preview, and download. The preview pane always
 * shows the document the API returned for the current annotation set. */
export function renderSpeechTab(
  container: HTMLElement,
  session: EditorSession,
  hooks: SpeechTabHooks,
): void {
  container.replaceChildren();
  const ask = hooks.promptFn ?? ((message: string) => window.prompt(message));

  const toolbar = document.createElement("div");
  toolbar.className = "speech-toolbar";
  const preview = document.createElement("pre");
  preview.className = "ssml-preview";
  const errorBox = document.createElement("div");
  errorBox.className = "speech-error";

  const refreshPreview = async (detect = false) => {
    try {
      const response = await session.api.renderSsml(
        session.currentText,
        session.annotations,
        detect,
      );
      session.annotations = response.annotations;
      errorBox.textContent = "";
      preview.textContent = response.ssml;
      renderAnnotationList();
    } catch (err) {
      if (err instanceof ApiRequestError) {
        errorBox.textContent = `${err.body.code}: ${err.body.message}`;
      } else {
        errorBox.textContent = String(err);
      }
    }
  };

  const addAnnotation = (annotation: SpeechAnnotation) => {
    session.annotations = [...session.annotations, annotation];
    void refreshPreview();
  };

  const button = (label: string, className: string, onClick: () => void) => {
    const el = document.createElement("button");
    el.textContent = label;
    el.className = className;
    el.addEventListener("click", onClick);
    toolbar.appendChild(el);
  };

  button("Emphasis", "add-emphasis", () => {
    const level = (ask("Emphasis level (reduced/moderate/strong):") ?? "strong") as
      | "reduced"
      | "moderate"
      | "strong";
    addAnnotation({ span: hooks.getSelection(), kind: "emphasis", level });
  });
  button("Pause", "add-break", () => {
    const ms = Number(ask("Pause length in ms:") ?? "500");
    addAnnotation({ span: hooks.getSelection(), kind: "break", duration_ms: ms });
  });
  button("Prosody", "add-prosody", () => {
    const rate = ask("Rate (x-slow/slow/medium/fast/x-fast, empty for none):") || undefined;
    const volume = ask("Volume (silent/x-soft/soft/medium/loud/x-loud, empty for none):") || undefined;
    const pitch = ask("Pitch (x-low/low/medium/high/x-high, empty for none):") || undefined;
    addAnnotation({ span: hooks.getSelection(), kind: "prosody", rate, volume, pitch });
  });
  button("Soft voice", "add-soft-voice", () => {
    addAnnotation({ span: hooks.getSelection(), kind: "soft_voice" });
  });
  button("Pronunciation", "add-phoneme", () => {
    const notation = ask("Phonetic notation (IPA):");
    if (notation) {
      addAnnotation({
        span: hooks.getSelection(),
        kind: "phoneme",
        alphabet: "ipa",
        notation,
      });
    }
  });
  button("Abbreviation", "add-substitute", () => {
    const alias = ask("Full name to speak instead:");
    if (alias) {
      addAnnotation({ span: hooks.getSelection(), kind: "substitute", alias });
    }
  });
  button("Detect dates & phones", "detect-say-as", () => void refreshPreview(true));
  button("Download .ssml", "download-ssml", () => {
    const blob = new Blob([preview.textContent ?? ""], { type: "application/ssml+xml" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "speech.ssml";
    link.click();
    URL.revokeObjectURL(link.href);
  });

  const annotationList = document.createElement("ul");
  annotationList.className = "annotation-list";
  const renderAnnotationList = () => {
    annotationList.replaceChildren();
    session.annotations.forEach((annotation, index) => {
      const item = document.createElement("li");
      item.textContent = `${annotation.kind} @ [${annotation.span[0]}, ${annotation.span[1]})`;
      const remove = document.createElement("button");
      remove.className = "remove-annotation";
      remove.textContent = "×";
      remove.addEventListener("click", () => {
        session.annotations = session.annotations.filter((_, i) => i !== index);
        void refreshPreview();
      });
      item.appendChild(remove);
      annotationList.appendChild(item);
    });
  };

  container.append(toolbar, errorBox, annotationList, preview);
  renderAnnotationList();
  void refreshPreview();
}
