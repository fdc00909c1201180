import { httpApi } from "./api";
import { EditorSession } from "./session";
import { renderChainsTab } from "./tabs/chains";
import { renderSimplificationTab } from "./tabs/simplification";
import { renderSpeechTab } from "./tabs/speech";
import { renderStatisticsTab } from "./tabs/statistics";
import { renderVisualizationTab } from "./tabs/visualization";

const TABS = ["Simplification", "Lexical Chains", "Statistics", "Speech", "Visualization"] as const;
type TabName = (typeof TABS)[number];

const SAMPLE = "Paste or type your text here, then pick a tab on the right.";

export function mountEditor(root: HTMLElement): EditorSession {
  const session = new EditorSession(httpApi);

  root.innerHTML = `
    <header class="topbar"><h1>textbench editor</h1></header>
    <main class="layout">
      <section class="editor-pane">
        <textarea class="editor-text" spellcheck="false"></textarea>
        <div class="editor-status"></div>
      </section>
      <section class="tab-pane">
        <nav class="tab-bar"></nav>
        <div class="tab-body"></div>
      </section>
    </main>`;

  const textarea = root.querySelector<HTMLTextAreaElement>(".editor-text")!;
  const status = root.querySelector<HTMLElement>(".editor-status")!;
  const tabBar = root.querySelector<HTMLElement>(".tab-bar")!;
  const tabBody = root.querySelector<HTMLElement>(".tab-body")!;
  let activeTab: TabName = "Simplification";

  const speechHooks = {
    getSelection: (): [number, number] => [
      textarea.selectionStart ?? 0,
      textarea.selectionEnd ?? 0,
    ],
  };

  const renderActiveTab = () => {
    switch (activeTab) {
      case "Simplification":
        renderSimplificationTab(tabBody, session);
        break;
      case "Lexical Chains":
        renderChainsTab(tabBody, session);
        break;
      case "Statistics":
        renderStatisticsTab(tabBody, session);
        break;
      case "Speech":
        renderSpeechTab(tabBody, session, speechHooks);
        break;
      case "Visualization":
        renderVisualizationTab(tabBody, session);
        break;
    }
  };

  for (const name of TABS) {
    const button = document.createElement("button");
    button.className = "tab-button";
    button.textContent = name;
    button.addEventListener("click", () => {
      activeTab = name;
      tabBar
        .querySelectorAll(".tab-button")
        .forEach((el) => el.classList.toggle("active", el.textContent === name));
      renderActiveTab();
    });
    tabBar.appendChild(button);
  }
  tabBar.querySelector(".tab-button")?.classList.add("active");

  session.subscribe(() => {
    if (textarea.value !== session.currentText) {
      textarea.value = session.currentText;
    }
    status.textContent = session.error ? `error: ${session.error}` : "";
    renderActiveTab();
  });

  textarea.addEventListener("input", () => session.edit(textarea.value));

  void (async () => {
    session.availableCorpora = await httpApi.listProfiles().catch(() => []);
    await session.load(SAMPLE);
    textarea.value = session.currentText;
    renderActiveTab();
  })();

  return session;
}

const appRoot = document.getElementById("app");
if (appRoot) {
  mountEditor(appRoot);
}
