import { defineConfig } from "vite";

// the workbench API (textbench serve) behind both dev and preview servers
const apiProxy = {
  "^/(analyze|corpora|compare|radar|ssml|suggest|llm|profiles|health)": {
    target: "http://127.0.0.1:8000",
    changeOrigin: true,
  },
};

export default defineConfig({
  server: { proxy: apiProxy },
  preview: { proxy: apiProxy },
  test: {
    environment: "jsdom",
  },
});
