import { defineConfig } from "vitest/config";

export default defineConfig({
  base: "./", // assets are served by the API process from any sub-path
  build: {
    outDir: "dist",
    sourcemap: true,
  },
  server: {
    proxy: {
      // during development the API runs separately
      "/api": "http://127.0.0.1:8000",
      "/healthz": "http://127.0.0.1:8000",
    },
  },
  test: {
    environment: "jsdom",
    include: ["test/**/*.test.ts"],
  },
});
