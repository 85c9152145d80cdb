import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "node",
    globalSetup: "./test/globalSetup.ts",
    testTimeout: 30000,
    hookTimeout: 30000,
  },
});
