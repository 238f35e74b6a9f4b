import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "node",
    include: ["tests/**/*.test.ts"],
    // The live suite seeds a store, trains models and drives a real server.
    testTimeout: 120_000,
    hookTimeout: 180_000,
  },
});
