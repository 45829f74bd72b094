import { defineConfig } from 'vitest/config';

export default defineConfig({
  base: './',
  server: {
    // dev only; the production bundle is served by the Python service itself
    proxy: { '/api': 'http://127.0.0.1:8000' },
  },
  build: {
    outDir: 'dist',
    chunkSizeWarningLimit: 900,
  },
  test: {
    environment: 'jsdom',
  },
});
