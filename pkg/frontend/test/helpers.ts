import { vi } from 'vitest';
import { BEND90_STATE, PARAMS_FIXTURE, WORKSPACE_2X2, ZERO_STATE } from './fixtures';

// Minimal Response stand-in; api.ts only touches ok/status/json().
export function jsonResponse(body: unknown, status = 200) {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: async () => JSON.parse(JSON.stringify(body)),
  };
}

export function deferred<T>() {
  let resolve!: (value: T) => void;
  let reject!: (err: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

export type FetchHandler = (url: string, init?: RequestInit) => unknown;

/**
 * Default service double: params/workspace fixtures, and commands answered
 * with the captured zero pose, or the captured 90-degree bend when segment 1
 * asks for theta2 = 90.
 */
export function defaultHandler(url: string, init?: RequestInit): unknown {
  if (url.startsWith('/api/params')) return jsonResponse(PARAMS_FIXTURE);
  if (url.startsWith('/api/workspace')) return jsonResponse(WORKSPACE_2X2);
  if (url.startsWith('/api/command')) {
    const body = JSON.parse(String(init?.body ?? '{}'));
    const first = body.segments?.[0];
    if (first && first.theta2_deg === 90) return jsonResponse(BEND90_STATE);
    return jsonResponse(ZERO_STATE);
  }
  throw new Error(`unrouted url ${url}`);
}

/** Install a fetch mock; the handler can be swapped mid-test via .use(). */
export function mockFetch(handler: FetchHandler = defaultHandler) {
  let current = handler;
  const fn = vi.fn(async (url: unknown, init?: RequestInit) => current(String(url), init));
  vi.stubGlobal('fetch', fn);
  return {
    fn,
    use(next: FetchHandler) {
      current = next;
    },
    commandCalls(): Array<{ url: string; body: { segments: Array<Record<string, number>> } }> {
      return fn.mock.calls
        .filter(([url]) => String(url).startsWith('/api/command'))
        .map(([url, init]) => ({
          url: String(url),
          body: JSON.parse(String((init as RequestInit | undefined)?.body ?? '{}')),
        }));
    },
  };
}

export async function settle(ms = 80): Promise<void> {
  await vi.advanceTimersByTimeAsync(ms);
}
