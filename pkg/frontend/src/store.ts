import {
  ApiError,
  fetchParams,
  fetchWorkspace,
  sendCommand,
  type CommandRequest,
  type ParamsResponse,
  type SegmentCommand,
  type StateResponse,
  type WorkspaceResponse,
} from './api';

// Human-perceived liveness without flooding the service on slider drags.
export const DEBOUNCE_MS = 50;
const RETRY_BASE_MS = 250;
const RETRY_MAX_MS = 4000;

export interface Preset {
  name: string;
  segments: SegmentCommand[];
}

export const PRESETS: Preset[] = [
  {
    name: 'straight',
    segments: [
      { theta1_deg: 0, theta2_deg: 0 },
      { theta1_deg: 0, theta2_deg: 0 },
      { theta1_deg: 0, theta2_deg: 0 },
    ],
  },
  {
    name: 'quarter bend',
    segments: [
      { theta1_deg: 0, theta2_deg: 90 },
      { theta1_deg: 0, theta2_deg: 0 },
      { theta1_deg: 0, theta2_deg: 0 },
    ],
  },
  {
    name: 's-curve',
    segments: [
      { theta1_deg: 0, theta2_deg: 75 },
      { theta1_deg: 180, theta2_deg: 75 },
      { theta1_deg: 0, theta2_deg: 30 },
    ],
  },
  {
    name: 'multi-curve',
    segments: [
      { theta1_deg: 0, theta2_deg: 60 },
      { theta1_deg: 90, theta2_deg: 45 },
      { theta1_deg: 225, theta2_deg: 30 },
    ],
  },
];

function clamp(value: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, value));
}

function sameCommand(a: SegmentCommand[], b: SegmentCommand[]): boolean {
  if (a.length !== b.length) return false;
  return a.every(
    (s, i) => s.theta1_deg === b[i].theta1_deg && s.theta2_deg === b[i].theta2_deg,
  );
}

/**
 * Holds every piece of UI state and runs the command loop.
 *
 * The loop keeps at most one POST in flight. Control changes during a
 * request mark the store dirty; when the response lands the newest controls
 * are sent immediately, so the last write always wins. `stale` is true
 * whenever `latest` does not correspond to the current control values, which
 * is what drives the in-flight indicator.
 */
export class TeleopStore {
  params: ParamsResponse | null = null;
  controls: SegmentCommand[] = [];
  latest: StateResponse | null = null;
  stale = true;
  offline = false;
  rangeError: { status: number; detail: unknown } | null = null;
  overlayOn = false;
  cloud: WorkspaceResponse | null = null;
  cloudLoading = false;

  private listeners = new Set<() => void>();
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;
  private retryTimer: ReturnType<typeof setTimeout> | null = null;
  private retryDelay = RETRY_BASE_MS;
  private inFlight = false;
  private dirty = false;
  private cloudCache = new Map<string, WorkspaceResponse>();

  subscribe(fn: () => void): () => void {
    this.listeners.add(fn);
    return () => this.listeners.delete(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  /** Fetch the advertised parameter ranges, then request the initial pose. */
  async init(): Promise<void> {
    this.params = await fetchParams();
    const n = this.params.params.num_segments;
    this.controls = Array.from({ length: n }, () => ({ theta1_deg: 0, theta2_deg: 0 }));
    this.emit();
    this.requestSend();
  }

  get theta2MaxDeg(): number {
    return this.params?.derived.theta2_max_deg ?? 90;
  }

  setControl(segment: number, field: keyof SegmentCommand, value: number): void {
    if (!Number.isFinite(value) || segment < 0 || segment >= this.controls.length) return;
    const hi = field === 'theta1_deg' ? 360 : this.theta2MaxDeg;
    this.controls[segment] = { ...this.controls[segment], [field]: clamp(value, 0, hi) };
    this.stale = true;
    this.emit();
    this.scheduleSend();
  }

  applyPreset(preset: Preset): void {
    this.controls = preset.segments.map((s) => ({
      theta1_deg: clamp(s.theta1_deg, 0, 360),
      theta2_deg: clamp(s.theta2_deg, 0, this.theta2MaxDeg),
    }));
    this.stale = true;
    this.emit();
    this.scheduleSend();
  }

  private scheduleSend(): void {
    if (this.debounceTimer !== null) clearTimeout(this.debounceTimer);
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = null;
      this.requestSend();
    }, DEBOUNCE_MS);
  }

  private requestSend(): void {
    if (this.inFlight) {
      this.dirty = true;
      return;
    }
    void this.send();
  }

  private async send(): Promise<void> {
    this.inFlight = true;
    const snapshot: CommandRequest = { segments: this.controls.map((c) => ({ ...c })) };
    try {
      const state = await sendCommand(snapshot);
      this.offline = false;
      this.retryDelay = RETRY_BASE_MS;
      if (this.retryTimer !== null) {
        clearTimeout(this.retryTimer);
        this.retryTimer = null;
      }
      this.rangeError = null;
      this.latest = state;
      this.stale = this.dirty || !sameCommand(snapshot.segments, this.controls);
    } catch (err) {
      if (err instanceof ApiError) {
        // the service answered: these control values are rejected, keep the
        // last good pose on screen but flagged stale
        this.offline = false;
        this.rangeError = { status: err.status, detail: err.detail };
        this.stale = true;
      } else {
        this.offline = true;
        this.scheduleRetry();
      }
    } finally {
      this.inFlight = false;
    }
    const resend = this.dirty;
    this.dirty = false;
    this.emit();
    if (resend) this.requestSend();
  }

  private scheduleRetry(): void {
    if (this.retryTimer !== null) return;
    const delay = this.retryDelay;
    this.retryDelay = Math.min(this.retryDelay * 2, RETRY_MAX_MS);
    this.retryTimer = setTimeout(() => {
      this.retryTimer = null;
      this.requestSend();
    }, delay);
  }

  /** Show or hide the workspace cloud; each grid spec is fetched once. */
  async toggleOverlay(on: boolean, grid = 'default'): Promise<void> {
    this.overlayOn = on;
    if (!on) {
      this.emit();
      return;
    }
    const cached = this.cloudCache.get(grid);
    if (cached) {
      this.cloud = cached;
      this.emit();
      return;
    }
    this.cloudLoading = true;
    this.emit();
    try {
      const ws = await fetchWorkspace(grid === 'default' ? undefined : grid);
      this.cloudCache.set(grid, ws);
      this.cloud = ws;
    } catch (err) {
      this.overlayOn = false;
      if (!(err instanceof ApiError)) this.offline = true;
    } finally {
      this.cloudLoading = false;
      this.emit();
    }
  }
}
