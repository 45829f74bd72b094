// Typed client for the teleoperation service. The UI does no kinematics of
// its own: every pose, pull and rotation shown on screen comes out of these
// responses.

export interface SegmentCommand {
  theta1_deg: number;
  theta2_deg: number;
}

export interface CommandRequest {
  segments: SegmentCommand[];
}

export interface TipPose {
  position_mm: [number, number, number];
  quaternion_wxyz: [number, number, number, number];
}

export interface SaturationWarning {
  segment: number; // 1-based
  channel: number;
  rotation_deg: number;
  message: string;
}

export interface StateResponse {
  command: CommandRequest;
  tip: TipPose;
  polyline_mm: number[][];
  tendon_pulls_mm: number[][];
  motor_rotations_deg: number[][];
  saturation_warnings: SaturationWarning[];
}

export interface DerivedParams {
  theta2_max_deg: number;
  total_length_mm: number;
  segment_length_mm: number;
  pulley_radii_mm: number[];
  psi_max_deg: number;
}

export interface ParamsResponse {
  params: {
    num_segments: number;
    discs_per_segment: number;
    disc_diameter: number;
    disc_height: number;
    [key: string]: unknown;
  };
  derived: DerivedParams;
}

export interface WorkspaceResponse {
  grid: string;
  total: number;
  count: number;
  points_mm: number[][];
}

/** HTTP-level failure: the service answered, but not with 2xx. */
export class ApiError extends Error {
  status: number;
  detail: unknown;

  constructor(status: number, detail: unknown) {
    super(typeof detail === 'string' ? detail : JSON.stringify(detail));
    this.status = status;
    this.detail = detail;
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(path, init);
  let body: unknown = null;
  try {
    body = await res.json();
  } catch {
    // non-JSON body; keep null
  }
  if (!res.ok) {
    const detail =
      body !== null && typeof body === 'object' && 'detail' in (body as Record<string, unknown>)
        ? (body as Record<string, unknown>).detail
        : body;
    throw new ApiError(res.status, detail);
  }
  return body as T;
}

export function fetchParams(): Promise<ParamsResponse> {
  return request<ParamsResponse>('/api/params');
}

export function sendCommand(command: CommandRequest): Promise<StateResponse> {
  return request<StateResponse>('/api/command', {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(command),
  });
}

export function fetchWorkspace(grid?: string): Promise<WorkspaceResponse> {
  const query = grid ? `?grid=${encodeURIComponent(grid)}` : '';
  return request<WorkspaceResponse>(`/api/workspace${query}`);
}
