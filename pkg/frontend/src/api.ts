// Thin typed client for the play API.

import type {
  CreateResponse,
  HintsResponse,
  MovePair,
  MoveRejection,
  MoveResponse,
  SessionPayload,
} from "./types.js";

export class ApiError extends Error {
  status: number;
  rejection: MoveRejection | null;

  constructor(status: number, body: unknown) {
    const rejection =
      typeof body === "object" && body !== null && "detail" in body
        ? ((body as { detail: unknown }).detail as MoveRejection | string)
        : null;
    const message =
      typeof rejection === "object" && rejection !== null
        ? rejection.message
        : `request failed with status ${status}`;
    super(message);
    this.status = status;
    this.rejection = typeof rejection === "object" ? rejection : null;
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(`${base}${path}`, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await response.json().catch(() => null);
  if (!response.ok) throw new ApiError(response.status, body);
  return body as T;
}

export class PlayClient {
  constructor(private base: string = "") {}

  createSession(params: {
    p: number;
    k: number;
    coins: number[];
    engine_first: boolean;
  }): Promise<CreateResponse> {
    return request(this.base, "/api/session", {
      method: "POST",
      body: JSON.stringify({ v: 1, ...params }),
    });
  }

  state(id: string): Promise<SessionPayload> {
    return request(this.base, `/api/session/${id}`);
  }

  move(session: string, pairs: MovePair[]): Promise<MoveResponse> {
    return request(this.base, "/api/move", {
      method: "POST",
      body: JSON.stringify({ v: 1, session, move: pairs }),
    });
  }

  hints(session: string, h: number): Promise<HintsResponse> {
    return request(this.base, `/api/hints?session=${encodeURIComponent(session)}&h=${h}`);
  }
}
