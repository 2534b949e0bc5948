/**
 * Thin typed client for the /api/v1 session endpoints.  All mutation math
 * happens server-side; this module only ships payloads back and forth.
 */

// -- Types --------------------------------------------------------------

export interface QuiverPayload {
  format: string;
  n: number;
  arrows: [number, number, number][];
}

export interface SessionState {
  session: string;
  quiver: QuiverPayload;
  arrow_count: number;
  degrees: [number, number][];
  history: number;
}

export interface GeneratorInfo {
  name: string;
  params: string[];
}

export class ApiError extends Error {
  constructor(
    message: string,
    public readonly status: number,
  ) {
    super(message);
  }
}

// -- Payload checks -----------------------------------------------------

function isArrowTriple(x: unknown): x is [number, number, number] {
  return (
    Array.isArray(x) && x.length === 3 && x.every((v) => Number.isInteger(v))
  );
}

export function parseSessionState(data: unknown): SessionState {
  const obj = data as Record<string, unknown>;
  const quiver = obj?.quiver as Record<string, unknown> | undefined;
  if (
    typeof obj?.session !== "string" ||
    typeof obj?.arrow_count !== "number" ||
    typeof obj?.history !== "number" ||
    !quiver ||
    typeof quiver.n !== "number" ||
    !Array.isArray(quiver.arrows) ||
    !quiver.arrows.every(isArrowTriple) ||
    !Array.isArray(obj?.degrees)
  ) {
    throw new ApiError("malformed session payload", 0);
  }
  return data as SessionState;
}

// -- Client -------------------------------------------------------------

export class ApiClient {
  constructor(public baseUrl: string) {}

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    let resp: Response;
    try {
      resp = await fetch(this.baseUrl.replace(/\/$/, "") + path, init);
    } catch (err) {
      throw new ApiError(`cannot reach ${this.baseUrl}: ${err}`, 0);
    }
    const body = await resp.json().catch(() => ({}));
    if (!resp.ok) {
      const detail =
        (body as { detail?: string }).detail ?? `HTTP ${resp.status}`;
      throw new ApiError(detail, resp.status);
    }
    return body;
  }

  private post(path: string, payload?: unknown): Promise<unknown> {
    return this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload ?? {}),
    });
  }

  async createSession(
    spec: Record<string, unknown>,
  ): Promise<SessionState> {
    return parseSessionState(await this.post("/api/v1/session", spec));
  }

  async getSession(sid: string): Promise<SessionState> {
    return parseSessionState(await this.request(`/api/v1/session/${sid}`));
  }

  async mutate(sid: string, vertex: number): Promise<SessionState> {
    return parseSessionState(
      await this.post(`/api/v1/session/${sid}/mutate`, { vertex }),
    );
  }

  async undo(sid: string): Promise<SessionState> {
    return parseSessionState(await this.post(`/api/v1/session/${sid}/undo`));
  }

  async listGenerators(): Promise<GeneratorInfo[]> {
    const body = (await this.request("/api/v1/generators")) as {
      generators?: GeneratorInfo[];
    };
    return body.generators ?? [];
  }
}
