import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError, parseSessionState } from "../src/api.js";

const GOOD_STATE = {
  session: "s1",
  quiver: { format: "quiver-v1", n: 3, arrows: [[0, 1, 2], [1, 2, 2], [2, 0, 2]] },
  arrow_count: 6,
  degrees: [[2, 2], [2, 2], [2, 2]],
  history: 0,
};

function stubFetch(status: number, body: unknown) {
  const fn = vi.fn(async () => ({
    ok: status >= 200 && status < 300,
    status,
    json: async () => body,
  }));
  vi.stubGlobal("fetch", fn);
  return fn;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("parseSessionState", () => {
  it("accepts a well-formed payload", () => {
    expect(parseSessionState(GOOD_STATE).arrow_count).toBe(6);
  });

  it.each([
    ["missing session", { ...GOOD_STATE, session: undefined }],
    ["string count", { ...GOOD_STATE, arrow_count: "6" }],
    ["no quiver", { ...GOOD_STATE, quiver: undefined }],
    [
      "ragged arrows",
      {
        ...GOOD_STATE,
        quiver: { format: "quiver-v1", n: 2, arrows: [[0, 1]] },
      },
    ],
  ])("rejects %s", (_label, payload) => {
    expect(() => parseSessionState(payload)).toThrow(ApiError);
  });
});

describe("ApiClient", () => {
  it("posts the generator spec and parses the state", async () => {
    const fn = stubFetch(200, GOOD_STATE);
    const client = new ApiClient("http://example.test:1");
    const state = await client.createSession({ generator: "qg0", g: 1 });
    expect(state.session).toBe("s1");
    const [url, init] = fn.mock.calls[0] as unknown as [string, RequestInit];
    expect(url).toBe("http://example.test:1/api/v1/session");
    expect(init.method).toBe("POST");
    expect(JSON.parse(init.body as string)).toEqual({ generator: "qg0", g: 1 });
  });

  it("strips a trailing slash from the base URL", async () => {
    const fn = stubFetch(200, GOOD_STATE);
    const client = new ApiClient("http://example.test:1/");
    await client.getSession("s1");
    const [url] = fn.mock.calls[0] as unknown as [string];
    expect(url).toBe("http://example.test:1/api/v1/session/s1");
  });

  it("surfaces the server's error detail with its status", async () => {
    stubFetch(409, { detail: "nothing to undo" });
    const client = new ApiClient("http://example.test:1");
    const err = await client.undo("s1").catch((e: ApiError) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(409);
    expect(err.message).toBe("nothing to undo");
  });

  it("wraps network failure as a status-0 ApiError", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => {
        throw new TypeError("connect ECONNREFUSED");
      }),
    );
    const client = new ApiClient("http://127.0.0.1:9");
    await expect(client.mutate("s1", 0)).rejects.toMatchObject({ status: 0 });
  });

  it("lists generators defensively", async () => {
    stubFetch(200, { generators: [{ name: "markov", params: [] }] });
    const client = new ApiClient("http://example.test:1");
    expect(await client.listGenerators()).toEqual([
      { name: "markov", params: [] },
    ]);
  });
});
