import { describe, expect, it } from "vitest";

import { ApiError, PuzzleApi } from "../src/api.js";
import { TREFOIL_NEW } from "./golden.js";

interface Call {
  url: string;
  init?: RequestInit;
}

function fakeFetch(status: number, payload: unknown) {
  const calls: Call[] = [];
  const fetchFn = async (url: string, init?: RequestInit) => {
    calls.push({ url, init });
    return {
      ok: status >= 200 && status < 300,
      status,
      json: async () => payload,
    } as Response;
  };
  return { calls, fetchFn };
}

describe("PuzzleApi", () => {
  it("posts a new-puzzle request and returns the payload", async () => {
    const { calls, fetchFn } = fakeFetch(200, TREFOIL_NEW);
    const api = new PuzzleApi("http://service", fetchFn);
    const response = await api.newPuzzle({ knot: "trefoil" });
    expect(response).toEqual(TREFOIL_NEW);
    expect(calls).toHaveLength(1);
    expect(calls[0]!.url).toBe("http://service/puzzle/new");
    expect(calls[0]!.init?.method).toBe("POST");
    expect(JSON.parse(calls[0]!.init?.body as string)).toEqual({ knot: "trefoil" });
  });

  it("addresses validate and hint by session id", async () => {
    const verdict = {
      violations: [],
      solved: false,
      matches_solution: false,
      satisfies_all_rules: false,
    };
    const { calls, fetchFn } = fakeFetch(200, verdict);
    const api = new PuzzleApi("http://service", fetchFn);
    await api.validate("abc123", [[null, null]]);
    expect(calls[0]!.url).toBe("http://service/puzzle/abc123/validate");
    expect(JSON.parse(calls[0]!.init?.body as string)).toEqual({
      cells: [[null, null]],
    });

    await api.hint("abc123", [[null, null]]);
    expect(calls[1]!.url).toBe("http://service/puzzle/abc123/hint");
  });

  it("turns an error response into ApiError with the server detail", async () => {
    const { fetchFn } = fakeFetch(400, { detail: "bad Gauss code: nope" });
    const api = new PuzzleApi("http://service", fetchFn);
    await expect(api.newPuzzle({ knot: "nope" })).rejects.toMatchObject({
      name: "ApiError",
      status: 400,
      message: "bad Gauss code: nope",
    });
  });

  it("falls back to a generic message when the error body is not JSON", async () => {
    const fetchFn = async () =>
      ({
        ok: false,
        status: 502,
        json: async () => {
          throw new Error("not json");
        },
      }) as unknown as Response;
    const api = new PuzzleApi("http://service", fetchFn);
    const failure = await api.validate("id", []).catch((e: unknown) => e);
    expect(failure).toBeInstanceOf(ApiError);
    expect((failure as ApiError).status).toBe(502);
    expect((failure as ApiError).message).toContain("502");
  });
});
