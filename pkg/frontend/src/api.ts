/** JSON client for the puzzle service; the only I/O in the app. */

export type Cell = number | null;

export interface GridPayload {
  c: number;
  cells: Cell[][];
}

export interface NewPuzzleRequest {
  knot: string;
  rules?: string[];
  seed?: number;
  target_clues?: number;
}

export interface NewPuzzleResponse {
  session_id: string;
  c: number;
  grid: GridPayload;
}

export interface ViolationPayload {
  rule: string;
  message: string;
  /** [row, col] pairs implicated in the violation. */
  cells: [number, number][];
  column: number | null;
}

export interface ValidateResponse {
  violations: ViolationPayload[];
  solved: boolean;
  matches_solution: boolean;
  satisfies_all_rules: boolean;
}

export interface HintResponse {
  row: number;
  col: number;
  digit: number;
}

/** Non-2xx response, carrying the HTTP status and the server's detail text. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class PuzzleApi {
  private readonly fetchFn: FetchLike;

  constructor(
    private readonly baseUrl: string,
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((input, init) => globalThis.fetch(input, init));
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      let detail = `request failed with status ${response.status}`;
      try {
        const payload = (await response.json()) as { detail?: unknown };
        if (typeof payload.detail === "string") detail = payload.detail;
      } catch {
        // non-JSON error body: keep the generic message
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  newPuzzle(request: NewPuzzleRequest): Promise<NewPuzzleResponse> {
    return this.post("/puzzle/new", request);
  }

  validate(sessionId: string, cells: Cell[][]): Promise<ValidateResponse> {
    return this.post(`/puzzle/${sessionId}/validate`, { cells });
  }

  hint(sessionId: string, cells: Cell[][]): Promise<HintResponse> {
    return this.post(`/puzzle/${sessionId}/hint`, { cells });
  }
}
