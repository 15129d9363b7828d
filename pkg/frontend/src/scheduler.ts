/** Debounced, latest-wins dispatch for validate requests.
 *
 * The UI revalidates on every edit, but the service should see at most
 * one in-flight request, and a reply must never overwrite the verdict
 * of a newer grid.  `ValidateQueue` serialises requests and drops
 * results that were superseded while in flight; `debounce` coalesces
 * bursts of keystrokes in front of it.
 */

export class ValidateQueue<TArgs, TResult> {
  private inFlight = false;
  private pending: TArgs | undefined;

  constructor(
    private readonly send: (args: TArgs) => Promise<TResult>,
    private readonly onResult: (args: TArgs, result: TResult) => void,
    private readonly onError: (error: unknown) => void = () => {},
  ) {}

  /** Submit the newest grid; earlier unsent submissions are replaced. */
  submit(args: TArgs): void {
    if (this.inFlight) {
      this.pending = args;
      return;
    }
    this.inFlight = true;
    void this.send(args)
      .then((result) => {
        // a newer submission arrived while this one was in flight:
        // its verdict is stale, so drop it
        if (this.pending === undefined) this.onResult(args, result);
      })
      .catch((error) => {
        if (this.pending === undefined) this.onError(error);
      })
      .finally(() => {
        this.inFlight = false;
        if (this.pending !== undefined) {
          const next = this.pending;
          this.pending = undefined;
          this.submit(next);
        }
      });
  }
}

export interface Timers {
  set: (fn: () => void, ms: number) => unknown;
  clear: (handle: unknown) => void;
}

const realTimers: Timers = {
  set: (fn, ms) => setTimeout(fn, ms),
  clear: (handle) => clearTimeout(handle as Parameters<typeof clearTimeout>[0]),
};

export interface Debounced<TArgs> {
  (args: TArgs): void;
  /** Fire the trailing call immediately, if one is waiting. */
  flush: () => void;
  cancel: () => void;
}

export function debounce<TArgs>(
  fn: (args: TArgs) => void,
  delayMs: number,
  timers: Timers = realTimers,
): Debounced<TArgs> {
  let handle: unknown;
  let waiting: { args: TArgs } | undefined;

  const fire = () => {
    if (!waiting) return;
    const { args } = waiting;
    waiting = undefined;
    fn(args);
  };

  const debounced = ((args: TArgs) => {
    timers.clear(handle);
    waiting = { args };
    handle = timers.set(fire, delayMs);
  }) as Debounced<TArgs>;

  debounced.flush = () => {
    timers.clear(handle);
    fire();
  };
  debounced.cancel = () => {
    timers.clear(handle);
    waiting = undefined;
  };
  return debounced;
}
