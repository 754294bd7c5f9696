// Trailing-edge debounce: rapid slider drags collapse into one request once
// the hand pauses for `waitMs`.

export interface Debounced<A extends unknown[]> {
  (...args: A): void;
  cancel(): void;
  flush(): void;
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): Debounced<A> {
  let timer: ReturnType<typeof setTimeout> | null = null;
  let pending: A | null = null;

  const debounced = (...args: A): void => {
    pending = args;
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      const args = pending as A;
      pending = null;
      fn(...args);
    }, waitMs);
  };

  debounced.cancel = (): void => {
    if (timer !== null) clearTimeout(timer);
    timer = null;
    pending = null;
  };

  debounced.flush = (): void => {
    if (timer === null || pending === null) return;
    clearTimeout(timer);
    timer = null;
    const args = pending;
    pending = null;
    fn(...args);
  };

  return debounced;
}
