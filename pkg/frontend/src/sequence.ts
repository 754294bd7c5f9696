// Last-write-wins guard for in-flight requests. Responses apply only in
// issue order; anything arriving after a newer response has rendered is
// dropped, so the final render always matches the final slider state.

export class SequenceGate {
  private issued = 0;
  private applied = 0;

  /** Take a sequence number for a request about to be sent. */
  issue(): number {
    return ++this.issued;
  }

  /** True iff this response is newer than everything rendered so far. */
  shouldApply(seq: number): boolean {
    if (seq <= this.applied) return false;
    this.applied = seq;
    return true;
  }

  /** Whether this sequence number is still the most recently issued one. */
  isLatest(seq: number): boolean {
    return seq === this.issued;
  }
}
