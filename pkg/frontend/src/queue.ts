/**
 * One-in-flight task queue.  Vertex clicks land here so at most one
 * mutate request is on the wire; later clicks wait their turn in order.
 */

export class SerialQueue {
  private chain: Promise<void> = Promise.resolve();
  private waiting = 0;

  /** Tasks run strictly in submission order, never concurrently. */
  enqueue(task: () => Promise<void>): Promise<void> {
    this.waiting += 1;
    const run = this.chain.then(task).finally(() => {
      this.waiting -= 1;
    });
    // swallow the error on the chain so one failure does not jam the queue;
    // callers see it through the returned promise
    this.chain = run.catch(() => {});
    return run;
  }

  get pending(): number {
    return this.waiting;
  }
}
