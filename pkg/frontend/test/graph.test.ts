import { describe, expect, it } from "vitest";

import { SessionState } from "../src/api.js";
import {
  arrowMultiset,
  buildGraph,
  degreesOf,
  sameArrows,
} from "../src/graph.js";

function state(
  n: number,
  arrows: [number, number, number][],
): SessionState {
  const count = arrows.reduce((s, a) => s + a[2], 0);
  return {
    session: "s1",
    quiver: { format: "quiver-v1", n, arrows },
    arrow_count: count,
    degrees: [],
    history: 0,
  };
}

const MARKOV = state(3, [
  [0, 1, 2],
  [1, 2, 2],
  [2, 0, 2],
]);

describe("buildGraph", () => {
  it("keeps one node per vertex and the payload's arrow count", () => {
    const model = buildGraph(MARKOV);
    expect(model.nodes.length).toBe(3);
    expect(model.arrowCount).toBe(6);
    expect(model.arrowCount).toBe(MARKOV.arrow_count);
  });

  it("computes degrees with multiplicity", () => {
    expect(degreesOf(MARKOV.quiver)).toEqual([
      [2, 2],
      [2, 2],
      [2, 2],
    ]);
  });

  it("marks exactly the in-1-out-1 vertices as special", () => {
    // a path: middle vertex sits on one inbound and one outbound arrow
    const path = buildGraph(
      state(3, [
        [0, 1, 1],
        [1, 2, 1],
      ]),
    );
    expect(path.nodes.map((v) => v.special)).toEqual([false, true, false]);
    const markov = buildGraph(MARKOV);
    expect(markov.nodes.some((v) => v.special)).toBe(false);
  });

  it("handles an isolated vertex", () => {
    const model = buildGraph(state(1, []));
    expect(model.nodes).toEqual([
      { id: 0, inDegree: 0, outDegree: 0, special: false },
    ]);
    expect(model.arrowCount).toBe(0);
  });
});

describe("arrow multiset comparison", () => {
  it("matches the payload it was built from", () => {
    const model = buildGraph(MARKOV);
    expect(sameArrows(model, MARKOV.quiver)).toBe(true);
  });

  it("is order-insensitive but multiplicity-sensitive", () => {
    const shuffled = state(3, [
      [2, 0, 2],
      [0, 1, 2],
      [1, 2, 2],
    ]);
    expect(sameArrows(buildGraph(MARKOV), shuffled.quiver)).toBe(true);
    const weakened = state(3, [
      [0, 1, 1],
      [1, 2, 2],
      [2, 0, 2],
    ]);
    expect(sameArrows(buildGraph(MARKOV), weakened.quiver)).toBe(false);
  });

  it("sorts triples lexicographically", () => {
    const model = buildGraph(
      state(4, [
        [3, 0, 1],
        [0, 2, 1],
        [0, 1, 2],
      ]),
    );
    expect(arrowMultiset(model)).toEqual([
      [0, 1, 2],
      [0, 2, 1],
      [3, 0, 1],
    ]);
  });
});
