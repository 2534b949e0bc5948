/**
 * View-model for a session's quiver: nodes with degree annotations and
 * bundled directed edges.  Pure data, no DOM, so the rendering invariants
 * (vertex count, arrow multiset, highlight set) are testable headless.
 */

import { QuiverPayload, SessionState } from "./api.js";

// -- Types --------------------------------------------------------------

export interface GraphNode {
  id: number;
  inDegree: number;
  outDegree: number;
  /** Mutation here changes the arrow count; drawn highlighted. */
  special: boolean;
}

export interface GraphEdge {
  source: number;
  target: number;
  multiplicity: number;
}

export interface GraphModel {
  nodes: GraphNode[];
  edges: GraphEdge[];
  arrowCount: number;
}

// -- Construction -------------------------------------------------------

export function degreesOf(quiver: QuiverPayload): [number, number][] {
  const inDeg = new Array<number>(quiver.n).fill(0);
  const outDeg = new Array<number>(quiver.n).fill(0);
  for (const [src, dst, mult] of quiver.arrows) {
    outDeg[src] += mult;
    inDeg[dst] += mult;
  }
  return inDeg.map((d, i) => [d, outDeg[i]]);
}

export function buildGraph(state: SessionState): GraphModel {
  const degrees = degreesOf(state.quiver);
  const nodes: GraphNode[] = [];
  for (let i = 0; i < state.quiver.n; i++) {
    const [inDegree, outDegree] = degrees[i];
    nodes.push({
      id: i,
      inDegree,
      outDegree,
      special: inDegree === 1 && outDegree === 1,
    });
  }
  const edges: GraphEdge[] = state.quiver.arrows.map(
    ([source, target, multiplicity]) => ({ source, target, multiplicity }),
  );
  const arrowCount = edges.reduce((sum, e) => sum + e.multiplicity, 0);
  return { nodes, edges, arrowCount };
}

/** Sorted [src, dst, mult] triples, for comparing against an API payload. */
export function arrowMultiset(model: GraphModel): [number, number, number][] {
  return model.edges
    .map((e): [number, number, number] => [e.source, e.target, e.multiplicity])
    .sort((a, b) => a[0] - b[0] || a[1] - b[1] || a[2] - b[2]);
}

export function sameArrows(
  model: GraphModel,
  quiver: QuiverPayload,
): boolean {
  const mine = JSON.stringify(arrowMultiset(model));
  const theirs = JSON.stringify(
    [...quiver.arrows].sort((a, b) => a[0] - b[0] || a[1] - b[1] || a[2] - b[2]),
  );
  return mine === theirs;
}
