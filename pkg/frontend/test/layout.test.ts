import { describe, expect, it } from "vitest";

import { GraphEdge } from "../src/graph.js";
import {
  initialLayout,
  kineticEnergy,
  stepLayout,
} from "../src/layout.js";

const W = 800;
const H = 600;

describe("initialLayout", () => {
  it("places every node inside the viewport", () => {
    const nodes = initialLayout(7, W, H);
    expect(nodes.length).toBe(7);
    for (const n of nodes) {
      expect(n.x).toBeGreaterThan(0);
      expect(n.x).toBeLessThan(W);
      expect(n.y).toBeGreaterThan(0);
      expect(n.y).toBeLessThan(H);
    }
  });

  it("gives distinct positions", () => {
    const nodes = initialLayout(9, W, H);
    const seen = new Set(nodes.map((n) => `${n.x.toFixed(3)},${n.y.toFixed(3)}`));
    expect(seen.size).toBe(9);
  });
});

describe("stepLayout", () => {
  const triangle: GraphEdge[] = [
    { source: 0, target: 1, multiplicity: 2 },
    { source: 1, target: 2, multiplicity: 2 },
    { source: 2, target: 0, multiplicity: 2 },
  ];

  it("keeps coordinates finite over many steps", () => {
    const nodes = initialLayout(3, W, H);
    for (let i = 0; i < 500; i++) stepLayout(nodes, triangle, W, H);
    for (const n of nodes) {
      expect(Number.isFinite(n.x)).toBe(true);
      expect(Number.isFinite(n.y)).toBe(true);
    }
  });

  it("settles: kinetic energy ends low", () => {
    const nodes = initialLayout(5, W, H);
    const edges: GraphEdge[] = [
      { source: 0, target: 1, multiplicity: 1 },
      { source: 1, target: 2, multiplicity: 1 },
      { source: 2, target: 3, multiplicity: 1 },
      { source: 3, target: 4, multiplicity: 1 },
    ];
    for (let i = 0; i < 2000; i++) stepLayout(nodes, edges, W, H);
    expect(kineticEnergy(nodes)).toBeLessThan(0.1);
  });

  it("separates nodes dropped on the same point", () => {
    const nodes = initialLayout(2, W, H);
    nodes[1].x = nodes[0].x;
    nodes[1].y = nodes[0].y;
    for (let i = 0; i < 50; i++) stepLayout(nodes, [], W, H);
    const dx = nodes[0].x - nodes[1].x;
    const dy = nodes[0].y - nodes[1].y;
    expect(Math.sqrt(dx * dx + dy * dy)).toBeGreaterThan(10);
  });

  it("ignores a self-loop edge rather than exploding", () => {
    const nodes = initialLayout(2, W, H);
    const loop: GraphEdge[] = [{ source: 0, target: 0, multiplicity: 1 }];
    for (let i = 0; i < 100; i++) stepLayout(nodes, loop, W, H);
    expect(Number.isFinite(nodes[0].x)).toBe(true);
  });
});
