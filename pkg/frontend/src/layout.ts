/**
 * Small force-directed layout: spring attraction along edges, pairwise
 * repulsion, gentle centering.  The physics is not meant to be stable
 * across runs; correctness is judged on graph data, never on positions.
 */

import { GraphEdge } from "./graph.js";

export interface LayoutNode {
  id: number;
  x: number;
  y: number;
  vx: number;
  vy: number;
}

const REPULSION = 6000;
const SPRING = 0.02;
const SPRING_LENGTH = 120;
const CENTERING = 0.01;
const DAMPING = 0.85;
const MAX_STEP = 18;

/** Nodes start on a circle so the first frame is already readable. */
export function initialLayout(
  count: number,
  width: number,
  height: number,
): LayoutNode[] {
  const cx = width / 2;
  const cy = height / 2;
  const r = Math.min(width, height) / 3;
  const nodes: LayoutNode[] = [];
  for (let i = 0; i < count; i++) {
    const angle = (2 * Math.PI * i) / Math.max(count, 1) - Math.PI / 2;
    nodes.push({
      id: i,
      x: cx + r * Math.cos(angle),
      y: cy + r * Math.sin(angle),
      vx: 0,
      vy: 0,
    });
  }
  return nodes;
}

export function stepLayout(
  nodes: LayoutNode[],
  edges: GraphEdge[],
  width: number,
  height: number,
): void {
  const cx = width / 2;
  const cy = height / 2;

  for (let i = 0; i < nodes.length; i++) {
    for (let j = i + 1; j < nodes.length; j++) {
      const a = nodes[i];
      const b = nodes[j];
      let dx = a.x - b.x;
      let dy = a.y - b.y;
      let d2 = dx * dx + dy * dy;
      if (d2 < 1) {
        // coincident nodes: nudge apart deterministically
        dx = 1 + i;
        dy = 1;
        d2 = dx * dx + dy * dy;
      }
      const force = REPULSION / d2;
      const d = Math.sqrt(d2);
      a.vx += (dx / d) * force;
      a.vy += (dy / d) * force;
      b.vx -= (dx / d) * force;
      b.vy -= (dy / d) * force;
    }
  }

  for (const e of edges) {
    const a = nodes[e.source];
    const b = nodes[e.target];
    if (!a || !b || a === b) continue;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const d = Math.sqrt(dx * dx + dy * dy) || 1;
    const stretch = (d - SPRING_LENGTH) * SPRING;
    a.vx += (dx / d) * stretch;
    a.vy += (dy / d) * stretch;
    b.vx -= (dx / d) * stretch;
    b.vy -= (dy / d) * stretch;
  }

  for (const node of nodes) {
    node.vx += (cx - node.x) * CENTERING;
    node.vy += (cy - node.y) * CENTERING;
    node.vx *= DAMPING;
    node.vy *= DAMPING;
    const speed = Math.sqrt(node.vx * node.vx + node.vy * node.vy);
    if (speed > MAX_STEP) {
      node.vx = (node.vx / speed) * MAX_STEP;
      node.vy = (node.vy / speed) * MAX_STEP;
    }
    node.x += node.vx;
    node.y += node.vy;
  }
}

/** Total speed, used to stop the animation once things settle. */
export function kineticEnergy(nodes: LayoutNode[]): number {
  return nodes.reduce((s, n) => s + n.vx * n.vx + n.vy * n.vy, 0);
}
