/**
 * Canvas drawing for the quiver view.  Multiplicity m is drawn as m
 * parallel curved arrows; vertices whose mutation changes the arrow
 * count get the highlight ring.
 */

import { GraphModel } from "./graph.js";
import { LayoutNode } from "./layout.js";

const NODE_RADIUS = 16;
const COLORS = {
  node: "#2d3748",
  nodeSpecial: "#b7791f",
  ring: "#ecc94b",
  label: "#ffffff",
  edge: "#718096",
  degree: "#a0aec0",
};

export function drawGraph(
  ctx: CanvasRenderingContext2D,
  model: GraphModel,
  nodes: LayoutNode[],
  width: number,
  height: number,
): void {
  ctx.clearRect(0, 0, width, height);

  for (const edge of model.edges) {
    const a = nodes[edge.source];
    const b = nodes[edge.target];
    if (!a || !b) continue;
    for (let strand = 0; strand < edge.multiplicity; strand++) {
      drawArrow(ctx, a, b, strand, edge.multiplicity);
    }
  }

  for (const node of model.nodes) {
    const p = nodes[node.id];
    if (!p) continue;
    if (node.special) {
      ctx.beginPath();
      ctx.arc(p.x, p.y, NODE_RADIUS + 5, 0, 2 * Math.PI);
      ctx.strokeStyle = COLORS.ring;
      ctx.lineWidth = 4;
      ctx.stroke();
    }
    ctx.beginPath();
    ctx.arc(p.x, p.y, NODE_RADIUS, 0, 2 * Math.PI);
    ctx.fillStyle = node.special ? COLORS.nodeSpecial : COLORS.node;
    ctx.fill();
    ctx.fillStyle = COLORS.label;
    ctx.font = "bold 13px system-ui, sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(String(node.id), p.x, p.y);
    ctx.fillStyle = COLORS.degree;
    ctx.font = "11px system-ui, sans-serif";
    ctx.fillText(
      `${node.inDegree},${node.outDegree}`,
      p.x,
      p.y + NODE_RADIUS + 11,
    );
  }
}

function drawArrow(
  ctx: CanvasRenderingContext2D,
  a: LayoutNode,
  b: LayoutNode,
  strand: number,
  strands: number,
): void {
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const d = Math.sqrt(dx * dx + dy * dy) || 1;
  const nx = -dy / d;
  const ny = dx / d;
  // spread strands symmetrically about the straight line
  const offset = (strand - (strands - 1) / 2) * 14;
  const mx = (a.x + b.x) / 2 + nx * offset;
  const my = (a.y + b.y) / 2 + ny * offset;

  const t = 1 - (NODE_RADIUS + 4) / d;
  const endX = a.x + (mx - a.x) + (b.x - mx) * t;
  const endY = a.y + (my - a.y) + (b.y - my) * t;

  ctx.beginPath();
  ctx.moveTo(a.x, a.y);
  ctx.quadraticCurveTo(mx, my, b.x, b.y);
  ctx.strokeStyle = COLORS.edge;
  ctx.lineWidth = 1.6;
  ctx.stroke();

  // arrowhead near the target, oriented along the curve's tangent
  const tangX = b.x - mx;
  const tangY = b.y - my;
  const tl = Math.sqrt(tangX * tangX + tangY * tangY) || 1;
  const ux = tangX / tl;
  const uy = tangY / tl;
  ctx.beginPath();
  ctx.moveTo(endX, endY);
  ctx.lineTo(endX - 9 * ux + 4.5 * -uy, endY - 9 * uy + 4.5 * ux);
  ctx.lineTo(endX - 9 * ux - 4.5 * -uy, endY - 9 * uy - 4.5 * ux);
  ctx.closePath();
  ctx.fillStyle = COLORS.edge;
  ctx.fill();
}

/** Vertex under the pointer, or null. */
export function hitTest(
  nodes: LayoutNode[],
  x: number,
  y: number,
): number | null {
  for (let i = nodes.length - 1; i >= 0; i--) {
    const n = nodes[i];
    const dx = n.x - x;
    const dy = n.y - y;
    if (dx * dx + dy * dy <= NODE_RADIUS * NODE_RADIUS) return n.id;
  }
  return null;
}
