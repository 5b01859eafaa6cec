/** Radial diagram of the 4-regular tree ball with the current vertex lit.
 *
 * Vertices sit on circles indexed by distance from the base; the vertex
 * of the current reduced word is highlighted together with the path back
 * to the base, whose length equals the number of free letters.
 */
import type { BallJson } from "./types.js";
import type { ClientGameView } from "./view.js";
import { ballDepths, ballParents, pathFromBase } from "./view.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface TreeLayout {
  readonly positions: readonly (readonly [number, number])[];
  readonly depths: readonly number[];
}

/** Place the base at the origin and depth-d vertices on radius d,
 * subdividing each vertex's angular sector among its children. */
export function treeLayout(ball: BallJson): TreeLayout {
  const depths = ballDepths(ball);
  const parents = ballParents(ball);
  const children: number[][] = ball.vertices.map(() => []);
  parents.forEach((parent, i) => {
    if (parent >= 0) {
      children[parent]!.push(i);
    }
  });

  const start = new Array<number>(ball.vertices.length).fill(0);
  const span = new Array<number>(ball.vertices.length).fill(0);
  start[0] = 0;
  span[0] = 2 * Math.PI;
  const order = [...ball.vertices.keys()].sort(
    (a, b) => depths[a]! - depths[b]!,
  );
  for (const i of order) {
    const kids = children[i]!;
    if (kids.length === 0) {
      continue;
    }
    const slice = span[i]! / kids.length;
    kids.forEach((kid, k) => {
      start[kid] = start[i]! + k * slice;
      span[kid] = slice;
    });
  }

  const positions = ball.vertices.map((_, i): [number, number] => {
    if (i === 0) {
      return [0, 0];
    }
    const angle = start[i]! + span[i]! / 2;
    const radius = depths[i]!;
    return [radius * Math.cos(angle), radius * Math.sin(angle)];
  });
  return { positions, depths };
}

/** Draw the ball; highlights the view's vertex when it lies inside. */
export function renderTreePanel(
  container: HTMLElement,
  view: ClientGameView,
): void {
  const doc = container.ownerDocument;
  container.textContent = "";
  const ball = view.ball;
  if (ball === null) {
    const note = doc.createElement("p");
    note.setAttribute("data-role", "tree-note");
    note.textContent = "tree ball not loaded";
    container.appendChild(note);
    return;
  }

  const layout = treeLayout(ball);
  const radius = Math.max(1, ball.radius);
  const pad = 0.55;
  const size = 2 * (radius + pad);

  const svg = doc.createElementNS(SVG_NS, "svg");
  svg.setAttribute("data-role", "tree");
  svg.setAttribute(
    "viewBox",
    [-(radius + pad), -(radius + pad), size, size].join(" "),
  );
  svg.setAttribute("preserveAspectRatio", "xMidYMid meet");

  const onPath = new Set(pathFromBase(ball, view.vertexIndex));

  const edges = doc.createElementNS(SVG_NS, "g");
  edges.setAttribute("data-role", "tree-edges");
  ball.adjacency.forEach((neighbours, i) => {
    for (const j of neighbours) {
      if (j <= i) {
        continue;
      }
      const line = doc.createElementNS(SVG_NS, "line");
      const [x1, y1] = layout.positions[i]!;
      const [x2, y2] = layout.positions[j]!;
      line.setAttribute("x1", String(x1));
      line.setAttribute("y1", String(y1));
      line.setAttribute("x2", String(x2));
      line.setAttribute("y2", String(y2));
      const lit = onPath.has(i) && onPath.has(j);
      line.setAttribute("class", lit ? "tree-edge lit" : "tree-edge");
      edges.appendChild(line);
    }
  });
  svg.appendChild(edges);

  const nodes = doc.createElementNS(SVG_NS, "g");
  nodes.setAttribute("data-role", "tree-nodes");
  ball.vertices.forEach((_, i) => {
    const circle = doc.createElementNS(SVG_NS, "circle");
    const [x, y] = layout.positions[i]!;
    circle.setAttribute("cx", String(x));
    circle.setAttribute("cy", String(y));
    circle.setAttribute("data-vertex-index", String(i));
    circle.setAttribute("data-depth", String(layout.depths[i]!));
    let cls = i === 0 ? "tree-node base" : "tree-node";
    if (i === view.vertexIndex) {
      cls += " current";
    }
    circle.setAttribute("r", i === view.vertexIndex ? "0.16" : "0.07");
    circle.setAttribute("class", cls);
    nodes.appendChild(circle);
  });
  svg.appendChild(nodes);
  container.appendChild(svg);

  const caption = doc.createElement("p");
  caption.setAttribute("data-role", "tree-caption");
  caption.textContent =
    view.vertexIndex >= 0
      ? `depth ${view.depth} of ${ball.radius}`
      : `outside the radius-${ball.radius} ball (depth ${view.depth})`;
  container.appendChild(caption);
}
