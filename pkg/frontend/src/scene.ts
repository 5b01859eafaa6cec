/** Interactive scene: reference cube, current tetrahedron, clickable facets.
 *
 * The tetrahedron position is the service pose applied to the four
 * reference vertices; no move composition happens here.  Clicking the
 * facet labelled m reports m so the controller can POST the move F_m;
 * the service then returns the reflected copy sharing that facet.
 * Browsers without SVG get a flat 2-D net with the same click targets.
 */
import type { PoseJson } from "./types.js";
import type { ClientGameView } from "./view.js";
import { fractionToNumber } from "./fraction.js";

export type Triple = readonly [number, number, number];

/** Reference tetrahedron: one vertex on each body diagonal of [-1,1]^3. */
export const REFERENCE_VERTICES: readonly Triple[] = [
  [1, 1, 1],
  [1, -1, -1],
  [-1, 1, -1],
  [-1, -1, 1],
];

/** Facet a is the face opposite vertex a. */
export const FACETS: readonly (readonly [number, number, number])[] = [
  [1, 2, 3],
  [0, 2, 3],
  [0, 1, 3],
  [0, 1, 2],
];

export const CUBE_VERTICES: readonly Triple[] = [
  [-1, -1, -1],
  [-1, -1, 1],
  [-1, 1, -1],
  [-1, 1, 1],
  [1, -1, -1],
  [1, -1, 1],
  [1, 1, -1],
  [1, 1, 1],
];

export const CUBE_EDGES: readonly (readonly [number, number])[] = [
  [0, 1], [0, 2], [0, 4], [1, 3], [1, 5], [2, 3],
  [2, 6], [3, 7], [4, 5], [4, 6], [5, 7], [6, 7],
];

export interface SceneModel {
  /** images of the four reference vertices under the pose */
  readonly tetra: readonly Triple[];
  readonly reference: readonly Triple[];
  readonly cube: readonly Triple[];
}

/** Apply the received pose to the reference vertices (drawing only). */
export function sceneModel(pose: PoseJson): SceneModel {
  const linear = pose.linear.map((row) => row.map(fractionToNumber));
  const translation = pose.translation.map(fractionToNumber);
  const apply = (v: Triple): Triple => [
    linear[0]![0]! * v[0] + linear[0]![1]! * v[1] + linear[0]![2]! * v[2] + translation[0]!,
    linear[1]![0]! * v[0] + linear[1]![1]! * v[1] + linear[1]![2]! * v[2] + translation[1]!,
    linear[2]![0]! * v[0] + linear[2]![1]! * v[1] + linear[2]![2]! * v[2] + translation[2]!,
  ];
  return {
    tetra: REFERENCE_VERTICES.map(apply),
    reference: REFERENCE_VERTICES,
    cube: CUBE_VERTICES,
  };
}

const YAW = 0.65;
const PITCH = 0.38;

export interface Projected {
  readonly x: number;
  readonly y: number;
  /** larger means nearer to the viewer */
  readonly depth: number;
}

/** Fixed-angle orthographic projection; y grows downward as in SVG. */
export function project(p: Triple): Projected {
  const cy = Math.cos(YAW);
  const sy = Math.sin(YAW);
  const cx = Math.cos(PITCH);
  const sx = Math.sin(PITCH);
  const x1 = cy * p[0] + sy * p[2];
  const z1 = -sy * p[0] + cy * p[2];
  const y2 = cx * p[1] - sx * z1;
  const z2 = sx * p[1] + cx * z1;
  return { x: x1, y: -y2, depth: -z2 };
}

const SVG_NS = "http://www.w3.org/2000/svg";

export function supportsSvg(doc: Document): boolean {
  if (typeof doc.createElementNS !== "function") {
    return false;
  }
  const probe = doc.createElementNS(SVG_NS, "svg");
  return probe !== null && probe.namespaceURI === SVG_NS;
}

export interface SceneOptions {
  onFacet: (facet: number) => void;
  /** force the flat net even when SVG works (tests, debugging) */
  force2d?: boolean;
}

const FACET_COLORS = ["#e4572e", "#17bebb", "#ffc914", "#76b041"] as const;

interface Bounds {
  minX: number;
  maxX: number;
  minY: number;
  maxY: number;
}

function boundsOf(points: readonly Projected[]): Bounds {
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  return {
    minX: Math.min(...xs),
    maxX: Math.max(...xs),
    minY: Math.min(...ys),
    maxY: Math.max(...ys),
  };
}

/** Draw the scene into the container; returns the mode actually used. */
export function renderScene(
  container: HTMLElement,
  view: ClientGameView,
  options: SceneOptions,
): "3d" | "2d" {
  const doc = container.ownerDocument;
  container.textContent = "";
  if (options.force2d === true || !supportsSvg(doc)) {
    render2dNet(container, view, options);
    return "2d";
  }
  render3d(container, view, options);
  return "3d";
}

function render3d(
  container: HTMLElement,
  view: ClientGameView,
  options: SceneOptions,
): void {
  const doc = container.ownerDocument;
  const model = sceneModel(view.game.pose);
  const cube = model.cube.map(project);
  const tetra = model.tetra.map(project);
  const ghost = model.reference.map(project);

  const bounds = boundsOf([...cube, ...tetra, ...ghost]);
  const pad = 0.45;
  const width = bounds.maxX - bounds.minX + 2 * pad;
  const height = bounds.maxY - bounds.minY + 2 * pad;

  const svg = doc.createElementNS(SVG_NS, "svg");
  svg.setAttribute("data-role", "scene3d");
  svg.setAttribute(
    "viewBox",
    [bounds.minX - pad, bounds.minY - pad, width, height].join(" "),
  );
  svg.setAttribute("preserveAspectRatio", "xMidYMid meet");

  const cubeGroup = doc.createElementNS(SVG_NS, "g");
  cubeGroup.setAttribute("data-role", "cube");
  for (const [i, j] of CUBE_EDGES) {
    const line = doc.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(cube[i]!.x));
    line.setAttribute("y1", String(cube[i]!.y));
    line.setAttribute("x2", String(cube[j]!.x));
    line.setAttribute("y2", String(cube[j]!.y));
    line.setAttribute("class", "cube-edge");
    cubeGroup.appendChild(line);
  }
  svg.appendChild(cubeGroup);

  const ghostGroup = doc.createElementNS(SVG_NS, "g");
  ghostGroup.setAttribute("data-role", "ghost");
  for (const facet of FACETS) {
    const polygon = doc.createElementNS(SVG_NS, "polygon");
    polygon.setAttribute(
      "points",
      facet.map((v) => `${ghost[v]!.x},${ghost[v]!.y}`).join(" "),
    );
    polygon.setAttribute("class", "ghost-face");
    ghostGroup.appendChild(polygon);
  }
  svg.appendChild(ghostGroup);

  const tetraGroup = doc.createElementNS(SVG_NS, "g");
  tetraGroup.setAttribute("data-role", "tetra");
  if (view.game.solved) {
    tetraGroup.setAttribute("class", "solved");
  }
  const order = [0, 1, 2, 3].sort((a, b) => {
    const depth = (facet: number): number => {
      const [i, j, k] = FACETS[facet]!;
      return (tetra[i]!.depth + tetra[j]!.depth + tetra[k]!.depth) / 3;
    };
    return depth(a) - depth(b);
  });
  for (const facetIndex of order) {
    const facet = FACETS[facetIndex]!;
    const polygon = doc.createElementNS(SVG_NS, "polygon");
    polygon.setAttribute(
      "points",
      facet.map((v) => `${tetra[v]!.x},${tetra[v]!.y}`).join(" "),
    );
    polygon.setAttribute("data-facet", String(facetIndex));
    polygon.setAttribute("class", "facet");
    polygon.setAttribute("fill", FACET_COLORS[facetIndex]!);
    polygon.addEventListener("click", () => options.onFacet(facetIndex));
    tetraGroup.appendChild(polygon);

    const label = doc.createElementNS(SVG_NS, "text");
    const cx = facet.reduce((s, v) => s + tetra[v]!.x, 0) / 3;
    const cy = facet.reduce((s, v) => s + tetra[v]!.y, 0) / 3;
    label.setAttribute("x", String(cx));
    label.setAttribute("y", String(cy));
    label.setAttribute("data-facet-label", String(facetIndex));
    label.setAttribute("class", "facet-label");
    label.textContent = `F${facetIndex}`;
    tetraGroup.appendChild(label);
  }
  svg.appendChild(tetraGroup);
  container.appendChild(svg);
}

/** Flat fallback: the four facets of the net as plain buttons. */
function render2dNet(
  container: HTMLElement,
  view: ClientGameView,
  options: SceneOptions,
): void {
  const doc = container.ownerDocument;
  const net = doc.createElement("div");
  net.setAttribute("data-role", "scene2d");
  net.className = "net";
  const note = doc.createElement("p");
  note.className = "net-note";
  note.textContent = view.game.solved
    ? "flat view (reference position)"
    : "flat view";
  net.appendChild(note);
  for (let facet = 0; facet < 4; facet += 1) {
    const button = doc.createElement("button");
    button.setAttribute("data-facet", String(facet));
    button.className = "net-face";
    button.style.background = FACET_COLORS[facet]!;
    button.textContent = `F${facet}`;
    button.addEventListener("click", () => options.onFacet(facet));
    net.appendChild(button);
  }
  container.appendChild(net);
}
