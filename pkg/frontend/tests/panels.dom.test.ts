// @vitest-environment jsdom
import { describe, expect, it } from "vitest";

import {
  renderHistory,
  renderPose,
  renderSolution,
  renderStatus,
  renderWord,
} from "../src/panels.js";
import { buildView } from "../src/view.js";
import {
  ballR4,
  gameReference,
  gameScrambled,
  solveScrambled,
} from "./fixtures.js";

function container(): HTMLElement {
  const el = document.createElement("div");
  document.body.appendChild(el);
  return el;
}

describe("status and word panels", () => {
  it("shows the solved badge and the verbatim reduced word", () => {
    const solved = buildView(gameReference, ballR4, null, false);
    const scrambled = buildView(gameScrambled, ballR4, null, false);

    const status = container();
    renderStatus(status, solved);
    expect(status.querySelector('[data-role="solved-badge"]')!.textContent)
      .toBe("at reference position");
    renderStatus(status, scrambled);
    expect(status.querySelector('[data-role="solved-badge"]')!.textContent)
      .toBe("scrambled");
    expect(status.querySelector('[data-role="game-id"]')!.textContent).toBe(
      gameScrambled.id,
    );

    const word = container();
    renderWord(word, scrambled);
    expect(word.querySelector('[data-role="word"]')!.textContent).toBe(
      "x0 x1 x3 x1",
    );
  });
});

describe("history panel", () => {
  it("lists the move tokens in order", () => {
    const el = container();
    renderHistory(el, buildView(gameScrambled, ballR4, null, false));
    const items = [...el.querySelectorAll("li")].map((li) => li.textContent);
    expect(items).toEqual(gameScrambled.history);
  });
});

describe("pose panel", () => {
  it("prints every matrix entry verbatim", () => {
    const el = container();
    renderPose(el, buildView(gameScrambled, ballR4, null, false));
    const cells = [...el.querySelectorAll("td")]
      .map((td) => td.textContent)
      .filter((text) => text !== "|");
    const expected = [
      ...gameScrambled.pose.linear.flatMap((row, i) => [
        ...row,
        gameScrambled.pose.translation[i]!,
      ]),
    ];
    expect(cells).toEqual(expected);
  });
});

describe("solution panel", () => {
  it("stays hidden until revealed", () => {
    const el = container();
    renderSolution(el, buildView(gameScrambled, ballR4, null, false));
    expect(el.getAttribute("data-hidden")).toBe("unrevealed");
    expect(el.querySelector('[data-role="solution"]')).toBeNull();
  });

  it("lists the return path once revealed", () => {
    const el = container();
    renderSolution(
      el,
      buildView(gameScrambled, ballR4, solveScrambled.moves, false),
    );
    expect(el.hasAttribute("data-hidden")).toBe(false);
    const items = [...el.querySelectorAll("li")].map((li) => li.textContent);
    expect(items).toEqual(["F1", "F3", "F1", "F0"]);
  });
});

describe("challenge mode", () => {
  it("hides word, history and solution but keeps the pose", () => {
    const view = buildView(gameScrambled, ballR4, solveScrambled.moves, true);
    const word = container();
    const history = container();
    const solution = container();
    const pose = container();
    renderWord(word, view);
    renderHistory(history, view);
    renderSolution(solution, view);
    renderPose(pose, view);
    expect(word.getAttribute("data-hidden")).toBe("challenge");
    expect(word.textContent).toBe("");
    expect(history.getAttribute("data-hidden")).toBe("challenge");
    expect(solution.getAttribute("data-hidden")).toBe("challenge");
    expect(pose.querySelectorAll("td").length).toBeGreaterThan(0);
  });
});
