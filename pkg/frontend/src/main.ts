/** Browser shell: wires the controls to the service and re-renders the
 * panels from the latest server response.  All state shown on screen is
 * the last response; the only client-side additions are formatting and
 * the ball-vertex lookup.
 */
import { ApiClient, ApiError, MutationQueue } from "./api.js";
import { playMove, replaySolution } from "./controller.js";
import { renderScene } from "./scene.js";
import { renderTreePanel } from "./treePanel.js";
import {
  renderHistory,
  renderPose,
  renderSolution,
  renderStatus,
  renderWord,
} from "./panels.js";
import { buildView } from "./view.js";
import { isMoveToken } from "./words.js";
import type { BallJson, GameJson } from "./types.js";

const TREE_RADIUS = 4;
const REPLAY_DELAY_MS = 160;

interface AppState {
  game: GameJson | null;
  ball: BallJson | null;
  solution: readonly string[] | null;
  challenge: boolean;
  busy: boolean;
}

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

export function initApp(doc: Document, api = new ApiClient()): void {
  const queue = new MutationQueue();
  const state: AppState = {
    game: null,
    ball: null,
    solution: null,
    challenge: false,
    busy: false,
  };

  const byId = (id: string): HTMLElement => {
    const el = doc.getElementById(id);
    if (el === null) {
      throw new Error(`missing element #${id}`);
    }
    return el;
  };

  const message = byId("message");
  const report = (text: string): void => {
    message.textContent = text;
  };

  const render = (): void => {
    if (state.game === null) {
      return;
    }
    const view = buildView(state.game, state.ball, state.solution,
                           state.challenge);
    renderStatus(byId("status"), view);
    renderScene(byId("scene"), view, {
      onFacet: (facet) => {
        void applyToken(`F${facet}`);
      },
    });
    renderWord(byId("word"), view);
    renderHistory(byId("history"), view);
    renderPose(byId("pose"), view);
    renderSolution(byId("solution"), view);
    renderTreePanel(byId("tree"), view);
    doc.querySelectorAll("button").forEach((button) => {
      button.disabled = state.busy;
    });
  };

  const applyToken = async (token: string): Promise<void> => {
    if (state.game === null || state.busy) {
      return;
    }
    try {
      state.game = await playMove(api, queue, state.game.id, token);
      state.solution = null;
      report("");
    } catch (exc) {
      report(exc instanceof ApiError ? exc.message : String(exc));
    }
    render();
  };

  const newGame = async (length: number, seed?: number): Promise<void> => {
    try {
      state.game = await api.newGame(length, seed);
      state.solution = null;
      report("");
    } catch (exc) {
      report(exc instanceof ApiError ? exc.message : String(exc));
    }
    render();
  };

  byId("new-game").addEventListener("click", () => {
    const length = Number(
      (byId("scramble-length") as HTMLInputElement).value,
    );
    const seedText = (byId("scramble-seed") as HTMLInputElement).value.trim();
    const seed = seedText === "" ? undefined : Number(seedText);
    if (!Number.isInteger(length) || length < 0) {
      report("scramble length must be a nonnegative integer");
      return;
    }
    if (seed !== undefined && !Number.isInteger(seed)) {
      report("seed must be an integer");
      return;
    }
    void newGame(length, seed);
  });

  byId("apply-move").addEventListener("click", () => {
    const token = (byId("move-token") as HTMLInputElement).value.trim();
    if (!isMoveToken(token)) {
      report(`invalid move token: ${token}`);
      return;
    }
    void applyToken(token);
  });

  (byId("challenge") as HTMLInputElement).addEventListener("change", (ev) => {
    state.challenge = (ev.target as HTMLInputElement).checked;
    render();
  });

  byId("reveal").addEventListener("click", () => {
    if (state.game === null) {
      return;
    }
    void api
      .solve(state.game.id)
      .then((solution) => {
        state.solution = solution.moves;
        report("");
        render();
      })
      .catch((exc) => {
        report(exc instanceof ApiError ? exc.message : String(exc));
      });
  });

  byId("replay").addEventListener("click", () => {
    if (state.game === null || state.busy) {
      return;
    }
    state.busy = true;
    render();
    void replaySolution(api, queue, state.game.id, async (step) => {
      state.game = step;
      render();
      await sleep(REPLAY_DELAY_MS);
    })
      .then((final) => {
        if (final !== null) {
          state.game = final;
        }
        state.solution = null;
        report("");
      })
      .catch((exc) => {
        report(exc instanceof ApiError ? exc.message : String(exc));
      })
      .finally(() => {
        state.busy = false;
        render();
      });
  });

  void (async () => {
    try {
      state.ball = await api.treeBall(TREE_RADIUS);
    } catch {
      state.ball = null;
    }
    await newGame(0);
  })();
}

declare const window: (Window & typeof globalThis) | undefined;

if (typeof window !== "undefined" && typeof document !== "undefined") {
  if (document.getElementById("scene") !== null) {
    initApp(document);
  }
}
