import { describe, expect, it } from "vitest";

import { MutationQueue } from "../src/api.js";

function deferred<T>(): { promise: Promise<T>; resolve: (v: T) => void } {
  let resolve!: (v: T) => void;
  const promise = new Promise<T>((r) => {
    resolve = r;
  });
  return { promise, resolve };
}

describe("MutationQueue", () => {
  it("runs at most one task per key at a time, in order", async () => {
    const queue = new MutationQueue();
    const events: string[] = [];
    let active = 0;
    let maxActive = 0;
    const gates = [deferred<void>(), deferred<void>(), deferred<void>()];

    const tasks = gates.map((gate, i) =>
      queue.run("game", async () => {
        active += 1;
        maxActive = Math.max(maxActive, active);
        events.push(`start ${i}`);
        await gate.promise;
        events.push(`end ${i}`);
        active -= 1;
        return i;
      }),
    );

    gates[2]!.resolve();
    gates[0]!.resolve();
    gates[1]!.resolve();
    expect(await Promise.all(tasks)).toEqual([0, 1, 2]);
    expect(maxActive).toBe(1);
    expect(events).toEqual([
      "start 0", "end 0", "start 1", "end 1", "start 2", "end 2",
    ]);
  });

  it("keeps going after a failed task", async () => {
    const queue = new MutationQueue();
    const first = queue.run("game", async () => {
      throw new Error("boom");
    });
    const second = queue.run("game", async () => "ok");
    await expect(first).rejects.toThrow("boom");
    expect(await second).toBe("ok");
  });

  it("does not serialise across different keys", async () => {
    const queue = new MutationQueue();
    const gate = deferred<void>();
    const slow = queue.run("a", async () => {
      await gate.promise;
      return "slow";
    });
    const fast = await queue.run("b", async () => "fast");
    expect(fast).toBe("fast");
    gate.resolve();
    expect(await slow).toBe("slow");
    expect(queue.size).toBe(2);
  });
});
