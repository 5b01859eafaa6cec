export class ApiError extends Error {
    status;
    constructor(status, message) {
        super(message);
        this.status = status;
        this.name = "ApiError";
    }
}
function requestId() {
    if (typeof crypto !== "undefined" && "randomUUID" in crypto) {
        return crypto.randomUUID();
    }
    return `rq-${Date.now()}-${Math.random().toString(36).slice(2)}`;
}
async function decode(response) {
    const body = await response.json().catch(() => null);
    if (!response.ok) {
        const message = body !== null && typeof body === "object" && "error" in body
            ? String(body.error)
            : `http ${response.status}`;
        throw new ApiError(response.status, message);
    }
    return body;
}
export class ApiClient {
    base;
    constructor(base = "") {
        this.base = base;
    }
    url(path) {
        return `${this.base}${path}`;
    }
    async post(path, payload) {
        const response = await fetch(this.url(path), {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(payload),
        });
        return decode(response);
    }
    async health() {
        return decode(await fetch(this.url("/api/health")));
    }
    async newGame(scramble, seed) {
        const payload = {
            scramble,
            request_id: requestId(),
        };
        if (seed !== undefined) {
            payload.seed = seed;
        }
        return this.post("/api/game/new", payload);
    }
    async getGame(id) {
        return decode(await fetch(this.url(`/api/game/${id}`)));
    }
    async move(id, token) {
        return this.post(`/api/game/${id}/move`, {
            move: token,
            request_id: requestId(),
        });
    }
    async solve(id) {
        return this.post(`/api/game/${id}/solve`, {});
    }
    async treeBall(radius) {
        return decode(await fetch(this.url(`/api/tree/ball?r=${radius}`)));
    }
}
/** Serialises tasks per key: a new task starts only after the previous
 * task for the same key has settled. */
export class MutationQueue {
    tails = new Map();
    run(key, task) {
        const tail = this.tails.get(key) ?? Promise.resolve();
        const next = tail.then(task, task);
        this.tails.set(key, next.catch(() => undefined));
        return next;
    }
    /** Number of keys with a recorded chain (for tests). */
    get size() {
        return this.tails.size;
    }
}
