function clear(el) {
    el.textContent = "";
}
export function renderStatus(el, view) {
    clear(el);
    const doc = el.ownerDocument;
    const badge = doc.createElement("span");
    badge.setAttribute("data-role", "solved-badge");
    badge.className = view.game.solved ? "badge solved" : "badge unsolved";
    badge.textContent = view.game.solved ? "at reference position" : "scrambled";
    el.appendChild(badge);
    const id = doc.createElement("span");
    id.setAttribute("data-role", "game-id");
    id.className = "game-id";
    id.textContent = view.game.id;
    el.appendChild(id);
}
export function renderWord(el, view) {
    clear(el);
    if (view.challenge) {
        el.setAttribute("data-hidden", "challenge");
        return;
    }
    el.removeAttribute("data-hidden");
    const doc = el.ownerDocument;
    const label = doc.createElement("span");
    label.className = "label";
    label.textContent = "reduced word";
    el.appendChild(label);
    const word = doc.createElement("code");
    word.setAttribute("data-role", "word");
    word.textContent = view.wordText;
    el.appendChild(word);
}
export function renderHistory(el, view) {
    clear(el);
    if (view.challenge) {
        el.setAttribute("data-hidden", "challenge");
        return;
    }
    el.removeAttribute("data-hidden");
    const doc = el.ownerDocument;
    const label = doc.createElement("span");
    label.className = "label";
    label.textContent = `history (${view.game.history.length})`;
    el.appendChild(label);
    const list = doc.createElement("ol");
    list.setAttribute("data-role", "history");
    for (const token of view.game.history) {
        const item = doc.createElement("li");
        item.textContent = token;
        list.appendChild(item);
    }
    el.appendChild(list);
}
export function renderPose(el, view) {
    clear(el);
    const doc = el.ownerDocument;
    const label = doc.createElement("span");
    label.className = "label";
    label.textContent = "pose (exact)";
    el.appendChild(label);
    const table = doc.createElement("table");
    table.setAttribute("data-role", "pose");
    view.game.pose.linear.forEach((row, i) => {
        const tr = doc.createElement("tr");
        for (const entry of row) {
            const td = doc.createElement("td");
            td.textContent = entry;
            tr.appendChild(td);
        }
        const sep = doc.createElement("td");
        sep.className = "pose-sep";
        sep.textContent = "|";
        tr.appendChild(sep);
        const td = doc.createElement("td");
        td.textContent = view.game.pose.translation[i] ?? "";
        tr.appendChild(td);
        table.appendChild(tr);
    });
    el.appendChild(table);
}
export function renderSolution(el, view) {
    clear(el);
    if (view.challenge || view.solution === null) {
        el.setAttribute("data-hidden", view.challenge ? "challenge" : "unrevealed");
        return;
    }
    el.removeAttribute("data-hidden");
    const doc = el.ownerDocument;
    const label = doc.createElement("span");
    label.className = "label";
    label.textContent = "return path";
    el.appendChild(label);
    const list = doc.createElement("ol");
    list.setAttribute("data-role", "solution");
    for (const token of view.solution) {
        const item = doc.createElement("li");
        item.textContent = token;
        list.appendChild(item);
    }
    el.appendChild(list);
}
