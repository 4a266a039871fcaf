import init, { describe, involute, filling } from "./pkg/signed_crossings_web.js";

const SVG = "http://www.w3.org/2000/svg";
const CROSS = "#d1495b";
const NEST = "#00798c";

const output = document.getElementById("output");
const error = document.getElementById("error");
const permInput = document.getElementById("perm");

function el(name, attrs = {}, text) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

function key(arc) {
  return `${arc.start},${arc.end}`;
}

function arcDiagram(info) {
  const n = info.n;
  const step = 36;
  const width = step * (2 * n + 1);
  const x = (v) => step * (v < 0 ? v + n + 1 : v + n);
  const tallest = Math.max(1, ...info.arcs.map((a) => x(a.end) - x(a.start)));
  const base = tallest / 2 + 20;
  const svg = el("svg", { width, height: base + 30, viewBox: `0 0 ${width} ${base + 30}` });
  const crossing = new Set(info.crossing_chain.map(key));
  const nesting = new Set(info.nesting_chain.map(key));

  svg.append(el("line", { x1: step / 2, y1: base, x2: width - step / 2, y2: base, stroke: "#999" }));
  for (const a of info.arcs) {
    const colour = crossing.has(key(a)) ? CROSS : nesting.has(key(a)) ? NEST : "#444";
    if (a.loop) {
      svg.append(el("circle", { cx: x(a.start), cy: base - 9, r: 9, fill: "none", stroke: colour, "stroke-width": 2 }));
      continue;
    }
    const [x1, x2] = [x(a.start), x(a.end)];
    const r = (x2 - x1) / 2;
    const d = `M ${x1} ${base} A ${r} ${r} 0 0 1 ${x2} ${base}`;
    svg.append(el("path", { d, fill: "none", stroke: colour, "stroke-width": 2 }));
  }
  for (const { vertex, kind } of info.vertices) {
    const dot = el("circle", { cx: x(vertex), cy: base, r: 4, fill: kind === "isolated" ? "#fff" : "#222", stroke: "#222" });
    dot.append(el("title", {}, `${vertex}: ${kind}`));
    svg.append(dot, el("text", { x: x(vertex), y: base + 18, "text-anchor": "middle" }, String(vertex)));
  }
  return svg;
}

function statsTable(stats) {
  const table = document.createElement("table");
  for (const name of ["wex", "neg", "cro", "nes", "cro_star", "nes_star", "degree_sequence"]) {
    const row = table.insertRow();
    row.insertCell().textContent = name;
    row.insertCell().textContent = stats[name];
  }
  return table;
}

function panel(title, ...children) {
  const div = document.createElement("div");
  div.className = "panel";
  const h = document.createElement("h3");
  h.textContent = title;
  div.append(h, ...children);
  return div;
}

function diagramPanel(title, info) {
  return panel(title, arcDiagram(info), statsTable(info.stats));
}

function youngDiagram(f) {
  const size = 28;
  const rows = f.shape.length;
  const cols = f.shape[0] ?? 0;
  const left = 30;
  const top = 20;
  const svg = el("svg", { width: left + cols * size + 10, height: top + rows * size + 10 });
  const colour = new Map();
  for (const c of f.anti_identity) colour.set(`${c.row},${c.col}`, CROSS);
  for (const c of f.identity) colour.set(`${c.row},${c.col}`, colour.has(`${c.row},${c.col}`) ? "#7a5195" : NEST);
  const ones = new Set(f.cells.map((c) => `${c.row},${c.col}`));

  f.shape.forEach((len, r) => {
    const closer = f.closers[f.closers.length - 1 - r];
    svg.append(el("text", { x: left - 6, y: top + r * size + size / 2 + 4, "text-anchor": "end" }, String(closer)));
    for (let c = 0; c < len; c++) {
      const k = `${r + 1},${c + 1}`;
      const [cx, cy] = [left + c * size, top + r * size];
      svg.append(el("rect", { x: cx, y: cy, width: size, height: size, fill: "#fff", stroke: "#888" }));
      if (ones.has(k)) {
        svg.append(el("circle", { cx: cx + size / 2, cy: cy + size / 2, r: size / 4, fill: colour.get(k) ?? "#222" }));
      }
    }
  });
  f.openers.forEach((v, c) => {
    svg.append(el("text", { x: left + c * size + size / 2, y: top - 6, "text-anchor": "middle" }, String(v)));
  });
  return svg;
}

function show(...panels) {
  error.textContent = "";
  output.replaceChildren(...panels);
}

function guarded(action) {
  return () => {
    try {
      action(permInput.value);
    } catch (e) {
      output.replaceChildren();
      error.textContent = e.message ?? String(e);
    }
  };
}

const actions = {
  describe: guarded((perm) => {
    const info = JSON.parse(describe(perm));
    show(diagramPanel(`σ = (${info.permutation})`, info));
  }),
  involute: guarded((perm) => {
    const map = document.getElementById("map").value;
    const result = JSON.parse(involute(perm, map));
    show(
      diagramPanel(`σ = (${result.before.permutation})`, result.before),
      diagramPanel(`${map}(σ) = (${result.after.permutation})`, result.after),
    );
  }),
  fill: guarded((perm) => {
    const result = JSON.parse(filling(perm));
    const f = result.filling;
    const panels = [panel(`filling of (${result.permutation}), shape ${f.shape.join(",")}`, youngDiagram(f))];
    const t = result.interchange;
    if (t.error) {
      const p = document.createElement("p");
      p.textContent = `interchange: ${t.error}`;
      panels.push(panel("interchange", p));
    } else {
      panels.push(panel(`interchanged, ${t.steps} steps → (${t.image})`, youngDiagram(t.filling)));
    }
    show(...panels);
  }),
};

await init();
document.getElementById("describe").addEventListener("click", actions.describe);
document.getElementById("involute").addEventListener("click", actions.involute);
document.getElementById("fill").addEventListener("click", actions.fill);
document.getElementById("controls").addEventListener("submit", (e) => {
  e.preventDefault();
  actions.describe();
});
permInput.addEventListener("keydown", (e) => {
  if (e.key === "Enter") {
    e.preventDefault();
    actions.describe();
  }
});
actions.describe();
