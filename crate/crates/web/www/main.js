import init, { scale_lattice, analyze, explain } from "./pkg/ordmotif_web.js";

const SAMPLE = `B

5
5

Basil
Caraway
Ginger
Parsley
Mint
sweet
bitter
green
seed
root
X.X..
.X.X.
XX..X
..XXX
X.X.X
`;

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";

function el(tag, attrs = {}, text) {
  const node = document.createElementNS(SVG, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

function showError(target, e) {
  target.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(e);
  target.append(p);
}

// Layered drawing: extents grouped by size, bottom to top.
function drawLattice(data) {
  const width = 560, height = 360, pad = 30;
  const layers = new Map();
  data.extents.forEach((e, i) => {
    if (!layers.has(e.length)) layers.set(e.length, []);
    layers.get(e.length).push(i);
  });
  const sizes = [...layers.keys()].sort((a, b) => a - b);
  const pos = [];
  sizes.forEach((s, row) => {
    const ids = layers.get(s);
    const y = height - pad - (row * (height - 2 * pad)) / Math.max(1, sizes.length - 1);
    ids.forEach((id, col) => {
      pos[id] = [pad + ((col + 1) * (width - 2 * pad)) / (ids.length + 1), y];
    });
  });
  const svg = el("svg", { width, height, viewBox: `0 0 ${width} ${height}` });
  for (const [a, b] of data.covers) {
    svg.append(el("line", { x1: pos[a][0], y1: pos[a][1], x2: pos[b][0], y2: pos[b][1], stroke: "#888" }));
  }
  data.extents.forEach((e, i) => {
    const label = "{" + e.map((g) => data.objects[g]).join(",") + "}";
    const dot = el("circle", { cx: pos[i][0], cy: pos[i][1], r: 6, fill: "#369" });
    dot.append(el("title", {}, label));
    svg.append(dot);
  });
  return svg;
}

function drawCurve(curve, total) {
  const width = 560, height = 220, pad = 30;
  const svg = el("svg", { width, height, viewBox: `0 0 ${width} ${height}` });
  const x = (i) => pad + (i * (width - 2 * pad)) / Math.max(1, curve.length);
  const y = (v) => height - pad - (v * (height - 2 * pad)) / Math.max(1, total);
  const pts = [[x(0), y(0)], ...curve.map((s, i) => [x(i + 1), y(s.cumulative)])];
  svg.append(el("line", { x1: pad, y1: y(total), x2: width - pad, y2: y(total), stroke: "#c66", "stroke-dasharray": "4" }));
  svg.append(el("polyline", { points: pts.map((p) => p.join(",")).join(" "), fill: "none", stroke: "#369", "stroke-width": 2 }));
  svg.append(el("text", { x: pad, y: y(total) - 4, "font-size": 12 }, `${total} extents`));
  return svg;
}

function statsTable(stats) {
  const table = document.createElement("table");
  const rows = [["", ...stats.map((s) => s.family)],
    ["motifs", ...stats.map((s) => s.total)],
    ["maximal", ...stats.map((s) => s.maximal)],
    ["largest", ...stats.map((s) => s.largest)]];
  for (const r of rows) {
    const tr = table.insertRow();
    for (const c of r) tr.insertCell().textContent = c;
  }
  return table;
}

function contextArgs() {
  return [$("context").value, $("format").value, Number($("k").value), $("heuristic").value, $("clarify").checked];
}

async function main() {
  await init();
  $("context").value = SAMPLE;

  $("draw").onclick = () => {
    const out = $("scale-out");
    try {
      const data = JSON.parse(scale_lattice($("family").value, Number($("size").value)));
      out.innerHTML = "";
      const pre = document.createElement("pre");
      pre.textContent = data.incidence.join("\n");
      out.append(pre, drawLattice(data));
    } catch (e) {
      showError(out, e);
    }
  };

  $("analyze").onclick = () => {
    const out = $("context-out");
    try {
      const data = JSON.parse(analyze(...contextArgs()));
      out.innerHTML = "";
      const list = document.createElement("ol");
      for (const s of data.curve) {
        const li = document.createElement("li");
        li.textContent = `${s.families.join("+")}: ${s.elements.join(", ")} (+${s.new_extents}, ${s.cumulative})`;
        list.append(li);
      }
      out.append(statsTable(data.stats), drawCurve(data.curve, data.extent_count), list);
    } catch (e) {
      showError(out, e);
    }
  };

  $("explain").onclick = () => {
    const out = $("context-out");
    try {
      out.innerHTML = "";
      const pre = document.createElement("pre");
      pre.textContent = explain(...contextArgs());
      out.append(pre);
    } catch (e) {
      showError(out, e);
    }
  };

  $("draw").click();
}

main();
