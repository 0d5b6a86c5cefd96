import init, { certify, random, catalogue } from "./pkg/m1part_wasm.js";

const KINDS = ["F1", "F2", "F3", "F4", "F5", "F6", "F7", "Fan(2)", "Fan(3)", "Fan(4)", "Fan(5)", "F0", "F01", "F02"];
const PART_COLOURS = ["#bbb", "#2a6fdb", "#d1495b"];
const $ = (id) => document.getElementById(id);
const canvas = $("canvas");
const ctx = canvas.getContext("2d");

function layout(n, edges) {
  // spring embedding from a circle, fixed iteration count
  const w = canvas.width, h = canvas.height;
  const pos = Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / Math.max(n, 1);
    return { x: w / 2 + (w / 3) * Math.cos(a), y: h / 2 + (h / 3) * Math.sin(a) };
  });
  const k = Math.sqrt((w * h) / Math.max(n, 1)) * 0.6;
  for (let it = 0; it < 300; it++) {
    const disp = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
        const d = Math.max(Math.hypot(dx, dy), 0.01);
        const f = (k * k) / d;
        disp[i].x += (dx / d) * f; disp[i].y += (dy / d) * f;
        disp[j].x -= (dx / d) * f; disp[j].y -= (dy / d) * f;
      }
    }
    for (const [u, v] of edges) {
      const dx = pos[u].x - pos[v].x, dy = pos[u].y - pos[v].y;
      const d = Math.max(Math.hypot(dx, dy), 0.01);
      const f = (d * d) / k;
      disp[u].x -= (dx / d) * f; disp[u].y -= (dy / d) * f;
      disp[v].x += (dx / d) * f; disp[v].y += (dy / d) * f;
    }
    const t = 20 * (1 - it / 300) + 1;
    pos.forEach((p, i) => {
      const d = Math.max(Math.hypot(disp[i].x, disp[i].y), 0.01);
      p.x = Math.min(w - 20, Math.max(20, p.x + (disp[i].x / d) * Math.min(d, t)));
      p.y = Math.min(h - 20, Math.max(20, p.y + (disp[i].y / d) * Math.min(d, t)));
    });
  }
  return pos;
}

function draw(doc) {
  const { n, edges, certificate, hole } = doc;
  const pos = layout(n, edges);
  const part = new Array(n).fill(0);
  const marked = new Set();
  if (certificate && certificate.parts) {
    certificate.parts.forEach((vs, p) => vs.forEach((v) => (part[v] = p)));
  }
  if (certificate && certificate.witness) certificate.witness.vertices.forEach((v) => marked.add(v));
  if (hole) hole.forEach((v) => marked.add(v));

  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (const [u, v] of edges) {
    const hot = marked.has(u) && marked.has(v);
    ctx.strokeStyle = hot ? "#e76f51" : "#999";
    ctx.lineWidth = hot ? 3 : 1;
    ctx.beginPath();
    ctx.moveTo(pos[u].x, pos[u].y);
    ctx.lineTo(pos[v].x, pos[v].y);
    ctx.stroke();
  }
  const r = n > 60 ? 5 : 11;
  pos.forEach((p, v) => {
    ctx.beginPath();
    ctx.arc(p.x, p.y, r, 0, 2 * Math.PI);
    ctx.fillStyle = marked.has(v) ? "#f4a261" : PART_COLOURS[part[v]];
    ctx.fill();
    ctx.strokeStyle = "#333";
    ctx.lineWidth = 1;
    ctx.stroke();
    if (r > 6) {
      ctx.fillStyle = "#fff";
      ctx.font = "10px sans-serif";
      ctx.textAlign = "center";
      ctx.textBaseline = "middle";
      ctx.fillText(String(v), p.x, p.y);
    }
  });
}

function status(doc) {
  const c = doc.certificate;
  if (!c) return `${doc.label}: not chordal, chordless cycle ${doc.hole.join("-")}`;
  if (c.decision === "yes") return `${doc.label}: partitionable (${doc.n} vertices)`;
  const w = c.witness;
  const name = w.kind === "Fan" ? `Fan(${w.k})` : w.kind;
  return `${doc.label}: not partitionable, induced ${name} on {${w.vertices.join(", ")}}`;
}

function show(run) {
  try {
    const doc = JSON.parse(run());
    $("status").textContent = status(doc);
    $("json").textContent = JSON.stringify(doc.certificate ?? { hole: doc.hole }, null, 1) + "\ngraph6: " + doc.graph6;
    draw(doc);
  } catch (e) {
    $("status").textContent = `error: ${e}`;
  }
}

await init();
for (const k of KINDS) $("kind").add(new Option(k, k));
$("certify").onclick = () => show(() => certify($("input").value));
$("random").onclick = () => show(() => random(+$("n").value, +$("bias").value, +$("seed").value));
$("next").onclick = () => { $("seed").value = +$("seed").value + 1; $("random").onclick(); };
$("show").onclick = () => show(() => catalogue($("kind").value));
$("certify").onclick();
