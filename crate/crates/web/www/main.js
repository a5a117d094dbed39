import init, { Demo } from "./pkg/regionstereo_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);
let demo;

function paint(id, rgba) {
  const canvas = $(id);
  const ctx = canvas.getContext("2d");
  canvas.width = demo.width();
  canvas.height = demo.height();
  if (!rgba) {
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    return;
  }
  const img = new ImageData(new Uint8ClampedArray(rgba), canvas.width, canvas.height);
  ctx.putImageData(img, 0, 0);
}

function log(lines) {
  $("log").textContent = lines.join("\n");
}

const fmt = (x) => (Number.isFinite(x) ? x.toPrecision(5) : String(x));

function newScene() {
  demo?.free();
  demo = new Demo(num("w"), num("h"), num("seed"));
  paint("left", demo.left_rgba());
  paint("right", demo.right_rgba());
  paint("truth", demo.truth_rgba());
  for (const id of ["disp", "status", "filtered"]) paint(id, null);
  log([`scene ${demo.width()}x${demo.height()}`]);
}

function timed(fn) {
  const t0 = performance.now();
  const result = fn();
  return [result, performance.now() - t0];
}

function showMatch(label, summary, ms) {
  paint("disp", demo.disparity_rgba());
  paint("status", demo.status_rgba());
  const lines = [
    `${label}: ${ms.toFixed(1)} ms`,
    `estimated ${summary.estimated} of ${demo.width() * demo.height()}, R_d ${fmt(summary.r_d)}`,
  ];
  if (summary.roots > 0) {
    lines.push(`roots ${summary.roots}, idle ${summary.idle}, mean line ${summary.mean_line.toFixed(2)}`);
  }
  summary.free();
  lines.push(...applyFilter());
  log(lines);
}

function applyFilter() {
  const alpha = num("alpha");
  $("alpha-val").textContent = alpha.toFixed(2);
  const f = demo.filter(alpha);
  if (!f) return [];
  paint("filtered", demo.filtered_rgba());
  const out = [
    `filter alpha=${alpha.toFixed(2)}: Ve ${fmt(f.ve)}, R_d ${fmt(f.r_d_before)} -> ${fmt(f.r_d_after)}, ` +
      `retained ${(100 * f.retained_fraction).toFixed(1)}%`,
  ];
  f.free();
  return out;
}

function guarded(fn) {
  return () => {
    try {
      fn();
    } catch (e) {
      log([`error: ${e.message ?? e}`]);
    }
  };
}

await init();
$("new-scene").onclick = guarded(newScene);
$("run-global").onclick = guarded(() => {
  const [s, ms] = timed(() => demo.run_global(num("gn"), num("gm"), num("dmax"), num("git")));
  showMatch(`global ${num("gn")}x${num("gm")}`, s, ms);
});
$("run-grow").onclick = guarded(() => {
  const [s, ms] = timed(() => demo.run_linegrow(num("lm"), num("dmax"), num("vlg")));
  showMatch(`line growing 1x${num("lm")} V_LG=${num("vlg")}`, s, ms);
});
$("alpha").oninput = guarded(() => {
  const lines = applyFilter();
  if (lines.length) log([...$("log").textContent.split("\n").filter((l) => !l.startsWith("filter")), ...lines]);
});
newScene();
