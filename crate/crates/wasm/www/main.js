import init, { family_curve, bloch_wigner_field, maillot_measure } from "./pkg/mahler_wasm.js";

const $ = (id) => document.getElementById(id);

function plotCurve() {
  const kind = $("kind").value;
  const n = Number($("n").value);
  const lo = Number($("lo").value);
  const hi = Number($("hi").value);
  const steps = 200;
  const t0 = performance.now();
  const ys = family_curve(kind, n, lo, hi, steps);
  const ms = (performance.now() - t0).toFixed(0);
  const canvas = $("curve");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const finite = Array.from(ys).filter(Number.isFinite);
  if (finite.length === 0) {
    $("curve-info").textContent = "no valid values";
    return;
  }
  const ymax = Math.max(...finite, 1e-9);
  const pad = 30;
  const x = (k) => pad + (canvas.width - 2 * pad) * k / (steps - 1);
  const y = (v) => canvas.height - pad - (canvas.height - 2 * pad) * v / ymax;
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, canvas.width - 2 * pad, canvas.height - 2 * pad);
  ctx.strokeStyle = "#c00";
  ctx.beginPath();
  let started = false;
  ys.forEach((v, k) => {
    if (!Number.isFinite(v)) { started = false; return; }
    if (started) ctx.lineTo(x(k), y(v)); else ctx.moveTo(x(k), y(v));
    started = true;
  });
  ctx.stroke();
  ctx.fillStyle = "#000";
  ctx.fillText(`${ymax.toFixed(4)}`, 2, pad);
  ctx.fillText(`a = ${lo}`, pad, canvas.height - 10);
  ctx.fillText(`a = ${hi}`, canvas.width - pad - 40, canvas.height - 10);
  $("curve-info").textContent = `${steps} points in ${ms} ms`;
}

function drawField() {
  const canvas = $("field");
  const w = canvas.width, h = canvas.height;
  const t0 = performance.now();
  const d = bloch_wigner_field(-1.5, 2.5, -2, 2, w, h);
  const ms = (performance.now() - t0).toFixed(0);
  const img = canvas.getContext("2d").createImageData(w, h);
  const max = 1.0149416064096536;
  for (let k = 0; k < w * h; k++) {
    const v = Math.max(-1, Math.min(1, d[k] / max));
    img.data[4 * k] = v > 0 ? 255 : Math.round(255 * (1 + v));
    img.data[4 * k + 1] = Math.round(255 * (1 - Math.abs(v)));
    img.data[4 * k + 2] = v < 0 ? 255 : Math.round(255 * (1 - v));
    img.data[4 * k + 3] = 255;
  }
  canvas.getContext("2d").putImageData(img, 0, 0);
  $("field-info").textContent = `(${w * h} values in ${ms} ms)`;
}

function maillot() {
  const v = maillot_measure(Number($("ma").value), Number($("mb").value), Number($("mc").value));
  $("maillot-out").textContent = Number.isFinite(v) ? `m = ${v.toFixed(12)}` : "coefficients must be positive";
}

await init();
$("plot").addEventListener("click", plotCurve);
$("maillot").addEventListener("click", maillot);
plotCurve();
drawField();
maillot();
