import init, { phase_match, emission_maps, iso_flux_curve } from "./pkg/spdc_demo.js";

const $ = (id) => document.getElementById(id);
const num = (id) => parseFloat($(id).value);
const source = () => [num("pump"), num("length"), num("cut")];

function status(msg, isError = false) {
  $("status").textContent = msg;
  $("status").className = isError ? "error" : "";
}

function guarded(fn) {
  return () => {
    status("working…");
    setTimeout(() => {
      try {
        const t0 = performance.now();
        fn();
        status(`done in ${((performance.now() - t0) / 1000).toFixed(2)} s`);
      } catch (e) {
        status(String(e.message ?? e), true);
      }
    }, 0);
  };
}

function viridisish(t) {
  const r = Math.round(255 * Math.min(1, Math.max(0, 1.6 * t - 0.4)));
  const g = Math.round(255 * Math.sin(Math.PI * 0.5 * t));
  const b = Math.round(255 * (0.5 + 0.5 * Math.cos(Math.PI * t)));
  return [r, g, b];
}

function heatmap(canvas, values, nx, ny, lo, hi) {
  const off = new OffscreenCanvas(nx, ny);
  const ctx = off.getContext("2d");
  const img = ctx.createImageData(nx, ny);
  for (let k = 0; k < nx * ny; k++) {
    const v = values[k];
    const px = img.data.subarray(4 * k, 4 * k + 4);
    if (Number.isNaN(v)) {
      px.set([255, 255, 255, 255]);
      continue;
    }
    const [r, g, b] = viridisish((v - lo) / (hi - lo || 1));
    px.set([r, g, b, 255]);
  }
  ctx.putImageData(img, 0, 0);
  const out = canvas.getContext("2d");
  out.imageSmoothingEnabled = false;
  out.clearRect(0, 0, canvas.width, canvas.height);
  out.drawImage(off, 0, 0, canvas.width, canvas.height);
}

function runPhaseMatch() {
  const pm = phase_match(...source());
  $("pm-out").textContent =
    `opening angle ${pm.opening_angle_deg.toFixed(4)}°, ` +
    `Δκ(0) ${pm.collinear_delta_kappa.toExponential(3)} rad/µm, ` +
    `compensator tilt ${pm.comp_tilt_deg.toFixed(2)}°`;
}

function runMaps() {
  const n = Math.max(16, Math.min(512, Math.round(num("grid"))));
  const m = emission_maps(...source(), num("fwhm"), n);
  heatmap($("prob"), m.probability, m.n_theta, m.n_lambda, 0, 1);
  const phase = m.phase;
  let lo = Infinity, hi = -Infinity;
  for (let k = 0; k < phase.length; k++) {
    if (m.probability[k] < 1e-3 || Number.isNaN(phase[k])) continue;
    lo = Math.min(lo, phase[k]);
    hi = Math.max(hi, phase[k]);
  }
  const masked = phase.map((v, k) => (m.probability[k] < 1e-3 ? NaN : v));
  heatmap($("phase"), masked, m.n_theta, m.n_lambda, lo, hi);
}

function runCurve() {
  const c = iso_flux_curve(...source(), num("ref-fwhm"), num("ref-width"));
  const canvas = $("curve");
  const ctx = canvas.getContext("2d");
  const W = canvas.width, H = canvas.height, pad = 40;
  ctx.clearRect(0, 0, W, H);
  const xs = c.fwhm_nm, ys = c.phase_range_rad;
  const xmax = 100, ymax = Math.max(...ys) * 1.05;
  const X = (x) => pad + (W - 2 * pad) * (x / xmax);
  const Y = (y) => H - pad - (H - 2 * pad) * (y / ymax);
  ctx.strokeStyle = "#888";
  ctx.strokeRect(pad, pad, W - 2 * pad, H - 2 * pad);
  ctx.fillStyle = "#333";
  ctx.fillText("FWHM (nm)", W / 2 - 25, H - 10);
  ctx.fillText(`${ymax.toFixed(2)} rad`, 2, pad);
  for (const t of [0, 25, 50, 75, 100]) ctx.fillText(String(t), X(t) - 6, H - pad + 14);
  ctx.strokeStyle = "#1f5fa8";
  ctx.beginPath();
  xs.forEach((x, k) => (k ? ctx.lineTo(X(x), Y(ys[k])) : ctx.moveTo(X(x), Y(ys[k]))));
  ctx.stroke();
  xs.forEach((x, k) => {
    ctx.fillStyle = k === c.optimum_index ? "#c00" : "#1f5fa8";
    ctx.beginPath();
    ctx.arc(X(x), Y(ys[k]), k === c.optimum_index ? 5 : 3, 0, 2 * Math.PI);
    ctx.fill();
  });
  const k = c.optimum_index;
  $("curve-out").textContent =
    `optimum ${xs[k]} nm, iris ${c.iris_width_deg[k].toFixed(3)}°, range ${ys[k].toFixed(3)} rad`;
}

await init();
$("run-pm").addEventListener("click", guarded(runPhaseMatch));
$("run-maps").addEventListener("click", guarded(runMaps));
$("run-curve").addEventListener("click", guarded(runCurve));
guarded(() => { runPhaseMatch(); runMaps(); })();
