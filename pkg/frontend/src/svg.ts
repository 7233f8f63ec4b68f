import { CurveSet } from "./curves";

export interface RenderOptions {
  width?: number;
  height?: number;
  title?: string;
  /** draw translucent confidence bands around each curve */
  bands?: boolean;
}

const PALETTE: Record<string, string> = {
  "plc-only": "#b15928",
  "wireless-only": "#33a02c",
  tsc: "#1f78b4",
  "an-sharing": "#e31a1c",
};
const FALLBACK = ["#6a3d9a", "#ff7f00", "#a6cee3", "#fb9a99"];

function color(scheme: string, index: number): string {
  return PALETTE[scheme] ?? FALLBACK[index % FALLBACK.length];
}

function fmt(v: number): string {
  return v.toFixed(2).replace(/-0\.00/, "0.00");
}

/** Round ticks covering [min, max]: 1/2/5 steps, deterministic. */
export function niceTicks(min: number, max: number, count = 5): number[] {
  if (!(max > min)) {
    max = min + 1;
  }
  const span = max - min;
  const step0 = span / Math.max(count, 1);
  const mag = Math.pow(10, Math.floor(Math.log10(step0)));
  let step = mag;
  for (const mult of [1, 2, 5, 10]) {
    if (mag * mult >= step0) {
      step = mag * mult;
      break;
    }
  }
  const start = Math.ceil(min / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= max + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

function tickLabel(v: number): string {
  const rounded = Math.round(v * 1e6) / 1e6;
  return String(rounded);
}

const esc = (s: string) =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");

export function renderSvg(curves: CurveSet, options: RenderOptions = {}): string {
  const width = options.width ?? 800;
  const height = options.height ?? 520;
  const bands = options.bands ?? true;
  const margin = { left: 64, right: 180, top: options.title ? 44 : 24, bottom: 52 };
  const plotW = width - margin.left - margin.right;
  const plotH = height - margin.top - margin.bottom;

  const xs = curves.series[0].points.map((p) => p.x);
  let xMin = Math.min(...xs);
  let xMax = Math.max(...xs);
  if (xMin === xMax) {
    xMin -= 0.5;
    xMax += 0.5;
  }
  let yMax = 0;
  for (const s of curves.series) {
    for (const p of s.points) {
      yMax = Math.max(yMax, p.mu + (bands ? p.ci : 0));
    }
  }
  if (yMax <= 0) {
    yMax = 1;
  }
  yMax *= 1.05;

  const sx = (x: number) => margin.left + ((x - xMin) / (xMax - xMin)) * plotW;
  const sy = (y: number) => margin.top + plotH - (y / yMax) * plotH;

  const out: string[] = [];
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`
  );
  out.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  if (options.title) {
    out.push(
      `<text x="${fmt(width / 2)}" y="24" text-anchor="middle" font-size="16">` +
        `${esc(options.title)}</text>`
    );
  }

  // axes, grid, ticks
  for (const t of niceTicks(xMin, xMax)) {
    const x = fmt(sx(t));
    out.push(
      `<line x1="${x}" y1="${fmt(margin.top)}" x2="${x}" y2="${fmt(margin.top + plotH)}" ` +
        `stroke="#dddddd" stroke-width="1"/>`
    );
    out.push(
      `<text x="${x}" y="${fmt(margin.top + plotH + 18)}" text-anchor="middle" ` +
        `font-size="11">${tickLabel(t)}</text>`
    );
  }
  for (const t of niceTicks(0, yMax)) {
    const y = fmt(sy(t));
    out.push(
      `<line x1="${fmt(margin.left)}" y1="${y}" x2="${fmt(margin.left + plotW)}" y2="${y}" ` +
        `stroke="#dddddd" stroke-width="1"/>`
    );
    out.push(
      `<text x="${fmt(margin.left - 8)}" y="${y}" text-anchor="end" dominant-baseline="middle" ` +
        `font-size="11">${tickLabel(t)}</text>`
    );
  }
  out.push(
    `<rect x="${fmt(margin.left)}" y="${fmt(margin.top)}" width="${fmt(plotW)}" ` +
      `height="${fmt(plotH)}" fill="none" stroke="#333333"/>`
  );
  out.push(
    `<text x="${fmt(margin.left + plotW / 2)}" y="${fmt(height - 12)}" text-anchor="middle" ` +
      `font-size="13">${esc(curves.xLabel)}</text>`
  );
  out.push(
    `<text x="16" y="${fmt(margin.top + plotH / 2)}" text-anchor="middle" font-size="13" ` +
      `transform="rotate(-90 16 ${fmt(margin.top + plotH / 2)})">${esc(curves.yLabel)}</text>`
  );

  // confidence bands under the curves
  if (bands) {
    curves.series.forEach((s, i) => {
      const upper = s.points.map((p) => `${fmt(sx(p.x))},${fmt(sy(p.mu + p.ci))}`);
      const lower = s.points
        .slice()
        .reverse()
        .map((p) => `${fmt(sx(p.x))},${fmt(sy(Math.max(p.mu - p.ci, 0)))}`);
      out.push(
        `<polygon points="${upper.concat(lower).join(" ")}" fill="${color(s.scheme, i)}" ` +
          `opacity="0.12"/>`
      );
    });
  }

  // one polyline and one marker per data point for each scheme
  curves.series.forEach((s, i) => {
    const c = color(s.scheme, i);
    const pts = s.points.map((p) => `${fmt(sx(p.x))},${fmt(sy(p.mu))}`).join(" ");
    out.push(`<polyline points="${pts}" fill="none" stroke="${c}" stroke-width="2"/>`);
    for (const p of s.points) {
      out.push(
        `<circle cx="${fmt(sx(p.x))}" cy="${fmt(sy(p.mu))}" r="3" fill="${c}" ` +
          `data-scheme="${esc(s.scheme)}" data-x="${esc(p.rawValue)}" data-mu="${esc(p.rawMu)}"/>`
      );
    }
  });

  // legend
  curves.series.forEach((s, i) => {
    const y = margin.top + 10 + i * 20;
    const x = margin.left + plotW + 16;
    out.push(
      `<line x1="${fmt(x)}" y1="${fmt(y)}" x2="${fmt(x + 22)}" y2="${fmt(y)}" ` +
        `stroke="${color(s.scheme, i)}" stroke-width="2"/>`
    );
    out.push(
      `<text x="${fmt(x + 28)}" y="${fmt(y)}" dominant-baseline="middle" font-size="12">` +
        `${esc(s.scheme)}</text>`
    );
  });

  out.push("</svg>");
  return out.join("\n") + "\n";
}
