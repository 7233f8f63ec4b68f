import { SchemaError, SweepRow } from "./csv";

export interface CurvePoint {
  x: number;
  mu: number;
  ci: number;
  rawValue: string;
  rawMu: string;
}

export interface CurveSet {
  xLabel: string;
  yLabel: string;
  param: string;
  /** insertion order follows first appearance in the CSV */
  series: { scheme: string; points: CurvePoint[] }[];
}

const X_LABELS: Record<string, string> = {
  gamma_a_db: "Alice input SNR (dB)",
  gamma_b_db: "Bob AN input SNR (dB)",
  theta: "data power fraction theta",
  target_r: "target secrecy rate (bits/s/Hz)",
};

/** Group rows into one series per scheme and check they share the x grid. */
export function toCurveSet(rows: SweepRow[]): CurveSet {
  if (rows.length === 0) {
    throw new SchemaError("no data rows");
  }
  const param = rows[0].param;
  for (const row of rows) {
    if (row.param !== param) {
      throw new SchemaError(`mixed sweep parameters: ${param} and ${row.param}`);
    }
  }

  const order: string[] = [];
  const byScheme = new Map<string, CurvePoint[]>();
  for (const row of rows) {
    if (!byScheme.has(row.scheme)) {
      byScheme.set(row.scheme, []);
      order.push(row.scheme);
    }
    byScheme.get(row.scheme)!.push({
      x: row.value,
      mu: row.mu,
      ci: row.ci,
      rawValue: row.rawValue,
      rawMu: row.rawMu,
    });
  }

  const gridOf = (points: CurvePoint[]) => points.map((p) => p.rawValue).join("|");
  const grid = gridOf(byScheme.get(order[0])!);
  for (const scheme of order) {
    if (gridOf(byScheme.get(scheme)!) !== grid) {
      throw new SchemaError(`series "${scheme}" does not share the common x grid`);
    }
  }

  if (param === "target_r") {
    const maxR = Math.max(...rows.map((r) => r.value));
    for (const row of rows) {
      if (row.mu > maxR * (1 + 1e-9)) {
        throw new SchemaError("throughput exceeds the largest target rate");
      }
    }
  }

  return {
    param,
    xLabel: X_LABELS[param] ?? param,
    yLabel: "secure throughput (bits/s/Hz)",
    series: order.map((scheme) => ({ scheme, points: byScheme.get(scheme)! })),
  };
}
