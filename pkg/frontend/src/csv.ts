/** Strict parser for the simulator's sweep CSV schema. */

export const EXPECTED_HEADER = [
  "scheme",
  "eve_mode",
  "param",
  "value",
  "mu",
  "outage_prob",
  "trials",
  "ci",
] as const;

export interface SweepRow {
  scheme: string;
  eveMode: string;
  param: string;
  value: number;
  mu: number;
  outageProb: number;
  trials: number;
  ci: number;
  /** original value/mu strings, kept so plotted points can be traced back */
  rawValue: string;
  rawMu: string;
}

export class SchemaError extends Error {}

function finiteNumber(text: string, field: string, line: number): number {
  const value = Number(text);
  if (text.trim() === "" || !Number.isFinite(value)) {
    throw new SchemaError(`line ${line}: ${field} is not a finite number: "${text}"`);
  }
  return value;
}

export function parseSweepCsv(text: string): SweepRow[] {
  const lines = text.split(/\r?\n/).filter((l) => l.trim() !== "");
  if (lines.length === 0) {
    throw new SchemaError("empty CSV");
  }
  const header = lines[0].split(",");
  if (header.join(",") !== EXPECTED_HEADER.join(",")) {
    throw new SchemaError(
      `bad header: expected "${EXPECTED_HEADER.join(",")}", got "${lines[0]}"`
    );
  }
  if (lines.length === 1) {
    throw new SchemaError("CSV has a header but no data rows");
  }

  const rows: SweepRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== EXPECTED_HEADER.length) {
      throw new SchemaError(
        `line ${i + 1}: expected ${EXPECTED_HEADER.length} fields, got ${parts.length}`
      );
    }
    const [scheme, eveMode, param, value, mu, outage, trials, ci] = parts;
    if (scheme === "" || param === "") {
      throw new SchemaError(`line ${i + 1}: empty scheme or param`);
    }
    const row: SweepRow = {
      scheme,
      eveMode,
      param,
      value: finiteNumber(value, "value", i + 1),
      mu: finiteNumber(mu, "mu", i + 1),
      outageProb: finiteNumber(outage, "outage_prob", i + 1),
      trials: finiteNumber(trials, "trials", i + 1),
      ci: finiteNumber(ci, "ci", i + 1),
      rawValue: value,
      rawMu: mu,
    };
    if (row.mu < 0) {
      throw new SchemaError(`line ${i + 1}: negative throughput`);
    }
    if (!Number.isInteger(row.trials) || row.trials < 1) {
      throw new SchemaError(`line ${i + 1}: trials must be a positive integer`);
    }
    rows.push(row);
  }
  return rows;
}
