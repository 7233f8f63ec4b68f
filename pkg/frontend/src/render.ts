import * as fs from "fs";

import { parseSweepCsv } from "./csv";
import { toCurveSet } from "./curves";
import { RenderOptions, renderSvg } from "./svg";

/** Read a sweep CSV and write the chart; nothing is written on bad input. */
export function renderFile(csvPath: string, outPath: string, options: RenderOptions = {}): void {
  const text = fs.readFileSync(csvPath, "utf-8");
  const svg = renderSvg(toCurveSet(parseSweepCsv(text)), options);
  fs.writeFileSync(outPath, svg);
}
