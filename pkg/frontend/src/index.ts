export { EXPECTED_HEADER, SchemaError, SweepRow, parseSweepCsv } from "./csv";
export { CurvePoint, CurveSet, toCurveSet } from "./curves";
export { RenderOptions, niceTicks, renderSvg } from "./svg";
export { renderFile } from "./render";
