#!/usr/bin/env node
import { SchemaError } from "./csv";
import { renderFile } from "./render";

function usage(): string {
  return (
    "usage: hybridsec-plot <sweep.csv> -o <chart.svg> " +
    "[--title TEXT] [--width N] [--height N] [--no-bands]"
  );
}

export function main(argv: string[]): number {
  let input: string | undefined;
  let output: string | undefined;
  let title: string | undefined;
  let width: number | undefined;
  let height: number | undefined;
  let bands = true;

  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === "-o" || arg === "--out") {
      output = argv[++i];
    } else if (arg === "--title") {
      title = argv[++i];
    } else if (arg === "--width") {
      width = Number(argv[++i]);
    } else if (arg === "--height") {
      height = Number(argv[++i]);
    } else if (arg === "--no-bands") {
      bands = false;
    } else if (arg === "-h" || arg === "--help") {
      console.log(usage());
      return 0;
    } else if (arg.startsWith("-")) {
      console.error(`unknown option ${arg}\n${usage()}`);
      return 1;
    } else if (input === undefined) {
      input = arg;
    } else {
      console.error(`unexpected argument ${arg}\n${usage()}`);
      return 1;
    }
  }
  if (!input || !output) {
    console.error(usage());
    return 1;
  }
  if ((width !== undefined && !(width > 0)) || (height !== undefined && !(height > 0))) {
    console.error("width/height must be positive numbers");
    return 1;
  }

  try {
    renderFile(input, output, { title, width, height, bands });
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
      return 1;
    }
    if (err instanceof Error && "code" in err) {
      console.error(`i/o error: ${err.message}`);
      return 2;
    }
    throw err;
  }
  console.log(`wrote ${output}`);
  return 0;
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
