#!/usr/bin/env node
/**
 * Render an overlay plot from solver CSV files.
 *
 *   plotview <csv> [<csv> ...] --out plot.png [--labels a,b,...] [--logy]
 *            [--title text]
 *
 * Output format follows the --out extension: .png (default) or .svg.
 * Exit codes: 0 on success, 1 on usage errors or unreadable/garbled CSVs
 * (the message names the offending file); no output file is written on
 * failure.
 */
import { writeFileSync } from "fs";
import * as path from "path";

import { CsvError, Series, readSeries } from "./csv";
import { PlotJob, renderPng, renderSvg } from "./render";

export interface CliArgs {
  inputs: string[];
  out: string;
  labels?: string[];
  logy: boolean;
  title?: string;
}

export class UsageError extends Error {}

export function parseArgs(argv: string[]): CliArgs {
  const inputs: string[] = [];
  let out: string | undefined;
  let labels: string[] | undefined;
  let logy = false;
  let title: string | undefined;
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    const takeValue = () => {
      if (i + 1 >= argv.length) {
        throw new UsageError(`${arg} needs a value`);
      }
      return argv[++i];
    };
    if (arg === "--out") {
      out = takeValue();
    } else if (arg === "--labels") {
      labels = takeValue().split(",");
    } else if (arg === "--logy") {
      logy = true;
    } else if (arg === "--title") {
      title = takeValue();
    } else if (arg.startsWith("--")) {
      throw new UsageError(`unknown flag ${arg}`);
    } else {
      inputs.push(arg);
    }
  }
  if (inputs.length === 0) {
    throw new UsageError("no input CSV files given");
  }
  if (out === undefined) {
    throw new UsageError("--out <path> is required");
  }
  if (labels !== undefined && labels.length !== inputs.length) {
    throw new UsageError(
      `got ${labels.length} labels for ${inputs.length} inputs`);
  }
  return { inputs, out, labels, logy, title };
}

export function buildJob(args: CliArgs): PlotJob {
  const series: Series[] = args.inputs.map(readSeries);
  const labels = args.labels
    ?? args.inputs.map((p) => path.basename(p).replace(/\.csv$/, ""));
  return { series, labels, logy: args.logy, title: args.title };
}

export function main(argv: string[]): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    if (err instanceof UsageError) {
      process.stderr.write(`usage error: ${err.message}\n`);
      return 1;
    }
    throw err;
  }
  let job: PlotJob;
  try {
    job = buildJob(args);
  } catch (err) {
    if (err instanceof CsvError) {
      process.stderr.write(`${err.message}\n`);
      return 1;
    }
    throw err;
  }
  const wantSvg = args.out.toLowerCase().endsWith(".svg");
  const payload = wantSvg ? renderSvg(job) : renderPng(job);
  writeFileSync(args.out, payload);
  process.stdout.write(`wrote ${args.out}\n`);
  return 0;
}

if (require.main === module) {
  process.exitCode = main(process.argv.slice(2));
}
