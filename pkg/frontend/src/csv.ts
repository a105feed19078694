/**
 * Readers for the two CSV schemas the solver CLI emits:
 *   time,l2_error,linf_error   (error series of one run)
 *   time,linf_diff             (lockstep gap between two schemes)
 * Every parse failure names the offending file.
 */
import { readFileSync } from "fs";

export const ERROR_HEADER = "time,l2_error,linf_error";
export const DIFF_HEADER = "time,linf_diff";

export interface Series {
  /** Path the series was read from. */
  path: string;
  /** Which schema the file carried. */
  kind: "errors" | "diff";
  times: number[];
  /** l2_error column for error files, linf_diff column for diff files. */
  values: number[];
  /** linf_error column; only present for error files. */
  linf?: number[];
}

export class CsvError extends Error {}

function parseNumber(raw: string, path: string, line: number): number {
  // Number() accepts the empty string; reject it explicitly.
  if (raw.trim() === "") {
    throw new CsvError(`${path}:${line}: empty field`);
  }
  const value = Number(raw);
  if (Number.isNaN(value)) {
    throw new CsvError(`${path}:${line}: non-numeric field ${JSON.stringify(raw)}`);
  }
  return value;
}

export function readSeries(path: string): Series {
  let text: string;
  try {
    text = readFileSync(path, "ascii");
  } catch (err) {
    throw new CsvError(`${path}: ${(err as Error).message}`);
  }
  const lines = text.split("\n").filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new CsvError(`${path}: empty file`);
  }
  const header = lines[0];
  let kind: Series["kind"];
  if (header === ERROR_HEADER) {
    kind = "errors";
  } else if (header === DIFF_HEADER) {
    kind = "diff";
  } else {
    throw new CsvError(
      `${path}: unrecognized header ${JSON.stringify(header)}; expected ` +
      `${JSON.stringify(ERROR_HEADER)} or ${JSON.stringify(DIFF_HEADER)}`);
  }
  const nCols = kind === "errors" ? 3 : 2;
  const times: number[] = [];
  const values: number[] = [];
  const linf: number[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== nCols) {
      throw new CsvError(
        `${path}:${i + 1}: expected ${nCols} columns, got ${parts.length}`);
    }
    times.push(parseNumber(parts[0], path, i + 1));
    values.push(parseNumber(parts[1], path, i + 1));
    if (kind === "errors") {
      linf.push(parseNumber(parts[2], path, i + 1));
    }
  }
  const series: Series = { path, kind, times, values };
  if (kind === "errors") {
    series.linf = linf;
  }
  return series;
}
