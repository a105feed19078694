/**
 * Deterministic overlay rendering of CSV series: same inputs, same bytes.
 * Charts are laid out at a fixed size with animations disabled and
 * rendered server-side to SVG; PNG output rasterizes that SVG.
 */
import * as echarts from "echarts";
import { Resvg } from "@resvg/resvg-js";

import { Series } from "./csv";

export interface PlotJob {
  series: Series[];
  labels: string[];
  /** Log-scale y axis; non-positive points are dropped (unplottable). */
  logy: boolean;
  title?: string;
}

export const WIDTH = 900;
export const HEIGHT = 560;

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                 "#8c564b", "#e377c2", "#7f7f7f"];

export function chartOptions(job: PlotJob): echarts.EChartsOption {
  const series = job.series.map((s, i) => {
    let points = s.times.map((t, k) => [t, s.values[k]]);
    if (job.logy) {
      points = points.filter(([, v]) => v > 0);
    }
    return {
      name: job.labels[i],
      type: "line" as const,
      showSymbol: false,
      data: points,
      lineStyle: { width: 1.6 },
      color: PALETTE[i % PALETTE.length],
    };
  });
  const yName = job.series.every((s) => s.kind === "diff")
    ? "max nodal difference"
    : "L2 error";
  return {
    animation: false,
    backgroundColor: "#ffffff",
    title: job.title
      ? { text: job.title, left: "center", textStyle: { fontSize: 15 } }
      : undefined,
    grid: { left: 80, right: 30, top: job.title ? 56 : 36, bottom: 56 },
    legend: { bottom: 6, data: job.labels },
    xAxis: {
      type: "value",
      name: "time",
      nameLocation: "middle",
      nameGap: 26,
    },
    yAxis: {
      type: job.logy ? "log" : "value",
      name: yName,
      nameLocation: "middle",
      nameGap: 62,
      axisLabel: { formatter: (v: number) => v.toExponential(0) },
    },
    series,
  };
}

export function renderSvg(job: PlotJob): string {
  const chart = echarts.init(null, null, {
    renderer: "svg",
    ssr: true,
    width: WIDTH,
    height: HEIGHT,
  });
  try {
    chart.setOption(chartOptions(job));
    return chart.renderToSVGString();
  } finally {
    // SSR charts keep an event-loop handle alive until disposed.
    chart.dispose();
  }
}

export function renderPng(job: PlotJob): Buffer {
  const svg = renderSvg(job);
  return new Resvg(svg, { fitTo: { mode: "width", value: WIDTH } })
    .render()
    .asPng();
}
