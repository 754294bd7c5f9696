// Ranked-result view model: API rows in API order, scores rendered to two
// decimals. No reordering, no recomputation.

import type { RankingResponse } from "./api.js";
import { formatScore2dp } from "./rounding.js";

export interface ResultRowView {
  rank: number;
  name: string;
  /** Score rendered half-up to two decimals, e.g. "44.95". */
  display: string;
  /** Row text as shown in the list, e.g. "Arzami bin Othman — 44.95". */
  text: string;
}

export interface ResultView {
  rows: ResultRowView[];
  metric: string;
  rosterVersion: string;
}

export function toResultView(response: RankingResponse): ResultView {
  const rows = response.results.map((row) => {
    const display = formatScore2dp(row.score);
    return {
      rank: row.rank,
      name: row.name,
      display,
      text: `${row.name} — ${display}`,
    };
  });
  return { rows, metric: response.metric, rosterVersion: response.roster_version };
}
