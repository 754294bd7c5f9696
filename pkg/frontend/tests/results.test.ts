import { expect, test } from "vitest";

import type { RankingResponse } from "../src/api.js";
import { toResultView } from "../src/results.js";

const response: RankingResponse = {
  results: [
    { name: "Arzami bin Othman", score: 44.94897427831781, rank: 1 },
    { name: "Arifah Fasha bt Rosmani", score: 37.61785115301142, rank: 2 },
    { name: "Hanisah Ahmad", score: 32.03772410170407, rank: 3 },
  ],
  metric: "euclidean-percent",
  roster_version: "1-abcdef123456",
};

test("rows keep API order and rank", () => {
  const view = toResultView(response);
  expect(view.rows.map((r) => r.rank)).toEqual([1, 2, 3]);
  expect(view.rows.map((r) => r.name)).toEqual([
    "Arzami bin Othman",
    "Arifah Fasha bt Rosmani",
    "Hanisah Ahmad",
  ]);
});

test("display score is the API score rounded half-up to two decimals", () => {
  const view = toResultView(response);
  expect(view.rows.map((r) => r.display)).toEqual(["44.95", "37.62", "32.04"]);
});

test("row text joins name and display score", () => {
  expect(toResultView(response).rows[0]!.text).toBe("Arzami bin Othman — 44.95");
});

test("metric and roster version are carried through", () => {
  const view = toResultView(response);
  expect(view.metric).toBe("euclidean-percent");
  expect(view.rosterVersion).toBe("1-abcdef123456");
});

test("empty result lists stay empty", () => {
  const view = toResultView({ results: [], metric: "euclidean-percent", roster_version: "x" });
  expect(view.rows).toEqual([]);
});
