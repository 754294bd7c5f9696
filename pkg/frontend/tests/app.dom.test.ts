// @vitest-environment happy-dom
import { afterEach, beforeEach, describe, expect, test, vi } from "vitest";

import type { Api, RankingResponse } from "../src/api.js";
import { ApiRequestError } from "../src/api.js";
import { createApp, type App } from "../src/app.js";

const FIVE_AREAS = [
  "Multimedia",
  "Web Application",
  "Network",
  "Artificial Intelligence",
  "Mobile Application",
];

const REFERENCE_RESPONSE: RankingResponse = {
  results: [
    { name: "Arzami bin Othman", score: 44.94897427831781, rank: 1 },
    { name: "Arifah Fasha bt Rosmani", score: 37.61785115301142, rank: 2 },
    { name: "Hanisah Ahmad", score: 32.03772410170407, rank: 3 },
  ],
  metric: "euclidean-percent",
  roster_version: "1-ref",
};

const NEUTRAL_RESPONSE: RankingResponse = {
  results: [{ name: "Someone Else", score: 50.0, rank: 1 }],
  metric: "euclidean-percent",
  roster_version: "1-ref",
};

function stubApi(overrides: Partial<Api> = {}): Api {
  return {
    areas: async () => ({ areas: [...FIVE_AREAS], roster_version: "1-ref" }),
    supervisors: async () => ({
      supervisors: [
        { name: "Arzami bin Othman", ratings: [4, 4, 1, 2, 3] },
        { name: "Faris", ratings: [4, 3, 4, 3.5, 4.5] },
      ],
      roster_version: "1-ref",
    }),
    recommend: async () => NEUTRAL_RESPONSE,
    peers: async () => REFERENCE_RESPONSE,
    ...overrides,
  };
}

async function settle(): Promise<void> {
  for (let i = 0; i < 8; i += 1) await Promise.resolve();
}

let root: HTMLElement;
let app: App | null = null;

beforeEach(() => {
  vi.useFakeTimers();
  document.body.innerHTML = "";
  root = document.createElement("div");
  document.body.append(root);
  window.location.hash = "";
});

afterEach(() => {
  app?.destroy();
  app = null;
  vi.useRealTimers();
});

function sliderInputs(): HTMLInputElement[] {
  return Array.from(root.querySelectorAll<HTMLInputElement>('input[type="range"]'));
}

function resultTexts(): string[] {
  return Array.from(root.querySelectorAll(".results li")).map((li) => li.textContent ?? "");
}

function dragSlider(input: HTMLInputElement, value: number): void {
  input.value = String(value);
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

describe("schema loading", () => {
  test("renders one slider per area, labeled from the API, initialized to 2.5", async () => {
    app = createApp(root, stubApi());
    await app.ready;
    const inputs = sliderInputs();
    expect(inputs).toHaveLength(5);
    expect(inputs.every((input) => input.value === "2.5")).toBe(true);
    const labels = Array.from(root.querySelectorAll(".slider-label")).map((l) => l.textContent);
    expect(labels).toEqual(FIVE_AREAS);
  });

  test("a three-area schema yields exactly three sliders", async () => {
    app = createApp(
      root,
      stubApi({ areas: async () => ({ areas: ["Graphics", "Audio", "Haptics"], roster_version: "1-x" }) }),
    );
    await app.ready;
    expect(sliderInputs()).toHaveLength(3);
  });

  test("offline service shows the banner and no sliders", async () => {
    app = createApp(
      root,
      stubApi({
        areas: async () => {
          throw new TypeError("fetch failed");
        },
      }),
    );
    await app.ready;
    const banner = root.querySelector<HTMLElement>(".offline-banner");
    expect(banner?.hidden).toBe(false);
    expect(sliderInputs()).toHaveLength(0);
  });
});

describe("live ranking", () => {
  test("reference slider positions render the reference listing", async () => {
    const api = stubApi({
      recommend: async (ratings: number[]) => {
        const reference = [5, 4.5, 1, 2.5, 3];
        const matches = ratings.length === 5 && ratings.every((r, i) => r === reference[i]);
        return matches ? REFERENCE_RESPONSE : NEUTRAL_RESPONSE;
      },
    });
    app = createApp(root, api);
    await app.ready;

    const inputs = sliderInputs();
    [5, 4.5, 1, 2.5, 3].forEach((value, i) => dragSlider(inputs[i]!, value));
    await vi.advanceTimersByTimeAsync(150);
    await settle();

    const rows = resultTexts();
    expect(rows[0]).toBe("Arzami bin Othman — 44.95");
    expect(rows).toEqual([
      "Arzami bin Othman — 44.95",
      "Arifah Fasha bt Rosmani — 37.62",
      "Hanisah Ahmad — 32.04",
    ]);
  });

  test("a drag burst coalesces into one debounced request", async () => {
    const recommend = vi.fn(async () => NEUTRAL_RESPONSE);
    app = createApp(root, stubApi({ recommend }));
    await app.ready;
    expect(recommend).toHaveBeenCalledTimes(1); // initial ranking

    const slider = sliderInputs()[0]!;
    for (const value of [3, 3.5, 4, 4.5, 5]) {
      dragSlider(slider, value);
      await vi.advanceTimersByTimeAsync(40); // faster than the 150 ms debounce
    }
    await vi.advanceTimersByTimeAsync(150);
    await settle();

    expect(recommend).toHaveBeenCalledTimes(2);
    expect(recommend).toHaveBeenLastCalledWith([5, 2.5, 2.5, 2.5, 2.5], 5);
  });

  test("a stale response never overwrites a newer render", async () => {
    const resolvers: ((r: RankingResponse) => void)[] = [];
    const api = stubApi({
      recommend: () => new Promise<RankingResponse>((resolve) => resolvers.push(resolve)),
    });
    app = createApp(root, api);
    const ready = app.ready;
    await settle();
    resolvers[0]!(NEUTRAL_RESPONSE); // initial load
    await ready;

    const slider = sliderInputs()[0]!;
    dragSlider(slider, 1);
    await vi.advanceTimersByTimeAsync(150);
    dragSlider(slider, 4);
    await vi.advanceTimersByTimeAsync(150);
    expect(resolvers).toHaveLength(3);

    const newer: RankingResponse = {
      results: [{ name: "Final State", score: 90, rank: 1 }],
      metric: "euclidean-percent",
      roster_version: "1-ref",
    };
    const stale: RankingResponse = {
      results: [{ name: "Stale State", score: 10, rank: 1 }],
      metric: "euclidean-percent",
      roster_version: "1-ref",
    };
    resolvers[2]!(newer); // response for the final slider position arrives first
    await settle();
    resolvers[1]!(stale); // earlier request resolves late
    await settle();

    expect(resultTexts()).toEqual(["Final State — 90.00"]);
  });

  test("an API rejection renders inline and the next success clears it", async () => {
    let fail = false;
    const api = stubApi({
      recommend: async () => {
        if (fail) throw new ApiRequestError(400, "OutOfRange", "rating 1 is out of range");
        return NEUTRAL_RESPONSE;
      },
    });
    app = createApp(root, api);
    await app.ready;

    fail = true;
    dragSlider(sliderInputs()[0]!, 1);
    await vi.advanceTimersByTimeAsync(150);
    await settle();
    const banner = root.querySelector<HTMLElement>(".error-banner");
    expect(banner?.hidden).toBe(false);
    expect(banner?.textContent).toContain("out of range");

    fail = false;
    dragSlider(sliderInputs()[0]!, 2);
    await vi.advanceTimersByTimeAsync(150);
    await settle();
    expect(banner?.hidden).toBe(true);
  });

  test("manual entry accepts off-grid values and rejects junk", async () => {
    const recommend = vi.fn(async () => NEUTRAL_RESPONSE);
    app = createApp(root, stubApi({ recommend }));
    await app.ready;

    const entry = root.querySelector<HTMLInputElement>(".manual-entry")!;
    entry.value = "4.25";
    entry.dispatchEvent(new Event("change", { bubbles: true }));
    await vi.advanceTimersByTimeAsync(150);
    await settle();
    expect(recommend).toHaveBeenLastCalledWith([4.25, 2.5, 2.5, 2.5, 2.5], 5);
    expect(sliderInputs()[0]!.value).toBe("4.25");

    entry.value = "nonsense";
    entry.dispatchEvent(new Event("change", { bubbles: true }));
    await settle();
    expect(entry.value).toBe("4.25"); // reverted to the last good value
  });
});

describe("peer view", () => {
  function navigate(hash: string): void {
    window.location.hash = hash;
    window.dispatchEvent(new Event("hashchange"));
  }

  test("result rows link to each supervisor's peer view", async () => {
    app = createApp(root, stubApi());
    await app.ready;
    const link = root.querySelector<HTMLAnchorElement>(".results a")!;
    expect(link.getAttribute("href")).toBe("#/peers/Someone%20Else");
  });

  test("renders the ranked peer list from the API", async () => {
    app = createApp(root, stubApi());
    await app.ready;
    navigate("#/peers/Faris");
    await settle();

    const heading = root.querySelector(".peer-heading")!;
    expect(heading.textContent).toBe("Supervisors similar to Faris");
    const rows = Array.from(root.querySelectorAll(".peer-results li")).map((li) => li.textContent);
    expect(rows).toEqual([
      "Arzami bin Othman — 44.95",
      "Arifah Fasha bt Rosmani — 37.62",
      "Hanisah Ahmad — 32.04",
    ]);
    // click-through: each peer row links to that peer's own view
    const first = root.querySelector<HTMLAnchorElement>(".peer-results a")!;
    expect(first.getAttribute("href")).toBe("#/peers/Arzami%20bin%20Othman");
  });

  test("unknown supervisor shows a message", async () => {
    app = createApp(
      root,
      stubApi({
        peers: async () => {
          throw new ApiRequestError(404, "UnknownName", "no supervisor named 'Ghost'");
        },
      }),
    );
    await app.ready;
    navigate("#/peers/Ghost");
    await settle();
    expect(root.querySelector(".peer-message")?.textContent).toBe("Unknown supervisor: Ghost");
  });

  test("a singleton roster explains the empty peer list", async () => {
    app = createApp(
      root,
      stubApi({
        peers: async () => ({ results: [], metric: "euclidean-percent", roster_version: "1-x" }),
      }),
    );
    await app.ready;
    navigate("#/peers/Only");
    await settle();
    const message = root.querySelector<HTMLElement>(".peer-message")!;
    expect(message.hidden).toBe(false);
    expect(message.textContent).toContain("only one");
    expect(root.querySelectorAll(".peer-results li")).toHaveLength(0);
  });

  test("navigating back restores the matching view", async () => {
    app = createApp(root, stubApi());
    await app.ready;
    navigate("#/peers/Faris");
    await settle();
    expect(root.querySelector<HTMLElement>(".match-view")?.hidden).toBe(true);
    navigate("");
    await settle();
    expect(root.querySelector<HTMLElement>(".match-view")?.hidden).toBe(false);
    expect(root.querySelector<HTMLElement>(".peer-view")?.hidden).toBe(true);
  });
});
