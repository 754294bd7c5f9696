// DOM wiring: schema-driven sliders, live ranked results, peer navigation.
// All state lives in this closure; rendering is plain DOM manipulation.

import { ApiRequestError, type Api } from "./api.js";
import { debounce } from "./debounce.js";
import { toResultView } from "./results.js";
import { SequenceGate } from "./sequence.js";
import {
  SLIDER_MAX,
  SLIDER_MIN,
  SLIDER_STEP,
  parseManualEntry,
  ratingsOf,
  setSliderValue,
  slidersFromAreas,
  type SliderState,
} from "./sliders.js";

export interface AppOptions {
  /** Pause after the last slider move before querying; default 150 ms. */
  debounceMs?: number;
  /** How many recommendations to request; default 5. */
  k?: number;
}

export interface App {
  /** Resolves once the schema is loaded and the first ranking rendered. */
  ready: Promise<void>;
  destroy(): void;
}

const PEERS_HASH = /^#\/peers\/(.+)$/;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function createApp(root: HTMLElement, api: Api, options: AppOptions = {}): App {
  const debounceMs = options.debounceMs ?? 150;
  const k = options.k ?? 5;
  const gate = new SequenceGate();
  let sliders: SliderState[] = [];

  root.textContent = "";

  const offlineBanner = el("div", "offline-banner", "Service unreachable — is the API running?");
  offlineBanner.hidden = true;
  const errorBanner = el("div", "error-banner");
  errorBanner.hidden = true;

  const matchSection = el("section", "match-view");
  const sliderForm = el("form", "sliders");
  sliderForm.addEventListener("submit", (event) => event.preventDefault());
  const resultsHeading = el("h2", undefined, "Recommended supervisors");
  const resultsList = el("ol", "results");
  const versionNote = el("p", "roster-version");
  const supervisorsHeading = el("h2", undefined, "All supervisors");
  const supervisorsList = el("ul", "supervisors");
  matchSection.append(
    el("h2", undefined, "Your interests"),
    sliderForm,
    resultsHeading,
    resultsList,
    versionNote,
    supervisorsHeading,
    supervisorsList,
  );

  const peerSection = el("section", "peer-view");
  peerSection.hidden = true;
  const peerHeading = el("h2", "peer-heading");
  const backLink = el("a", "back-link", "← back to matching");
  backLink.setAttribute("href", "#");
  const peerMessage = el("p", "peer-message");
  peerMessage.hidden = true;
  const peerList = el("ol", "peer-results");
  peerSection.append(backLink, peerHeading, peerMessage, peerList);

  root.append(offlineBanner, errorBanner, matchSection, peerSection);

  function showError(message: string): void {
    errorBanner.textContent = message;
    errorBanner.hidden = false;
  }

  function clearError(): void {
    errorBanner.hidden = true;
  }

  function resultRow(name: string, text: string): HTMLLIElement {
    const item = el("li");
    const link = el("a", "peer-link", text);
    link.setAttribute("href", `#/peers/${encodeURIComponent(name)}`);
    item.append(link);
    return item;
  }

  function renderResults(rows: { name: string; text: string }[], version: string): void {
    resultsList.textContent = "";
    for (const row of rows) {
      resultsList.append(resultRow(row.name, row.text));
    }
    versionNote.textContent = `roster ${version}`;
  }

  function refresh(): void {
    const seq = gate.issue();
    api
      .recommend(ratingsOf(sliders), k)
      .then((response) => {
        if (!gate.shouldApply(seq)) return; // stale: a newer ranking already rendered
        clearError();
        const view = toResultView(response);
        renderResults(view.rows, view.rosterVersion);
      })
      .catch((error) => {
        if (!gate.isLatest(seq)) return;
        showError(error instanceof ApiRequestError ? error.message : "request failed");
      });
  }

  const scheduleRefresh = debounce(refresh, debounceMs);

  function sliderRow(index: number, state: SliderState): HTMLElement {
    const row = el("div", "slider-row");
    const label = el("label", "slider-label", state.area);
    const range = el("input");
    range.type = "range";
    range.min = String(SLIDER_MIN);
    range.max = String(SLIDER_MAX);
    range.step = String(SLIDER_STEP);
    range.value = String(state.value);
    const entry = el("input", "manual-entry");
    entry.type = "text";
    entry.value = String(state.value);
    entry.setAttribute("aria-label", `${state.area} rating`);

    range.addEventListener("input", () => {
      const value = Number(range.value);
      sliders = setSliderValue(sliders, index, value);
      entry.value = String(value);
      scheduleRefresh();
    });
    entry.addEventListener("change", () => {
      const value = parseManualEntry(entry.value);
      if (value === null) {
        entry.value = String(sliders[index]!.value); // reject junk, keep old value
        return;
      }
      sliders = setSliderValue(sliders, index, value);
      range.value = String(value);
      entry.value = String(value);
      scheduleRefresh();
    });

    row.append(label, range, entry);
    return row;
  }

  function renderSliders(): void {
    sliderForm.textContent = "";
    sliders.forEach((state, index) => {
      sliderForm.append(sliderRow(index, state));
    });
  }

  function renderSupervisors(names: string[]): void {
    supervisorsList.textContent = "";
    for (const name of names) {
      supervisorsList.append(resultRow(name, name));
    }
  }

  const peerGate = new SequenceGate();

  async function showPeers(name: string): Promise<void> {
    matchSection.hidden = true;
    peerSection.hidden = false;
    peerHeading.textContent = `Supervisors similar to ${name}`;
    const seq = peerGate.issue();
    try {
      const view = toResultView(await api.peers(name, k));
      if (!peerGate.shouldApply(seq)) return; // a newer navigation already rendered
      peerList.textContent = "";
      peerMessage.hidden = true;
      if (view.rows.length === 0) {
        peerMessage.textContent = "No peers to show — this supervisor is the only one on the roster.";
        peerMessage.hidden = false;
        return;
      }
      for (const row of view.rows) {
        peerList.append(resultRow(row.name, row.text));
      }
    } catch (error) {
      if (!peerGate.isLatest(seq)) return;
      peerList.textContent = "";
      if (error instanceof ApiRequestError && error.status === 404) {
        peerMessage.textContent = `Unknown supervisor: ${name}`;
      } else {
        peerMessage.textContent = "Could not load peers — request failed.";
      }
      peerMessage.hidden = false;
    }
  }

  function route(): void {
    const match = PEERS_HASH.exec(location.hash);
    if (match) {
      void showPeers(decodeURIComponent(match[1]!));
    } else {
      peerSection.hidden = true;
      matchSection.hidden = false;
    }
  }

  window.addEventListener("hashchange", route);

  const ready = (async () => {
    let areas: string[];
    let supervisorNames: string[];
    try {
      const [areasBody, supervisorsBody] = await Promise.all([api.areas(), api.supervisors()]);
      areas = areasBody.areas;
      supervisorNames = supervisorsBody.supervisors.map((s) => s.name);
    } catch {
      offlineBanner.hidden = false; // no sliders without a schema
      return;
    }
    sliders = slidersFromAreas(areas);
    renderSliders();
    renderSupervisors(supervisorNames);
    route();
    await new Promise<void>((resolve) => {
      const seq = gate.issue();
      api
        .recommend(ratingsOf(sliders), k)
        .then((response) => {
          if (gate.shouldApply(seq)) {
            const view = toResultView(response);
            renderResults(view.rows, view.rosterVersion);
          }
        })
        .catch(() => showError("initial ranking failed"))
        .finally(resolve);
    });
  })();

  return {
    ready,
    destroy(): void {
      window.removeEventListener("hashchange", route);
      scheduleRefresh.cancel();
      root.textContent = "";
    },
  };
}
