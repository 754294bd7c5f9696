// Slider model. Area count and labels always come from GET /api/areas; the
// UI never hardcodes a schema.

export const SLIDER_MIN = 0;
export const SLIDER_MAX = 5;
export const SLIDER_STEP = 0.5;
export const SLIDER_INITIAL = 2.5; // midpoint of the rating range

export interface SliderState {
  area: string;
  value: number;
  dirty: boolean;
}

export function slidersFromAreas(areas: string[]): SliderState[] {
  return areas.map((area) => ({ area, value: SLIDER_INITIAL, dirty: false }));
}

export function isValidRating(value: number): boolean {
  return Number.isFinite(value) && value >= SLIDER_MIN && value <= SLIDER_MAX;
}

/**
 * Parse free-text entry: any plain number within range, not just grid steps.
 * Returns null for junk or out-of-range input (the field keeps its old value).
 */
export function parseManualEntry(text: string): number | null {
  const trimmed = text.trim();
  if (trimmed === "" || !/^[+-]?(\d+(\.\d*)?|\.\d+)$/.test(trimmed)) return null;
  const value = Number(trimmed);
  return isValidRating(value) ? value : null;
}

export function setSliderValue(sliders: SliderState[], index: number, value: number): SliderState[] {
  if (index < 0 || index >= sliders.length) {
    throw new RangeError(`no slider at index ${index}`);
  }
  if (!isValidRating(value)) {
    throw new RangeError(`rating ${value} outside [${SLIDER_MIN}, ${SLIDER_MAX}]`);
  }
  return sliders.map((slider, i) =>
    i === index ? { area: slider.area, value, dirty: true } : slider,
  );
}

export function ratingsOf(sliders: SliderState[]): number[] {
  return sliders.map((slider) => slider.value);
}
