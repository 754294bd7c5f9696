// Display rounding: half-up to two decimals, applied to the score's shortest
// decimal form (String(x)), matching the backend's table formatting. toFixed
// is not used because it rounds the binary expansion, which disagrees for
// values like 2.675 whose shortest form is an exact decimal tie.

/** Expand scientific notation to a plain decimal string (digits and one dot). */
export function expandExponent(text: string): string {
  const match = /^(\d+)(?:\.(\d+))?e([+-]\d+)$/i.exec(text);
  if (!match) return text;
  const intPart = match[1]!;
  const fracPart = match[2] ?? "";
  const exponent = Number(match[3]!);
  const digits = intPart + fracPart;
  const pointIndex = intPart.length + exponent; // digits before the decimal point
  if (pointIndex <= 0) {
    return "0." + "0".repeat(-pointIndex) + digits;
  }
  if (pointIndex >= digits.length) {
    return digits + "0".repeat(pointIndex - digits.length);
  }
  return digits.slice(0, pointIndex) + "." + digits.slice(pointIndex);
}

/** Render a score with exactly two decimals, rounding half-up (ties away from zero). */
export function formatScore2dp(value: number): string {
  if (!Number.isFinite(value)) {
    throw new Error(`cannot render non-finite score ${value}`);
  }
  const negative = value < 0;
  const plain = expandExponent(String(Math.abs(value)));
  const [intText = "0", fracText = ""] = plain.split(".");
  const frac = fracText.padEnd(3, "0");
  let cents = Number(intText) * 100 + Number(frac.slice(0, 2));
  if (frac.charCodeAt(2) >= 0x35) {
    // third decimal digit is 5-9: at or above the halfway point
    cents += 1;
  }
  const wholes = Math.floor(cents / 100);
  const rendered = `${wholes}.${String(cents % 100).padStart(2, "0")}`;
  return negative && cents > 0 ? `-${rendered}` : rendered;
}
