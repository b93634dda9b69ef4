/** Placement transform identical to the server's SVG export, so the live
 * canvas and the exported document agree pixel for pixel.
 */

/** Exact decimal for a per-mille factor: 1000 -> "1", 1250 -> "1.25". */
export function formatScale(permille: number): string {
  const sign = permille < 0 ? "-" : "";
  const mag = Math.abs(permille);
  const whole = Math.floor(mag / 1000);
  const frac = mag % 1000;
  if (frac === 0) {
    return `${sign}${whole}`;
  }
  const fracStr = String(frac).padStart(3, "0").replace(/0+$/, "");
  return `${sign}${whole}.${fracStr}`;
}

export function placementTransform(
  x: number,
  y: number,
  rot: number,
  mirrored: boolean,
  scale: number,
  anchor: [number, number],
): string {
  const sx = formatScale(mirrored ? -scale : scale);
  const sy = formatScale(scale);
  return (
    `translate(${x} ${y}) rotate(${-45 * rot}) ` +
    `scale(${sx} ${sy}) translate(${-anchor[0]} ${-anchor[1]})`
  );
}
