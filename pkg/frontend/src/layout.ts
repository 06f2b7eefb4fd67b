// Deterministic force-directed layout. Fixed physics constants and a fixed
// PRNG seed mean the same graph always lands in the same positions, so
// screenshots and tests are reproducible.

export interface Point {
  x: number;
  y: number;
}

const SEED = 0x5eed;
const TICKS = 250;
const REPULSION = 6000;
const SPRING = 0.04;
const REST_LENGTH = 140;
const CENTER_PULL = 0.02;
const DAMPING = 0.85;

/** mulberry32: tiny seeded PRNG, plenty for layout jitter. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function forceLayout(
  ids: string[],
  edges: Array<[string, string]>,
  width: number,
  height: number,
): Map<string, Point> {
  const rand = mulberry32(SEED);
  const index = new Map(ids.map((id, i) => [id, i]));
  const n = ids.length;
  const cx = width / 2;
  const cy = height / 2;

  // start on a circle with seeded jitter so identical graphs match exactly
  const radius = Math.min(width, height) / 4;
  const xs = new Float64Array(n);
  const ys = new Float64Array(n);
  const vxs = new Float64Array(n);
  const vys = new Float64Array(n);
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / Math.max(1, n);
    xs[i] = cx + radius * Math.cos(angle) + (rand() - 0.5) * 10;
    ys[i] = cy + radius * Math.sin(angle) + (rand() - 0.5) * 10;
  }

  const links: Array<[number, number]> = [];
  for (const [a, b] of edges) {
    const ia = index.get(a);
    const ib = index.get(b);
    if (ia !== undefined && ib !== undefined) links.push([ia, ib]);
  }

  for (let tick = 0; tick < TICKS; tick++) {
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = xs[j] - xs[i];
        let dy = ys[j] - ys[i];
        let d2 = dx * dx + dy * dy;
        if (d2 < 1) {
          // coincident nodes: push apart along a seeded direction
          dx = rand() - 0.5;
          dy = rand() - 0.5;
          d2 = dx * dx + dy * dy;
        }
        const force = REPULSION / d2;
        const d = Math.sqrt(d2);
        const fx = (dx / d) * force;
        const fy = (dy / d) * force;
        vxs[i] -= fx;
        vys[i] -= fy;
        vxs[j] += fx;
        vys[j] += fy;
      }
    }
    for (const [ia, ib] of links) {
      const dx = xs[ib] - xs[ia];
      const dy = ys[ib] - ys[ia];
      const d = Math.sqrt(dx * dx + dy * dy) || 1;
      const stretch = (d - REST_LENGTH) * SPRING;
      const fx = (dx / d) * stretch;
      const fy = (dy / d) * stretch;
      vxs[ia] += fx;
      vys[ia] += fy;
      vxs[ib] -= fx;
      vys[ib] -= fy;
    }
    for (let i = 0; i < n; i++) {
      vxs[i] += (cx - xs[i]) * CENTER_PULL;
      vys[i] += (cy - ys[i]) * CENTER_PULL;
      vxs[i] *= DAMPING;
      vys[i] *= DAMPING;
      xs[i] += vxs[i];
      ys[i] += vys[i];
      xs[i] = Math.max(40, Math.min(width - 40, xs[i]));
      ys[i] = Math.max(40, Math.min(height - 40, ys[i]));
    }
  }

  const out = new Map<string, Point>();
  ids.forEach((id, i) => out.set(id, { x: xs[i], y: ys[i] }));
  return out;
}
