/**
 * Deterministic force-directed layout.
 *
 * The random seed is derived from a hash of the document, so the same graph
 * always lays out identically (stable screenshots, reproducible tests).
 */

import { edgesOf, type HygDocument } from './types.js';

export interface NodePoint {
  id: string;
  x: number;
  y: number;
}

/** FNV-1a over the canonical JSON of the document. */
export function graphHash(doc: HygDocument): number {
  const text = JSON.stringify(doc, Object.keys(doc).sort());
  let h = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 0x01000193) >>> 0;
  }
  return h >>> 0;
}

/** mulberry32: tiny seeded PRNG, good enough for initial placement. */
export function seededRandom(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const ITERATIONS = 180;
const SPRING = 0.015;
const REPULSION = 2200;
const IDEAL = 120;

export function layoutGraph(doc: HygDocument, width = 800, height = 600): NodePoint[] {
  const ids = Object.keys(doc.positions).sort();
  const rand = seededRandom(graphHash(doc));
  const xs = new Map<string, number>();
  const ys = new Map<string, number>();
  for (const id of ids) {
    xs.set(id, width * (0.12 + 0.76 * rand()));
    ys.set(id, height * (0.12 + 0.76 * rand()));
  }
  const edges = edgesOf(doc).filter((e) => e.from !== e.to);

  for (let iter = 0; iter < ITERATIONS; iter++) {
    const fx = new Map<string, number>(ids.map((id) => [id, 0]));
    const fy = new Map<string, number>(ids.map((id) => [id, 0]));
    for (let i = 0; i < ids.length; i++) {
      for (let j = i + 1; j < ids.length; j++) {
        const a = ids[i], b = ids[j];
        let dx = xs.get(a)! - xs.get(b)!;
        let dy = ys.get(a)! - ys.get(b)!;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const push = REPULSION / d2;
        const d = Math.sqrt(d2);
        dx /= d; dy /= d;
        fx.set(a, fx.get(a)! + dx * push);
        fy.set(a, fy.get(a)! + dy * push);
        fx.set(b, fx.get(b)! - dx * push);
        fy.set(b, fy.get(b)! - dy * push);
      }
    }
    for (const { from, to } of edges) {
      const dx = xs.get(to)! - xs.get(from)!;
      const dy = ys.get(to)! - ys.get(from)!;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = SPRING * (d - IDEAL);
      fx.set(from, fx.get(from)! + (dx / d) * pull);
      fy.set(from, fy.get(from)! + (dy / d) * pull);
      fx.set(to, fx.get(to)! - (dx / d) * pull);
      fy.set(to, fy.get(to)! - (dy / d) * pull);
    }
    const cool = 1 - iter / ITERATIONS;
    for (const id of ids) {
      const nx = xs.get(id)! + Math.max(-12, Math.min(12, fx.get(id)!)) * cool;
      const ny = ys.get(id)! + Math.max(-12, Math.min(12, fy.get(id)!)) * cool;
      xs.set(id, Math.max(30, Math.min(width - 30, nx)));
      ys.set(id, Math.max(30, Math.min(height - 30, ny)));
    }
  }
  return ids.map((id) => ({
    id,
    x: Math.round(xs.get(id)! * 100) / 100,
    y: Math.round(ys.get(id)! * 100) / 100,
  }));
}
