import { describe, expect, it } from 'vitest';

import { graphHash, layoutGraph, seededRandom } from '../src/layout.js';
import type { HygDocument } from '../src/types.js';
import { fixture } from './helpers.js';

const trafficJam = fixture<HygDocument>('traffic_jam.doc.json');
const star2 = fixture<HygDocument>('star2.doc.json');

describe('deterministic layout', () => {
  it('produces identical coordinates for the same document', () => {
    expect(layoutGraph(trafficJam)).toEqual(layoutGraph(trafficJam));
  });

  it('seeds differently for different documents', () => {
    expect(graphHash(trafficJam)).not.toBe(graphHash(star2));
    const a = layoutGraph(trafficJam);
    const b = layoutGraph(star2);
    expect(a.length).toBe(15);
    expect(b.length).toBe(3);
  });

  it('keeps every node inside the viewport', () => {
    for (const p of layoutGraph(trafficJam, 800, 600)) {
      expect(p.x).toBeGreaterThanOrEqual(30);
      expect(p.x).toBeLessThanOrEqual(770);
      expect(p.y).toBeGreaterThanOrEqual(30);
      expect(p.y).toBeLessThanOrEqual(570);
    }
  });

  it('spreads nodes apart', () => {
    const points = layoutGraph(trafficJam, 800, 600);
    for (let i = 0; i < points.length; i++) {
      for (let j = i + 1; j < points.length; j++) {
        const d = Math.hypot(points[i].x - points[j].x, points[i].y - points[j].y);
        expect(d).toBeGreaterThan(12);
      }
    }
  });
});

describe('seeded PRNG', () => {
  it('is reproducible and in range', () => {
    const a = seededRandom(42);
    const b = seededRandom(42);
    for (let i = 0; i < 100; i++) {
      const va = a();
      expect(va).toBe(b());
      expect(va).toBeGreaterThanOrEqual(0);
      expect(va).toBeLessThan(1);
    }
  });
});
