import { describe, expect, it } from 'vitest';

import type { AnalysisResponse, HygDocument, SessionResponse } from '../src/types.js';
import { edgesOf, movesOf } from '../src/types.js';
import { ExplorerViewModel } from '../src/viewmodel.js';
import { fixture } from './helpers.js';

const trafficDoc = fixture<HygDocument>('traffic_jam.doc.json');
const trafficAnalysis = fixture<AnalysisResponse>('traffic_jam.analysis.json');
const aDoc = fixture<HygDocument>('a.doc.json');
const aAnalysis = fixture<AnalysisResponse>('a.analysis.json');
const star1Doc = fixture<HygDocument>('star1.doc.json');
const star1Analysis = fixture<AnalysisResponse>('star1.analysis.json');
const drawSteps = fixture<SessionResponse[]>('session_a_draw.json');
const winSteps = fixture<SessionResponse[]>('session_star1_win.json');

describe('golden: badges mirror the analysis payload', () => {
  it('traffic jam badges equal the recorded /analyze response, node for node', () => {
    const vm = new ExplorerViewModel();
    vm.loadGame('traffic_jam', trafficDoc, trafficAnalysis);
    const badges = vm.badges();
    expect(Object.keys(badges).sort()).toEqual(Object.keys(trafficDoc.positions).sort());
    for (const [id, badge] of Object.entries(badges)) {
      expect(badge.sector).toBe(trafficAnalysis.positions[id]);
      expect(badge.grundy).toBe(trafficAnalysis.grundy![id]);
    }
    // Spot-check the published collapse values via the payload itself.
    expect(badges['L'].grundy).toBe('3');
    expect(badges['I'].grundy).toBe('inf{1,2}');
    expect(badges['C'].sector).toBe('WinII');
  });

  it('partizan games carry sector badges without values', () => {
    const vm = new ExplorerViewModel();
    vm.loadGame('a', aDoc, aAnalysis);
    expect(aAnalysis.grundy).toBeNull();
    for (const badge of Object.values(vm.badges())) {
      expect(badge.grundy).toBeNull();
      expect(typeof badge.sector).toBe('string');
    }
  });
});

describe('golden: scripted draw on game a as R', () => {
  it('walks engine opening, human reply, and ends on a draw banner naming the repeat', () => {
    const vm = new ExplorerViewModel();
    vm.loadGame('a', aDoc, aAnalysis);
    expect(vm.banner()).toBeNull();
    expect(vm.currentPosition()).toBe('a');

    vm.applySession(drawSteps[0]);
    // Engine (L) already opened a -> b; the human R is to move.
    expect(vm.currentPosition()).toBe('b');
    expect(vm.inputEnabled()).toBe(true);
    expect(vm.clickableMoves()).toEqual(['a']);
    expect(vm.whatIf('a')).toBe(drawSteps[0].whatIf['a']);

    vm.applySession(drawSteps[1]);
    expect(vm.inputEnabled()).toBe(false);
    const banner = vm.banner();
    expect(banner?.kind).toBe('draw');
    expect(banner?.text).toContain('a');
    expect(banner?.text).toContain('L to move');
    expect(drawSteps[1].repeated).toEqual(['a', 'L']);
  });
});

describe('golden: star1 opener win flow', () => {
  it('completes with a win banner and disabled input', () => {
    const vm = new ExplorerViewModel();
    vm.loadGame('star1', star1Doc, star1Analysis);

    vm.applySession(winSteps[0]);
    expect(vm.inputEnabled()).toBe(true);
    expect(vm.clickableMoves()).toEqual(['*0']);
    expect(vm.whatIf('*0')).toBe('WinII');

    vm.applySession(winSteps[1]);
    expect(winSteps[1].status).toBe('WinL');
    const banner = vm.banner();
    expect(banner?.kind).toBe('win');
    expect(banner?.text).toContain('WinL');
    expect(vm.inputEnabled()).toBe(false);
    expect(vm.clickableMoves()).toEqual([]);
  });
});

describe('document helpers', () => {
  it('resolves the impartial shorthand', () => {
    const moves = movesOf(trafficDoc.positions['M']);
    expect(moves.left).toEqual(moves.right);
    expect(moves.left.sort()).toEqual(['H', 'I', 'L']);
  });

  it('builds deduplicated edges with side tags', () => {
    const edges = edgesOf(aDoc);
    expect(edges).toEqual([
      { from: 'a', to: 'b', sides: 'L' },
      { from: 'b', to: 'a', sides: 'R' },
    ]);
  });
});
