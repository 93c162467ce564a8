/**
 * View model for the explorer.
 *
 * The model never computes any game theory locally: every badge, sector and
 * value comes verbatim from the service's responses.  It only tracks which
 * game and session are on screen and derives display state (banners, input
 * gating, what-if overlays) from the latest payloads.
 */

import type { AnalysisResponse, HygDocument, SessionResponse } from './types.js';

export interface Badge {
  sector: string;
  grundy: string | null;
}

export interface Banner {
  kind: 'win' | 'loss' | 'draw';
  text: string;
}

export class ExplorerViewModel {
  gameName: string | null = null;
  doc: HygDocument | null = null;
  analysis: AnalysisResponse | null = null;
  session: SessionResponse | null = null;

  loadGame(name: string | null, doc: HygDocument, analysis: AnalysisResponse): void {
    this.gameName = name;
    this.doc = doc;
    this.analysis = analysis;
    this.session = null;
  }

  /** Per-position badges, straight from the latest analysis payload. */
  badges(): Record<string, Badge> {
    if (!this.doc || !this.analysis) return {};
    const out: Record<string, Badge> = {};
    for (const id of Object.keys(this.doc.positions)) {
      out[id] = {
        sector: this.analysis.positions[id],
        grundy: this.analysis.grundy?.[id] ?? null,
      };
    }
    return out;
  }

  applySession(session: SessionResponse): void {
    this.session = session;
  }

  /** The position the vehicle currently sits on (root before any session). */
  currentPosition(): string | null {
    if (this.session) return this.session.position;
    return this.doc ? this.doc.root : null;
  }

  /** Moves the human may click right now. */
  clickableMoves(): string[] {
    const s = this.session;
    if (!s || s.status !== 'active' || s.mover !== s.humanSide) return [];
    return [...s.legalMoves];
  }

  inputEnabled(): boolean {
    return this.clickableMoves().length > 0;
  }

  /** Non-committal preview of the sector reached by a candidate move. */
  whatIf(target: string): string | null {
    const s = this.session;
    if (!s) return null;
    return s.whatIf[target] ?? null;
  }

  banner(): Banner | null {
    const s = this.session;
    if (!s || s.status === 'active') return null;
    if (s.status === 'Draw') {
      const [pos, mover] = s.repeated ?? ['?', '?'];
      return {
        kind: 'draw',
        text: `Draw: state ${pos} with ${mover} to move repeated`,
      };
    }
    const humanWon = (s.status === 'WinL') === (s.humanSide === 'L');
    return humanWon
      ? { kind: 'win', text: `You win: ${s.status}` }
      : { kind: 'loss', text: `Engine wins: ${s.status}` };
  }
}
