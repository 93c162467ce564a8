/** Wire types mirrored from the HTTP service's JSON payloads. */

export interface HygPosition {
  left?: string[];
  right?: string[];
  moves?: string[];
}

export interface HygDocument {
  hyg: number;
  root: string;
  positions: Record<string, HygPosition>;
}

export interface AnalysisResponse {
  profile: [boolean, boolean, boolean, boolean];
  sector: string;
  nonlosing: string[];
  winning: string | null;
  positions: Record<string, string>;
  grundy: Record<string, string> | null;
  rootGrundy: string | null;
  outcome: string | null;
}

export interface SessionResponse {
  id: string;
  game: string | null;
  humanSide: 'L' | 'R';
  engineSide: 'L' | 'R';
  position: string;
  mover: 'L' | 'R' | null;
  status: 'active' | 'WinL' | 'WinR' | 'Draw';
  history: [string, string][];
  legalMoves: string[];
  whatIf: Record<string, string>;
  repeated: [string, string] | null;
}

/** Moves of one position with both sides resolved from the HYG shorthand. */
export function movesOf(pos: HygPosition): { left: string[]; right: string[] } {
  if (pos.moves !== undefined) {
    return { left: [...pos.moves], right: [...pos.moves] };
  }
  return { left: pos.left ?? [], right: pos.right ?? [] };
}

/** Directed edges of a document, deduplicated, with the sides that use them. */
export function edgesOf(doc: HygDocument): { from: string; to: string; sides: string }[] {
  const edges: { from: string; to: string; sides: string }[] = [];
  for (const [id, pos] of Object.entries(doc.positions)) {
    const { left, right } = movesOf(pos);
    for (const to of new Set([...left, ...right])) {
      const sides = (left.includes(to) ? 'L' : '') + (right.includes(to) ? 'R' : '');
      edges.push({ from: id, to, sides });
    }
  }
  return edges.sort((a, b) => (a.from + '|' + a.to).localeCompare(b.from + '|' + b.to));
}
