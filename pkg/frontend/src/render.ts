/** SVG rendering of the position graph with badges and move affordances. */

import { layoutGraph, type NodePoint } from './layout.js';
import { edgesOf, type HygDocument } from './types.js';
import type { Badge, ExplorerViewModel } from './viewmodel.js';

const SECTOR_COLORS: Record<string, string> = {
  WinL: '#2e7dd1',
  WinR: '#d13b3b',
  WinI: '#c58f00',
  WinII: '#3ba05e',
  NL_L_II: '#7aa6d8',
  NL_L_I: '#86b8e8',
  NL_R_I: '#d89090',
  NL_R_II: '#e0a0a0',
  NL_All: '#9a8fd1',
};

const SVG_NS = 'http://www.w3.org/2000/svg';

export interface RenderCallbacks {
  onMove(target: string): void;
  onHover(target: string | null): void;
}

function el<K extends keyof SVGElementTagNameMap>(tag: K, attrs: Record<string, string>): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

export function renderGraph(
  svg: SVGSVGElement,
  doc: HygDocument,
  vm: ExplorerViewModel,
  callbacks: RenderCallbacks,
): void {
  svg.innerHTML = '';
  const width = Number(svg.getAttribute('width') ?? 800);
  const height = Number(svg.getAttribute('height') ?? 600);
  const points = layoutGraph(doc, width, height);
  const at = new Map<string, NodePoint>(points.map((p) => [p.id, p]));
  const badges = vm.badges();
  const clickable = new Set(vm.clickableMoves());
  const current = vm.currentPosition();

  const defs = el('defs', {});
  const marker = el('marker', {
    id: 'arrow', viewBox: '0 0 10 10', refX: '9', refY: '5',
    markerWidth: '7', markerHeight: '7', orient: 'auto-start-reverse',
  });
  marker.appendChild(el('path', { d: 'M 0 0 L 10 5 L 0 10 z', fill: '#777' }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  for (const edge of edgesOf(doc)) {
    const a = at.get(edge.from)!;
    const b = at.get(edge.to)!;
    if (edge.from === edge.to) {
      svg.appendChild(el('path', {
        d: `M ${a.x} ${a.y - 18} C ${a.x - 40} ${a.y - 55}, ${a.x + 40} ${a.y - 55}, ${a.x + 6} ${a.y - 19}`,
        fill: 'none', stroke: '#777', 'stroke-width': '1.2', 'marker-end': 'url(#arrow)',
      }));
      continue;
    }
    const dx = b.x - a.x, dy = b.y - a.y;
    const d = Math.max(Math.hypot(dx, dy), 1);
    const sx = a.x + (dx / d) * 20, sy = a.y + (dy / d) * 20;
    const tx = b.x - (dx / d) * 22, ty = b.y - (dy / d) * 22;
    svg.appendChild(el('line', {
      x1: String(sx), y1: String(sy), x2: String(tx), y2: String(ty),
      stroke: '#777', 'stroke-width': edge.sides === 'LR' ? '1.8' : '1.2',
      'stroke-dasharray': edge.sides === 'L' ? '6 3' : edge.sides === 'R' ? '2 3' : '',
      'marker-end': 'url(#arrow)',
    }));
  }

  for (const p of points) {
    const badge: Badge | undefined = badges[p.id];
    const group = el('g', { transform: `translate(${p.x},${p.y})`, cursor: clickable.has(p.id) ? 'pointer' : 'default' });
    group.appendChild(el('circle', {
      r: p.id === current ? '20' : '16',
      fill: badge ? SECTOR_COLORS[badge.sector] ?? '#bbb' : '#bbb',
      stroke: p.id === current ? '#111' : clickable.has(p.id) ? '#2e7dd1' : '#555',
      'stroke-width': p.id === current || clickable.has(p.id) ? '3' : '1',
    }));
    const label = el('text', { 'text-anchor': 'middle', dy: '4', 'font-size': '11', fill: '#fff' });
    label.textContent = p.id.length > 6 ? p.id.slice(0, 5) + '…' : p.id;
    group.appendChild(label);
    if (badge?.grundy) {
      const value = el('text', { 'text-anchor': 'middle', dy: '-24', 'font-size': '11', fill: '#333' });
      value.textContent = badge.grundy;
      group.appendChild(value);
    }
    if (clickable.has(p.id)) {
      group.addEventListener('click', () => callbacks.onMove(p.id));
      group.addEventListener('mouseenter', () => callbacks.onHover(p.id));
      group.addEventListener('mouseleave', () => callbacks.onHover(null));
    }
    svg.appendChild(group);
  }
}
