/** Browser entry point: wires the API client, view model and renderer. */

import { ApiClient, ApiError } from './api.js';
import { renderGraph } from './render.js';
import type { HygDocument } from './types.js';
import { ExplorerViewModel } from './viewmodel.js';

const api = new ApiClient('');
const vm = new ExplorerViewModel();

const svg = document.getElementById('board') as unknown as SVGSVGElement;
const gameSelect = document.getElementById('game-select') as HTMLSelectElement;
const uploadInput = document.getElementById('upload') as HTMLInputElement;
const sideSelect = document.getElementById('side-select') as HTMLSelectElement;
const openerSelect = document.getElementById('opener-select') as HTMLSelectElement;
const startButton = document.getElementById('start') as HTMLButtonElement;
const bannerBox = document.getElementById('banner') as HTMLDivElement;
const statusBox = document.getElementById('status') as HTMLDivElement;
const hoverBox = document.getElementById('hover') as HTMLDivElement;

function toast(message: string): void {
  statusBox.textContent = message;
  statusBox.classList.add('error');
  setTimeout(() => statusBox.classList.remove('error'), 2500);
}

function redraw(): void {
  if (!vm.doc) return;
  renderGraph(svg, vm.doc, vm, {
    onMove: (target) => void humanMove(target),
    onHover: (target) => {
      if (target === null) {
        hoverBox.textContent = '';
        return;
      }
      const sector = vm.whatIf(target);
      hoverBox.textContent = sector ? `move to ${target}: ${sector}` : '';
    },
  });
  const banner = vm.banner();
  bannerBox.textContent = banner ? banner.text : '';
  bannerBox.className = banner ? `banner ${banner.kind}` : 'banner';
  if (vm.session && vm.session.status === 'active') {
    statusBox.textContent = vm.inputEnabled()
      ? `your turn (${vm.session.humanSide}) at ${vm.session.position}`
      : 'engine is thinking';
  }
}

async function loadGame(name: string | null, doc?: HygDocument): Promise<void> {
  try {
    const document_ = doc ?? (await api.getGame(name!));
    const analysis = await api.analyze(document_);
    vm.loadGame(name, document_, analysis);
    redraw();
    statusBox.textContent = `loaded ${name ?? 'uploaded game'}: ${analysis.sector}`;
  } catch (err) {
    toast(err instanceof ApiError ? err.detail : String(err));
  }
}

async function startSession(): Promise<void> {
  if (!vm.doc) return;
  try {
    const session = await api.createSession(
      vm.gameName ?? vm.doc,
      sideSelect.value as 'L' | 'R',
      openerSelect.value as 'L' | 'R',
    );
    vm.applySession(session);
    redraw();
  } catch (err) {
    toast(err instanceof ApiError ? err.detail : String(err));
  }
}

async function humanMove(target: string): Promise<void> {
  const session = vm.session;
  if (!session) return;
  try {
    vm.applySession(await api.move(session.id, target));
    redraw();
  } catch (err) {
    toast(err instanceof ApiError ? err.detail : String(err));
  }
}

async function boot(): Promise<void> {
  const { games } = await api.listGames();
  for (const name of games) {
    const option = document.createElement('option');
    option.value = name;
    option.textContent = name;
    gameSelect.appendChild(option);
  }
  gameSelect.addEventListener('change', () => void loadGame(gameSelect.value));
  startButton.addEventListener('click', () => void startSession());
  uploadInput.addEventListener('change', async () => {
    const file = uploadInput.files?.[0];
    if (!file) return;
    try {
      const doc = JSON.parse(await file.text()) as HygDocument;
      await loadGame(null, doc);
    } catch (err) {
      toast(`upload failed: ${err instanceof ApiError ? err.detail : err}`);
    }
  });
  await loadGame(games.includes('traffic_jam') ? 'traffic_jam' : games[0]);
}

void boot();
