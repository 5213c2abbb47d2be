/**
 * DOM wiring: textarea editor with a highlight backdrop, an Analisar
 * button, metric panels, keyword table and word cloud.
 */

import { analyze, ApiError, type Report } from './api.js';
import { planCloud } from './cloud.js';
import { BAND_LABEL, formatIndex, formatPercent, formatRatio } from './format.js';
import { segmentsToHtml, segmentText } from './highlight.js';
import {
  canAnalyze,
  editKeywords,
  editText,
  failAnalysis,
  finishAnalysis,
  initialState,
  isStale,
  parseKeywords,
  startAnalysis,
  type ViewState,
} from './state.js';

const BASE_URL = (window as any).ALT_BACKEND_URL ?? 'http://127.0.0.1:8000';

let state: ViewState = initialState();

const el = {
  editor: document.getElementById('editor') as HTMLTextAreaElement,
  backdrop: document.getElementById('backdrop') as HTMLDivElement,
  backdropWrap: document.getElementById('backdrop-wrap') as HTMLDivElement,
  keywords: document.getElementById('keywords') as HTMLInputElement,
  analyzeBtn: document.getElementById('analyze') as HTMLButtonElement,
  error: document.getElementById('error') as HTMLDivElement,
  result: document.getElementById('result') as HTMLDivElement,
  indices: document.getElementById('indices') as HTMLDivElement,
  variables: document.getElementById('variables') as HTMLDivElement,
  keywordTable: document.getElementById('keyword-table') as HTMLDivElement,
  cloudPanel: document.getElementById('cloud-panel') as HTMLDivElement,
  cloud: document.getElementById('cloud') as HTMLDivElement,
  notes: document.getElementById('notes') as HTMLDivElement,
};

function render(): void {
  el.analyzeBtn.disabled = !canAnalyze(state);
  el.analyzeBtn.textContent = state.busy ? 'Analisando…' : 'Analisar';
  el.error.textContent = state.error ?? '';
  el.error.hidden = state.error === null;
  el.backdropWrap.classList.toggle('stale', isStale(state));

  if (state.report && state.reportText !== null) {
    renderBackdrop(state.reportText, state.report);
    renderReport(state.report);
  } else {
    el.backdrop.innerHTML = '';
    el.result.hidden = true;
  }
}

function renderBackdrop(text: string, report: Report): void {
  const segments = segmentText(text, report.suggestions);
  el.backdrop.innerHTML = segmentsToHtml(segments) + '\n';
}

function row(label: string, value: string): string {
  return `<div class="row"><span>${label}</span><strong>${value}</strong></div>`;
}

function renderReport(report: Report): void {
  el.result.hidden = false;
  const { indices, stats } = report;

  const banner = document.getElementById('result-banner') as HTMLDivElement;
  banner.innerHTML =
    `<span class="score">${indices.finalDisplay}</span>` +
    `<span class="band">${BAND_LABEL[indices.band] ?? indices.band}</span>`;

  el.indices.innerHTML = [
    row('Flesch', formatIndex(indices.flesch)),
    row('Gulpease', formatIndex(indices.gulpease)),
    row('Flesch-Kincaid', formatIndex(indices.fleschKincaid)),
    row('Gunning fog', formatIndex(indices.gunningFog)),
    row('ARI', formatIndex(indices.ari)),
    row('Coleman-Liau', formatIndex(indices.colemanLiau)),
  ].join('');

  el.variables.innerHTML = [
    row('Letras', String(stats.letters)),
    row('Sílabas', String(stats.syllables)),
    row('Palavras', String(stats.words)),
    row('Sentenças', String(stats.sentences)),
    row('Palavras complexas', String(stats.complexWords)),
    row('Letras/palavra', formatRatio(stats.lettersPerWord)),
    row('Sílabas/palavra', formatRatio(stats.syllablesPerWord)),
    row('Palavras/sentença', formatRatio(stats.wordsPerSentence)),
  ].join('');

  if (report.keywords.length > 0) {
    el.keywordTable.hidden = false;
    el.keywordTable.innerHTML =
      '<h3>Palavras-chave</h3>' +
      report.keywords
        .map((k) => row(k.token || '—', `${k.absolute} (${formatPercent(k.relative)})`))
        .join('');
  } else {
    el.keywordTable.hidden = true;
  }

  renderCloud(report);

  el.notes.innerHTML = report.notes.map((n) => `<p class="note">${n}</p>`).join('');
}

function renderCloud(report: Report): void {
  if (report.cloud.length === 0) {
    el.cloudPanel.hidden = true;
    return;
  }
  el.cloudPanel.hidden = false;
  const width = el.cloud.clientWidth || 460;
  const height = 300;
  const placed = planCloud(report.cloud, width, height, 42);
  el.cloud.style.height = `${height}px`;
  el.cloud.innerHTML = placed
    .map((word) => {
      const rotate = word.horizontal ? '' : ' transform: rotate(90deg); transform-origin: left top;';
      const left = word.horizontal ? word.x : word.x + word.width;
      return (
        `<span class="cloud-word" style="left:${left.toFixed(1)}px; top:${word.y.toFixed(1)}px; ` +
        `font-size:${word.size}px;${rotate}">${word.token}</span>`
      );
    })
    .join('');
}

async function onAnalyze(): Promise<void> {
  if (!canAnalyze(state)) return;
  state = startAnalysis(state);
  render();
  try {
    const report = await analyze(BASE_URL, {
      text: state.text,
      keywords: parseKeywords(state.keywordInput),
      topN: 40,
    });
    state = finishAnalysis(state, report);
  } catch (error) {
    const message =
      error instanceof ApiError
        ? error.message
        : 'não foi possível contactar o serviço de análise';
    state = failAnalysis(state, message);
  }
  render();
}

el.editor.addEventListener('input', () => {
  state = editText(state, el.editor.value);
  render();
});
el.editor.addEventListener('scroll', () => {
  el.backdrop.scrollTop = el.editor.scrollTop;
  el.backdrop.scrollLeft = el.editor.scrollLeft;
});
el.keywords.addEventListener('input', () => {
  state = editKeywords(state, el.keywords.value);
});
el.analyzeBtn.addEventListener('click', () => void onAnalyze());

render();
