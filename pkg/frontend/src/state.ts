/**
 * Editor view state and its transitions.
 *
 * The report remembers which text it was computed for; when the editor
 * content diverges the highlights are kept but rendered dimmed until the
 * next analysis run.  Only one request may be in flight at a time.
 */

import type { Report } from './api.js';

export interface ViewState {
  text: string;
  keywordInput: string;
  report: Report | null;
  /** the exact text the current report was computed from */
  reportText: string | null;
  busy: boolean;
  error: string | null;
}

export function initialState(): ViewState {
  return {
    text: '',
    keywordInput: '',
    report: null,
    reportText: null,
    busy: false,
    error: null,
  };
}

export function editText(state: ViewState, text: string): ViewState {
  return { ...state, text };
}

export function editKeywords(state: ViewState, keywordInput: string): ViewState {
  return { ...state, keywordInput };
}

export function startAnalysis(state: ViewState): ViewState {
  return { ...state, busy: true, error: null };
}

export function finishAnalysis(state: ViewState, report: Report): ViewState {
  return { ...state, busy: false, report, reportText: state.text, error: null };
}

export function failAnalysis(state: ViewState, message: string): ViewState {
  // the previous report (if any) stays visible; the editor is untouched
  return { ...state, busy: false, error: message };
}

/** Highlights no longer match the editor content. */
export function isStale(state: ViewState): boolean {
  return state.report !== null && state.reportText !== state.text;
}

export function canAnalyze(state: ViewState): boolean {
  return !state.busy;
}

export function parseKeywords(input: string): string[] {
  return input
    .split(',')
    .map((k) => k.trim())
    .filter((k) => k.length > 0);
}
