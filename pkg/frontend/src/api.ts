/**
 * Typed client for the analysis service.
 */

export type SpanKind = 'longSentence' | 'veryLongSentence' | 'complexWord';

export interface ReportSpan {
  start: number;
  end: number;
  kind: SpanKind;
}

export interface FrequencyEntry {
  token: string;
  absolute: number;
  relative: number;
}

export interface IndexSet {
  flesch: number;
  gulpease: number;
  fleschKincaid: number;
  gunningFog: number;
  ari: number;
  colemanLiau: number;
  finalRaw: number;
  finalDisplay: number;
  band: 'alta' | 'media' | 'baixa';
}

export interface TextStats {
  letters: number;
  words: number;
  sentences: number;
  syllables: number;
  complexWords: number;
  lettersPerWord: number;
  syllablesPerWord: number;
  wordsPerSentence: number;
  sentencesPerWord: number;
  complexWordRatio: number;
}

export interface Report {
  schema: number;
  stats: TextStats;
  indices: IndexSet;
  originalIndices?: IndexSet;
  suggestions: ReportSpan[];
  keywords: FrequencyEntry[];
  cloud: FrequencyEntry[];
  notes: string[];
}

export interface AnalyzeRequest {
  text: string;
  keywords?: string[];
  topN?: number;
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** POST the text to /analyze and return the parsed report. */
export async function analyze(
  baseUrl: string,
  request: AnalyzeRequest,
  fetchImpl: FetchLike = fetch,
): Promise<Report> {
  const response = await fetchImpl(`${baseUrl}/analyze`, {
    method: 'POST',
    headers: { 'content-type': 'application/json' },
    body: JSON.stringify(request),
  });
  if (!response.ok) {
    let message = `análise falhou (HTTP ${response.status})`;
    try {
      const body = await response.json();
      if (body && typeof body.error === 'string') message = body.error;
    } catch {
      // non-JSON error body: keep the generic message
    }
    if (response.status === 422) message = 'o texto não tem conteúdo analisável';
    throw new ApiError(response.status, message);
  }
  return (await response.json()) as Report;
}
