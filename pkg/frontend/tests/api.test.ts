import { describe, expect, it } from 'vitest';

import { analyze, ApiError } from '../src/api.js';

function fakeFetch(status: number, body: unknown) {
  return async () =>
    new Response(JSON.stringify(body), {
      status,
      headers: { 'content-type': 'application/json' },
    });
}

describe('analyze', () => {
  it('posts the request and parses the report', async () => {
    let captured: { url?: string; body?: string } = {};
    const fetchImpl = async (url: string, init?: RequestInit) => {
      captured = { url, body: String(init?.body) };
      return new Response(JSON.stringify({ schema: 1, stats: { words: 1 } }), { status: 200 });
    };
    const report = await analyze('http://x', { text: 'Oi.', keywords: ['oi'] }, fetchImpl);
    expect(captured.url).toBe('http://x/analyze');
    expect(JSON.parse(captured.body!)).toEqual({ text: 'Oi.', keywords: ['oi'] });
    expect(report.stats.words).toBe(1);
  });

  it('maps 422 to the empty-content message', async () => {
    await expect(
      analyze('http://x', { text: '' }, fakeFetch(422, { error: 'x' })),
    ).rejects.toMatchObject({ status: 422, message: 'o texto não tem conteúdo analisável' });
  });

  it('surfaces server error messages', async () => {
    await expect(
      analyze('http://x', { text: 'a' }, fakeFetch(413, { error: 'corpo grande demais' })),
    ).rejects.toMatchObject({ status: 413, message: 'corpo grande demais' });
  });

  it('throws ApiError instances', async () => {
    const failure = analyze('http://x', { text: 'a' }, fakeFetch(500, {}));
    await expect(failure).rejects.toBeInstanceOf(ApiError);
  });
});
