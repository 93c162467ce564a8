import { readFileSync } from 'node:fs';

export function fixture<T>(name: string): T {
  const url = new URL(`../fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, 'utf-8')) as T;
}

/** fetch stub returning canned JSON bodies keyed by "METHOD path". */
export function cannedFetch(routes: Record<string, unknown>) {
  const calls: string[] = [];
  const impl = async (input: string, init?: RequestInit): Promise<Response> => {
    const key = `${init?.method ?? 'GET'} ${input}`;
    calls.push(key);
    if (key in routes) {
      return new Response(JSON.stringify(routes[key]), {
        status: 200,
        headers: { 'Content-Type': 'application/json' },
      });
    }
    return new Response(JSON.stringify({ detail: `no route ${key}` }), { status: 404 });
  };
  return { impl, calls };
}
