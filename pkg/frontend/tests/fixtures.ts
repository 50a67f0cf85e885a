import type { ComparisonReport, FetchLike, ReuseTree } from '../src/api.js'

export const TREE: ReuseTree = {
  nodes: [
    { id: 'alpha', label: 'Alpha', language: 'Sanskrit', group: 0 },
    { id: 'beta', label: 'Beta', language: 'Newar', group: 1 },
    { id: 'gamma', label: 'Gamma', language: 'Sanskrit', group: 0 },
  ],
  edges: [
    { a: 'alpha', b: 'beta', weight: 0.4, similarity: 0.6 },
    { a: 'beta', b: 'gamma', weight: 0.8, similarity: 0.2 },
  ],
  params: { n: 4, metric: 'dice' },
}

// ascii texts so byte offsets equal character offsets; matches are
// non-overlapping so merged ranges correspond 1:1 with match spans
export const REPORT: ComparisonReport = {
  docA: 'alpha',
  docB: 'beta',
  params: { n: 4, mode: 'contiguous', k: 0, unit: 'aksara' },
  jaccard: 0.5,
  dice: 2 / 3,
  matches: [
    {
      key: 'kava',
      n: 4,
      spanA: [0, 4],
      spanB: [5, 9],
      segmentsA: [[0, 4]],
      segmentsB: [[5, 9]],
    },
    {
      key: 'lana',
      n: 4,
      spanA: [9, 13],
      spanB: [15, 19],
      segmentsA: [[9, 13]],
      segmentsB: [[15, 19]],
    },
  ],
  mergedA: [
    [0, 4],
    [9, 13],
  ],
  mergedB: [
    [5, 9],
    [15, 19],
  ],
  countsByN: { '2': 6, '3': 4, '4': 2, '5': 1 },
  textA: 'kava sip lana tail',
  textB: 'head kava rest lana',
  titleA: 'Alpha',
  titleB: 'Beta',
}

export const EMPTY_REPORT: ComparisonReport = {
  ...REPORT,
  matches: [],
  mergedA: [],
  mergedB: [],
  countsByN: { '2': 0, '3': 0, '4': 0, '5': 0 },
  jaccard: 0,
  dice: 0,
}

export interface RecordedFetch {
  fetchFn: FetchLike
  calls: string[]
}

export function mockApi(
  routes: { mst?: unknown; compare?: unknown; corpus?: unknown } = {},
): RecordedFetch {
  const calls: string[] = []
  const fetchFn: FetchLike = async (url) => {
    calls.push(url)
    const body = url.includes('/api/mst')
      ? (routes.mst ?? TREE)
      : url.includes('/api/compare')
        ? (routes.compare ?? REPORT)
        : url.includes('/api/corpus')
          ? (routes.corpus ?? { documents: [] })
          : null
    if (body === null) {
      return new Response(JSON.stringify({ status: 404, code: 'not-found', message: url }), {
        status: 404,
      })
    }
    return new Response(JSON.stringify(body), { status: 200 })
  }
  return { fetchFn, calls }
}
