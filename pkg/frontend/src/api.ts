/**
 * Typed client for the read-only corpus API.
 *
 * At most one request is in flight per endpoint kind: a newer call
 * aborts the stale one, so slow responses can never overwrite newer
 * state. The fetch function is injectable for tests.
 */

export interface DocumentInfo {
  id: string
  title: string
  language: string
  century: number | null
  notes: string
}

export interface TreeNode {
  id: string
  label: string
  language: string
  group: number
}

export interface TreeEdge {
  a: string
  b: string
  weight: number
  similarity: number
}

export interface ReuseTree {
  nodes: TreeNode[]
  edges: TreeEdge[]
  params: Record<string, unknown>
}

export type ByteSpan = [number, number]

export interface Match {
  key: string
  n: number
  spanA: ByteSpan
  spanB: ByteSpan
  segmentsA: ByteSpan[]
  segmentsB: ByteSpan[]
}

export interface ComparisonReport {
  docA: string
  docB: string
  params: { n: number; mode: string; k: number; unit: string }
  jaccard: number
  dice: number
  matches: Match[]
  mergedA: ByteSpan[]
  mergedB: ByteSpan[]
  countsByN: Record<string, number>
  textA: string
  textB: string
  titleA: string
  titleB: string
}

export type FetchLike = (url: string, init?: { signal?: AbortSignal }) => Promise<Response>

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message)
  }
}

export class ApiClient {
  private inflight = new Map<string, AbortController>()

  constructor(
    private base = '',
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async get<T>(kind: string, path: string): Promise<T> {
    this.inflight.get(kind)?.abort()
    const controller = new AbortController()
    this.inflight.set(kind, controller)
    try {
      const response = await this.fetchFn(this.base + path, { signal: controller.signal })
      if (!response.ok) {
        let code = 'http-error'
        let message = `${response.status}`
        try {
          const body = await response.json()
          code = body.code ?? code
          message = body.message ?? message
        } catch {
          /* non-json error body */
        }
        throw new ApiError(response.status, code, message)
      }
      return (await response.json()) as T
    } finally {
      if (this.inflight.get(kind) === controller) this.inflight.delete(kind)
    }
  }

  corpus(): Promise<{ documents: DocumentInfo[] }> {
    return this.get('corpus', '/api/corpus')
  }

  tree(query: string): Promise<ReuseTree> {
    return this.get('mst', `/api/mst?${query}`)
  }

  comparison(query: string): Promise<ComparisonReport> {
    return this.get('compare', `/api/compare?${query}`)
  }
}
