/**
 * Shingle parameter state for the explorer controls.
 *
 * Validity rules mirror the server: n in 2..5, fuzzy needs n >= 3, skip
 * needs k >= 1, k only meaningful in skip mode. applyChange clamps every
 * transition so the controls can never emit an invalid bundle.
 */

export type Metric = 'dice' | 'jaccard'
export type Mode = 'contiguous' | 'fuzzy' | 'skip'

export interface Params {
  n: number
  metric: Metric
  mode: Mode
  k: number
}

export const N_CHOICES = [2, 3, 4, 5]
export const K_MAX = 3

export const DEFAULT_PARAMS: Params = { n: 4, metric: 'dice', mode: 'contiguous', k: 0 }

export function isValid(p: Params): boolean {
  if (!N_CHOICES.includes(p.n)) return false
  if (p.metric !== 'dice' && p.metric !== 'jaccard') return false
  if (p.mode === 'fuzzy' && p.n < 3) return false
  if (p.mode === 'skip' && (p.k < 1 || p.k > K_MAX)) return false
  if (p.mode !== 'skip' && p.k !== 0) return false
  return p.mode === 'contiguous' || p.mode === 'fuzzy' || p.mode === 'skip'
}

/** Apply a partial change, clamping dependent fields to stay valid. */
export function applyChange(current: Params, change: Partial<Params>): Params {
  const next: Params = { ...current, ...change }
  if (!N_CHOICES.includes(next.n)) next.n = current.n
  if (next.mode === 'fuzzy' && next.n < 3) {
    // switching to fuzzy at n=2 bumps n; lowering n under fuzzy clamps to 3
    next.n = 3
  }
  if (next.mode === 'skip') {
    if (next.k < 1) next.k = 1
    if (next.k > K_MAX) next.k = K_MAX
  } else {
    next.k = 0
  }
  return next
}

/** Choices for the n selector that are valid under the given mode. */
export function allowedNs(mode: Mode): number[] {
  return mode === 'fuzzy' ? N_CHOICES.filter((n) => n >= 3) : N_CHOICES.slice()
}

export function matrixQuery(p: Params): string {
  const parts = [`metric=${p.metric}`, `n=${p.n}`, `mode=${p.mode}`]
  if (p.mode === 'skip') parts.push(`k=${p.k}`)
  return parts.join('&')
}

export function compareQuery(p: Params, a: string, b: string): string {
  const parts = [`a=${encodeURIComponent(a)}`, `b=${encodeURIComponent(b)}`, `n=${p.n}`, `mode=${p.mode}`]
  if (p.mode === 'skip') parts.push(`k=${p.k}`)
  return parts.join('&')
}
