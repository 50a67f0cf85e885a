/**
 * Deterministic radial layout for the reuse tree.
 *
 * The server ships topology only; layout is a client concern. BFS from
 * the highest-degree node, children fanned across their parent's
 * angular sector. Pure and stable: same tree, same positions.
 */

import type { ReuseTree } from './api.js'

export interface Point {
  x: number
  y: number
}

export function radialLayout(tree: ReuseTree, width: number, height: number): Map<string, Point> {
  const ids = tree.nodes.map((n) => n.id)
  const positions = new Map<string, Point>()
  if (ids.length === 0) return positions

  const neighbours = new Map<string, string[]>(ids.map((id) => [id, []]))
  for (const e of tree.edges) {
    neighbours.get(e.a)?.push(e.b)
    neighbours.get(e.b)?.push(e.a)
  }
  for (const list of neighbours.values()) list.sort()

  const degree = (id: string) => neighbours.get(id)?.length ?? 0
  const root = ids.slice().sort((a, b) => degree(b) - degree(a) || a.localeCompare(b))[0]

  const cx = width / 2
  const cy = height / 2
  const ringGap = Math.min(cx, cy) / Math.max(depthOf(root, neighbours), 1) - 8

  // angular sectors: each subtree gets an arc proportional to its leaf count
  const seen = new Set<string>([root])
  positions.set(root, { x: cx, y: cy })

  const leaves = (id: string, parent: string | null): number => {
    const kids = (neighbours.get(id) ?? []).filter((k) => k !== parent)
    if (kids.length === 0) return 1
    return kids.reduce((sum, k) => sum + leaves(k, id), 0)
  }

  const place = (id: string, depth: number, from: number, to: number) => {
    const kids = (neighbours.get(id) ?? []).filter((k) => !seen.has(k))
    const total = kids.reduce((sum, k) => sum + leaves(k, id), 0)
    let cursor = from
    for (const kid of kids) {
      seen.add(kid)
      const share = total > 0 ? (leaves(kid, id) / total) * (to - from) : 0
      const angle = cursor + share / 2
      const r = Math.max(depth * ringGap, 30)
      positions.set(kid, {
        x: cx + r * Math.cos(angle),
        y: cy + r * Math.sin(angle),
      })
      place(kid, depth + 1, cursor, cursor + share)
      cursor += share
    }
  }

  place(root, 1, -Math.PI / 2, (3 * Math.PI) / 2)

  // isolated nodes (no edges) line up along the bottom
  let orphan = 0
  for (const id of ids) {
    if (!positions.has(id)) {
      positions.set(id, { x: 40 + orphan * 80, y: height - 24 })
      orphan += 1
    }
  }
  return positions
}

function depthOf(root: string, neighbours: Map<string, string[]>): number {
  let max = 1
  const seen = new Set([root])
  let frontier = [root]
  let depth = 0
  while (frontier.length > 0) {
    depth += 1
    const next: string[] = []
    for (const id of frontier) {
      for (const kid of neighbours.get(id) ?? []) {
        if (!seen.has(kid)) {
          seen.add(kid)
          next.push(kid)
        }
      }
    }
    if (next.length > 0) max = depth + 1
    frontier = next
  }
  return max
}
