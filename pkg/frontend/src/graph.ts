/**
 * SVG rendering of the reuse tree.
 *
 * Nodes are labeled by id and coloured by language group; edge width is
 * monotone in similarity; hovering an edge or node shows the numeric
 * value via a native tooltip. Clicking nodes feeds the selection.
 */

import type { ReuseTree } from './api.js'
import { radialLayout } from './layout.js'

const SVG_NS = 'http://www.w3.org/2000/svg'

const PALETTE = [
  '#4c78a8', '#f58518', '#54a24b', '#e45756', '#72b7b2',
  '#eeca3b', '#b279a2', '#ff9da6', '#9d755d', '#bab0ac',
]

export interface GraphView {
  render(tree: ReuseTree): void
  setSelection(ids: string[]): void
}

export function createGraphView(
  host: HTMLElement,
  onNodeClick: (id: string) => void,
  width = 720,
  height = 520,
): GraphView {
  let currentTree: ReuseTree | null = null
  let selection: string[] = []

  function el(name: string, attrs: Record<string, string>): SVGElement {
    const node = document.createElementNS(SVG_NS, name)
    for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value)
    return node
  }

  function draw(): void {
    host.textContent = ''
    if (!currentTree) return
    const tree = currentTree
    const svg = el('svg', {
      viewBox: `0 0 ${width} ${height}`,
      width: '100%',
      'data-role': 'graph',
    })
    const positions = radialLayout(tree, width, height)
    const selected = new Set(selection)

    for (const edge of tree.edges) {
      const a = positions.get(edge.a)
      const b = positions.get(edge.b)
      if (!a || !b) continue
      const incident = selected.has(edge.a) || selected.has(edge.b)
      const line = el('line', {
        x1: String(a.x),
        y1: String(a.y),
        x2: String(b.x),
        y2: String(b.y),
        stroke: incident ? '#d62728' : '#999',
        'stroke-width': String(1 + 6 * edge.similarity + (incident ? 1 : 0)),
        'data-edge': `${edge.a}|${edge.b}`,
        'data-incident': incident ? 'true' : 'false',
      })
      const tip = document.createElementNS(SVG_NS, 'title')
      tip.textContent = `${edge.a} — ${edge.b}: ${edge.similarity.toFixed(6)}`
      line.appendChild(tip)
      svg.appendChild(line)
    }

    for (const node of tree.nodes) {
      const p = positions.get(node.id)
      if (!p) continue
      const g = el('g', { 'data-node': node.id })
      const circle = el('circle', {
        cx: String(p.x),
        cy: String(p.y),
        r: selected.has(node.id) ? '11' : '8',
        fill: PALETTE[node.group % PALETTE.length],
        stroke: selected.has(node.id) ? '#d62728' : '#333',
        'stroke-width': selected.has(node.id) ? '3' : '1',
      })
      const tip = document.createElementNS(SVG_NS, 'title')
      tip.textContent = `${node.label} (${node.language || 'unknown'})`
      circle.appendChild(tip)
      const text = el('text', {
        x: String(p.x + 11),
        y: String(p.y + 4),
        'font-size': '11',
      })
      text.textContent = node.id
      g.appendChild(circle)
      g.appendChild(text)
      g.addEventListener('click', () => onNodeClick(node.id))
      svg.appendChild(g)
    }
    host.appendChild(svg)
  }

  return {
    render(tree: ReuseTree): void {
      currentTree = tree
      draw()
    },
    setSelection(ids: string[]): void {
      selection = ids.slice()
      draw()
    },
  }
}
