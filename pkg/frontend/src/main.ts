/**
 * Explorer wiring: reuse-tree graph, two-click node selection, live
 * parameter controls, side-by-side comparison.
 *
 * The UI computes nothing itself: every number on screen comes from an
 * API response. A parameter change triggers exactly one tree refetch
 * (plus a comparison refetch when two texts are staged); stale requests
 * are aborted by the client.
 */

import { ApiClient } from './api.js'
import { createBanner } from './banner.js'
import { renderComparison } from './compare.js'
import { createControls } from './controls.js'
import { createGraphView } from './graph.js'
import { compareQuery, DEFAULT_PARAMS, matrixQuery, Params } from './params.js'

export interface App {
  selection(): string[]
  params(): Params
  selectNode(id: string): Promise<void>
  changeParams(params: Params): Promise<void>
  refreshTree(): Promise<void>
}

export function createApp(root: HTMLElement, client: ApiClient): App {
  let params: Params = { ...DEFAULT_PARAMS }
  let selection: string[] = []

  const banner = createBanner()
  const slots = document.createElement('div')
  slots.className = 'selection-slots'
  slots.dataset.role = 'selection-slots'

  const graphHost = document.createElement('div')
  graphHost.className = 'graph-host'
  const compareHost = document.createElement('div')
  compareHost.className = 'compare-host'

  const graph = createGraphView(graphHost, (id) => {
    void selectNode(id)
  })

  const controls = createControls(params, (next) => {
    void changeParams(next)
  })

  root.appendChild(banner.element)
  root.appendChild(controls.element)
  root.appendChild(slots)
  root.appendChild(graphHost)
  root.appendChild(compareHost)

  function renderSlots(): void {
    slots.textContent = ''
    for (let i = 0; i < 2; i += 1) {
      const slot = document.createElement('span')
      slot.className = 'slot'
      slot.dataset.slot = String(i)
      slot.textContent = selection[i] ?? '—'
      slots.appendChild(slot)
    }
    const hint = document.createElement('span')
    hint.className = 'slot-hint'
    hint.textContent =
      selection.length < 2 ? 'click two nodes to compare' : 'click another node to restart'
    slots.appendChild(hint)
  }

  async function refreshTree(): Promise<void> {
    try {
      const tree = await client.tree(matrixQuery(params))
      banner.clear()
      graph.render(tree)
      graph.setSelection(selection)
    } catch (error) {
      if ((error as Error).name === 'AbortError') return
      banner.show(`could not load reuse tree: ${(error as Error).message}`)
    }
  }

  async function refreshComparison(): Promise<void> {
    if (selection.length !== 2) {
      compareHost.textContent = ''
      return
    }
    try {
      const report = await client.comparison(compareQuery(params, selection[0], selection[1]))
      banner.clear()
      renderComparison(compareHost, report)
    } catch (error) {
      if ((error as Error).name === 'AbortError') return
      banner.show(`could not load comparison: ${(error as Error).message}`)
    }
  }

  async function selectNode(id: string): Promise<void> {
    if (selection.length >= 2) {
      selection = [id]
    } else if (selection.includes(id)) {
      selection = selection.filter((x) => x !== id)
    } else {
      selection = [...selection, id]
    }
    renderSlots()
    graph.setSelection(selection)
    await refreshComparison()
  }

  async function changeParams(next: Params): Promise<void> {
    params = { ...next }
    await Promise.all([refreshTree(), refreshComparison()])
  }

  renderSlots()

  return {
    selection: () => selection.slice(),
    params: () => ({ ...params }),
    selectNode,
    changeParams,
    refreshTree,
  }
}

export function boot(): void {
  const root = document.getElementById('app')
  if (!root) return
  const app = createApp(root, new ApiClient())
  void app.refreshTree()
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  boot()
}
