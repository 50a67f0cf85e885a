/**
 * Parameter control panel: n selector, metric and mode radios, k stepper.
 *
 * Controls constrain input so only valid bundles can ever be emitted:
 * the n selector drops 2 under fuzzy mode, the k stepper is enabled only
 * in skip mode and clamped to 1..K_MAX, and every change goes through
 * applyChange.
 */

import { allowedNs, applyChange, K_MAX, Metric, Mode, Params } from './params.js'

export interface ControlPanel {
  element: HTMLElement
  params(): Params
}

export function createControls(
  initial: Params,
  onChange: (params: Params) => void,
): ControlPanel {
  let current = { ...initial }

  const root = document.createElement('div')
  root.className = 'controls'
  root.dataset.role = 'controls'

  const nSelect = document.createElement('select')
  nSelect.dataset.control = 'n'

  const metricBox = document.createElement('span')
  const modeBox = document.createElement('span')

  const kInput = document.createElement('input')
  kInput.type = 'number'
  kInput.dataset.control = 'k'
  kInput.min = '1'
  kInput.max = String(K_MAX)

  function rebuildNChoices(): void {
    nSelect.textContent = ''
    for (const n of allowedNs(current.mode)) {
      const option = document.createElement('option')
      option.value = String(n)
      option.textContent = String(n)
      option.selected = n === current.n
      nSelect.appendChild(option)
    }
  }

  function refresh(): void {
    rebuildNChoices()
    nSelect.value = String(current.n)
    kInput.value = String(current.mode === 'skip' ? current.k : 1)
    kInput.disabled = current.mode !== 'skip'
    root.querySelectorAll<HTMLInputElement>('input[type=radio]').forEach((radio) => {
      if (radio.name === 'metric') radio.checked = radio.value === current.metric
      if (radio.name === 'mode') radio.checked = radio.value === current.mode
    })
  }

  function update(change: Partial<Params>): void {
    const next = applyChange(current, change)
    const dirty =
      next.n !== current.n ||
      next.metric !== current.metric ||
      next.mode !== current.mode ||
      next.k !== current.k
    current = next
    refresh()
    if (dirty) onChange({ ...current })
  }

  nSelect.addEventListener('change', () => update({ n: Number(nSelect.value) }))
  kInput.addEventListener('change', () => update({ k: Number(kInput.value) }))

  function radio(name: 'metric' | 'mode', value: string, label: string): HTMLElement {
    const wrap = document.createElement('label')
    const input = document.createElement('input')
    input.type = 'radio'
    input.name = name
    input.value = value
    input.addEventListener('change', () => {
      if (!input.checked) return
      if (name === 'metric') update({ metric: value as Metric })
      else update({ mode: value as Mode })
    })
    wrap.appendChild(input)
    wrap.appendChild(document.createTextNode(label))
    return wrap
  }

  const nLabel = document.createElement('label')
  nLabel.appendChild(document.createTextNode('n '))
  nLabel.appendChild(nSelect)

  metricBox.appendChild(radio('metric', 'dice', 'dice'))
  metricBox.appendChild(radio('metric', 'jaccard', 'jaccard'))
  modeBox.appendChild(radio('mode', 'contiguous', 'contiguous'))
  modeBox.appendChild(radio('mode', 'fuzzy', 'fuzzy'))
  modeBox.appendChild(radio('mode', 'skip', 'skip'))

  const kLabel = document.createElement('label')
  kLabel.appendChild(document.createTextNode('k '))
  kLabel.appendChild(kInput)

  root.appendChild(nLabel)
  root.appendChild(metricBox)
  root.appendChild(modeBox)
  root.appendChild(kLabel)
  refresh()

  return {
    element: root,
    params: () => ({ ...current }),
  }
}
