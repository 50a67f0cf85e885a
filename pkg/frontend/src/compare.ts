/**
 * Side-by-side comparison view with highlighted matches.
 *
 * Merged byte ranges from the report become <mark> elements; clicking a
 * highlight scrolls its counterpart occurrence in the other pane into
 * view. The counts strip shows shared keys for n = 2..5 verbatim from
 * the API.
 */

import type { ByteSpan, ComparisonReport } from './api.js'

const encoder = new TextEncoder()
const decoder = new TextDecoder()

/** Split text into alternating plain/highlight pieces by byte spans. */
export function sliceBySpans(text: string, spans: ByteSpan[]): { text: string; mark: boolean }[] {
  const bytes = encoder.encode(text)
  const pieces: { text: string; mark: boolean }[] = []
  let cursor = 0
  for (const [start, end] of spans) {
    if (start > cursor) pieces.push({ text: decoder.decode(bytes.slice(cursor, start)), mark: false })
    pieces.push({ text: decoder.decode(bytes.slice(start, end)), mark: true })
    cursor = end
  }
  if (cursor < bytes.length) pieces.push({ text: decoder.decode(bytes.slice(cursor)), mark: false })
  return pieces
}

/**
 * Index of the merged range in the other pane that corresponds to the
 * clicked merged range: the first match overlapping it supplies the
 * counterpart span.
 */
export function counterpartIndex(
  report: ComparisonReport,
  side: 'a' | 'b',
  mergedIdx: number,
): number | null {
  const merged = side === 'a' ? report.mergedA : report.mergedB
  const range = merged[mergedIdx]
  if (!range) return null
  const overlaps = (s: ByteSpan) => s[0] < range[1] && range[0] < s[1]
  for (const match of report.matches) {
    const own = side === 'a' ? match.segmentsA : match.segmentsB
    if (!own.some(overlaps)) continue
    const other = side === 'a' ? match.spanB : match.spanA
    const target = side === 'a' ? report.mergedB : report.mergedA
    for (let j = 0; j < target.length; j += 1) {
      if (other[0] >= target[j][0] && other[0] < target[j][1]) return j
    }
  }
  return null
}

function renderPane(
  container: HTMLElement,
  title: string,
  text: string,
  merged: ByteSpan[],
  side: 'a' | 'b',
  onMarkClick: (side: 'a' | 'b', idx: number) => void,
): void {
  const heading = document.createElement('h3')
  heading.textContent = title
  container.appendChild(heading)
  const body = document.createElement('div')
  body.className = 'pane-text'
  let markIdx = 0
  for (const piece of sliceBySpans(text, merged)) {
    if (piece.mark) {
      const mark = document.createElement('mark')
      mark.textContent = piece.text
      mark.dataset.side = side
      mark.dataset.idx = String(markIdx)
      const idx = markIdx
      mark.addEventListener('click', () => onMarkClick(side, idx))
      body.appendChild(mark)
      markIdx += 1
    } else {
      body.appendChild(document.createTextNode(piece.text))
    }
  }
  container.appendChild(body)
}

export function renderComparison(host: HTMLElement, report: ComparisonReport): void {
  host.textContent = ''
  host.dataset.role = 'comparison'

  const strip = document.createElement('div')
  strip.className = 'counts-strip'
  for (const n of Object.keys(report.countsByN).sort()) {
    const cell = document.createElement('span')
    cell.className = 'count-cell'
    cell.dataset.n = n
    cell.textContent = `${n}-akṣaras: ${report.countsByN[n]}`
    strip.appendChild(cell)
  }
  const metric = document.createElement('span')
  metric.className = 'count-cell metric'
  metric.textContent = `jaccard ${report.jaccard.toFixed(6)} · dice ${report.dice.toFixed(6)}`
  strip.appendChild(metric)
  host.appendChild(strip)

  if (report.matches.length === 0) {
    const notice = document.createElement('p')
    notice.className = 'no-matches'
    notice.textContent = `no matches at n=${report.params.n}`
    host.appendChild(notice)
  }

  const panes = document.createElement('div')
  panes.className = 'panes'
  const paneA = document.createElement('div')
  paneA.className = 'pane'
  const paneB = document.createElement('div')
  paneB.className = 'pane'

  const scrollToCounterpart = (side: 'a' | 'b', idx: number) => {
    const j = counterpartIndex(report, side, idx)
    if (j === null) return
    const otherSide = side === 'a' ? 'b' : 'a'
    const target = host.querySelector<HTMLElement>(
      `mark[data-side="${otherSide}"][data-idx="${j}"]`,
    )
    target?.scrollIntoView({ behavior: 'smooth', block: 'center' })
    target?.classList.add('pulse')
    setTimeout(() => target?.classList.remove('pulse'), 900)
  }

  renderPane(paneA, report.titleA || report.docA, report.textA, report.mergedA, 'a', scrollToCounterpart)
  renderPane(paneB, report.titleB || report.docB, report.textB, report.mergedB, 'b', scrollToCounterpart)
  panes.appendChild(paneA)
  panes.appendChild(paneB)
  host.appendChild(panes)
}
