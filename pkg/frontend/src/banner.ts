/** Visible error banner: API failures must never leave a blank canvas. */

export interface Banner {
  element: HTMLElement
  show(message: string): void
  clear(): void
}

export function createBanner(): Banner {
  const element = document.createElement('div')
  element.className = 'error-banner'
  element.dataset.role = 'error-banner'
  element.hidden = true
  return {
    element,
    show(message: string): void {
      element.textContent = message
      element.hidden = false
    },
    clear(): void {
      element.textContent = ''
      element.hidden = true
    },
  }
}
