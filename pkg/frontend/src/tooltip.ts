// Shared floating tooltip; content is always the exact id/score text from
// the API values, so what the user reads is what the server computed.

import { el } from "./dom.js";

export class Tooltip {
  private node: HTMLElement;

  constructor(host: Element) {
    this.node = el("div", { class: "tooltip hidden" });
    host.appendChild(this.node);
  }

  show(text: string, event: MouseEvent): void {
    this.node.textContent = text;
    this.node.classList.remove("hidden");
    this.node.style.left = `${event.clientX + 12}px`;
    this.node.style.top = `${event.clientY + 12}px`;
  }

  hide(): void {
    this.node.classList.add("hidden");
    this.node.textContent = "";
  }

  text(): string {
    return this.node.textContent ?? "";
  }

  visible(): boolean {
    return !this.node.classList.contains("hidden");
  }
}
