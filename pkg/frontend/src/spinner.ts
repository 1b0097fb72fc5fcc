// Loading feedback: a spinner while any fetch is in flight, an error
// banner when one fails.

export class LoadingTracker {
  private inflight = 0;

  constructor(private spinner: HTMLElement, private banner: HTMLElement) {}

  onStart = (): void => {
    this.inflight += 1;
    this.spinner.classList.remove("hidden");
    this.banner.classList.add("hidden");
  };

  onSettle = (): void => {
    this.inflight = Math.max(0, this.inflight - 1);
    if (this.inflight === 0) {
      this.spinner.classList.add("hidden");
    }
  };

  fail(message: string): void {
    this.banner.textContent = message;
    this.banner.classList.remove("hidden");
    this.spinner.classList.add("hidden");
  }

  busy(): boolean {
    return this.inflight > 0;
  }
}
