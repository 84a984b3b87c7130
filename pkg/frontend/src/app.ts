import { ApiClient } from "./api.js";
import { renderDiffBars, renderOverview, renderTimeline } from "./charts.js";

/**
 * Wire the dashboard into `root`. The overview list loads immediately;
 * clicking a correspondent fetches that correspondent's summary and timeline
 * and renders the drill-down panel. All numbers come straight from the API.
 */
export async function initApp(
  root: HTMLElement,
  api: ApiClient = new ApiClient(),
): Promise<void> {
  root.replaceChildren();

  const heading = document.createElement("h1");
  heading.textContent = "Mailbox mood";
  const overview = document.createElement("div");
  overview.id = "overview";
  const detail = document.createElement("section");
  detail.id = "detail";
  detail.hidden = true;
  root.append(heading, overview, detail);

  const showCorrespondent = async (address: string): Promise<void> => {
    const [summary, points] = await Promise.all([
      api.correspondent(address),
      api.timeline(address),
    ]);
    detail.replaceChildren();
    detail.hidden = false;

    const title = document.createElement("h2");
    title.id = "detail-address";
    title.textContent = address;
    const bars = document.createElement("div");
    bars.id = "detail-diff";
    const timeline = document.createElement("div");
    timeline.id = "detail-timeline";
    detail.append(title, bars, timeline);

    renderDiffBars(bars, summary);
    renderTimeline(timeline, points);
  };

  try {
    const summaries = await api.summary();
    renderOverview(overview, summaries, (address) => {
      void showCorrespondent(address);
    });
  } catch (err) {
    overview.textContent = `failed to load mailbox summary: ${String(err)}`;
  }
}

const rootElement = typeof document !== "undefined" ? document.getElementById("app") : null;
if (rootElement !== null) {
  void initApp(rootElement);
}
