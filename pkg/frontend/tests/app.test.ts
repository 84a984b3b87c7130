import { beforeEach, describe, expect, it } from "vitest";

import { initApp } from "../src/app.js";
import { EMOTIONS } from "../src/types.js";
import { ALICE, ALICE_TIMELINE, fakeBackend, flush } from "./fixtures.js";

let root: HTMLElement;

beforeEach(() => {
  root = document.createElement("main");
  document.body.replaceChildren(root);
});

describe("drill-down", () => {
  it("loads the overview and keeps the detail panel hidden", async () => {
    const { api } = fakeBackend();
    await initApp(root, api);
    expect(root.querySelectorAll(".overview-row")).toHaveLength(2);
    expect(
      (root.querySelector("#detail") as HTMLElement).hidden,
    ).toBe(true);
  });

  it("clicking an overview bar fetches and renders that correspondent", async () => {
    const { api, requests } = fakeBackend();
    await initApp(root, api);

    (
      root.querySelector('[data-address="alice@corp.com"]') as HTMLElement
    ).click();
    await flush();

    expect(requests).toContain("/api/correspondent/alice%40corp.com");
    expect(requests).toContain("/api/correspondent/alice%40corp.com/timeline");
    const detail = root.querySelector("#detail") as HTMLElement;
    expect(detail.hidden).toBe(false);
    expect(
      (detail.querySelector("#detail-address") as HTMLElement).textContent,
    ).toBe("alice@corp.com");
  });

  it("renders an 8-bar diff whose values equal the API payload", async () => {
    const { api } = fakeBackend();
    await initApp(root, api);
    (
      root.querySelector('[data-address="alice@corp.com"]') as HTMLElement
    ).click();
    await flush();

    const bars = root.querySelectorAll("#detail-diff rect.diff-bar");
    expect(bars).toHaveLength(8);
    for (const bar of bars) {
      const emotion = bar.getAttribute("data-emotion")! as (typeof EMOTIONS)[number];
      expect(Number(bar.getAttribute("data-value"))).toBe(
        ALICE.emotion_diff[emotion],
      );
    }
  });

  it("renders one timeline marker per sent email", async () => {
    const { api } = fakeBackend();
    await initApp(root, api);
    (
      root.querySelector('[data-address="alice@corp.com"]') as HTMLElement
    ).click();
    await flush();

    expect(
      root.querySelectorAll("#detail-timeline circle.timeline-marker"),
    ).toHaveLength(ALICE_TIMELINE.length);
  });

  it("switching correspondents replaces the drill-down content", async () => {
    const { api } = fakeBackend();
    await initApp(root, api);
    const click = async (address: string) => {
      (
        root.querySelector(`[data-address="${address}"]`) as HTMLElement
      ).click();
      await flush();
    };
    await click("alice@corp.com");
    await click("bob@corp.com");

    expect(
      (root.querySelector("#detail-address") as HTMLElement).textContent,
    ).toBe("bob@corp.com");
    expect(root.querySelectorAll("#detail-diff rect.diff-bar")).toHaveLength(8);
    expect(root.querySelectorAll("#detail-timeline circle")).toHaveLength(0);
  });

  it("shows an error message when the summary request fails", async () => {
    const { ApiClient } = await import("../src/api.js");
    const broken = new ApiClient(() =>
      Promise.resolve(new Response("boom", { status: 503 })),
    );
    await initApp(root, broken);
    expect(root.querySelector("#overview")!.textContent).toContain("503");
  });
});
