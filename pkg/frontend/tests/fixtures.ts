import { ApiClient, type FetchLike } from "../src/api.js";
import type { CorrespondentSummary, TimelinePoint } from "../src/types.js";

export const ALICE: CorrespondentSummary = {
  peer_address: "alice@corp.com",
  sent_count: 3,
  received_count: 1,
  polarity_pct: { positive: 80.0, negative: 20.0 },
  emotion_diff: {
    anger: -1.25,
    anticipation: 0.0,
    disgust: -0.5,
    fear: -3.75,
    joy: 6.123456789,
    sadness: -2.0,
    surprise: 0.0,
    trust: 1.375,
  },
};

export const BOB: CorrespondentSummary = {
  peer_address: "bob@corp.com",
  sent_count: 1,
  received_count: 0,
  polarity_pct: { positive: 10.0, negative: 90.0 },
  emotion_diff: {
    anger: 4.0,
    anticipation: -1.0,
    disgust: 2.5,
    fear: 5.0,
    joy: -8.0,
    sadness: 1.5,
    surprise: -2.0,
    trust: -2.0,
  },
};

export const ALICE_TIMELINE: TimelinePoint[] = [
  {
    message_id: "<a0>",
    timestamp: "2001-05-04T12:00:00+00:00",
    polarity_pct: { positive: 100.0, negative: 0.0 },
    emotion_pct: { ...ALICE.emotion_diff, joy: 100.0 },
    empty: false,
  },
  {
    message_id: "<a1>",
    timestamp: "2001-05-05T12:00:00+00:00",
    polarity_pct: { positive: 0.0, negative: 0.0 },
    emotion_pct: { ...ALICE.emotion_diff, joy: 0.0 },
    empty: true,
  },
  {
    message_id: "<a2>",
    timestamp: "2001-05-06T12:00:00+00:00",
    polarity_pct: { positive: 50.0, negative: 50.0 },
    emotion_pct: { ...ALICE.emotion_diff, joy: 50.0 },
    empty: false,
  },
];

export interface FakeBackend {
  api: ApiClient;
  requests: string[];
}

/** ApiClient backed by canned JSON payloads; records every URL requested. */
export function fakeBackend(): FakeBackend {
  const requests: string[] = [];
  const routes: Record<string, unknown> = {
    "/api/mailbox/summary": [ALICE, BOB],
    "/api/correspondent/alice%40corp.com": ALICE,
    "/api/correspondent/alice%40corp.com/timeline": ALICE_TIMELINE,
    "/api/correspondent/bob%40corp.com": BOB,
    "/api/correspondent/bob%40corp.com/timeline": [],
  };
  const fetchFn: FetchLike = (url) => {
    requests.push(url);
    if (url in routes) {
      return Promise.resolve(
        new Response(JSON.stringify(routes[url]), { status: 200 }),
      );
    }
    return Promise.resolve(new Response("not found", { status: 404 }));
  };
  return { api: new ApiClient(fetchFn), requests };
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
