export const EMOTIONS = [
  "anger",
  "anticipation",
  "disgust",
  "fear",
  "joy",
  "sadness",
  "surprise",
  "trust",
] as const;

export type Emotion = (typeof EMOTIONS)[number];

export const PALETTE: Record<string, string> = {
  anger: "#DC143C",
  anticipation: "#FF8C00",
  disgust: "#800080",
  fear: "#006400",
  joy: "#FFD700",
  sadness: "#1E3A8A",
  surprise: "#00BFFF",
  trust: "#32CD32",
  positive: "#2E8B57",
  negative: "#8B0000",
};

export interface CorrespondentSummary {
  peer_address: string;
  sent_count: number;
  received_count: number;
  polarity_pct: { positive: number; negative: number };
  emotion_diff: Record<Emotion, number>;
}

export interface TimelinePoint {
  message_id: string;
  timestamp: string;
  polarity_pct: { positive: number; negative: number };
  emotion_pct: Record<Emotion, number>;
  empty: boolean;
}
