// Shapes of the play-API payloads (schema version 1).

export type Variant = "welter" | "nim";

export interface Rules {
  p: number;
  k: number;
  m: number;
  variant: Variant;
}

export interface SgInfo {
  value: number;
  digits: number[]; // little-endian base-p
  base: number;
  method: "closed" | "oracle";
}

export interface HistoryEntry {
  position: number[];
  by: "start" | "human" | "engine";
}

export interface SessionPayload {
  v: number;
  id: string;
  rules: Rules;
  position: number[];
  partition: number[];
  tower: number[];
  sg: SgInfo;
  turn: "human" | "engine" | "none";
  over: boolean;
  winner: "human" | "engine" | null;
  history: HistoryEntry[];
}

export type MovePair = [from: number, to: number];

export interface EngineMove {
  pairs: number[][];
  position: number[];
  losing_spot: boolean;
  sg: SgInfo;
}

export interface CreateResponse {
  v: number;
  session: SessionPayload;
  initial_sg: SgInfo;
  engine_move: EngineMove | null;
}

export interface MoveResponse {
  v: number;
  state: SessionPayload;
  sg_after_human: SgInfo;
  engine_move: EngineMove | null;
}

export interface HintOption {
  pairs: number[][];
  position: number[];
  sg: number;
}

export interface HintsResponse {
  v: number;
  h: number;
  options: HintOption[];
}

// 422 rejection body: which move condition failed.
export type ConditionIndex = 1 | 2 | 3 | "distinct" | "position";

export interface MoveRejection {
  condition: ConditionIndex;
  message: string;
}
