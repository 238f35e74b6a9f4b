/** Payload shapes of the swingsight JSON API, field for field. */

export type Vec3 = [number, number, number];

/** One marker at one frame: coordinates, or null while occluded. */
export type MarkerCell = Vec3 | null;

export interface SwingSummaryDoc {
  id: string;
  type: string;
  frames: number;
  rate: number;
}

export interface RoiDoc {
  start: number;
  min: number;
  end: number;
}

export interface FramesDoc {
  swing_id: string;
  type: string;
  rate: number;
  markers: string[];
  /** frames x markers, aligned with `markers`. */
  raw: MarkerCell[][];
  repaired: MarkerCell[][];
  roi: RoiDoc | null;
}

export interface LabelsDoc {
  swing_id: string;
  annotator: string;
  timestamp: string;
  labels: Record<string, string>;
}

export interface ProfileDoc {
  profile_id: string;
  skill_level: string;
  scenario: string;
  weights: Record<string, number>;
}

export interface OutcomeDoc {
  rule_id: string;
  category: string;
  score: number;
  activation: number;
  cue_text: string;
  colour: string;
}

export interface AssessmentDoc {
  swing_id: string;
  profile_id: string;
  outcomes: OutcomeDoc[];
  /** [rule_id, reason] pairs for rules that produced no outcome. */
  not_assessed: [string, string][];
  z: number | null;
  cue_list: OutcomeDoc[];
}

export interface TrainDoc {
  rule_id: string;
  nodes: number;
  trained_on: number;
  failures: [string, string][];
  epochs: number;
}

export interface FoldDoc {
  swing_id: string;
  truth: string;
  predicted: string;
}

export interface LoocvDoc {
  rule_id: string;
  oa_percent: number;
  oa_display: number;
  correct: number;
  total: number;
  epochs: number;
  failures: [string, string][];
  per_fold: FoldDoc[];
}

export interface RuleStatsDoc {
  counts: Record<string, number>;
  mean_score: number;
  assessed: number;
}

export interface ReportDoc {
  session_id: string;
  swings_assessed: number;
  per_rule: Record<string, RuleStatsDoc>;
  z_series: number[];
  worst_rule: string;
}

/** Error body the service puts under HTTP `detail`. */
export interface ErrorBody {
  error: string;
  message: string;
}
