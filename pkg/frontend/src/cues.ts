/** View models for assessment payloads.
 *
 * The console does no scoring arithmetic: Z, scores and activations are
 * shown exactly as the service serialized them, via the raw-text number
 * map. Ordering is the payload's ordering; the worst-first ranking was
 * already applied server-side.
 */

import type { AssessmentDoc, OutcomeDoc } from "./types.js";
import { COLOUR_HEX } from "./constants.js";
import { numberTextAt, numberTexts } from "./rawjson.js";

export interface OutcomeView {
  ruleId: string;
  category: string;
  scoreText: string;
  activationText: string;
  cueText: string;
  colour: string;
  colourHex: string;
}

export interface CueView extends OutcomeView {
  /** 1-based rank in the worst-first list. */
  rank: number;
}

export interface AssessmentView {
  swingId: string;
  profileId: string;
  z: number | null;
  /** Verbatim payload text; "n/a" only when the payload Z is null. */
  zText: string;
  outcomes: OutcomeView[];
  cues: CueView[];
  notAssessed: { ruleId: string; reason: string }[];
}

function outcomeView(
  o: OutcomeDoc,
  texts: Map<string, string>,
  pointerBase: string,
): OutcomeView {
  return {
    ruleId: o.rule_id,
    category: o.category,
    scoreText: numberTextAt(texts, `${pointerBase}/score`, o.score),
    activationText: numberTextAt(texts, `${pointerBase}/activation`, o.activation),
    cueText: o.cue_text,
    colour: o.colour,
    colourHex: COLOUR_HEX[o.colour] ?? "#808080",
  };
}

/** Build the display model from the parsed doc plus its raw bytes. */
export function assessmentView(doc: AssessmentDoc, raw: string): AssessmentView {
  const texts = numberTexts(raw);
  return {
    swingId: doc.swing_id,
    profileId: doc.profile_id,
    z: doc.z,
    zText: doc.z === null ? "n/a" : numberTextAt(texts, "/z", doc.z),
    outcomes: doc.outcomes.map((o, i) => outcomeView(o, texts, `/outcomes/${i}`)),
    cues: doc.cue_list.map((o, i) => ({
      ...outcomeView(o, texts, `/cue_list/${i}`),
      rank: i + 1,
    })),
    notAssessed: doc.not_assessed.map(([ruleId, reason]) => ({ ruleId, reason })),
  };
}

// ------------------------------------------------------------- weight edits

/** Slider edits: clamp into [0, 1], leave everything else untouched. */
export function clampWeight(value: number): number {
  if (!Number.isFinite(value)) {
    return 0;
  }
  return Math.min(1, Math.max(0, value));
}

export function withWeight(
  weights: Readonly<Record<string, number>>,
  ruleId: string,
  value: number,
): Record<string, number> {
  return { ...weights, [ruleId]: clampWeight(value) };
}
