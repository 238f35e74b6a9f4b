import { describe, expect, it } from "vitest";

import { assessmentView, clampWeight, withWeight } from "../src/cues.js";
import type { AssessmentDoc } from "../src/types.js";

function outcome(rule: string, score: number, colour: string): string {
  return (
    `{"rule_id": "${rule}", "category": "average", "score": ${score.toFixed(1)}, ` +
    `"activation": 0.875, "cue_text": "cue for ${rule}", "colour": "${colour}"}`
  );
}

// Raw text mimics the service: floats keep their trailing ".0".
const RAW =
  '{"swing_id": "sw-9", "profile_id": "club~tuning", ' +
  `"outcomes": [${outcome("stance_sqs", 1.0, "green")}, ${outcome("stance_sos", 0.5, "amber")}], ` +
  '"not_assessed": [["low_to_high", "MissingModel"]], ' +
  '"z": 1.0, ' +
  `"cue_list": [${outcome("stance_sos", 0.5, "amber")}, ${outcome("stance_sqs", 1.0, "green")}]}`;

describe("assessmentView", () => {
  const view = assessmentView(JSON.parse(RAW) as AssessmentDoc, RAW);

  it("shows Z exactly as the payload wrote it", () => {
    // String(1.0) would be "1"; the payload says "1.0" and wins.
    expect(view.zText).toBe("1.0");
    expect(view.z).toBe(1);
  });

  it("keeps score and activation tokens verbatim", () => {
    expect(view.outcomes.map((o) => o.scoreText)).toEqual(["1.0", "0.5"]);
    expect(view.outcomes.map((o) => o.activationText)).toEqual(["0.875", "0.875"]);
  });

  it("preserves the payload's cue order; ranking is server business", () => {
    expect(view.cues.map((c) => c.ruleId)).toEqual(["stance_sos", "stance_sqs"]);
    expect(view.cues.map((c) => c.rank)).toEqual([1, 2]);
    expect(view.cues[0]!.colour).toBe("amber");
    expect(view.cues[0]!.cueText).toBe("cue for stance_sos");
  });

  it("carries not-assessed reasons through untouched", () => {
    expect(view.notAssessed).toEqual([{ ruleId: "low_to_high", reason: "MissingModel" }]);
  });

  it("renders a null Z as n/a", () => {
    const raw = '{"swing_id": "s", "profile_id": "p", "outcomes": [], ' +
      '"not_assessed": [], "z": null, "cue_list": []}';
    const v = assessmentView(JSON.parse(raw) as AssessmentDoc, raw);
    expect(v.zText).toBe("n/a");
    expect(v.z).toBeNull();
  });

  it("maps colours to the fixed palette with a grey fallback", () => {
    expect(view.cues[0]!.colourHex).not.toBe("#808080");
    const raw = '{"swing_id": "s", "profile_id": "p", "outcomes": ' +
      '[{"rule_id": "r", "category": "bad", "score": 0.0, "activation": 0.0, ' +
      '"cue_text": "t", "colour": "chartreuse"}], "not_assessed": [], "z": 0.0, "cue_list": []}';
    const v = assessmentView(JSON.parse(raw) as AssessmentDoc, raw);
    expect(v.outcomes[0]!.colourHex).toBe("#808080");
  });
});

describe("weight edits", () => {
  it("clamps into the unit interval", () => {
    expect(clampWeight(0.5)).toBe(0.5);
    expect(clampWeight(-0.2)).toBe(0);
    expect(clampWeight(1.7)).toBe(1);
    expect(clampWeight(Number.NaN)).toBe(0);
  });

  it("replaces one weight without touching the rest", () => {
    const w = { stance_sqs: 1.0, stance_sos: 0.4 };
    const next = withWeight(w, "stance_sos", 0.9);
    expect(next).toEqual({ stance_sqs: 1.0, stance_sos: 0.9 });
    expect(w.stance_sos).toBe(0.4);
  });
});
