/** Console-side configuration: the rule list, categories and colour map.
 *
 * The service has no discovery endpoint for these, so the console carries
 * its own copy, the same way it carries the skeleton segment list.
 */

export const RULE_IDS = [
  "stance_sqs",
  "stance_sos",
  "low_to_high",
  "swing_width:leading_hip",
  "swing_width:body_centre",
  "swing_width:rear_hip",
] as const;

export type RuleId = (typeof RULE_IDS)[number];

export function isKnownRule(ruleId: string): ruleId is RuleId {
  return (RULE_IDS as readonly string[]).includes(ruleId);
}

export const CATEGORIES = ["bad", "average", "very_good"] as const;

export type Category = (typeof CATEGORIES)[number];

export function isCategory(value: string): value is Category {
  return (CATEGORIES as readonly string[]).includes(value);
}

/** Cue colours as rendered; keys match the API's `colour` field. */
export const COLOUR_HEX: Record<string, string> = {
  red: "#d0453b",
  amber: "#d99a1f",
  green: "#3f9e52",
};

export const CATEGORY_SHORT: Record<Category, string> = {
  bad: "bad",
  average: "avg",
  very_good: "v.good",
};
