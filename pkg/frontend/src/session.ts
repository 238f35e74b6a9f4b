/** View model for a session report, numbers verbatim from the payload. */

import type { ReportDoc } from "./types.js";
import { CATEGORIES } from "./constants.js";
import { escapePointerSegment, numberTextAt, numberTexts } from "./rawjson.js";

export interface RuleRow {
  ruleId: string;
  counts: Record<string, number>;
  meanText: string;
  assessed: number;
  worst: boolean;
}

export interface ReportView {
  sessionId: string;
  swingsAssessed: number;
  /** Parallel arrays: parsed Z for the chart, payload text for display. */
  zSeries: number[];
  zTexts: string[];
  rows: RuleRow[];
  worstRule: string | null;
  empty: boolean;
  emptyReason: string;
}

export function reportView(doc: ReportDoc, raw: string): ReportView {
  const texts = numberTexts(raw);
  const rows: RuleRow[] = Object.entries(doc.per_rule).map(([ruleId, st]) => ({
    ruleId,
    counts: Object.fromEntries(CATEGORIES.map((c) => [c, st.counts[c] ?? 0])),
    meanText: numberTextAt(
      texts,
      `/per_rule/${escapePointerSegment(ruleId)}/mean_score`,
      st.mean_score,
    ),
    assessed: st.assessed,
    worst: ruleId === doc.worst_rule,
  }));
  return {
    sessionId: doc.session_id,
    swingsAssessed: doc.swings_assessed,
    zSeries: [...doc.z_series],
    zTexts: doc.z_series.map((z, i) => numberTextAt(texts, `/z_series/${i}`, z)),
    rows,
    worstRule: doc.worst_rule,
    empty: false,
    emptyReason: "",
  };
}

/** Explicit empty state when the session is unknown or has no swings. */
export function emptyReportView(sessionId: string, reason: string): ReportView {
  return {
    sessionId,
    swingsAssessed: 0,
    zSeries: [],
    zTexts: [],
    rows: [],
    worstRule: null,
    empty: true,
    emptyReason: reason,
  };
}
