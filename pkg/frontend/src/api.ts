/** Typed client for the swingsight JSON API.
 *
 * Every byte the console knows about a session comes through here; no
 * other backend contact exists. Responses are returned parsed plus raw,
 * because view models take their number texts from the raw bytes.
 */

import type {
  AssessmentDoc,
  ErrorBody,
  FramesDoc,
  LabelsDoc,
  LoocvDoc,
  ProfileDoc,
  ReportDoc,
  SwingSummaryDoc,
  TrainDoc,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly errorName: string;

  constructor(status: number, errorName: string, message: string) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.errorName = errorName;
  }
}

export interface Fetched<T> {
  doc: T;
  raw: string;
}

function extractError(status: number, bodyText: string): ApiError {
  let detail: unknown;
  try {
    detail = (JSON.parse(bodyText) as { detail?: unknown }).detail;
  } catch {
    detail = undefined;
  }
  if (detail && typeof detail === "object" && "message" in detail) {
    const d = detail as ErrorBody;
    return new ApiError(status, String(d.error ?? "Error"), String(d.message));
  }
  return new ApiError(status, "HttpError", `HTTP ${status}`);
}

export class ConsoleApi {
  constructor(readonly base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<Fetched<T>> {
    const res = await fetch(this.base + path, init);
    const raw = await res.text();
    if (!res.ok) {
      throw extractError(res.status, raw);
    }
    return { doc: JSON.parse(raw) as T, raw };
  }

  private jsonInit(method: string, body: unknown): RequestInit {
    return {
      method,
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    };
  }

  async listSwings(): Promise<SwingSummaryDoc[]> {
    return (await this.request<SwingSummaryDoc[]>("/swings")).doc;
  }

  async frames(swingId: string): Promise<FramesDoc> {
    return (await this.request<FramesDoc>(
      `/swings/${encodeURIComponent(swingId)}/frames`,
    )).doc;
  }

  async getLabels(swingId: string): Promise<LabelsDoc> {
    return (await this.request<LabelsDoc>(
      `/swings/${encodeURIComponent(swingId)}/labels`,
    )).doc;
  }

  async putLabels(
    swingId: string,
    labels: Record<string, string>,
    annotator: string,
  ): Promise<LabelsDoc> {
    return (await this.request<LabelsDoc>(
      `/swings/${encodeURIComponent(swingId)}/labels`,
      this.jsonInit("PUT", { annotator, labels }),
    )).doc;
  }

  async listProfiles(): Promise<string[]> {
    return (await this.request<string[]>("/profiles")).doc;
  }

  async getProfile(profileId: string): Promise<ProfileDoc> {
    return (await this.request<ProfileDoc>(
      `/profiles/${encodeURIComponent(profileId)}`,
    )).doc;
  }

  async putProfile(
    profileId: string,
    skillLevel: string,
    scenario: string,
    weights: Record<string, number>,
  ): Promise<ProfileDoc> {
    return (await this.request<ProfileDoc>(
      `/profiles/${encodeURIComponent(profileId)}`,
      this.jsonInit("PUT", {
        skill_level: skillLevel,
        scenario,
        weights,
      }),
    )).doc;
  }

  /** Raw text comes back too: assessment numbers are displayed verbatim. */
  async assess(
    swingId: string,
    profileId: string,
    topK: number,
  ): Promise<Fetched<AssessmentDoc>> {
    return this.request<AssessmentDoc>(
      "/assess",
      this.jsonInit("POST", { swing_id: swingId, profile_id: profileId, top_k: topK }),
    );
  }

  async train(ruleId: string): Promise<TrainDoc> {
    return (await this.request<TrainDoc>(
      "/train",
      this.jsonInit("POST", { rule_id: ruleId }),
    )).doc;
  }

  async loocv(ruleId: string): Promise<Fetched<LoocvDoc>> {
    return this.request<LoocvDoc>(`/loocv/${ruleId}`);
  }

  async report(sessionId: string): Promise<Fetched<ReportDoc>> {
    return this.request<ReportDoc>(
      `/sessions/${encodeURIComponent(sessionId)}/report`,
    );
  }
}
