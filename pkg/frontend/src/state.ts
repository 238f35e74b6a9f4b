/** Interactive console state and its reducers.
 *
 * Everything here is plain data transformed by pure functions, so a
 * re-render rebuilds the view from state alone, with no server round
 * trip. Invariants: current frame stays inside the loaded swing, zoom
 * stays positive, drafts only ever hold known rules.
 */

import { Camera, DEFAULT_CAMERA, orbit, zoomBy } from "./camera.js";
import { Category, isKnownRule } from "./constants.js";

export interface ReplayState {
  swingId: string | null;
  frameCount: number;
  currentFrame: number;
  playing: boolean;
  /** Multiplier on the capture rate; always > 0. */
  playbackRate: number;
  camera: Camera;
  showRepaired: boolean;
}

export const INITIAL_REPLAY: ReplayState = {
  swingId: null,
  frameCount: 0,
  currentFrame: 0,
  playing: false,
  playbackRate: 1.0,
  camera: DEFAULT_CAMERA,
  showRepaired: true,
};

function clampFrame(frame: number, frameCount: number): number {
  const last = Math.max(0, frameCount - 1);
  if (!Number.isFinite(frame)) {
    return 0;
  }
  return Math.min(last, Math.max(0, Math.floor(frame)));
}

/** Switch swings: frame resets, camera and toggles persist. */
export function loadSwing(s: ReplayState, swingId: string, frameCount: number): ReplayState {
  return {
    ...s,
    swingId,
    frameCount: Math.max(0, frameCount),
    currentFrame: 0,
    playing: false,
  };
}

export function scrubTo(s: ReplayState, frame: number): ReplayState {
  return { ...s, currentFrame: clampFrame(frame, s.frameCount) };
}

export function stepFrame(s: ReplayState, delta: number): ReplayState {
  return scrubTo({ ...s, playing: false }, s.currentFrame + delta);
}

export function setPlaying(s: ReplayState, playing: boolean): ReplayState {
  return { ...s, playing };
}

export function setRate(s: ReplayState, rate: number): ReplayState {
  if (!Number.isFinite(rate) || rate <= 0) {
    return s;
  }
  return { ...s, playbackRate: rate };
}

export function toggleRepaired(s: ReplayState): ReplayState {
  return { ...s, showRepaired: !s.showRepaired };
}

export function orbitCamera(s: ReplayState, dAz: number, dEl: number): ReplayState {
  return { ...s, camera: orbit(s.camera, dAz, dEl) };
}

export function zoomCamera(s: ReplayState, factor: number): ReplayState {
  return { ...s, camera: zoomBy(s.camera, factor) };
}

/** Advance playback by wall-clock time; loops past the last frame. */
export function tick(s: ReplayState, dtSeconds: number, captureRateHz: number): ReplayState {
  if (!s.playing || s.frameCount < 2 || dtSeconds <= 0) {
    return s;
  }
  const advance = dtSeconds * captureRateHz * s.playbackRate;
  const next = (s.currentFrame + Math.max(1, Math.round(advance))) % s.frameCount;
  return { ...s, currentFrame: next };
}

// ------------------------------------------------------------- label drafts

/** Pending category picks per (swing, rule), not yet submitted. */
export interface LabelDraft {
  selections: Readonly<Record<string, Readonly<Record<string, Category>>>>;
}

export const EMPTY_DRAFT: LabelDraft = { selections: {} };

export function setSelection(
  d: LabelDraft,
  swingId: string,
  ruleId: string,
  category: Category,
): LabelDraft {
  if (!isKnownRule(ruleId)) {
    throw new Error(`unknown rule ${ruleId}`);
  }
  const forSwing = { ...(d.selections[swingId] ?? {}), [ruleId]: category };
  return { selections: { ...d.selections, [swingId]: forSwing } };
}

export function clearSelection(d: LabelDraft, swingId: string, ruleId: string): LabelDraft {
  const forSwing = { ...(d.selections[swingId] ?? {}) };
  delete forSwing[ruleId];
  const selections = { ...d.selections, [swingId]: forSwing };
  if (Object.keys(forSwing).length === 0) {
    delete selections[swingId];
  }
  return { selections };
}

/** Drop a swing's draft after the server accepted its PUT. */
export function clearSwingDraft(d: LabelDraft, swingId: string): LabelDraft {
  if (!(swingId in d.selections)) {
    return d;
  }
  const selections = { ...d.selections };
  delete selections[swingId];
  return { selections };
}

export function draftFor(d: LabelDraft, swingId: string): Record<string, Category> {
  return { ...(d.selections[swingId] ?? {}) };
}

/** Submit stays disabled until at least one rule is picked. */
export function canSubmit(d: LabelDraft, swingId: string): boolean {
  return Object.keys(d.selections[swingId] ?? {}).length > 0;
}

// ------------------------------------------------------------- swing cycling

/** Next id in listing order, wrapping; null when the list is empty. */
export function nextSwingId(
  ids: readonly string[],
  current: string | null,
  step: 1 | -1 = 1,
): string | null {
  if (ids.length === 0) {
    return null;
  }
  const at = current === null ? -1 : ids.indexOf(current);
  if (at < 0) {
    return ids[step === 1 ? 0 : ids.length - 1] ?? null;
  }
  return ids[(at + step + ids.length) % ids.length] ?? null;
}

// ------------------------------------------------------------------ banners

export interface Banner {
  kind: "error" | "info";
  text: string;
}

/** Append without blocking anything; newest last, capped. */
export function pushBanner(banners: readonly Banner[], next: Banner): Banner[] {
  return [...banners, next].slice(-4);
}
