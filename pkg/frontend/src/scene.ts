/** Render model for one frame of a swing, pure data out of the frames doc.
 *
 * Present markers become filled dots. A marker that is missing at the
 * current frame but was seen earlier becomes a hollow dot at its
 * last-known position; one never seen yet is listed absent and not drawn.
 * Missing markers must never throw, whatever the occlusion pattern.
 */

import type { FramesDoc, MarkerCell, RoiDoc, Vec3 } from "./types.js";
import type { SegmentSpec } from "./skeleton.js";

export interface MarkerDot {
  name: string;
  position: Vec3;
  /** False renders hollow: the marker is occluded at this frame. */
  present: boolean;
}

export interface SceneSegment {
  from: Vec3;
  to: Vec3;
  group: SegmentSpec["group"];
  /** False when either endpoint is at a last-known stand-in. */
  solid: boolean;
}

export interface Scene {
  frame: number;
  markers: MarkerDot[];
  segments: SceneSegment[];
  /** Marker names occluded at this frame but drawn at last-known spots. */
  missing: string[];
  /** Marker names with no position so far; nothing is drawn for them. */
  absent: string[];
}

export interface TimelineView {
  frameCount: number;
  roi: RoiDoc | null;
}

interface Resolved {
  position: Vec3;
  present: boolean;
}

function cellAt(series: MarkerCell[][], frame: number, marker: number): MarkerCell {
  const row = series[frame];
  if (row === undefined) {
    return null;
  }
  return row[marker] ?? null;
}

/** Position at `frame`, else the most recent earlier one; null if none. */
function resolveMarker(
  series: MarkerCell[][],
  frame: number,
  marker: number,
): Resolved | null {
  const here = cellAt(series, frame, marker);
  if (here !== null) {
    return { position: [here[0], here[1], here[2]], present: true };
  }
  for (let f = frame - 1; f >= 0; f--) {
    const cell = cellAt(series, f, marker);
    if (cell !== null) {
      return { position: [cell[0], cell[1], cell[2]], present: false };
    }
  }
  return null;
}

export function buildScene(
  doc: FramesDoc,
  frame: number,
  showRepaired: boolean,
  segments: readonly SegmentSpec[],
): Scene {
  const series = showRepaired ? doc.repaired : doc.raw;
  const byName = new Map<string, Resolved>();
  const markers: MarkerDot[] = [];
  const missing: string[] = [];
  const absent: string[] = [];

  doc.markers.forEach((name, idx) => {
    const r = resolveMarker(series, frame, idx);
    if (r === null) {
      absent.push(name);
      return;
    }
    byName.set(name, r);
    markers.push({ name, position: r.position, present: r.present });
    if (!r.present) {
      missing.push(name);
    }
  });

  const drawn: SceneSegment[] = [];
  for (const spec of segments) {
    const a = byName.get(spec.from);
    const b = byName.get(spec.to);
    if (a === undefined || b === undefined) {
      continue;
    }
    drawn.push({
      from: a.position,
      to: b.position,
      group: spec.group,
      solid: a.present && b.present,
    });
  }

  return { frame, markers, segments: drawn, missing, absent };
}

export function timelineView(doc: FramesDoc): TimelineView {
  return { frameCount: doc.repaired.length, roi: doc.roi };
}

/** Centre of everything ever seen; the camera orbits this point. */
export function sceneCentre(doc: FramesDoc): Vec3 {
  let n = 0;
  let sx = 0;
  let sy = 0;
  let sz = 0;
  for (const row of doc.repaired) {
    for (const cell of row) {
      if (cell !== null) {
        sx += cell[0];
        sy += cell[1];
        sz += cell[2];
        n += 1;
      }
    }
  }
  if (n === 0) {
    return [0, 0, 0];
  }
  return [sx / n, sy / n, sz / n];
}
