/** Orbit camera over the capture volume: azimuth, elevation, zoom.
 *
 * Coordinates are lab frame, millimetres, +Z up. The camera circles a
 * target point; azimuth wraps so a 360 degree orbit lands on the exact
 * same view, elevation clamps short of the poles, zoom stays positive.
 */

import type { Vec3 } from "./types.js";

export interface Camera {
  azimuthDeg: number;
  elevationDeg: number;
  zoom: number;
}

export interface Viewport {
  width: number;
  height: number;
}

export interface ScreenPoint {
  x: number;
  y: number;
  /** Distance along the view axis; callers cull depth <= 0. */
  depth: number;
}

export const MIN_ZOOM = 0.1;
export const MAX_ZOOM = 20.0;
const MAX_ELEVATION_DEG = 89.0;
/** Camera distance at zoom 1, chosen to frame a full body in mm. */
const BASE_DISTANCE_MM = 5200.0;
const FOCAL = 1.25;

export const DEFAULT_CAMERA: Camera = {
  azimuthDeg: 35.0,
  elevationDeg: 18.0,
  zoom: 1.0,
};

/** Normalize into [0, 360). Exact for the +-360 wraps the orbit makes. */
export function wrapDegrees(deg: number): number {
  return ((deg % 360) + 360) % 360;
}

function clampElevation(deg: number): number {
  return Math.min(MAX_ELEVATION_DEG, Math.max(-MAX_ELEVATION_DEG, deg));
}

export function orbit(cam: Camera, dAzimuth: number, dElevation: number): Camera {
  return {
    azimuthDeg: wrapDegrees(cam.azimuthDeg + dAzimuth),
    elevationDeg: clampElevation(cam.elevationDeg + dElevation),
    zoom: cam.zoom,
  };
}

export function zoomBy(cam: Camera, factor: number): Camera {
  if (!Number.isFinite(factor) || factor <= 0) {
    return cam;
  }
  const zoom = Math.min(MAX_ZOOM, Math.max(MIN_ZOOM, cam.zoom * factor));
  return { ...cam, zoom };
}

/** Perspective-project a lab point onto the viewport.
 *
 * Azimuth is wrapped before any trig, so views 360 degrees apart are
 * bit-identical, not merely close.
 */
export function project(
  p: Vec3,
  cam: Camera,
  target: Vec3,
  viewport: Viewport,
): ScreenPoint {
  const az = (wrapDegrees(cam.azimuthDeg) * Math.PI) / 180;
  const el = (clampElevation(cam.elevationDeg) * Math.PI) / 180;
  const dist = BASE_DISTANCE_MM / cam.zoom;

  const eye: Vec3 = [
    target[0] + dist * Math.cos(el) * Math.sin(az),
    target[1] - dist * Math.cos(el) * Math.cos(az),
    target[2] + dist * Math.sin(el),
  ];

  // Look-at basis with world up +Z; elevation clamp keeps it non-degenerate.
  const f = norm3(sub3(target, eye));
  const r = norm3(cross3(f, [0, 0, 1]));
  const u = cross3(r, f);

  const v = sub3(p, eye);
  const xc = dot3(v, r);
  const yc = dot3(v, u);
  const depth = dot3(v, f);

  const scale = FOCAL * Math.min(viewport.width, viewport.height);
  return {
    x: viewport.width / 2 + (scale * xc) / depth,
    y: viewport.height / 2 - (scale * yc) / depth,
    depth,
  };
}

function sub3(a: Vec3, b: Vec3): Vec3 {
  return [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
}

function dot3(a: Vec3, b: Vec3): number {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

function cross3(a: Vec3, b: Vec3): Vec3 {
  return [
    a[1] * b[2] - a[2] * b[1],
    a[2] * b[0] - a[0] * b[2],
    a[0] * b[1] - a[1] * b[0],
  ];
}

function norm3(a: Vec3): Vec3 {
  const n = Math.hypot(a[0], a[1], a[2]);
  if (n === 0) {
    return [0, 0, 1];
  }
  return [a[0] / n, a[1] / n, a[2] / n];
}
