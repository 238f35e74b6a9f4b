/** Browser wiring: DOM, canvas drawing and fetch orchestration.
 *
 * All decisions live in the pure modules; this file moves data between
 * them, the server and the screen. Numbers on screen are the payload's
 * bytes. The only mutating calls are label submit and profile save (the
 * tuner saves its working copy under a scratch profile id).
 */

import { ApiError, ConsoleApi } from "./api.js";
import { Camera, project } from "./camera.js";
import { CATEGORIES, CATEGORY_SHORT, RULE_IDS } from "./constants.js";
import { AssessmentView, assessmentView, withWeight } from "./cues.js";
import { Scene, buildScene, sceneCentre, timelineView } from "./scene.js";
import { GROUP_COLOUR, SEGMENTS } from "./skeleton.js";
import { ReportView, emptyReportView, reportView } from "./session.js";
import {
  Banner,
  EMPTY_DRAFT,
  INITIAL_REPLAY,
  LabelDraft,
  ReplayState,
  canSubmit,
  clearSwingDraft,
  draftFor,
  loadSwing,
  nextSwingId,
  orbitCamera,
  pushBanner,
  scrubTo,
  setPlaying,
  setRate,
  setSelection,
  stepFrame,
  tick,
  toggleRepaired,
  zoomCamera,
} from "./state.js";
import type { FramesDoc, ProfileDoc, SwingSummaryDoc, Vec3 } from "./types.js";

const api = new ConsoleApi("");

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

// ------------------------------------------------------------------- state

let replay: ReplayState = INITIAL_REPLAY;
let draft: LabelDraft = EMPTY_DRAFT;
let banners: readonly Banner[] = [];

let swings: SwingSummaryDoc[] = [];
let framesDoc: FramesDoc | null = null;
let centre: Vec3 = [0, 0, 900];
let serverLabels: Record<string, string> = {};

let profile: ProfileDoc | null = null;
let weights: Record<string, number> = {};
let topK = 3;
let assessment: AssessmentView | null = null;
let missingModelRule: string | null = null;

let report: ReportView | null = null;

// --------------------------------------------------------------- elements

const canvas = el<HTMLCanvasElement>("canvas-replay");
const ctx = canvas.getContext("2d")!;
const timeline = el<HTMLCanvasElement>("timeline");
const tctx = timeline.getContext("2d")!;
const swingSelect = el<HTMLSelectElement>("swing-select");
const frameSlider = el<HTMLInputElement>("frame-slider");
const playButton = el<HTMLButtonElement>("btn-play");
const rateSelect = el<HTMLSelectElement>("rate-select");
const repairedCheck = el<HTMLInputElement>("chk-repaired");
const annotatorInput = el<HTMLInputElement>("annotator-input");
const submitButton = el<HTMLButtonElement>("btn-submit-labels");
const profileInput = el<HTMLInputElement>("profile-input");
const saveProfileButton = el<HTMLButtonElement>("btn-save-profile");
const topkSelect = el<HTMLSelectElement>("topk-select");

function banner(kind: Banner["kind"], text: string): void {
  banners = pushBanner(banners, { kind, text });
  renderBanners();
}

function renderBanners(): void {
  const host = el<HTMLDivElement>("banners");
  host.replaceChildren(
    ...banners.map((b, i) => {
      const div = document.createElement("div");
      div.className = `banner ${b.kind}`;
      div.textContent = b.text;
      div.title = b.text;
      div.onclick = () => {
        banners = banners.filter((_, j) => j !== i);
        renderBanners();
      };
      return div;
    }),
  );
}

// ----------------------------------------------------------------- replay

async function selectSwing(swingId: string): Promise<void> {
  try {
    framesDoc = await api.frames(swingId);
  } catch (e) {
    framesDoc = null;
    banner("error", `frames: ${(e as Error).message}`);
  }
  const count = framesDoc === null ? 0 : framesDoc.repaired.length;
  replay = loadSwing(replay, swingId, count);
  centre = framesDoc === null ? [0, 0, 900] : sceneCentre(framesDoc);
  frameSlider.max = String(Math.max(0, count - 1));
  swingSelect.value = swingId;
  const meta = swings.find((s) => s.id === swingId);
  el<HTMLSpanElement>("swing-meta").textContent =
    meta === undefined ? "" : `${meta.type} · ${meta.frames} frames @ ${meta.rate} Hz`;
  await refreshLabels(swingId);
  renderLabelPanel();
  if (profile !== null) {
    void runAssess();
  }
}

async function refreshLabels(swingId: string): Promise<void> {
  try {
    const doc = await api.getLabels(swingId);
    serverLabels = doc.labels;
  } catch (e) {
    serverLabels = {};
    banner("error", `labels: ${(e as Error).message}`);
  }
}

function moveSwing(step: 1 | -1): void {
  const next = nextSwingId(
    swings.map((s) => s.id),
    replay.swingId,
    step,
  );
  if (next !== null) {
    void selectSwing(next);
  }
}

function drawScene(scene: Scene, cam: Camera): void {
  const vp = { width: canvas.width, height: canvas.height };
  ctx.clearRect(0, 0, vp.width, vp.height);

  // Ground grid on z=0 anchors the orbit visually.
  ctx.strokeStyle = "#1d2430";
  ctx.lineWidth = 1;
  const span = 900;
  const step = 300;
  for (let g = -span; g <= span; g += step) {
    strokeLine([centre[0] + g, centre[1] - span, 0], [centre[0] + g, centre[1] + span, 0], cam, vp);
    strokeLine([centre[0] - span, centre[1] + g, 0], [centre[0] + span, centre[1] + g, 0], cam, vp);
  }
  // Target line: +Y in the lab frame.
  ctx.strokeStyle = "#31425c";
  ctx.lineWidth = 2;
  strokeLine([centre[0], centre[1] - span, 0], [centre[0], centre[1] + span, 0], cam, vp);

  for (const seg of scene.segments) {
    ctx.strokeStyle = GROUP_COLOUR[seg.group];
    ctx.lineWidth = 2;
    ctx.setLineDash(seg.solid ? [] : [4, 4]);
    strokeLine(seg.from, seg.to, cam, vp);
  }
  ctx.setLineDash([]);

  for (const m of scene.markers) {
    const p = project(m.position, cam, centre, vp);
    if (p.depth <= 0) {
      continue;
    }
    ctx.beginPath();
    ctx.arc(p.x, p.y, 4.5, 0, Math.PI * 2);
    if (m.present) {
      ctx.fillStyle = "#e4e9f2";
      ctx.fill();
    } else {
      // Hollow dot: occluded here, drawn at its last-known position.
      ctx.strokeStyle = "#e4e9f2";
      ctx.lineWidth = 1.5;
      ctx.stroke();
    }
  }
}

function strokeLine(a: Vec3, b: Vec3, cam: Camera, vp: { width: number; height: number }): void {
  const pa = project(a, cam, centre, vp);
  const pb = project(b, cam, centre, vp);
  if (pa.depth <= 0 || pb.depth <= 0) {
    return;
  }
  ctx.beginPath();
  ctx.moveTo(pa.x, pa.y);
  ctx.lineTo(pb.x, pb.y);
  ctx.stroke();
}

function drawTimeline(): void {
  const w = timeline.width;
  const h = timeline.height;
  tctx.clearRect(0, 0, w, h);
  tctx.fillStyle = "#1a1f28";
  tctx.fillRect(0, 0, w, h);
  if (framesDoc === null) {
    return;
  }
  const view = timelineView(framesDoc);
  const n = Math.max(1, view.frameCount - 1);
  const toX = (f: number): number => (f / n) * (w - 2) + 1;
  if (view.roi !== null) {
    // Bracket the analysed window and tick its height minimum.
    tctx.fillStyle = "#24405c";
    tctx.fillRect(toX(view.roi.start), 4, toX(view.roi.end) - toX(view.roi.start), h - 8);
    tctx.fillStyle = "#5a8fd4";
    tctx.fillRect(toX(view.roi.min) - 1, 2, 2, h - 4);
  }
  tctx.fillStyle = "#e4e9f2";
  tctx.fillRect(toX(replay.currentFrame) - 1, 0, 2, h);
}

function syncReplayControls(): void {
  frameSlider.value = String(replay.currentFrame);
  playButton.textContent = replay.playing ? "pause" : "play";
  const last = Math.max(0, replay.frameCount - 1);
  el<HTMLSpanElement>("frame-label").textContent =
    replay.frameCount === 0 ? "no frames" : `frame ${replay.currentFrame}/${last}`;
}

let lastTime = performance.now();

function frameLoop(now: number): void {
  const dt = Math.min(0.25, (now - lastTime) / 1000);
  lastTime = now;
  const rate = framesDoc === null ? 50 : framesDoc.rate;
  replay = tick(replay, dt, rate);

  if (framesDoc !== null) {
    const scene = buildScene(framesDoc, replay.currentFrame, replay.showRepaired, SEGMENTS);
    drawScene(scene, replay.camera);
    const bits: string[] = [];
    if (scene.missing.length > 0) {
      bits.push(`occluded (last known): ${scene.missing.join(", ")}`);
    }
    if (scene.absent.length > 0) {
      bits.push(`absent: ${scene.absent.join(", ")}`);
    }
    el<HTMLDivElement>("replay-status").textContent = bits.join(" · ");
  } else {
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    ctx.fillStyle = "#5a6272";
    ctx.font = "14px sans-serif";
    ctx.fillText("no swing loaded", 20, 30);
  }
  drawTimeline();
  syncReplayControls();
  requestAnimationFrame(frameLoop);
}

// ------------------------------------------------------------ label panel

function renderLabelPanel(): void {
  const host = el<HTMLDivElement>("labels-rules");
  const swingId = replay.swingId;
  host.replaceChildren(
    ...RULE_IDS.map((ruleId) => {
      const row = document.createElement("div");
      row.className = "rule-row";
      const name = document.createElement("div");
      name.className = "rule-name";
      name.textContent = ruleId;
      const stored = serverLabels[ruleId];
      const sub = document.createElement("div");
      sub.className = "server-label";
      sub.textContent = stored === undefined ? "unlabelled" : `stored: ${stored}`;
      name.appendChild(document.createElement("br"));
      name.appendChild(sub);

      const buttons = document.createElement("div");
      buttons.className = "cat-buttons";
      const picked = swingId === null ? undefined : draftFor(draft, swingId)[ruleId];
      for (const cat of CATEGORIES) {
        const b = document.createElement("button");
        b.textContent = CATEGORY_SHORT[cat];
        if (picked === cat) {
          b.className = "picked";
        }
        b.onclick = () => {
          if (replay.swingId === null) {
            return;
          }
          draft =
            picked === cat
              ? clearSwingRule(draft, replay.swingId, ruleId)
              : setSelection(draft, replay.swingId, ruleId, cat);
          renderLabelPanel();
        };
        buttons.appendChild(b);
      }
      row.append(name, buttons);
      return row;
    }),
  );
  submitButton.disabled = swingId === null || !canSubmit(draft, swingId);
  el<HTMLSpanElement>("labels-status").textContent = "";
}

function clearSwingRule(d: LabelDraft, swingId: string, ruleId: string): LabelDraft {
  // Toggling an already-picked category clears that single rule.
  const rest = draftFor(d, swingId);
  delete rest[ruleId];
  let next = clearSwingDraft(d, swingId);
  for (const [r, c] of Object.entries(rest)) {
    next = setSelection(next, swingId, r, c);
  }
  return next;
}

async function submitLabels(): Promise<void> {
  const swingId = replay.swingId;
  if (swingId === null || !canSubmit(draft, swingId)) {
    return;
  }
  // PUT replaces the stored set, so merge the draft over what is stored.
  const merged: Record<string, string> = { ...serverLabels, ...draftFor(draft, swingId) };
  try {
    const doc = await api.putLabels(swingId, merged, annotatorInput.value || "coach");
    serverLabels = doc.labels;
    draft = clearSwingDraft(draft, swingId);
    renderLabelPanel();
    el<HTMLSpanElement>("labels-status").textContent = `saved by ${doc.annotator}`;
  } catch (e) {
    // Draft stays; the server's message explains the rejection.
    const msg = e instanceof ApiError ? `${e.errorName}: ${e.message}` : (e as Error).message;
    banner("error", `labels rejected, draft kept: ${msg}`);
    renderLabelPanel();
    el<HTMLSpanElement>("labels-status").textContent = "rejected, draft kept";
  }
}

// ------------------------------------------------------------ weight tuner

function scratchProfileId(profileId: string): string {
  // Slider changes assess under this working copy; save writes the real id.
  return `${profileId}~tuning`;
}

async function loadProfile(): Promise<void> {
  const pid = profileInput.value.trim();
  if (pid === "") {
    return;
  }
  try {
    profile = await api.getProfile(pid);
    weights = { ...profile.weights };
    banner("info", `profile ${pid} loaded`);
  } catch (e) {
    if (e instanceof ApiError && e.status === 404) {
      profile = { profile_id: pid, skill_level: "club", scenario: "rally", weights: {} };
      weights = Object.fromEntries(RULE_IDS.map((r) => [r, 1.0]));
      banner("info", `profile ${pid} is new; starting from equal weights`);
    } else {
      banner("error", `profile: ${(e as Error).message}`);
      return;
    }
  }
  for (const r of RULE_IDS) {
    weights[r] = weights[r] ?? 0.0;
  }
  saveProfileButton.disabled = false;
  renderTuner();
  await runAssess();
}

function renderTuner(): void {
  const host = el<HTMLDivElement>("tuner-sliders");
  host.replaceChildren(
    ...RULE_IDS.map((ruleId) => {
      const row = document.createElement("div");
      row.className = "slider-row" + (ruleId === missingModelRule ? " missing-model" : "");
      const name = document.createElement("div");
      name.className = "rule-name";
      name.textContent = ruleId + (ruleId === missingModelRule ? " (needs training)" : "");
      const slider = document.createElement("input");
      slider.type = "range";
      slider.min = "0";
      slider.max = "1";
      slider.step = "0.05";
      slider.value = String(weights[ruleId] ?? 0);
      const val = document.createElement("div");
      val.className = "weight-val";
      val.textContent = (weights[ruleId] ?? 0).toFixed(2);
      slider.oninput = () => {
        weights = withWeight(weights, ruleId, Number(slider.value));
        val.textContent = (weights[ruleId] ?? 0).toFixed(2);
        scheduleAssess();
      };
      row.append(name, slider, val);
      return row;
    }),
  );
  if (topkSelect.options.length === 0) {
    for (let k = 1; k <= RULE_IDS.length; k++) {
      const opt = document.createElement("option");
      opt.value = String(k);
      opt.textContent = String(k);
      topkSelect.appendChild(opt);
    }
    topkSelect.value = String(topK);
  }
}

let assessTimer: ReturnType<typeof setTimeout> | null = null;

function scheduleAssess(): void {
  if (assessTimer !== null) {
    clearTimeout(assessTimer);
  }
  assessTimer = setTimeout(() => {
    assessTimer = null;
    void runAssess();
  }, 160);
}

async function runAssess(): Promise<void> {
  const swingId = replay.swingId;
  if (swingId === null || profile === null) {
    return;
  }
  const pid = scratchProfileId(profile.profile_id);
  try {
    await api.putProfile(pid, profile.skill_level, profile.scenario, weights);
    const { doc, raw } = await api.assess(swingId, pid, topK);
    assessment = assessmentView(doc, raw);
    missingModelRule = null;
  } catch (e) {
    assessment = null;
    if (e instanceof ApiError && e.errorName === "MissingModel") {
      const m = /'([^']+)'/.exec(e.message);
      missingModelRule = m?.[1] ?? null;
      banner("error", `assess: ${e.message}`);
    } else {
      banner("error", `assess: ${(e as Error).message}`);
    }
  }
  renderTuner();
  renderAssessment();
}

function renderAssessment(): void {
  const zHost = el<HTMLSpanElement>("assess-z");
  const cueHost = el<HTMLDivElement>("assess-cues");
  const notHost = el<HTMLDivElement>("assess-not");
  if (assessment === null) {
    zHost.textContent = "—";
    el<HTMLSpanElement>("assess-meta").textContent = "";
    cueHost.replaceChildren();
    notHost.textContent = "";
    return;
  }
  zHost.textContent = assessment.zText;
  el<HTMLSpanElement>("assess-meta").textContent =
    `swing ${assessment.swingId} · worst first, top ${topK}`;
  cueHost.replaceChildren(
    ...assessment.cues.map((c) => {
      const div = document.createElement("div");
      div.className = "cue";
      div.style.borderLeftColor = c.colourHex;
      const rank = document.createElement("span");
      rank.className = "rank";
      rank.textContent = `${c.rank}.`;
      const text = document.createElement("span");
      text.textContent = c.cueText;
      const meta = document.createElement("span");
      meta.className = "meta";
      meta.textContent = `${c.ruleId} · ${c.colour} · score ${c.scoreText} · act ${c.activationText}`;
      div.append(rank, text, meta);
      return div;
    }),
  );
  notHost.textContent =
    assessment.notAssessed.length === 0
      ? ""
      : "not assessed: " +
        assessment.notAssessed.map((n) => `${n.ruleId} (${n.reason})`).join(", ");
}

async function saveProfile(): Promise<void> {
  if (profile === null) {
    return;
  }
  try {
    profile = await api.putProfile(
      profile.profile_id,
      profile.skill_level,
      profile.scenario,
      weights,
    );
    banner("info", `profile ${profile.profile_id} saved`);
  } catch (e) {
    banner("error", `save profile: ${(e as Error).message}`);
  }
}

// ------------------------------------------------------------ session view

async function loadSession(): Promise<void> {
  const sid = el<HTMLInputElement>("session-input").value.trim();
  if (sid === "") {
    return;
  }
  try {
    const { doc, raw } = await api.report(sid);
    report = doc.swings_assessed === 0
      ? emptyReportView(sid, "no swings were assessed in this session")
      : reportView(doc, raw);
  } catch (e) {
    const msg = e instanceof ApiError ? e.message : (e as Error).message;
    report = emptyReportView(sid, msg);
  }
  renderSession();
}

function renderSession(): void {
  const summary = el<HTMLDivElement>("session-summary");
  const table = el<HTMLDivElement>("session-table");
  const chart = el<HTMLCanvasElement>("session-chart");
  const cctx = chart.getContext("2d")!;
  cctx.clearRect(0, 0, chart.width, chart.height);
  if (report === null) {
    summary.textContent = "";
    table.replaceChildren();
    return;
  }
  if (report.empty) {
    summary.textContent = "";
    table.replaceChildren(emptyState(`session ${report.sessionId}: ${report.emptyReason}`));
    return;
  }
  summary.textContent =
    `session ${report.sessionId} · ${report.swingsAssessed} swings · ` +
    `worst rule: ${report.worstRule}`;

  // Z per swing, in assessment order; values are 0..1 by construction.
  const w = chart.width;
  const h = chart.height;
  cctx.fillStyle = "#1a1f28";
  cctx.fillRect(0, 0, w, h);
  const n = report.zSeries.length;
  cctx.strokeStyle = "#5a8fd4";
  cctx.lineWidth = 1.5;
  cctx.beginPath();
  report.zSeries.forEach((z, i) => {
    const x = n === 1 ? w / 2 : 4 + (i / (n - 1)) * (w - 8);
    const y = h - 6 - z * (h - 12);
    if (i === 0) {
      cctx.moveTo(x, y);
    } else {
      cctx.lineTo(x, y);
    }
  });
  cctx.stroke();
  cctx.fillStyle = "#e4e9f2";
  report.zSeries.forEach((z, i) => {
    const x = n === 1 ? w / 2 : 4 + (i / (n - 1)) * (w - 8);
    const y = h - 6 - z * (h - 12);
    cctx.fillRect(x - 1.5, y - 1.5, 3, 3);
  });

  const tbl = document.createElement("table");
  const head = document.createElement("tr");
  for (const text of ["rule", "bad", "avg", "v.good", "mean", "assessed"]) {
    const th = document.createElement("th");
    th.textContent = text;
    head.appendChild(th);
  }
  tbl.appendChild(head);
  for (const row of report.rows) {
    const tr = document.createElement("tr");
    if (row.worst) {
      tr.className = "worst";
    }
    const cells = [
      row.ruleId + (row.worst ? " ★" : ""),
      String(row.counts["bad"] ?? 0),
      String(row.counts["average"] ?? 0),
      String(row.counts["very_good"] ?? 0),
      row.meanText,
      String(row.assessed),
    ];
    for (const text of cells) {
      const td = document.createElement("td");
      td.textContent = text;
      tr.appendChild(td);
    }
    tbl.appendChild(tr);
  }
  table.replaceChildren(tbl);
}

function emptyState(text: string): HTMLDivElement {
  const div = document.createElement("div");
  div.className = "empty-state";
  div.textContent = text;
  return div;
}

// ------------------------------------------------------------------- tabs

function showTab(which: "labels" | "tuner" | "session"): void {
  for (const name of ["labels", "tuner", "session"] as const) {
    el<HTMLButtonElement>(`tab-${name}`).classList.toggle("active", name === which);
    el<HTMLDivElement>(`panel-${name}`).classList.toggle("hidden", name !== which);
  }
}

// ------------------------------------------------------------------ wiring

function wire(): void {
  swingSelect.onchange = () => void selectSwing(swingSelect.value);
  el<HTMLButtonElement>("btn-prev").onclick = () => moveSwing(-1);
  el<HTMLButtonElement>("btn-next").onclick = () => moveSwing(1);
  playButton.onclick = () => {
    replay = setPlaying(replay, !replay.playing);
  };
  el<HTMLButtonElement>("btn-step-back").onclick = () => {
    replay = stepFrame(replay, -1);
  };
  el<HTMLButtonElement>("btn-step-fwd").onclick = () => {
    replay = stepFrame(replay, 1);
  };
  rateSelect.onchange = () => {
    replay = setRate(replay, Number(rateSelect.value));
  };
  repairedCheck.onchange = () => {
    replay = toggleRepaired(replay);
  };
  frameSlider.oninput = () => {
    replay = setPlaying(scrubTo(replay, Number(frameSlider.value)), false);
  };

  canvas.onpointerdown = (ev) => {
    canvas.setPointerCapture(ev.pointerId);
    let lastX = ev.clientX;
    let lastY = ev.clientY;
    const move = (mv: PointerEvent) => {
      replay = orbitCamera(replay, (mv.clientX - lastX) * 0.45, (mv.clientY - lastY) * 0.3);
      lastX = mv.clientX;
      lastY = mv.clientY;
    };
    const up = () => {
      canvas.removeEventListener("pointermove", move);
      canvas.removeEventListener("pointerup", up);
    };
    canvas.addEventListener("pointermove", move);
    canvas.addEventListener("pointerup", up);
  };
  canvas.onwheel = (ev) => {
    ev.preventDefault();
    replay = zoomCamera(replay, ev.deltaY < 0 ? 1.12 : 1 / 1.12);
  };
  timeline.onclick = (ev) => {
    if (framesDoc === null) {
      return;
    }
    const rect = timeline.getBoundingClientRect();
    const frac = (ev.clientX - rect.left) / rect.width;
    replay = scrubTo(replay, Math.round(frac * (replay.frameCount - 1)));
  };

  document.addEventListener("keydown", (ev) => {
    const target = ev.target as HTMLElement;
    if (["INPUT", "SELECT", "TEXTAREA"].includes(target.tagName)) {
      return;
    }
    if (ev.key === " ") {
      ev.preventDefault();
      replay = setPlaying(replay, !replay.playing);
    } else if (ev.key === "ArrowLeft") {
      replay = stepFrame(replay, -1);
    } else if (ev.key === "ArrowRight") {
      replay = stepFrame(replay, 1);
    } else if (ev.key === "n") {
      moveSwing(1);
    } else if (ev.key === "p") {
      moveSwing(-1);
    }
  });

  submitButton.onclick = () => void submitLabels();
  el<HTMLButtonElement>("btn-load-profile").onclick = () => void loadProfile();
  saveProfileButton.onclick = () => void saveProfile();
  topkSelect.onchange = () => {
    topK = Number(topkSelect.value);
    void runAssess();
  };
  el<HTMLButtonElement>("btn-load-session").onclick = () => void loadSession();

  el<HTMLButtonElement>("tab-labels").onclick = () => showTab("labels");
  el<HTMLButtonElement>("tab-tuner").onclick = () => showTab("tuner");
  el<HTMLButtonElement>("tab-session").onclick = () => showTab("session");
}

async function boot(): Promise<void> {
  wire();
  try {
    swings = await api.listSwings();
  } catch (e) {
    banner("error", `cannot reach the service: ${(e as Error).message}`);
    swings = [];
  }
  swingSelect.replaceChildren(
    ...swings.map((s) => {
      const opt = document.createElement("option");
      opt.value = s.id;
      opt.textContent = s.id;
      return opt;
    }),
  );
  renderLabelPanel();
  const first = swings[0];
  if (first !== undefined) {
    await selectSwing(first.id);
  }
  requestAnimationFrame(frameLoop);
}

void boot();
