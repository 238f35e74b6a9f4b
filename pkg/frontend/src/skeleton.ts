/** Skeleton segment list, console-side configuration.
 *
 * Pairs name markers from the default lab vocabulary; segments whose
 * endpoints a capture does not carry are simply dropped, so alternative
 * marker sets degrade to dots instead of failing.
 */

export type SegmentGroup = "torso" | "arm" | "leg" | "racquet";

export interface SegmentSpec {
  from: string;
  to: string;
  group: SegmentGroup;
}

function seg(from: string, to: string, group: SegmentGroup): SegmentSpec {
  return { from, to, group };
}

export const SEGMENTS: readonly SegmentSpec[] = [
  seg("HEAD", "C7", "torso"),
  seg("C7", "STRN", "torso"),
  seg("C7", "PSHO", "torso"),
  seg("C7", "SSHO", "torso"),
  seg("STRN", "PSGT", "torso"),
  seg("STRN", "SSGT", "torso"),
  seg("PSGT", "SSGT", "torso"),

  seg("PSHO", "PSEL", "arm"),
  seg("PSEL", "PSFA", "arm"),
  seg("PSFA", "PSHD", "arm"),
  seg("SSHO", "SSEL", "arm"),
  seg("SSEL", "SSHD", "arm"),

  seg("PSGT", "PSKN", "leg"),
  seg("PSKN", "PSAN", "leg"),
  seg("PSAN", "PSHL", "leg"),
  seg("PSHL", "PSTOE", "leg"),
  seg("SSGT", "SSKN", "leg"),
  seg("SSKN", "SSAN", "leg"),
  seg("SSAN", "SSHL", "leg"),
  seg("SSHL", "SSTOE", "leg"),

  seg("PSHD", "RACB", "racquet"),
  seg("RACB", "RACT", "racquet"),
];

export const GROUP_COLOUR: Record<SegmentGroup, string> = {
  torso: "#5a7d9a",
  arm: "#7a5a9a",
  leg: "#5a9a7d",
  racquet: "#b07840",
};
