/** Verbatim number tokens out of a JSON document.
 *
 * The console displays every number exactly as the service wrote it.
 * `JSON.parse` discards source text (String(1.0) is "1", the payload says
 * "1.0"), so this walks the raw bytes once and maps each number token to
 * its JSON Pointer. Values still come from `JSON.parse`; only display
 * strings are looked up here.
 */

const NUMBER_RE = /-?(?:0|[1-9]\d*)(?:\.\d+)?(?:[eE][+-]?\d+)?/y;

interface ObjFrame {
  kind: "obj";
  key: string | null;
}

interface ArrFrame {
  kind: "arr";
  index: number;
}

type Frame = ObjFrame | ArrFrame;

/** RFC 6901 segment escaping: "~" then "/". */
export function escapePointerSegment(seg: string): string {
  return seg.replace(/~/g, "~0").replace(/\//g, "~1");
}

/** Decode one string literal starting at its opening quote.
 *
 * Returns the decoded text and the index just past the closing quote.
 * Unterminated input ends the scan at end of text.
 */
function scanString(raw: string, start: number): [string, number] {
  let i = start + 1;
  let text = "";
  while (i < raw.length) {
    const c = raw[i]!;
    if (c === '"') {
      return [text, i + 1];
    }
    if (c === "\\") {
      const e = raw[i + 1];
      switch (e) {
        case '"':
        case "\\":
        case "/":
          text += e;
          i += 2;
          break;
        case "b":
          text += "\b";
          i += 2;
          break;
        case "f":
          text += "\f";
          i += 2;
          break;
        case "n":
          text += "\n";
          i += 2;
          break;
        case "r":
          text += "\r";
          i += 2;
          break;
        case "t":
          text += "\t";
          i += 2;
          break;
        case "u":
          text += String.fromCharCode(parseInt(raw.slice(i + 2, i + 6), 16));
          i += 6;
          break;
        default:
          i += 2;
      }
    } else {
      text += c;
      i += 1;
    }
  }
  return [text, i];
}

/** Map JSON Pointer -> exact number token for every number in `raw`.
 *
 * A top-level bare number gets pointer "". String contents never leak
 * into the structure walk, so a cue text containing '"z": 1' is inert.
 */
export function numberTexts(raw: string): Map<string, string> {
  const out = new Map<string, string>();
  const stack: Frame[] = [];
  let pendingKey = false;
  let i = 0;

  const pointer = (): string =>
    stack
      .map((f) =>
        f.kind === "obj"
          ? "/" + escapePointerSegment(f.key ?? "")
          : "/" + String(f.index),
      )
      .join("");

  while (i < raw.length) {
    const ch = raw[i]!;
    if (ch === '"') {
      const [text, end] = scanString(raw, i);
      const top = stack[stack.length - 1];
      if (top !== undefined && top.kind === "obj" && pendingKey) {
        top.key = text;
        pendingKey = false;
      }
      i = end;
    } else if (ch === "{") {
      stack.push({ kind: "obj", key: null });
      pendingKey = true;
      i += 1;
    } else if (ch === "}" || ch === "]") {
      stack.pop();
      i += 1;
    } else if (ch === "[") {
      stack.push({ kind: "arr", index: 0 });
      i += 1;
    } else if (ch === ",") {
      const top = stack[stack.length - 1];
      if (top !== undefined) {
        if (top.kind === "arr") {
          top.index += 1;
        } else {
          pendingKey = true;
        }
      }
      i += 1;
    } else if (ch === "-" || (ch >= "0" && ch <= "9")) {
      NUMBER_RE.lastIndex = i;
      const m = NUMBER_RE.exec(raw);
      if (m !== null && m[0].length > 0) {
        out.set(pointer(), m[0]);
        i += m[0].length;
      } else {
        i += 1;
      }
    } else {
      i += 1;
    }
  }
  return out;
}

/** Token at `pointer`, falling back to String(value) for synthetic docs. */
export function numberTextAt(
  texts: Map<string, string>,
  pointer: string,
  value: number,
): string {
  return texts.get(pointer) ?? String(value);
}
