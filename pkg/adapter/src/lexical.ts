/**
 * Deterministic fallback scorer: token overlap between the file text and each
 * stage description. No model weights, no network, still useful ordering
 * (a training loop scores closer to the training description than to the
 * data-collection one). Scores are cosine similarities over token sets,
 * always in [0, 1].
 */

import type { ScoreRequest, ScoreResponse, Scorer } from "./types.js";

export const LEXICAL_MODEL_ID = "lexical-overlap-v1";

/** Character window applied before tokenizing; long files are flagged. */
export const TEXT_WINDOW = 100_000;

function splitIdentifier(raw: string): string[] {
  // snake_case and camelCase both flatten into word runs.
  return raw
    .replace(/([a-z0-9])([A-Z])/g, "$1 $2")
    .split(/[^A-Za-z0-9]+/)
    .filter((w) => w.length >= 2)
    .map((w) => w.toLowerCase());
}

function stems(word: string): string[] {
  const out = new Set<string>([word]);
  if (word.length > 4 && word.endsWith("ing")) out.add(word.slice(0, -3));
  if (word.length > 3 && word.endsWith("ed")) out.add(word.slice(0, -2));
  if (word.length > 3 && word.endsWith("s")) out.add(word.slice(0, -1));
  return [...out];
}

export function tokenize(text: string): Set<string> {
  const tokens = new Set<string>();
  for (const word of splitIdentifier(text)) {
    for (const stem of stems(word)) tokens.add(stem);
  }
  return tokens;
}

function cosine(a: Set<string>, b: Set<string>): number {
  if (a.size === 0 || b.size === 0) return 0;
  let shared = 0;
  for (const token of a) if (b.has(token)) shared += 1;
  return shared / Math.sqrt(a.size * b.size);
}

export class LexicalScorer implements Scorer {
  modelId(): string {
    return LEXICAL_MODEL_ID;
  }

  async score(request: ScoreRequest): Promise<ScoreResponse> {
    const truncated = request.file_text.length > TEXT_WINDOW;
    const fileTokens = tokenize(request.file_text.slice(0, TEXT_WINDOW));
    const scores: Record<string, number> = {};
    for (const stage of request.stages) {
      const stageTokens = tokenize(`${stage.name} ${stage.description}`);
      scores[stage.name] = cosine(fileTokens, stageTokens);
    }
    return { scores, model_id: this.modelId(), truncated };
  }
}
