/**
 * Backend selection. ADAPTER_BACKEND:
 *   - "lexical": always the deterministic overlap scorer.
 *   - "nli":     the zero-shot model; requests fail 503 while unavailable.
 *   - "auto" (default): try NLI once, fall back to lexical permanently.
 */

import { LexicalScorer } from "./lexical.js";
import { DEFAULT_MODEL_ID, ModelUnavailable, NliScorer } from "./nli.js";
import type { ScoreRequest, ScoreResponse, Scorer } from "./types.js";

export type BackendMode = "auto" | "nli" | "lexical";

export class SelectingScorer implements Scorer {
  private active: Scorer;
  private nli: NliScorer | null;

  constructor(mode: BackendMode = "auto", modelId: string = DEFAULT_MODEL_ID) {
    this.nli = mode === "lexical" ? null : new NliScorer(modelId);
    this.active = mode === "lexical" ? new LexicalScorer() : this.nli!;
    this.mode = mode;
  }

  private readonly mode: BackendMode;

  modelId(): string {
    return this.active.modelId();
  }

  async score(request: ScoreRequest): Promise<ScoreResponse> {
    try {
      return await this.active.score(request);
    } catch (err) {
      if (this.mode === "auto" && err instanceof ModelUnavailable && this.nli) {
        console.error(`[adapter] NLI backend unavailable, using lexical scorer: ${err.message}`);
        this.nli = null;
        this.active = new LexicalScorer();
        return this.active.score(request);
      }
      throw err;
    }
  }
}

export function scorerFromEnv(env: NodeJS.ProcessEnv = process.env): SelectingScorer {
  const mode = (env.ADAPTER_BACKEND ?? "auto") as BackendMode;
  if (!["auto", "nli", "lexical"].includes(mode)) {
    throw new Error(`ADAPTER_BACKEND must be auto|nli|lexical, got ${mode}`);
  }
  return new SelectingScorer(mode, env.MODEL_ID ?? DEFAULT_MODEL_ID);
}
