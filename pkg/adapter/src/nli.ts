/**
 * Zero-shot NLI backend. Loads a text-classification pipeline lazily from
 * @xenova/transformers when that package and the model weights are present;
 * anything missing raises ModelUnavailable so the caller can fall back.
 *
 * Install separately to enable: `npm install @xenova/transformers`, then set
 * MODEL_ID to the checkpoint id or a local path.
 */

import type { ScoreRequest, ScoreResponse, Scorer } from "./types.js";

export const DEFAULT_MODEL_ID = "facebook/bart-large-mnli";

/** Token-ish window: NLI checkpoints truncate around 1024 tokens anyway. */
const NLI_TEXT_WINDOW = 4_000;

export class ModelUnavailable extends Error {}

export class NliScorer implements Scorer {
  private pipelinePromise: Promise<any> | null = null;

  constructor(private readonly model: string = DEFAULT_MODEL_ID) {}

  modelId(): string {
    return this.model;
  }

  private async pipeline(): Promise<any> {
    if (!this.pipelinePromise) {
      this.pipelinePromise = (async () => {
        let transformers: any;
        try {
          transformers = await import("@xenova/transformers" as string);
        } catch (err) {
          throw new ModelUnavailable(`@xenova/transformers not installed: ${err}`);
        }
        try {
          return await transformers.pipeline("zero-shot-classification", this.model);
        } catch (err) {
          throw new ModelUnavailable(`cannot load model ${this.model}: ${err}`);
        }
      })();
    }
    return this.pipelinePromise;
  }

  async score(request: ScoreRequest): Promise<ScoreResponse> {
    const classify = await this.pipeline();
    const truncated = request.file_text.length > NLI_TEXT_WINDOW;
    const text = request.file_text.slice(0, NLI_TEXT_WINDOW) || " ";
    const labels = request.stages.map((s) => s.name);
    const byName = new Map(request.stages.map((s) => [s.name, s.description]));
    const result = await classify(text, labels, {
      hypothesis_template: "This code is about {}.",
      multi_label: true,
    });
    const scores: Record<string, number> = {};
    result.labels.forEach((label: string, i: number) => {
      scores[label] = result.scores[i];
    });
    // Every requested stage must be present even if the model dropped one.
    for (const name of byName.keys()) {
      if (!(name in scores)) scores[name] = 0;
    }
    return { scores, model_id: this.model, truncated };
  }
}
