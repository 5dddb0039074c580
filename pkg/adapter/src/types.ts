import { z } from "zod";

export const StageSchema = z.object({
  name: z.string().min(1),
  description: z.string(),
});

export const ScoreRequestSchema = z
  .object({
    file_text: z.string(),
    stages: z.array(StageSchema).min(1),
  })
  .refine(
    (req) => new Set(req.stages.map((s) => s.name)).size === req.stages.length,
    { message: "stage names must be unique" },
  );

export type Stage = z.infer<typeof StageSchema>;
export type ScoreRequest = z.infer<typeof ScoreRequestSchema>;

export interface ScoreResponse {
  scores: Record<string, number>;
  model_id: string;
  truncated: boolean;
}

export interface Scorer {
  modelId(): string;
  score(request: ScoreRequest): Promise<ScoreResponse>;
}
