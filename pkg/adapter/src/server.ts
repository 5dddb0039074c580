import express, { type Express } from "express";

import { ModelUnavailable } from "./nli.js";
import { ScoreRequestSchema, type Scorer } from "./types.js";

export function buildApp(scorer: Scorer): Express {
  const app = express();
  app.use(express.json({ limit: "10mb" }));

  app.get("/health", (_req, res) => {
    res.json({ model_id: scorer.modelId() });
  });

  app.post("/classify", async (req, res) => {
    const parsed = ScoreRequestSchema.safeParse(req.body);
    if (!parsed.success) {
      res.status(400).json({ error: parsed.error.message });
      return;
    }
    try {
      res.json(await scorer.score(parsed.data));
    } catch (err) {
      if (err instanceof ModelUnavailable) {
        res.status(503).json({ error: `model unavailable: ${err.message}` });
      } else {
        res.status(500).json({ error: String(err) });
      }
    }
  });

  return app;
}
