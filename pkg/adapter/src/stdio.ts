/**
 * Pipeline mode: one JSON ScoreRequest per stdin line, one JSON response per
 * stdout line (errors come back as {"error": ...} on the same line slot).
 */

import readline from "node:readline";

import { ScoreRequestSchema, type Scorer } from "./types.js";

export async function runStdio(
  scorer: Scorer,
  input: NodeJS.ReadableStream = process.stdin,
  output: NodeJS.WritableStream = process.stdout,
): Promise<void> {
  const lines = readline.createInterface({ input, terminal: false });
  for await (const line of lines) {
    if (!line.trim()) continue;
    let reply: unknown;
    try {
      const parsed = ScoreRequestSchema.safeParse(JSON.parse(line));
      reply = parsed.success
        ? await scorer.score(parsed.data)
        : { error: parsed.error.message };
    } catch (err) {
      reply = { error: String(err) };
    }
    output.write(JSON.stringify(reply) + "\n");
  }
}
