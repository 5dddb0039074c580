import { scorerFromEnv } from "./scorer.js";
import { buildApp } from "./server.js";
import { runStdio } from "./stdio.js";

const scorer = scorerFromEnv();

if (process.argv.includes("--stdio")) {
  runStdio(scorer).catch((err) => {
    console.error("[adapter] fatal:", err);
    process.exit(1);
  });
} else {
  const port = Number(process.env.PORT ?? 8750);
  const server = buildApp(scorer).listen(port, () => {
    console.error(`[adapter] listening on :${port} (model ${scorer.modelId()})`);
  });
  for (const signal of ["SIGINT", "SIGTERM"] as const) {
    process.on(signal, () => server.close(() => process.exit(0)));
  }
}
