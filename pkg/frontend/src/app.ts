// Page bootstrap: wire the controller to the DOM and the session API.
// The API base defaults to the origin serving the page, so
// `gentzen serve --ui-dir frontend/dist` works with zero configuration.

import { HttpApi } from "./api.js";
import { Controller } from "./controller.js";
import { render } from "./render.js";
import type { RuleView } from "./model.js";

const params = new URLSearchParams(window.location.search);
const base = params.get("api") ?? window.location.origin;
const locale = params.get("locale") ?? undefined;

const api = new HttpApi(base);
const controller = new Controller(api);

const mount = document.getElementById("app")!;
let rules: RuleView[] = [];

controller.onChange(() => render(controller, mount, rules));

const form = document.getElementById("new-proof") as HTMLFormElement;
const input = document.getElementById("sequent-input") as HTMLInputElement;
form.addEventListener("submit", (event) => {
  event.preventDefault();
  void controller.newSession(input.value, locale);
});

const fileInput = document.getElementById("proof-file") as HTMLInputElement;
fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  void controller.loadFile(JSON.parse(await file.text()), locale);
});

const saveButton = document.getElementById("save-proof") as HTMLButtonElement;
saveButton.addEventListener("click", async () => {
  if (!controller.state) return;
  const doc = await api.getFile(controller.state.sessionId);
  const blob = new Blob([JSON.stringify(doc, null, 2)], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = "proof.json";
  link.click();
  URL.revokeObjectURL(link.href);
});

const svgButton = document.getElementById("export-svg") as HTMLButtonElement;
svgButton.addEventListener("click", () => {
  if (!controller.state) return;
  window.open(api.exportUrl(controller.state.sessionId, "svg"), "_blank");
});

api
  .rules(locale)
  .then((loaded) => {
    rules = loaded;
    render(controller, mount, rules);
  })
  .catch((err) => {
    mount.textContent = `cannot reach the proof service at ${base}: ${err}`;
  });
