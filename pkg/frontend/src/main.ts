/** Entry point: boots against the same-origin service, or, with ?demo in
 * the URL, against the recorded in-memory fixture (no server needed). */

import { httpTransport } from "./api.js";
import { boot } from "./app.js";
import { demoTransport } from "./demo.js";

const root = document.getElementById("app");
if (root) {
  const demo = new URLSearchParams(window.location.search).has("demo");
  boot(root, demo ? demoTransport() : httpTransport());
}
