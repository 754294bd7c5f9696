// Browser entry point. The API origin defaults to same-origin and can be
// overridden for development with ?api=http://127.0.0.1:8000.

import { HttpApi } from "./api.js";
import { createApp } from "./app.js";

const base = new URLSearchParams(location.search).get("api") ?? "";
const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app mount point");
}
createApp(root, new HttpApi(base));
