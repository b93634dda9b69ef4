/** Browser entry point: mount on #app against the serving origin. */

import { ApiClient } from "./api.js";
import { startApp } from "./main.js";

const root = document.getElementById("app");
if (root !== null) {
  void startApp(root, new ApiClient(""));
}
