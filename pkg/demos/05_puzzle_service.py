"""
The puzzle HTTP service
=======================

`warpmat serve` exposes puzzles over HTTP for interactive clients.  This
demo boots the app on a local port, plays a session with plain urllib,
and shuts it down again.
"""

import json
import threading
import time
import urllib.request

import uvicorn

from warpmat.service import create_app

PORT = 8941
BASE = f"http://127.0.0.1:{PORT}"


def post(path, payload):
    request = urllib.request.Request(
        BASE + path,
        data=json.dumps(payload).encode(),
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    with urllib.request.urlopen(request) as response:
        return json.load(response)


# Run the service in a background thread (the CLI equivalent is
# `warpmat serve --port 8941`).
server = uvicorn.Server(uvicorn.Config(create_app(), port=PORT, log_level="error"))
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)

# A new session returns the clue grid; the solution stays on the server.
session = post("/puzzle/new", {"knot": "trefoil"})
sid = session["session_id"]
cells = session["grid"]["cells"]
print("session", sid, "with", sum(v is not None for row in cells for v in row), "clues")

# The client owns the working grid and posts it back for judgement.
verdict = post(f"/puzzle/{sid}/validate", {"cells": cells})
print("clues are clean:", verdict["violations"] == [], "- solved yet:", verdict["solved"])

# Asking for hints one cell at a time eventually completes the grid.
while any(v is None for row in cells for v in row):
    hint = post(f"/puzzle/{sid}/hint", {"cells": cells})
    cells[hint["row"]][hint["col"]] = hint["digit"]

final = post(f"/puzzle/{sid}/validate", {"cells": cells})
print("after filling every hint:")
print("  solved:", final["solved"])
print("  matches the stored solution:", final["matches_solution"])
print("  satisfies all four laws:", final["satisfies_all_rules"])

server.should_exit = True
thread.join(timeout=5)
print("server stopped")
