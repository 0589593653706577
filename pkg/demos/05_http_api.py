"""The full request flow against a live server: expand, pick a candidate,
explore, list scholars.

Run:  python demos/05_http_api.py
"""

import os
import sys
import threading
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

import requests
import uvicorn

from scholarviz import ServiceConfig
from scholarviz.service import create_app

HERE = os.path.dirname(__file__)
config = ServiceConfig(
    taxonomy_path=os.path.join(HERE, "..", "data", "taxonomy.jsonl"),
    scholars_path=os.path.join(HERE, "..", "data", "scholars.jsonl"),
    port=8041,
)
server = uvicorn.Server(
    uvicorn.Config(create_app(config), host="127.0.0.1", port=config.port, log_level="error")
)
threading.Thread(target=server.run, daemon=True).start()
base = f"http://127.0.0.1:{config.port}"
while True:
    try:
        requests.get(f"{base}/healthz", timeout=1)
        break
    except requests.ConnectionError:
        time.sleep(0.05)

# 1. The query bar: an abbreviation comes back as candidates.
expand = requests.get(f"{base}/api/expand", params={"q": "AI"}).json()
print("expand 'AI' ->", expand["kind"])
for candidate in expand["expansions"]:
    print("   candidate:", candidate["label"], "->", candidate["concept_id"])

# 2. The user picks one circle in the expand panel.
choice = expand["expansions"][0]
session = requests.post(
    f"{base}/api/session", json={"concept_id": choice["concept_id"], "mode": "radial"}
).json()
sid = session["session_id"]
print(f"\nsession {sid[:8]}… focused on {session['snapshot']['focus']}")
print("   nodes:", [n["label"] for n in session["snapshot"]["nodes"]])

# 3. Click a broader concept to expand it; the server answers with the new
#    snapshot plus freshly computed coordinates.
target = next(n for n in session["snapshot"]["nodes"] if n["side"] == "super")
after = requests.post(
    f"{base}/api/session/{sid}/event", json={"type": "click", "node": target["id"]}
).json()
grown = len(after["snapshot"]["nodes"]) - len(session["snapshot"]["nodes"])
print(f"\nclicked {target['label']!r}: +{grown} nodes, positions recomputed")

# 4. Switch to the force map and drag (pin) a node.
requests.post(f"{base}/api/session/{sid}/event", json={"type": "set_mode", "mode": "force"})
pinned = requests.post(
    f"{base}/api/session/{sid}/event",
    json={"type": "pin", "node": target["id"], "point": {"x": 150, "y": 150}},
).json()
print("pinned node position:", pinned["layout"]["positions"][target["id"]])

# 5. The scholar list for the focused keyword.
scholars = requests.get(
    f"{base}/api/scholars", params={"keywords": "machine learning", "limit": 3}
).json()
print(f"\nscholars for 'machine learning': {scholars['total']} total, top 3:")
for item in scholars["items"]:
    print(f"   {item['score']:5.2f}  {item['name']} ({item['affiliation']})")

server.should_exit = True
