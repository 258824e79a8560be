#!/usr/bin/env python3
"""Regenerate the frontend test fixtures from the live backend.

Runs the HTTP service in-process against the social test graph and freezes
the responses the UI tests replay: the target-merge treemap payload and two
query records. Run from the repository root:

    python3 tools/export_ui_fixtures.py
"""
from pathlib import Path

from fastapi.testclient import TestClient

from grasp.service import create_app

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data"
OUT = ROOT / "frontend" / "fixtures"


def main() -> None:
    nodes = (DATA / "gsn_nodes.txt").read_text()
    edges = (DATA / "gsn_edges.txt").read_text()
    OUT.mkdir(parents=True, exist_ok=True)
    with TestClient(create_app()) as client:
        assert client.post("/graphs", json={"nodes": nodes, "edges": edges}).status_code == 201
        assert client.post("/graphs/g1/summaries", json={"mode": "target"}).status_code == 201

        treemap = client.get("/summaries/s1/treemap")
        (OUT / "treemap_target.json").write_bytes(treemap.content)

        full = client.post("/summaries/s1/query",
                           json={"query": "COUNT () -[l5]-> ()"})
        assert full.status_code == 200
        (OUT / "query_l5_full.json").write_bytes(full.content)

        every_cell = [c["id"] for c in treemap.json()["cells"]]
        allcells = client.post("/summaries/s1/query",
                               json={"query": "COUNT () -[l5]-> ()",
                                     "region": every_cell})
        assert allcells.status_code == 200
        (OUT / "query_l5_all_cells.json").write_bytes(allcells.content)

        # Region holding only the cells whose statistics carry no l5 edges.
        ids = [c["id"] for c in treemap.json()["cells"]]
        without_l5 = [i for i in ids
                      if not any(t["label"] == "l5"
                                 for t in treemap.json()["cells"][i]["tooltip"]["top_lpercent"])]
        part = client.post("/summaries/s1/query",
                           json={"query": "COUNT () -[l5]-> ()",
                                 "region": without_l5})
        assert part.status_code == 200
        (OUT / "query_l5_no_l5_cells.json").write_bytes(part.content)
    for name in ("treemap_target.json", "query_l5_full.json",
                 "query_l5_all_cells.json", "query_l5_no_l5_cells.json"):
        print(f"wrote {OUT / name}")


if __name__ == "__main__":
    main()
