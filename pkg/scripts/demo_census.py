"""Small census of TF-cousin pairs among connected graphs.

Reads the shipped graph6 fixtures, groups graphs by the certificate of
their double cover and reports each group, plus whether every member
contains the short circuits that the circuit conjecture predicts.
Pass the number of vertices as an argument (default 7).
"""
import sys
from pathlib import Path

from tfcousins import census_cousins, ingest, report, verify_conjecture

n = int(sys.argv[1]) if len(sys.argv) > 1 else 7
data = Path(__file__).resolve().parent.parent / "tests" / "data"
path = data / f"connected{n}.g6"
if not path.exists():
    path = data / f"connected{n}.g6.gz"

recs = census_cousins(ingest(path))
print(report(recs))
for r in recs:
    v = verify_conjecture(r)
    print(" ".join(r.members), "| conjecture", "holds (k=%d)" % v.witness_k if v.holds else "fails")
