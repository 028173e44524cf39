"""
A small catalog and its checks
==============================

Sweep every clean ``T_{a,b,n}`` up to a bound, write the JSONL catalog, and
evaluate the bounds and conjectures on it.  Raise ``N_MAX`` to 100 to
regenerate the full data set (a minute or so per core).
"""

import io
import json
from collections import Counter

from tetlab.survey import conjecture_report, sweep, write_jsonl

N_MAX = 30
records = sweep(N_MAX)
print(len(records), "clean tetrahedra with n <=", N_MAX)
print("interior-point counts:", sorted(Counter(r.i for r in records).items()))

buf = io.StringIO()
write_jsonl(records[:3], buf)
print(buf.getvalue())

report = conjecture_report(records).to_json()
for key in ("duong_bounds_hold", "width_le_k_plus_1_holds", "interior_point_per_plane_holds"):
    print(key, report[key])
print(json.dumps(report["interior_point_per_plane_counterexamples"][:3]))
