"""A small verification sweep, the same one the `radii verify` command runs."""
# %%
import csv
import io

import numpy as np

from radii.closed_forms import TheoremId
from radii.report import SweepConfig, render, run_sweep

config = SweepConfig((TheoremId.T6, TheoremId.T9),
                     {TheoremId.T6: {"nu": "0:2:1/2"}, TheoremId.T9: {"nu": "-1/2:1/2:1/4"}})
rows = run_sweep(config)
[(r.label(), r.passed) for r in rows]

# %%
# one CSV line per rung; the generic ladder keeps tightening past the displayed k
records = list(csv.DictReader(io.StringIO(render(rows, "csv"))))
g = [r for r in records if r["theorem"] == "T6" and r["nu"] == "0"]
gap = np.array([float(r["upper_generic"]) - float(r["lower_generic"]) for r in g])
print(gap)

# %%
# radius of convexity of g_nu grows with nu
zeros = np.array([r.zero for r in rows if r.theorem == TheoremId.T6])
np.diff(zeros)
