# Run the claim registry and print a summary table.
import json

from semiflows import claims
from semiflows.config import RunConfig
from semiflows.reports import render_report

for c in claims.registry():
    print(c.id, c.expected.ljust(9), c.description)

# the fast claims at the default scale
fast = [claims.run_claim(cid) for cid in ("C1", "C2", "C3", "C7", "C8", "C10")]
print(render_report(fast, "text"))

# C8's evidence, one row per truncation cap
for row in claims.run_claim("C8").evidence:
    print(json.dumps(row, sort_keys=True))

# Tiny truncations: the metric claims lose resolution, the exact ones do not.
tiny = RunConfig(affine_d=3, twist_n=8, scale_d=3, horizon=8, samples=500, cascade_points=3)
print(render_report([claims.run_claim(cid, tiny) for cid in ("C3", "C4", "C6", "C13")], "text"))
