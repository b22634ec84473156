"""
Randomized verification and replay
==================================

Each suite draws trial i from PCG64(seed ^ i), records margins and stores the
inputs of every violation so it can be recomputed later.
"""

import json

from opradii import SuiteConfig, replay, reproduce_constants
from opradii.harness import run_nilpotent_suite, run_trig_suite

cfg = SuiteConfig(seed=42, trials=20, n_range=(2, 5))
report = run_nilpotent_suite(cfg)
print("nilpotent suite ok:", report.ok, " minimum margins:")
for check, m in report.min_margins.items():
    print(f"  {check:16s} {m: .3e}")

# A negative tolerance turns every trial into a recorded violation, which is a
# convenient way to see the replay mechanism at work.
strict = SuiteConfig(seed=42, trials=5, n_range=(2, 4), tolerances={"bound": -1.0})
bad = run_trig_suite(strict)
v = bad.violations[0]
print("\nrecorded:", v["check"], v["margin"], " replayed:", replay("trig", v, strict))

consts = reproduce_constants()
print(f"\n{len(consts.constants)} constants reproduced, all within tolerance: {consts.ok}")
print(json.dumps(consts.constants[0], indent=2))
