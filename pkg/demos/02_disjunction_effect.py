#!/usr/bin/env python3
"""The disjunction template: equal classical utility, interference decides.

Two prospects (act now / wait) over an uncertain binary event.  Their
diagonal sums are both exactly 1/2 for every phase, so classically the
choice is a coin toss.  The interference terms are +-cos(phase)/2: the
phase alone moves the decision, flipping the ranking at phase = pi/2.
"""

import math

from qdt import builtin_scenario, evaluate_scenario

# ---------------------------------------------------------------
# sweep the phase and watch the ranking flip
# ---------------------------------------------------------------
print(f"{'phase':>8}  {'p(act)':>10}  {'p(wait)':>10}  {'q(act)':>10}  optimal")
for frac in range(0, 9):
    phase = frac * math.pi / 8.0
    report = evaluate_scenario(builtin_scenario("disjunction", phase=phase))
    state = report.probabilistic_state
    print(f"{phase:8.4f}  {state['act'].p_raw:10.6f}  {state['wait'].p_raw:10.6f}  "
          f"{state['act'].q:+10.6f}  {report.optimal}")

# ---------------------------------------------------------------
# the default template: acting under uncertainty is repulsive
# ---------------------------------------------------------------
report = evaluate_scenario(builtin_scenario("disjunction"))
state = report.probabilistic_state
print("\ndefault phase 2*pi/3:")
print(f"  diagonal sums: act={state['act'].diag_sum:.6f} wait={state['wait'].diag_sum:.6f}"
      "  (equal classical utility)")
print(f"  interference:  act={state['act'].q:+.6f} wait={state['wait'].q:+.6f}")
print(f"  optimal: {report.optimal}")

# the declared attributes say the active-under-uncertainty prospect should
# be the more repulsive one; the engine checks that against the q values
for c in report.attraction_report.constraints:
    verdict = "consistent" if c.ok else "INCONSISTENT"
    print(f"  declared ordering ({c.reason}): q({c.more_repulsive}) < q({c.less_repulsive})"
          f" -> {verdict}")

# ---------------------------------------------------------------
# interference terms always cancel across the lattice here
# ---------------------------------------------------------------
print("\nsum of interference terms across phases:")
for frac in (1, 3, 5):
    phase = frac * math.pi / 5.0
    report = evaluate_scenario(builtin_scenario("disjunction", phase=phase))
    print(f"  phase={phase:.4f}: sum_q = {report.checks['sum_q']:+.3e}")
