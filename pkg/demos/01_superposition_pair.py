#!/usr/bin/env python3
"""Build the two-prospect superposition pair by hand, bottom up.

One composite action with two modes; two prospects whose amplitude rows
form the 2x2 orthonormal superposition basis.  With the state of mind
aligned to the first prospect, both prospects carry the same classical
(diagonal) weight 1/2 and the interference terms +-1/2 decide everything.
"""

import math

from qdt import (
    ActionFactor,
    MindSpace,
    ProspectSpec,
    Scenario,
    build_prospect_state,
    decompose,
    evaluate_scenario,
    prospect_probability,
)

R = 1.0 / math.sqrt(2.0)

# ---------------------------------------------------------------
# one factor, two modes; two prospect rows over its mode basis
# ---------------------------------------------------------------
choice = ActionFactor.from_labels(0, "choice", ["m0", "m1"])
pi1 = ProspectSpec("pi1", ((0, 1),), {(0,): R, (1,): R})
pi2 = ProspectSpec("pi2", ((0, 1),), {(0,): R, (1,): -R})

space = MindSpace.from_factors([choice])
state1 = build_prospect_state(pi1, space)
state2 = build_prospect_state(pi2, space)
psi = state1.copy()  # the mind leans exactly along pi1

print("prospect states over the elementary basis:")
print("  |pi1> =", state1.round(6))
print("  |pi2> =", state2.round(6))
print("  psi   =", psi.round(6))

# ---------------------------------------------------------------
# probabilities and their diagonal/interference split
# ---------------------------------------------------------------
for name, state in (("pi1", state1), ("pi2", state2)):
    p = prospect_probability(state, psi)
    diag, q = decompose(state, psi)
    print(f"\n{name}: p = {p:.12f}")
    print(f"  diagonal (classical) part = {diag:.12f}")
    print(f"  interference term         = {q:+.12f}")
    print(f"  identity residual         = {abs(p - diag - q):.3e}")

# ---------------------------------------------------------------
# the same numbers through the scenario pipeline
# ---------------------------------------------------------------
scenario = Scenario(factors=(choice,), prospects=(pi1, pi2),
                    state_of_mind=tuple(psi))
report = evaluate_scenario(scenario)
print("\nscenario pipeline agrees:")
for r in report.probabilistic_state.results:
    print(f"  {r.name}: p_raw={r.p_raw:.12f} diag={r.diag_sum:.6f} q={r.q:+.6f}")
print("optimal prospect:", report.optimal)
print("interference terms over the whole lattice sum to", report.checks["sum_q"])
