#!/usr/bin/env python3
"""Multimode register readout through a product state of mind.

Each register site holds a superposition of its modes; the overall state
of mind is the tensor product of the site vectors.  Reading the register
out against the elementary patterns makes every prospect simple, so all
interference terms vanish and the probabilities are plain squared moduli
of the product amplitudes.
"""

import numpy as np

from qdt import builtin_scenario, build_product_state, evaluate_scenario

# ---------------------------------------------------------------
# the default two-site register
# ---------------------------------------------------------------
scenario = builtin_scenario("register")
psi = np.asarray(scenario.state_of_mind)
print("site mode counts:", [f.num_modes for f in scenario.factors])
print("product state of mind:", np.round(psi, 6))

report = evaluate_scenario(scenario)
print("\nreadout probabilities (all prospects simple, q = 0):")
for name in report.ranking:
    r = report.probabilistic_state[name]
    print(f"  {r.name}: p = {r.p_raw:.6f}   q = {r.q:.1f}")
print("most likely pattern:", report.optimal)

# ---------------------------------------------------------------
# amplitudes multiply across sites
# ---------------------------------------------------------------
site1 = np.array([0.8, 0.6])
site2 = np.array([1.0, 2.0j]) / np.sqrt(5.0)
manual = build_product_state([site1, site2])
print("\nmanual product state matches:", np.allclose(manual, psi))
print("p(e01) = |0.8|^2 * |2i/sqrt(5)|^2 =", (0.8 ** 2) * (4.0 / 5.0))

# ---------------------------------------------------------------
# one-hot sites collapse the register to a single pattern
# ---------------------------------------------------------------
sharp = builtin_scenario("register", site_amplitudes=[[1, 0], [0, 1]])
report = evaluate_scenario(sharp)
print("\none-hot sites:")
for r in report.probabilistic_state.results:
    print(f"  {r.name}: p = {r.p_raw:.1f}")
print("the register reads out", report.optimal, "with certainty")
