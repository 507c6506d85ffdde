#!/usr/bin/env python3
"""Cross-check the fast path against the dense-operator oracle.

The fast path works with amplitude rows; the oracle rebuilds everything
as explicit matrices (rank-one prospect projectors, projector sandwiches,
a literal double loop for the interference term) and recomputes each
quantity from scratch.  On a random strict scenario the two paths agree
to machine precision, and the summed conjunction operators resolve the
identity.
"""

import numpy as np

from qdt import (
    dense_evaluate,
    dense_expectation,
    dense_prospect_operator,
    evaluate_all,
    random_strict_scenario,
)

# ---------------------------------------------------------------
# one seeded scenario, two independent computations
# ---------------------------------------------------------------
scenario = random_strict_scenario(seed=42, num_factors=2, modes_per_factor=[2, 3],
                                  num_prospects=8)
print(f"scenario: dimension {scenario.dimension}, {len(scenario.prospects)} prospects")

state = evaluate_all(scenario)       # fast path: vector algebra on rows
dense = dense_evaluate(scenario)     # oracle: explicit matrix products

print(f"\n{'prospect':>8}  {'p (fast)':>12}  {'p (dense)':>12}  {'q (fast)':>12}  {'q (dense)':>12}")
for i, name in enumerate(dense.names):
    r = state[name]
    print(f"{name:>8}  {r.p_raw:12.9f}  {dense.p[i]:12.9f}  {r.q:+12.9f}  {dense.q[i]:+12.9f}")

p_dev = max(abs(state[n].p_raw - dense.p[i]) for i, n in enumerate(dense.names))
q_dev = max(abs(state[n].q - dense.q[i]) for i, n in enumerate(dense.names))
c_dev = max(
    float(np.max(np.abs(np.asarray(state[n].conjunction) - dense.conjunction[i])))
    for i, n in enumerate(dense.names)
)
print(f"\nmax deviations: p {p_dev:.3e}, q {q_dev:.3e}, conjunctions {c_dev:.3e}")

# ---------------------------------------------------------------
# operator-level sanity: projectors and the resolution of identity
# ---------------------------------------------------------------
psi = np.asarray(scenario.state_of_mind)
print("\nidentity operator expectation:", dense_expectation(np.eye(scenario.dimension), psi).real)
op = dense_prospect_operator(psi)
print("projector onto psi is idempotent:",
      float(np.max(np.abs(op @ op - op))) < 1e-12)
print("resolution-of-identity residual:", f"{dense.identity_residual:.3e}")
print("probability sum over the lattice:", f"{state.checks['sum_p']:.15f}")
print("interference sum over the lattice:", f"{state.checks['sum_q']:+.3e}")
