"""Probability-operator measure over prospect states.

For a prospect with amplitude row ``b`` and a state of mind ``c`` (both over
the elementary-prospect basis), the three quantities of interest are

* prospect probability    ``p = |sum_a conj(b_a) c_a|^2``
* conjunction probability ``p_a = |b_a|^2 |c_a|^2`` (the classical, diagonal part)
* interference term       ``q = sum_{a != b} conj(c_a) b_a conj(b_b) c_b``

``p = sum_a p_a + q`` holds as an algebraic identity; this module always
computes ``q`` from the off-diagonal double sum, never as ``p - sum_a p_a``,
so the identity remains a genuine numerical cross-check.

Three normalization policies mediate the two normalization conditions the
theory imposes (unit probability sum over the lattice, and unit column
norms of the amplitude matrix, which is the diagonal form of the
resolution of identity):

* ``strict``  - assert both conditions for the scenario's state of mind;
* ``given``   - compute everything, report residuals, never fail;
* ``renorm``  - additionally report probabilities divided by their sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .errors import DimensionError, NormalizationError, NumericalError
from .hilbert import MindSpace, build_amplitude_matrix, check_state_of_mind

if TYPE_CHECKING:
    from .scenario_io import Scenario

#: Algebraic identities are checked at this tolerance; user input at the
#: (larger, configurable) policy tolerance.
IDENTITY_TOL = 1e-12

_MODES = ("strict", "given", "renorm")


@dataclass(frozen=True)
class NormalizationPolicy:
    """Which normalization conditions to enforce, and how tightly."""

    mode: str = "strict"
    tolerance: float = 1e-10

    def __post_init__(self):
        if self.mode not in _MODES:
            raise NormalizationError(f"unknown normalization mode {self.mode!r}; expected one of {_MODES}")
        if not self.tolerance > 0:
            raise NormalizationError(f"tolerance must be positive, got {self.tolerance}")


@dataclass(frozen=True)
class ProspectResult:
    """Evaluated quantities for one prospect."""

    name: str
    p_raw: float
    diag_sum: float
    q: float
    conjunction: tuple[float, ...]
    p_normalized: float | None = None


@dataclass(frozen=True)
class ProbabilisticState:
    """All prospect probabilities, diagonal sums, and interference terms."""

    results: tuple[ProspectResult, ...]
    checks: dict[str, float]
    policy: NormalizationPolicy
    ordering_field: str

    def __getitem__(self, name: str) -> ProspectResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(r.name == name for r in self.results)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(r.name for r in self.results)

    def active_p(self, result: ProspectResult) -> float:
        """Probability in the field that orders the lattice."""
        if self.ordering_field == "p_normalized":
            assert result.p_normalized is not None
            return result.p_normalized
        return result.p_raw


def prospect_probability(prospect_state: np.ndarray, psi: np.ndarray, tolerance: float = 1e-10) -> float:
    """Squared modulus of the transition amplitude between prospect state and psi."""
    b = np.asarray(prospect_state, dtype=complex)
    c = np.asarray(psi, dtype=complex)
    if b.shape != c.shape or b.ndim != 1:
        raise DimensionError(f"prospect state has shape {b.shape}, psi has shape {c.shape}")
    dev = abs(float(np.sum(np.abs(c) ** 2)) - 1.0)
    if dev > tolerance:
        raise NormalizationError("psi is not normalized", {"psi_norm_dev": dev})
    return float(abs(np.vdot(b, c)) ** 2)


def conjunction_probability(b: complex, c: complex) -> float:
    """Diagonal (classical) probability of selecting one elementary prospect."""
    return float(abs(b) ** 2 * abs(c) ** 2)


def _conjunction_row(b: np.ndarray, c: np.ndarray) -> np.ndarray:
    return np.abs(b) ** 2 * np.abs(c) ** 2


def _offdiagonal_sum(b: np.ndarray, c: np.ndarray) -> complex:
    # q = sum_a u_a * (S - v_a) with u = conj(c) b,  v = conj(b) c,  S = sum(v):
    # exactly the off-diagonal double sum, grouped by row to stay O(K).
    u = np.conj(c) * b
    v = np.conj(b) * c
    return complex(np.sum(u * (np.sum(v) - v)))


def interference_term(
    prospect_state: np.ndarray,
    psi: np.ndarray,
    imag_tolerance: float = IDENTITY_TOL,
) -> float:
    """Off-diagonal double sum capturing attraction/repulsion bias.

    The sum is analytically real (terms come in conjugate pairs); an
    imaginary residue at or above ``imag_tolerance`` signals a code defect
    and raises NumericalError.
    """
    b = np.asarray(prospect_state, dtype=complex)
    c = np.asarray(psi, dtype=complex)
    if b.shape != c.shape or b.ndim != 1:
        raise DimensionError(f"prospect state has shape {b.shape}, psi has shape {c.shape}")
    qc = _offdiagonal_sum(b, c)
    if abs(qc.imag) >= imag_tolerance:
        raise NumericalError(f"interference sum has imaginary residue {qc.imag:.3e}")
    return qc.real


def decompose(prospect_state: np.ndarray, psi: np.ndarray) -> tuple[float, float]:
    """Split a prospect's probability into (diagonal sum, interference term)."""
    b = np.asarray(prospect_state, dtype=complex)
    c = np.asarray(psi, dtype=complex)
    if b.shape != c.shape or b.ndim != 1:
        raise DimensionError(f"prospect state has shape {b.shape}, psi has shape {c.shape}")
    diag_sum = float(np.sum(_conjunction_row(b, c)))
    return diag_sum, interference_term(b, c)


def column_norm_deviation(matrix: np.ndarray) -> float:
    """Max deviation of squared column norms from one."""
    if matrix.size == 0:
        return 1.0
    return float(np.max(np.abs(np.sum(np.abs(matrix) ** 2, axis=0) - 1.0)))


def gram_deviation(matrix: np.ndarray) -> float:
    """Max entrywise deviation of the column Gram matrix from the identity."""
    k = matrix.shape[1]
    gram = matrix.conj().T @ matrix
    return float(np.max(np.abs(gram - np.eye(k))))


def evaluate_all(scenario: "Scenario") -> ProbabilisticState:
    """Evaluate every prospect of a scenario under its normalization policy.

    Always computes raw probabilities, diagonal sums, interference terms,
    and the residual checks.  In strict mode, a NormalizationError is
    raised when the probability sum or the column norms are off by more
    than the policy tolerance; the completed state rides along on the
    exception so callers can still report it.
    """
    policy = NormalizationPolicy(scenario.options.normalization, scenario.options.tolerance)
    space = MindSpace.from_factors(scenario.factors)
    psi = check_state_of_mind(np.asarray(scenario.state_of_mind, dtype=complex), space, policy.tolerance)
    matrix = build_amplitude_matrix(
        scenario.prospects, space, factors=scenario.factors,
        allow_free_support=scenario.options.allow_free_support,
    )

    results = []
    prop1_max = 0.0
    for spec, row in zip(scenario.prospects, matrix):
        p_raw = float(abs(np.vdot(row, psi)) ** 2)
        conjunction = _conjunction_row(row, psi)
        diag_sum = float(np.sum(conjunction))
        q = interference_term(row, psi)
        prop1_max = max(prop1_max, abs(p_raw - diag_sum - q))
        results.append(ProspectResult(
            name=spec.name, p_raw=p_raw, diag_sum=diag_sum, q=q,
            conjunction=tuple(float(x) for x in conjunction),
        ))

    sum_p = float(sum(r.p_raw for r in results))
    sum_q = float(sum(r.q for r in results))
    col_dev = column_norm_deviation(matrix)
    checks = {
        "sum_p": sum_p,
        "sum_q": sum_q,
        "column_norm_max_dev": col_dev,
        "prop1_max_residual": prop1_max,
    }

    ordering_field = "p_raw"
    if policy.mode == "renorm":
        if sum_p <= 0.0:
            raise NormalizationError("probabilities sum to zero; cannot renormalize", {"sum_p": sum_p})
        results = [
            ProspectResult(
                name=r.name, p_raw=r.p_raw, diag_sum=r.diag_sum, q=r.q,
                conjunction=r.conjunction, p_normalized=r.p_raw / sum_p,
            )
            for r in results
        ]
        ordering_field = "p_normalized"

    state = ProbabilisticState(
        results=tuple(results), checks=checks, policy=policy, ordering_field=ordering_field,
    )

    if policy.mode == "strict":
        violations = {}
        if abs(sum_p - 1.0) > policy.tolerance:
            violations["sum_p_dev"] = abs(sum_p - 1.0)
        if col_dev > policy.tolerance:
            violations["column_norm_max_dev"] = col_dev
        if violations:
            raise NormalizationError("strict normalization violated", violations, state=state)
    return state
