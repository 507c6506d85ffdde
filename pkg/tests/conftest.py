"""Shared scenario builders for the test suite."""

from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from qdt.algebra import ActionFactor, ProspectSpec
from qdt.hilbert import MindSpace, basis_index
from qdt.scenario_io import Scenario, ScenarioOptions


def make_factors(dims) -> tuple[ActionFactor, ...]:
    return tuple(
        ActionFactor.from_labels(k, f"f{k + 1}", [f"m{j}" for j in range(d)])
        for k, d in enumerate(dims)
    )


def matrix_scenario(dims, matrix, psi, normalization="given", tolerance=1e-10,
                    names=None, attributes=None) -> Scenario:
    """Scenario with full-support prospects taken from the rows of ``matrix``."""
    factors = make_factors(dims)
    space = MindSpace.from_factors(factors)
    matrix = np.asarray(matrix, dtype=complex)
    full = tuple(tuple(range(d)) for d in dims)
    prospects = []
    for i, row in enumerate(matrix):
        name = names[i] if names else f"p{i + 1}"
        amps = {key: complex(row[basis_index(key, space)]) for key in space.basis}
        attr = attributes[i] if attributes else None
        prospects.append(ProspectSpec(name=name, mode_subsets=full, amplitudes=amps, attributes=attr))
    return Scenario(
        factors=factors, prospects=tuple(prospects),
        state_of_mind=tuple(complex(z) for z in np.asarray(psi, dtype=complex)),
        options=ScenarioOptions(normalization=normalization, tolerance=tolerance),
    )


def random_dims(rng, max_dim=64):
    """Random factor dims whose product lies in [2, max_dim]."""
    while True:
        n_factors = int(rng.integers(1, 4))
        dims = tuple(int(rng.integers(1, 5)) for _ in range(n_factors))
        if 2 <= math.prod(dims) <= max_dim:
            return dims


def random_psi(rng, dim):
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def random_general_scenario(rng, normalization="given", max_dim=64, max_prospects=6) -> Scenario:
    """Random scenario with arbitrary amplitudes and product supports."""
    dims = random_dims(rng, max_dim)
    factors = make_factors(dims)
    space = MindSpace.from_factors(factors)
    n = int(rng.integers(1, max_prospects + 1))
    prospects = []
    for i in range(n):
        subsets = tuple(
            tuple(sorted(rng.choice(d, size=int(rng.integers(1, d + 1)), replace=False).tolist()))
            for d in dims
        )
        support = list(itertools.product(*subsets))
        k = int(rng.integers(1, len(support) + 1))
        chosen = [support[j] for j in rng.choice(len(support), size=k, replace=False)]
        amps = {
            key: complex(rng.standard_normal(), rng.standard_normal())
            for key in chosen
        }
        prospects.append(ProspectSpec(name=f"p{i + 1}", mode_subsets=subsets, amplitudes=amps))
    return Scenario(
        factors=factors, prospects=tuple(prospects),
        state_of_mind=tuple(complex(z) for z in random_psi(rng, space.dimension)),
        options=ScenarioOptions(normalization=normalization),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
