"""Sphericity: the weight-class criterion and an independent open-orbit oracle."""
from __future__ import annotations

import random
from fractions import Fraction

from .lie import ChevalleyAlgebra, apply, matmul
from .linalg import rank
from .reconstruct import SubgroupModel, c_table

DEFAULT_TRIALS = 5
DEFAULT_SEED = 42


def criterion(m: SubgroupModel) -> bool:
    """Every ``c_lambda <= 1`` and the weights with ``c_lambda = 1`` are
    linearly independent modulo ``Ker tau``."""
    table = c_table(m)
    if any(c > 1 for _, c in table):
        return False
    reps = [list(cls[0]) for cls, c in table if c == 1]
    K = m.kernel
    return rank(list(K.rows) + reps, K.ambient) == K.dim + len(reps)


def _random_nilpotent(alg: ChevalleyAlgebra, rng, positive: bool, lo=1, hi=7):
    x = [Fraction(0)] * alg.dim
    offset = 0 if positive else alg.npos
    for k in range(alg.npos):
        x[offset + k] = Fraction(rng.randint(lo, hi))
    return x


def tangent_dimension(m: SubgroupModel, g_matrix) -> int:
    """``dim(b + Ad(g) h)`` for ``Ad(g)`` given as a matrix."""
    alg = m.alg
    neg = range(alg.npos, 2 * alg.npos)
    rows = []
    for v in m.h_basis.rows:
        w = apply(g_matrix, v)
        rows.append([w[k] for k in neg])
    dim_b = alg.npos + alg.rank
    return dim_b + (rank(rows, alg.npos) if rows else 0)


def sample_group_element(alg: ChevalleyAlgebra, rng):
    """``Ad(exp x_minus) Ad(exp x_plus)`` for random integer nilpotents."""
    lower = alg.exp_ad_matrix(_random_nilpotent(alg, rng, positive=False))
    upper = alg.exp_ad_matrix(_random_nilpotent(alg, rng, positive=True))
    return matmul(lower, upper)


def oracle_dimension(m: SubgroupModel, trials: int = DEFAULT_TRIALS,
                     seed: int = DEFAULT_SEED) -> int:
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        best = max(best, tangent_dimension(m, sample_group_element(m.alg, rng)))
        if best == m.alg.dim:
            break
    return best


def oracle_open_orbit(m: SubgroupModel, trials: int = DEFAULT_TRIALS,
                      seed: int = DEFAULT_SEED) -> bool:
    """True iff some sampled ``g`` has ``b + Ad(g) h = g``.

    A ``False`` answer is a semidecision from below: an unlucky sample can
    only under-report the generic dimension.
    """
    return oracle_dimension(m, trials, seed) == m.alg.dim
