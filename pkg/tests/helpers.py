"""Independent oracles shared by the test modules.

These deliberately avoid the code paths they are used to check: the simplex
moment oracle integrates recursively variable by variable, the smooth-model
intersection oracle works with lattice-polytope volumes, and the random
weight generator produces gcd-1 (optionally well-formed) tuples.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from wfano.lattice import WeightVector


def brute_simplex_moment(n_vars: int, upper, weights) -> Fraction:
    """Integral of prod(x_i^w_i) over {x_i > 0, sum x_i < upper}.

    Computed by one-variable-at-a-time exact integration: with
    F_0(t) = 1 and F_{k+1}(t) = int_0^t x^(w_k) F_k(t - x) dx,
    the result is F_{n_vars}(upper).  No closed forms are used.
    """
    f = [Fraction(1)]  # F_0 as a polynomial in t
    for k in range(n_vars):
        w = weights[k]
        deg = len(f) - 1
        out = [Fraction(0)] * (deg + w + 2)
        for j, cj in enumerate(f):
            if cj == 0:
                continue
            # (t - x)^j expanded; multiply by x^w; integrate x over (0, t)
            for i in range(j + 1):
                c = cj * math.comb(j, i) * (-1) ** i
                out[j + w + 1] += c / (w + i + 1)
        f = out
    t = Fraction(upper)
    return sum(c * t**i for i, c in enumerate(f))


def smooth_blowup_intersection(s: int, r: int, k: int) -> Fraction:
    """(A^(s-k) . B^k) on the blowup of P^s along a linear subspace of
    dimension s-r-1, where A is the pullback of a hyperplane of P^s and B
    the pullback of a hyperplane of the P^r base of the bundle structure.

    Computed from lattice-polytope volumes: A corresponds to the standard
    simplex conv(0, e_1..e_s), B to its face conv(0, e_1..e_r), and
    s! * vol(x*A + y*B) = sum_j C(s,j) (A^(s-j).B^j) x^(s-j) y^j.
    The Minkowski-sum volume reduces to one exact 1D integral.
    """
    if not (0 <= k <= s and 1 <= r <= s - 1):
        raise ValueError("invalid (s, r, k)")

    def vol(x: Fraction, y: Fraction) -> Fraction:
        # vol(x*Delta_s + y*Delta_r)
        #   = int_0^x w^(s-r-1)/(s-r-1)! * (x+y-w)^r / r! dw
        c = s - r
        total = Fraction(0)
        for i in range(r + 1):
            coeff = Fraction(
                math.comb(r, i) * (-1) ** i,
                math.factorial(r) * math.factorial(c - 1),
            )
            total += coeff * (x + y) ** (r - i) * x ** (c + i) / (c + i)
        return total

    samples = [Fraction(t) for t in range(s + 1)]
    values = [vol(Fraction(1), t) * math.factorial(s) for t in samples]
    # values[t] = sum_j C(s,j) m_j t^j  with  m_j = (A^(s-j) . B^j)
    mat = [[t**j for j in range(s + 1)] for t in samples]
    coeffs = _solve(mat, values)
    return coeffs[k] / math.comb(s, k)


def _solve(matrix, rhs):
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        aug[col] = [v / inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * u for v, u in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def random_weight_vector(rng: random.Random, length: int, max_weight: int = 50,
                         well_formed: bool = False) -> WeightVector:
    """Random gcd-1 weight tuple; optionally well-formed."""
    while True:
        w = tuple(rng.randint(1, max_weight) for _ in range(length))
        if math.gcd(*w) != 1:
            continue
        wv = WeightVector(w)
        if well_formed and not wv.is_well_formed:
            continue
        return wv
