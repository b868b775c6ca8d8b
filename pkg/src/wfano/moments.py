"""Exact moment integrals over the flag regions of the Eckardt-vertex case.

For a degree d = a*k + 1 hypersurface X of dimension n in P(1^(n+1), a)
whose vertex P = [0:...:0:1] is a generalized Eckardt point, the values
S(O_X(1); Y_1 > ... > Y_j) along the standard flag through the exceptional
divisor reduce to moments of the region

    D_{n,1} = { x_1 <= 1/a,               x_2 + ... + x_n < a x_1 }
    D_{n,2} = { 1/a < x_1 < (ak+1)/a,     x_2 + ... + x_n < ((ak+1)/a - x_1)/k }

normalized by n! a / (ak+1).  The inner integrals over the simplex
{x_2 + ... + x_n < t} have the closed forms vol = t^(n-1)/(n-1)! and
integral of a single coordinate = t^n/n!, which reduces everything to 1D
polynomial integrals in x_1; those are evaluated exactly over Fractions.

The closed forms for the S-values, the local delta bound at the vertex, and
the K-instability criterion are provided alongside for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

MAX_DIMENSION = 64


class Poly1D:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def x_shifted(cls, shift: Fraction, scale: Fraction) -> "Poly1D":
        """The linear polynomial scale * x + shift."""
        return cls([shift, scale])

    def __mul__(self, other: "Poly1D") -> "Poly1D":
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly1D(out)

    def __add__(self, other: "Poly1D") -> "Poly1D":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            out[i] += a
        for i, b in enumerate(other.coeffs):
            out[i] += b
        return Poly1D(out)

    def scale(self, f: Fraction) -> "Poly1D":
        return Poly1D([c * Fraction(f) for c in self.coeffs])

    def power(self, e: int) -> "Poly1D":
        out = Poly1D([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def integral(self, lo: Fraction, hi: Fraction) -> Fraction:
        total = Fraction(0)
        lo = Fraction(lo)
        hi = Fraction(hi)
        for i, c in enumerate(self.coeffs):
            if c:
                total += c * (hi ** (i + 1) - lo ** (i + 1)) / (i + 1)
        return total


def _validate(n: int, a: int, k: int) -> None:
    if n < 2:
        raise ValueError("dimension must be at least 2")
    if n > MAX_DIMENSION:
        raise ValueError(f"dimension bounded by {MAX_DIMENSION}")
    if a < 1 or k < 1:
        raise ValueError("a and k must be positive integers")


@dataclass(frozen=True)
class MomentRegion:
    """The two-piece region of the flag moments; pieces share x_1 = 1/a."""

    n: int
    a: int
    k: int

    def __post_init__(self):
        _validate(self.n, self.a, self.k)

    def volume(self) -> Fraction:
        """Exact volume; equals (ak+1)/(a * n!)."""
        n, a, k = self.n, self.a, self.k
        fact = math.factorial(n - 1)
        piece1 = Poly1D([0, a]).power(n - 1).scale(Fraction(1, fact))
        v1 = piece1.integral(0, Fraction(1, a))
        t2 = Poly1D([Fraction(a * k + 1, a * k), Fraction(-1, k)])
        piece2 = t2.power(n - 1).scale(Fraction(1, fact))
        v2 = piece2.integral(Fraction(1, a), Fraction(a * k + 1, a))
        return v1 + v2

    @property
    def normalizer(self) -> Fraction:
        return Fraction(math.factorial(self.n) * self.a, self.a * self.k + 1)


def s_value(n: int, a: int, k: int, j: int, q_in_w1: bool = False) -> Fraction:
    """S(O_X(1); Y_1 > ... > Y_j) by exact symbolic integration.

    The flag runs through the exceptional divisor; j = n additionally
    distinguishes whether the final point lies on the residual hypersurface
    W_1 (the ``q_in_w1`` flag).  Integration is reduced to 1D polynomial
    integrals via the simplex closed forms.
    """
    _validate(n, a, k)
    if not 1 <= j <= n:
        raise ValueError("flag depth j must satisfy 1 <= j <= n")
    fact_nm1 = math.factorial(n - 1)
    fact_n = math.factorial(n)
    one_over_a = Fraction(1, a)
    top = Fraction(a * k + 1, a)
    t1 = Poly1D([0, a])                                  # t = a x  on the first piece
    t2 = Poly1D([top / k, Fraction(-1, k)])              # t = (top - x)/k on the second

    def piece_integral(tpoly: Poly1D, lo: Fraction, hi: Fraction, with_v: bool) -> Fraction:
        if j == 1:
            integrand = Poly1D([0, 1]) * tpoly.power(n - 1).scale(Fraction(1, fact_nm1))
        else:
            integrand = tpoly.power(n).scale(Fraction(1, fact_n))
        if with_v:
            v = Poly1D([-one_over_a / k, Fraction(1, k)])  # (x - 1/a)/k
            integrand = integrand + v * tpoly.power(n - 1).scale(Fraction(1, fact_nm1))
        return integrand.integral(lo, hi)

    add_v = q_in_w1 and j == n
    total = piece_integral(t1, Fraction(0), one_over_a, False)
    total += piece_integral(t2, one_over_a, top, add_v)
    return MomentRegion(n, a, k).normalizer * total


def s_value_closed_form(n: int, a: int, k: int, j: int, q_in_w1: bool = False) -> Fraction:
    """Closed forms: (ak+n)/(a(n+1)) for j = 1, (2ak+1)/((ak+1)(n+1)) for
    j = n with the point on W_1, and 1/(n+1) otherwise."""
    _validate(n, a, k)
    if not 1 <= j <= n:
        raise ValueError("flag depth j must satisfy 1 <= j <= n")
    if j == 1:
        return Fraction(a * k + n, a * (n + 1))
    if j == n and q_in_w1:
        return Fraction(2 * a * k + 1, (a * k + 1) * (n + 1))
    return Fraction(1, n + 1)


def delta_eckardt(n: int, a: int, k: int) -> tuple[Fraction, bool]:
    """Lower bound for the local threshold at a generalized Eckardt vertex.

    Returns (min{n(n+1)/(ak+n), (ak+1)(n+1)/(2ak+1)}, exact) where the flag
    is exact (the bound equals the threshold) whenever d = ak+1 >= n.
    """
    _validate(n, a, k)
    first = Fraction(n * (n + 1), a * k + n)
    second = Fraction((a * k + 1) * (n + 1), 2 * a * k + 1)
    exact = a * k + 1 >= n
    if exact and min(first, second) != first:
        raise AssertionError("exact case must realize the vertex ratio")
    return min(first, second), exact


@dataclass(frozen=True)
class UnstableReport:
    """Outcome of the Eckardt-vertex instability criterion."""

    n: int
    a: int
    k: int
    index: int
    verdict: str                       # "K-unstable" or "inconclusive"
    witness: Optional[Fraction]        # certified upper bound for delta(X) when unstable
    criterion_rhs: Fraction            # a^2 k (k-1) / (a-1)


def unstable_check(n: int, a: int, k: int) -> UnstableReport:
    """K-instability from a generalized Eckardt vertex.

    For a >= 2 the variety is K-unstable as soon as n > a^2 k (k-1)/(a-1),
    with certified witness delta(X) <= n(n+1) / ((n+a-ak)(ak+n)) < 1.
    Requires a Fano index n + a - ak >= 1.
    """
    _validate(n, a, k)
    if a < 2:
        raise ValueError("the instability criterion needs a >= 2")
    index = n + a - a * k
    if index <= 0:
        raise ValueError(f"index n + a - a*k = {index} is not positive; not a Fano datum")
    rhs = Fraction(a * a * k * (k - 1), a - 1)
    if n > rhs:
        witness = Fraction(n * (n + 1), index * (a * k + n))
        if witness >= 1:
            raise AssertionError("instability witness must be < 1 when the criterion holds")
        return UnstableReport(n, a, k, index, "K-unstable", witness, rhs)
    return UnstableReport(n, a, k, index, "inconclusive", None, rhs)


def moment_table(n_range, a_range, k_range) -> Iterator[dict]:
    """Rows (n,a,k,j,q_in_W1,S,closed_form,match) for the CSV emitter."""
    for n in n_range:
        for a in a_range:
            for k in k_range:
                for j in range(1, n + 1):
                    for q in (False, True):
                        s = s_value(n, a, k, j, q)
                        cf = s_value_closed_form(n, a, k, j, q)
                        yield {
                            "n": n, "a": a, "k": k, "j": j,
                            "q_in_W1": q,
                            "S": str(s),
                            "closed_form": str(cf),
                            "match": s == cf,
                        }
