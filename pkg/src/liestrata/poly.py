"""Tiny exact polynomial arithmetic for branch solving.

Multivariate polynomials are dicts from exponent tuples to Fractions; the
branch solver only ever needs total degree two in at most two variables, so
nothing here tries to be clever.  Univariate polynomials travel as ascending
coefficient lists.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from typing import Sequence

from .errors import UnsupportedShapeError


class Poly:
    """Polynomial over Q in a fixed number of variables."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: dict[tuple[int, ...], Fraction]):
        self.nvars = nvars
        self.coeffs = {e: c for e, c in coeffs.items() if c != 0}

    @staticmethod
    def constant(value, nvars: int) -> "Poly":
        return Poly(nvars, {(0,) * nvars: Fraction(value)})

    @staticmethod
    def affine(const, lin: Sequence, nvars: int) -> "Poly":
        coeffs = {(0,) * nvars: Fraction(const)}
        for v, c in enumerate(lin):
            e = [0] * nvars
            e[v] = 1
            coeffs[tuple(e)] = Fraction(c)
        return Poly(nvars, coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly(self.nvars, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly(self.nvars, out)

    def scale(self, factor) -> "Poly":
        f = Fraction(factor)
        return Poly(self.nvars, {e: c * f for e, c in self.coeffs.items()})

    def evaluate(self, point: Sequence) -> Fraction:
        vals = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.coeffs.items():
            term = c
            for v, exp in enumerate(e):
                for _ in range(exp):
                    term *= vals[v]
            total += term
        return total

    def degree_in(self, v: int) -> int:
        return max((e[v] for e in self.coeffs), default=0)

    def univariate_in(self, v: int) -> list[list[Fraction]]:
        """Coefficient lists in the remaining variable, indexed by power of v.

        Only valid for nvars <= 2; with one variable the inner lists are
        constants.
        """
        if self.nvars > 2:
            raise UnsupportedShapeError("more than two parameters")
        other = 1 - v if self.nvars == 2 else None
        out: list[list[Fraction]] = [[] for _ in range(self.degree_in(v) + 1)]
        for e, c in self.coeffs.items():
            oe = e[other] if other is not None else 0
            bucket = out[e[v]]
            while len(bucket) <= oe:
                bucket.append(Fraction(0))
            bucket[oe] += c
        return [trim(b) for b in out]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.coeffs!r})"


# ---------------------------------------------------------------------------
# Univariate helpers on ascending coefficient lists
# ---------------------------------------------------------------------------


def trim(coeffs: list[Fraction]) -> list[Fraction]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def eval_univar(coeffs: Sequence[Fraction], x) -> Fraction:
    total = Fraction(0)
    xv = Fraction(x)
    for c in reversed(list(coeffs)):
        total = total * xv + c
    return total


def mul_univar(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return trim(out)


def add_univar(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def _to_integer_coeffs(coeffs: Sequence[Fraction]) -> list[int]:
    scale = reduce(lambda acc, c: acc * c.denominator // gcd(acc, c.denominator),
                   coeffs, 1)
    ints = [int(c * scale) for c in coeffs]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    return [x // g for x in ints] if g > 1 else ints


def _square_root_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """All rational roots of a nonzero univariate polynomial, exactly.

    Raises UnsupportedShapeError when real irrational roots may remain,
    so callers never silently drop solutions.
    """
    c = trim(list(coeffs))
    if not c:
        raise ValueError("zero polynomial has every root")
    if len(c) == 1:
        return []
    ints = _to_integer_coeffs(c)
    roots: list[Fraction] = []
    # peel off roots at zero
    while ints[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        ints = ints[1:]
    work = [Fraction(x) for x in ints]
    for cand in _root_candidates(ints):
        while len(work) > 1 and eval_univar(work, cand) == 0:
            if cand not in roots:
                roots.append(cand)
            work = _deflate(work, cand)
    _check_no_real_roots_left(work)
    return sorted(roots)


def _root_candidates(ints: list[int]) -> list[Fraction]:
    lead, const = abs(ints[-1]), abs(ints[0])
    if const == 0:
        return []
    ps = _divisors(const)
    qs = _divisors(lead)
    cands = {Fraction(sp * p, q) for p in ps for q in qs for sp in (1, -1)}
    return sorted(cands)


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    """Divide by (x - root) via synthetic division; exact since root is a root."""
    n = len(coeffs) - 1
    quotient = [Fraction(0)] * n
    acc = coeffs[n]
    quotient[n - 1] = acc
    for i in range(n - 1, 0, -1):
        acc = coeffs[i] + root * acc
        quotient[i - 1] = acc
    assert coeffs[0] + root * acc == 0
    return trim(quotient)


def _check_no_real_roots_left(work: list[Fraction]) -> None:
    """After deflating rational roots, ensure no real roots are missed."""
    deg = len(work) - 1
    if deg <= 0:
        return
    if deg == 1:
        raise AssertionError("a linear factor always has a rational root")
    if deg == 2:
        a, b, c = work[2], work[1], work[0]
        disc = b * b - 4 * a * c
        if disc < 0:
            return
        if _square_root_exact(disc.numerator * disc.denominator) is None:
            raise UnsupportedShapeError(
                "irrational real roots beyond fixture scale")
        # square discriminant would have produced rational roots already
        raise AssertionError("rational quadratic roots escaped extraction")
    raise UnsupportedShapeError(
        f"residual degree {deg} factor beyond fixture scale")
