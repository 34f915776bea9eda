"""Exact arithmetic in Z[zeta_n], just enough for character sums."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from sympy import Poly, cyclotomic_poly, symbols

_x = symbols("x")


@lru_cache(maxsize=None)
def _phi(n: int) -> Poly:
    return Poly(cyclotomic_poly(n, _x), _x)


class Cyc:
    """Integer combination of powers of zeta_n, stored as {exponent: coefficient}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = Counter()
        for e, c in (terms or {}).items():
            if c:
                self.terms[e % n] += c

    @classmethod
    def root(cls, n: int, e: int, coeff: int = 1) -> Cyc:
        return cls(n, {e: coeff})

    @classmethod
    def const(cls, n: int, c: int) -> Cyc:
        return cls(n, {0: c})

    def __add__(self, other: Cyc) -> Cyc:
        out = Cyc(self.n, self.terms)
        out.terms.update(other.terms)
        return out

    def __neg__(self) -> Cyc:
        return Cyc(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Cyc) -> Cyc:
        return self + (-other)

    def scale(self, c: int) -> Cyc:
        return Cyc(self.n, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: Cyc) -> Cyc:
        out = Counter()
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[(e1 + e2) % self.n] += c1 * c2
        return Cyc(self.n, out)

    def conj(self) -> Cyc:
        return Cyc(self.n, {-e: c for e, c in self.terms.items()})

    def reduced(self) -> list[int]:
        """Coefficients (low degree first) of the canonical representative mod Phi_n."""
        if not any(self.terms.values()):
            return []
        top = max(self.terms)
        coeffs = [0] * (top + 1)
        for e, c in self.terms.items():
            coeffs[e] += c
        r = Poly(list(reversed(coeffs)), _x).rem(_phi(self.n))
        out = [int(c) for c in reversed(r.all_coeffs())]
        while out and out[-1] == 0:
            out.pop()
        return out

    def to_int(self) -> int:
        """The value as a rational integer; raises ValueError if it is not one."""
        r = self.reduced()
        if len(r) > 1:
            raise ValueError(f"not a rational integer: {r}")
        return r[0] if r else 0

    def rational_over(self, denom: int) -> Fraction:
        return Fraction(self.to_int(), denom)
