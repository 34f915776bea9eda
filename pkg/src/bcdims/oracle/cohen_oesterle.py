"""Dimensions of S_k(Gamma0(M), chi) for trivial or quadratic chi.

Independent of the multiplicity engine: weight 2 with trivial character
uses the genus of X0(M); everything else uses the Cohen-Oesterle formula,
where the M_{2-k} correction vanishes (k >= 3, or k = 2 with chi != 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from sympy import divisors, factorint, totient

from ..errors import InternalConsistencyError, InvalidInput
from ..quad_local import kronecker


@dataclass(frozen=True)
class QuadraticChar:
    """The Kronecker character of an odd fundamental discriminant."""

    disc: int

    def __post_init__(self):
        d = self.disc
        if d % 2 == 0 or d % 4 != 1 or d == 1 or any(e > 1 for e in factorint(abs(d)).values()):
            raise InvalidInput(f"{d} is not an odd fundamental discriminant")

    @classmethod
    def of_conductor(cls, c: int) -> QuadraticChar:
        return cls(c if c % 4 == 1 else -c)

    @property
    def conductor(self) -> int:
        return abs(self.disc)

    @property
    def is_odd(self) -> bool:
        return self.disc < 0

    def __call__(self, x: int) -> int:
        return kronecker(self.disc, x)


TRIVIAL = None  # trivial character marker


@dataclass(frozen=True)
class OracleSpace:
    M: int
    chi: QuadraticChar | None
    k: int

    def __post_init__(self):
        if self.M < 1:
            raise InvalidInput("level must be positive")
        if self.k < 2:
            raise InvalidInput("weight must be at least 2")
        if self.chi is not None and self.M % self.chi.conductor:
            raise InvalidInput(f"conductor {self.chi.conductor} does not divide level {self.M}")
        odd_char = self.chi is not None and self.chi.is_odd
        if odd_char != (self.k % 2 == 1):
            raise InvalidInput(f"character parity does not match weight {self.k}")


def _lam(r: int, s: int, p: int) -> int:
    if 2 * s <= r:
        if r % 2 == 0:
            return p ** (r // 2) + p ** (r // 2 - 1)
        return 2 * p ** ((r - 1) // 2)
    return 2 * p ** (r - s)


def _char_sum(M: int, chi: QuadraticChar | None, poly) -> int:
    total = 0
    for x in range(M):
        if poly(x) % M == 0 and gcd(x, M) == 1:
            total += 1 if chi is None else chi(x)
    return total


def genus_x0(M: int) -> int:
    fac = factorint(M)
    index = Fraction(M) * prod(Fraction(p + 1, p) for p in fac)
    nu2 = 0 if M % 4 == 0 else prod(1 + kronecker(-4, p) for p in fac)
    nu3 = 0 if M % 9 == 0 else prod(1 + kronecker(-3, p) for p in fac)
    cusps = sum(int(totient(gcd(d, M // d))) for d in divisors(M))
    g = 1 + index / 12 - Fraction(nu2, 4) - Fraction(nu3, 3) - Fraction(cusps, 2)
    if g.denominator != 1:
        raise InternalConsistencyError(f"genus of X0({M}) came out as {g}")
    return int(g)


def cohen_oesterle_terms(space: OracleSpace) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """The four summands: volume, cusp correction, order-4 and order-3 elliptic terms."""
    M, chi, k = space.M, space.chi, space.k
    fac = factorint(M)
    cond = factorint(chi.conductor) if chi is not None else {}
    eps = Fraction((-1) ** (k // 2), 4) if k % 2 == 0 else Fraction(0)
    mu = {0: Fraction(1, 3), 1: Fraction(0), 2: Fraction(-1, 3)}[k % 3]
    return (
        Fraction(k - 1, 12) * M * prod(Fraction(p + 1, p) for p in fac),
        -Fraction(1, 2) * prod(_lam(r, cond.get(p, 0), p) for p, r in fac.items()),
        eps * _char_sum(M, chi, lambda x: x * x + 1),
        mu * _char_sum(M, chi, lambda x: x * x + x + 1),
    )


def cohen_oesterle_value(space: OracleSpace) -> Fraction:
    """dim S_k(Gamma0(M), chi) - dim M_{2-k}(Gamma0(M), chi)."""
    return sum(cohen_oesterle_terms(space), Fraction(0))


def co_dim(space: OracleSpace) -> int:
    if space.k == 2 and space.chi is None:
        return genus_x0(space.M)
    value = cohen_oesterle_value(space)
    if value.denominator != 1 or value < 0:
        raise InternalConsistencyError(f"Cohen-Oesterle gave {value} for {space}")
    return int(value)


def _beta(n: int) -> int:
    out = 1
    for e in factorint(n).values():
        out *= {1: -2, 2: 1}.get(e, 0)
    return out


def newspace_inversion(M: int, chi: QuadraticChar | None, k: int) -> int:
    """New-subspace dimension at level M by sieving out oldforms."""
    c = chi.conductor if chi is not None else 1
    total = 0
    for m in divisors(M):
        if m % c == 0:
            total += _beta(M // m) * co_dim(OracleSpace(m, chi, k))
    return total
