"""Quadratic extensions of Q_p (p odd) and imaginary quadratic fields of odd discriminant.

Only extension invariants are modelled: for p odd there are exactly three
quadratic extensions of Q_p, namely the unramified one, Q_p(sqrt(p)) and
Q_p(sqrt(u*p)) with u a non-residue unit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from sympy import factorint, isprime
from sympy.functions.combinatorial.numbers import kronecker_symbol

from .errors import InvalidInput, UnsupportedInput


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), n != 0."""
    if n == 0:
        raise InvalidInput("kronecker symbol requires n != 0")
    return int(kronecker_symbol(a, n))


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for e in factorint(n).values())


def prime_divisors(n: int) -> list[int]:
    return sorted(factorint(abs(n)))


class ExtKind(enum.Enum):
    UNRAMIFIED = "unram"
    RAMIFIED_PI = "ram-pi"
    RAMIFIED_EPS_PI = "ram-epspi"

    @property
    def ramified(self) -> bool:
        return self is not ExtKind.UNRAMIFIED


class Splitting(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class RelQuadExt:
    """Invariants (e, f, d) of a relative quadratic extension.

    ``d`` is the exponent of the different. The extension is tame when
    ``d == e - 1``; anything else can only come from wild ramification at 2.
    ``p`` is the residue characteristic when known.
    """

    e: int
    f: int
    d: int
    p: int | None = None

    def __post_init__(self):
        if self.e not in (1, 2) or self.e * self.f != 2:
            raise InvalidInput(f"not a quadratic extension: e={self.e}, f={self.f}")
        if self.d < 0:
            raise InvalidInput("different exponent must be nonnegative")
        if self.e == 1 and self.d != 0:
            raise InvalidInput("unramified extension has different exponent 0")
        if self.e == 2 and self.d < 1:
            raise InvalidInput("ramified extension has different exponent >= 1")

    @property
    def ramified(self) -> bool:
        return self.e == 2

    @property
    def tame(self) -> bool:
        if self.e == 2 and self.p == 2:
            return False
        return self.d == self.e - 1


UNRAMIFIED_DATA = RelQuadExt(1, 2, 0)
TAME_RAMIFIED_DATA = RelQuadExt(2, 1, 1)


@dataclass(frozen=True)
class QuadExtClass:
    kind: ExtKind
    p: int

    def __post_init__(self):
        if not isinstance(self.kind, ExtKind):
            object.__setattr__(self, "kind", ExtKind(self.kind))
        if not isprime(self.p):
            raise InvalidInput(f"{self.p} is not prime")
        if self.p == 2:
            raise UnsupportedInput("wild ramification unsupported: quadratic extensions of Q_2 are not modelled")

    @property
    def ramified(self) -> bool:
        return self.kind.ramified


def rel_data(ext: QuadExtClass) -> RelQuadExt:
    """(e, f, d) of ``ext`` over Q_p."""
    if ext.ramified:
        return RelQuadExt(2, 1, 1, ext.p)
    return RelQuadExt(1, 2, 0, ext.p)


def compositum_over(E: QuadExtClass, Kp: QuadExtClass) -> tuple[RelQuadExt, RelQuadExt]:
    """Relative data of ``E*Kp`` over ``Kp`` and over ``E``, for distinct E, Kp.

    The compositum is the biquadratic extension containing all three
    quadratic extensions of Q_p; it has e = f = 2 over Q_p, so it is
    unramified over each ramified quadratic subfield and ramified over the
    unramified one.
    """
    if E.p != Kp.p:
        raise InvalidInput(f"extensions live over different primes ({E.p}, {Kp.p})")
    if E.kind is Kp.kind:
        raise InvalidInput("degenerate compositum: E equals Kp")

    def over(base: QuadExtClass) -> RelQuadExt:
        if base.ramified:
            return RelQuadExt(1, 2, 0, base.p)
        return RelQuadExt(2, 1, 1, base.p)

    return over(Kp), over(E)


@dataclass(frozen=True)
class ImagQuadField:
    """Q(sqrt(-D)) with D square-free and D = 3 mod 4, so disc = -D is odd."""

    D: int
    disc: int = field(init=False)
    ramified_primes: frozenset[int] = field(init=False)

    def __post_init__(self):
        D = self.D
        if D <= 0 or not is_squarefree(D):
            raise InvalidInput(f"D={D} must be a positive square-free integer")
        if D % 4 != 3:
            raise UnsupportedInput(f"Q(sqrt(-{D})) has even discriminant; only odd discriminants are supported")
        object.__setattr__(self, "disc", -D)
        object.__setattr__(self, "ramified_primes", frozenset(prime_divisors(D)))

    @classmethod
    def from_disc(cls, disc: int) -> ImagQuadField:
        if disc >= 0:
            raise InvalidInput("discriminant of an imaginary quadratic field is negative")
        if disc % 2 == 0:
            raise UnsupportedInput(f"discriminant {disc} is even; 2 must be unramified")
        K = cls(-disc)
        return K


def splitting_type(K: ImagQuadField, p: int) -> Splitting:
    if not isprime(p):
        raise InvalidInput(f"{p} is not prime")
    s = kronecker(K.disc, p)
    if s == 0:
        return Splitting.RAMIFIED
    return Splitting.SPLIT if s == 1 else Splitting.INERT


def localize(K: ImagQuadField, p: int) -> QuadExtClass:
    """Completion of K at the prime above a ramified odd p.

    K_p = Q_p(sqrt(p * u)) with u = disc/p, so the answer is Q_p(sqrt(p))
    exactly when u is a square mod p.
    """
    if p == 2 or K.disc % p != 0:
        raise UnsupportedInput(f"p={p} is not an odd prime ramified in Q(sqrt({K.disc}))")
    u = K.disc // p
    kind = ExtKind.RAMIFIED_PI if kronecker(u, p) == 1 else ExtKind.RAMIFIED_EPS_PI
    return QuadExtClass(kind, p)
