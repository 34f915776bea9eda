"""Dimension of the base-change subspace of new Bianchi cusp forms.

For even weight the count is dim S_k(Gamma0(N))^new plus half the corr
space; for odd weight it is half the omega-nebentypus newspace. The halves
come from the base change map being two-to-one on forms of local type 2 or
3 at ell. CM forms are not removed, so the raw value can be a half-integer;
such reports carry ``integral = False``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from sympy import isprime

from .errors import InvalidInput
from .newspace import LevelSpec, dim_corr, dim_new_omega, dim_new_trivial
from .quad_local import ImagQuadField
from .repmult import Parity

CM_WARNING = "CM forms contribute; their correction is out of scope"


def bianchi_weight_to_elliptic(k_bianchi: int) -> int:
    if not isinstance(k_bianchi, int) or k_bianchi < 0:
        raise InvalidInput(f"Bianchi weight {k_bianchi} must be a nonnegative integer")
    return k_bianchi + 2


@dataclass(frozen=True)
class BianchiSetup:
    K: ImagQuadField
    N: LevelSpec
    k_elliptic: int
    ell: int = field(init=False)

    def __post_init__(self):
        ell = self.K.D
        if not isprime(ell):
            raise InvalidInput(f"discriminant {self.K.disc} is not (minus) a prime")
        if gcd(self.N.N, ell) != 1:
            raise InvalidInput(f"level {self.N.N} is not coprime to the discriminant {self.K.disc}")
        if not isinstance(self.k_elliptic, int) or self.k_elliptic < 2:
            raise InvalidInput(f"weight {self.k_elliptic} must be at least 2")
        object.__setattr__(self, "ell", ell)

    @classmethod
    def from_ints(cls, disc: int, N: int, k_elliptic: int) -> BianchiSetup:
        return cls(ImagQuadField.from_disc(disc), LevelSpec(N), k_elliptic)


@dataclass(frozen=True)
class BianchiDimReport:
    value: Fraction
    integral: bool
    old_part: int | None
    corr_or_omega_part: int
    parity_used: Parity

    @property
    def warning(self) -> str | None:
        return None if self.integral else CM_WARNING


def bs_bc_dim(setup: BianchiSetup) -> BianchiDimReport:
    k, N, ell = setup.k_elliptic, setup.N, setup.ell
    if k % 2 == 0:
        old = dim_new_trivial(N, k)
        twisted = dim_corr(N, ell, k)
        value = old + Fraction(twisted, 2)
        parity = Parity.EVEN
    else:
        old = None
        twisted = dim_new_omega(N, ell, k)
        value = Fraction(twisted, 2)
        parity = Parity.ODD
    return BianchiDimReport(value, value.denominator == 1, old, twisted, parity)
