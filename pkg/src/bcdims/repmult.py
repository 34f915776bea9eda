"""Multiplicity of a representation of SL2(Z/N) in S_k(Gamma(N)).

A representation enters only through five statistics (dimension, dimension
of unipotent invariants, traces at fixed elements of order 4 and 3, and
dimension of invariants) plus its central sign, so it is stored as that
fingerprint. Fingerprints of coprime-level factors multiply componentwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable

from sympy import isprime

from .errors import InvalidInput
from .quad_local import kronecker


class Parity(enum.IntEnum):
    EVEN = 1
    ODD = -1

    def __mul__(self, other):
        return Parity(int(self) * int(other))

    @classmethod
    def of_weight(cls, k: int) -> Parity:
        return cls.EVEN if k % 2 == 0 else cls.ODD


@dataclass(frozen=True)
class RepData:
    """Fingerprint (dim, dim_u, tr_s4, tr_s3, dim_g, parity) of a virtual representation."""

    dim: int
    dim_u: int
    tr_s4: int
    tr_s3: int
    dim_g: int
    parity: Parity = Parity.EVEN

    def as_tuple(self) -> tuple:
        return (self.dim, self.dim_u, self.tr_s4, self.tr_s3, self.dim_g, self.parity)

    def __matmul__(self, other: RepData) -> RepData:
        return tensor(self, other)


@dataclass(frozen=True)
class WeightCoeffs:
    eps: Fraction
    rho: Fraction
    delta: int


def weight_coeffs(k: int) -> WeightCoeffs:
    if k < 2:
        raise InvalidInput(f"weight k={k} must be at least 2")
    eps = Fraction((-1) ** (k // 2), 4) if k % 2 == 0 else Fraction(0)
    rho = {0: Fraction(1, 3), 1: Fraction(0), 2: Fraction(-1, 3)}[k % 3]
    return WeightCoeffs(eps, rho, int(k == 2))


def multiplicity_terms(sigma: RepData, k: int) -> tuple[Fraction, ...]:
    """The five summands of the multiplicity formula, in order."""
    c = weight_coeffs(k)
    if sigma.parity is not Parity.of_weight(k):
        raise InvalidInput(f"sigma(-I) = {int(sigma.parity)} but weight {k} needs {(-1) ** k}")
    return (
        Fraction(k - 1, 12) * sigma.dim,
        -Fraction(1, 2) * sigma.dim_u,
        c.eps * sigma.tr_s4,
        c.rho * sigma.tr_s3,
        Fraction(c.delta * sigma.dim_g),
    )


def multiplicity(sigma: RepData, k: int) -> Fraction:
    """Exact value of the multiplicity formula; integrality is left to the caller."""
    return sum(multiplicity_terms(sigma, k), Fraction(0))


def tensor(a: RepData, b: RepData) -> RepData:
    return RepData(
        a.dim * b.dim,
        a.dim_u * b.dim_u,
        a.tr_s4 * b.tr_s4,
        a.tr_s3 * b.tr_s3,
        a.dim_g * b.dim_g,
        a.parity * b.parity,
    )


def trivial() -> RepData:
    return RepData(1, 1, 1, 1, 1, Parity.EVEN)


def tensor_all(factors: Iterable[RepData]) -> RepData:
    return reduce(tensor, factors, trivial())


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise InvalidInput(f"{p} is not prime")


def steinberg_minus_trivial(p: int) -> RepData:
    """Virtual [St] - [1] of GL2(F_p); virtual, so dim_g = -1."""
    _require_prime(p)
    return RepData(p - 1, 0, kronecker(-4, p) - 1, kronecker(-3, p) - 1, -1, Parity.EVEN)


def ps_omega(ell: int) -> RepData:
    """Principal series Ind(1, omega) of GL2(F_ell), omega the odd quadratic character."""
    _require_prime(ell)
    if ell % 4 != 3:
        raise InvalidInput(f"ell={ell} must be = 3 mod 4 for the quadratic character to be odd")
    return RepData(ell + 1, 2, kronecker(-4, ell) + 1, kronecker(-3, ell) + 1, 0, Parity.ODD)


def cuspidal_corr(ell: int) -> RepData:
    _require_prime(ell)
    if ell == 2:
        raise InvalidInput("ell must be odd")
    t = 2 * (-1) ** ((ell - 3) // 4) if ell % 4 == 3 else 0
    return RepData(ell - 1, 0, t, kronecker(-3, ell) - 1, 0, Parity.EVEN)
