"""Dimensions of the three elliptic newform spaces feeding the Bianchi count.

Each dimension is the multiplicity of a tensor product of local factors,
one Steinberg-minus-trivial per prime of N and one factor at ell. The
``closed_form_*`` functions are the literal product formulas; they agree
with the engine only when N > 1, because for N = 1 the unipotent term of
the engine no longer vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod

from .errors import InternalConsistencyError, InvalidInput
from .quad_local import is_squarefree, kronecker, prime_divisors
from .repmult import (
    RepData,
    cuspidal_corr,
    multiplicity,
    ps_omega,
    steinberg_minus_trivial,
    tensor,
    tensor_all,
    weight_coeffs,
)


@dataclass(frozen=True)
class LevelSpec:
    N: int
    primes: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 1 or not is_squarefree(self.N):
            raise InvalidInput(f"level N={self.N} must be a square-free positive integer")
        object.__setattr__(self, "primes", tuple(prime_divisors(self.N)))

    @property
    def div_n(self) -> int:
        return len(self.primes)


def _level(N) -> LevelSpec:
    return N if isinstance(N, LevelSpec) else LevelSpec(N)


def steinberg_part(N: LevelSpec) -> RepData:
    return tensor_all(steinberg_minus_trivial(p) for p in N.primes)


def _as_dimension(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise InternalConsistencyError(f"{what} evaluated to {value}, not a nonnegative integer")
    return value.numerator


def _check_weight(k: int, parity: int) -> None:
    if not isinstance(k, int) or k < 2 or k % 2 != parity:
        kind = "even k >= 2" if parity == 0 else "odd k >= 3"
        raise InvalidInput(f"weight k={k}: expected {kind}")


def _check_ell(N: LevelSpec, ell: int) -> None:
    if gcd(N.N, ell) != 1:
        raise InvalidInput(f"N={N.N} is not coprime to ell={ell}")


def dim_new_trivial(N, k: int) -> int:
    """dim S_k(Gamma0(N))^new for square-free N and even k."""
    N = _level(N)
    _check_weight(k, 0)
    return _as_dimension(multiplicity(steinberg_part(N), k), f"dim S_{k}(Gamma0({N.N}))^new")


def dim_new_omega(N, ell: int, k: int) -> int:
    """dim S_k(Gamma0(N*ell), omega_K)^new for odd k, omega_K of conductor ell."""
    N = _level(N)
    _check_weight(k, 1)
    sigma = tensor(ps_omega(ell), steinberg_part(N))
    _check_ell(N, ell)
    return _as_dimension(multiplicity(sigma, k), f"dim S_{k}(Gamma0({N.N}*{ell}), omega)^new")


def dim_corr(N, ell: int, k: int) -> int:
    """Dimension of the level N*ell^2 forms that are supercuspidal of depth zero at ell."""
    N = _level(N)
    _check_weight(k, 0)
    sigma = tensor(cuspidal_corr(ell), steinberg_part(N))
    _check_ell(N, ell)
    return _as_dimension(multiplicity(sigma, k), f"dim S_{k}(Gamma0({N.N}*{ell}^2))^corr")


def _products(N: LevelSpec):
    return (
        prod(p - 1 for p in N.primes),
        prod(kronecker(-4, p) - 1 for p in N.primes),
        prod(kronecker(-3, p) - 1 for p in N.primes),
    )


def closed_form_new_trivial(N, k: int) -> Fraction:
    N = _level(N)
    c = weight_coeffs(k)
    a, b, r = _products(N)
    return Fraction(k - 1, 12) * a + c.eps * b + c.rho * r + c.delta * (-1) ** N.div_n


def closed_form_new_omega(N, ell: int, k: int) -> Fraction:
    N = _level(N)
    c = weight_coeffs(k)
    a, b, r = _products(N)
    return (
        Fraction(k - 1, 12) * (ell + 1) * a
        + c.eps * (kronecker(-4, ell) + 1) * b
        + c.rho * (kronecker(-3, ell) + 1) * r
    )


def closed_form_corr(N, ell: int, k: int) -> Fraction:
    N = _level(N)
    c = weight_coeffs(k)
    a, b, r = _products(N)
    tr4 = 2 * (-1) ** ((ell - 3) // 4) if ell % 4 == 3 else 0
    return (
        Fraction(k - 1, 12) * (ell - 1) * a
        + c.eps * tr4 * b
        + c.rho * (kronecker(-3, ell) - 1) * r
    )
