"""Conductor exponents of quadratic base change for GL(1) and GL(2) local data."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from sympy import isprime

from .errors import InvalidInput, UnsupportedInput
from .quad_local import (
    ExtKind,
    ImagQuadField,
    QuadExtClass,
    RelQuadExt,
    Splitting,
    compositum_over,
    localize,
    rel_data,
    splitting_type,
)


@dataclass(frozen=True)
class LocalCharData:
    """A local character, reduced to the data the conductor formulas read.

    ``cond`` is the conductor exponent; ``unit_order_le_2`` records whether
    the restriction to the unit group has order dividing 2.
    """

    cond: int
    unit_order_le_2: bool = False

    def __post_init__(self):
        if self.cond < 0:
            raise InvalidInput("conductor exponent must be nonnegative")
        if self.cond == 0 and not self.unit_order_le_2:
            # unramified characters are trivial on units
            object.__setattr__(self, "unit_order_le_2", True)


UNRAMIFIED_CHAR = LocalCharData(0, True)


@dataclass(frozen=True)
class PrincipalSeries:
    chi1: LocalCharData
    chi2: LocalCharData


@dataclass(frozen=True)
class Special:
    """Twisted Steinberg chi (x) St."""

    chi: LocalCharData


@dataclass(frozen=True)
class Supercuspidal:
    """Dihedral supercuspidal attached to (E, theta), theta a regular character of E*."""

    E: QuadExtClass
    theta: LocalCharData

    def __post_init__(self):
        t = self.theta
        if not self.E.ramified and t.cond <= 1 and t.unit_order_le_2:
            raise InvalidInput("theta is fixed by Gal(E/Q_p) and so is not regular")


def UnramifiedPS() -> PrincipalSeries:
    return PrincipalSeries(UNRAMIFIED_CHAR, UNRAMIFIED_CHAR)


LocalRepType = Union[PrincipalSeries, Special, Supercuspidal]


@dataclass(frozen=True)
class LevelEntry:
    p: int
    splitting: Splitting
    exponents: tuple[int, ...]

    def to_json(self) -> dict:
        return {"p": self.p, "splitting": self.splitting.value, "exponents": list(self.exponents)}


@dataclass(frozen=True)
class BCLevelReport:
    disc: int
    entries: tuple[LevelEntry, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {"disc": self.disc, "entries": [e.to_json() for e in self.entries]}


def _check_tame(ext: RelQuadExt) -> None:
    if not ext.tame:
        raise UnsupportedInput("wild ramification unsupported")


def bc_char_conductor(ext: RelQuadExt, chi: LocalCharData) -> int:
    """Conductor exponent of chi composed with the norm of ``ext``."""
    _check_tame(ext)
    if not ext.ramified:
        return chi.cond
    m = chi.cond
    if m == 0:
        return 0
    if m == 1:
        return 0 if chi.unit_order_le_2 else 1
    return ext.e * (m - 1) + 1


def bc_ps_conductor(ext: RelQuadExt, chi1: LocalCharData, chi2: LocalCharData) -> int:
    return bc_char_conductor(ext, chi1) + bc_char_conductor(ext, chi2)


def _special_from_twist(a: int) -> int:
    return 1 if a == 0 else 2 * a


def bc_special_conductor(ext: RelQuadExt, chi: LocalCharData) -> int:
    return _special_from_twist(bc_char_conductor(ext, chi))


def ai_conductor(E_over_base: RelQuadExt, theta: LocalCharData) -> int:
    """Conductor exponent of the representation induced from theta: f * (d + a(theta))."""
    _check_tame(E_over_base)
    return E_over_base.f * (E_over_base.d + theta.cond)


def bc_supercuspidal_conductor(Kp: QuadExtClass, E: QuadExtClass, theta: LocalCharData) -> int:
    """Conductor of the base change to Kp of the supercuspidal attached to (E, theta).

    If E = Kp the restricted Galois representation splits as theta + theta^sigma.
    Otherwise it is induced from the compositum EKp, and the induction
    conductor is evaluated with theta composed with the norm from EKp to E.
    """
    if Kp.p != E.p:
        raise InvalidInput(f"E lives over p={E.p}, Kp over p={Kp.p}")
    Supercuspidal(E, theta)  # regularity check
    if E.kind is Kp.kind:
        return 2 * theta.cond
    over_kp, over_e = compositum_over(E, Kp)
    a = bc_char_conductor(over_e, theta)
    _check_tame(over_kp)
    return over_kp.f * (over_kp.d + a)


def rep_conductor(rep: LocalRepType) -> int:
    """Conductor exponent over Q_p."""
    if isinstance(rep, PrincipalSeries):
        return rep.chi1.cond + rep.chi2.cond
    if isinstance(rep, Special):
        return _special_from_twist(rep.chi.cond)
    if isinstance(rep, Supercuspidal):
        return ai_conductor(rel_data(rep.E), rep.theta)
    raise InvalidInput(f"unknown local representation type {rep!r}")


def bc_local_conductor(splitting: Splitting, Kp: QuadExtClass | None, rep: LocalRepType) -> int:
    if splitting is Splitting.RAMIFIED:
        if Kp is None:
            raise InvalidInput("ramified prime requires the local extension Kp")
        ext = rel_data(Kp)
        if isinstance(rep, PrincipalSeries):
            return bc_ps_conductor(ext, rep.chi1, rep.chi2)
        if isinstance(rep, Special):
            return bc_special_conductor(ext, rep.chi)
        if isinstance(rep, Supercuspidal):
            return bc_supercuspidal_conductor(Kp, rep.E, rep.theta)
        raise InvalidInput(f"unknown local representation type {rep!r}")
    if Kp is not None:
        raise InvalidInput("Kp is only given at ramified primes")
    return rep_conductor(rep)


def bc_level(K: ImagQuadField, local_data: Mapping[int, LocalRepType]) -> BCLevelReport:
    """Conductor exponents of BC(pi) at every prime of K above a listed p.

    Primes not listed carry unramified principal series and contribute nothing.
    """
    entries = []
    for p in sorted(local_data):
        if not isprime(p):
            raise InvalidInput(f"{p} is not prime")
        rep = local_data[p]
        if isinstance(rep, Supercuspidal) and rep.E.p != p:
            raise InvalidInput(f"supercuspidal at {p} built over p={rep.E.p}")
        s = splitting_type(K, p)
        Kp = localize(K, p) if s is Splitting.RAMIFIED else None
        a = bc_local_conductor(s, Kp, rep)
        exps = (a, a) if s is Splitting.SPLIT else (a,)
        entries.append(LevelEntry(p, s, exps))
    return BCLevelReport(K.disc, tuple(entries))


__all__ = [
    "ExtKind",
    "LocalCharData",
    "PrincipalSeries",
    "Special",
    "Supercuspidal",
    "UnramifiedPS",
    "LocalRepType",
    "LevelEntry",
    "BCLevelReport",
    "bc_char_conductor",
    "bc_ps_conductor",
    "bc_special_conductor",
    "bc_supercuspidal_conductor",
    "ai_conductor",
    "rep_conductor",
    "bc_local_conductor",
    "bc_level",
]
