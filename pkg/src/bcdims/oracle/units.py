"""Brute-force conductors of chi o N_{E/Q_p} on explicit finite unit quotients.

Q_p^* units are modelled mod 1 + p^n by the cyclic group (Z/p^n)^*; the ring
of integers of a quadratic E is modelled mod p^n as pairs (a, b) meaning
a + b*w, with w^2 = eps (unramified, eps a non-residue) or w^2 = u*p
(ramified, w a uniformizer). The norm a^2 - w^2 b^2 is exact mod p^n, which
is all a character of conductor <= n can see.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from sympy import primitive_root

from ..conductor import LocalCharData
from ..quad_local import ExtKind


def _vp(a: int, p: int, cap: int) -> int:
    v = 0
    while v < cap and a % p == 0:
        a //= p
        v += 1
    return v


@dataclass(frozen=True)
class CharCase:
    chi: LocalCharData
    bc_cond: int
    index: int


def _nonresidue(p: int) -> int:
    return next(u for u in range(2, p) if pow(u, (p - 1) // 2, p) == p - 1)


def enumerate_bc_conductors(p: int, kind: ExtKind, n: int = 3) -> list[CharCase]:
    """For every character of Z_p^* of conductor <= n, the data and the conductor of chi o N."""
    if p == 2:
        raise ValueError("odd p only")
    kind = ExtKind(kind)
    q = p**n
    phi = q - q // p
    g = primitive_root(q)
    log = {}
    x = 1
    for t in range(phi):
        log[x] = t
        x = x * g % q

    if kind is ExtKind.UNRAMIFIED:
        w2 = _nonresidue(p)
    elif kind is ExtKind.RAMIFIED_PI:
        w2 = p
    else:
        w2 = _nonresidue(p) * p
    ramified = kind is not ExtKind.UNRAMIFIED
    top = 2 * n if ramified else n

    def level(a: int, b: int) -> int:
        """Largest m <= top with a + b w in U_E^m (a + b w assumed a unit)."""
        a1 = (a - 1) % q
        if ramified:
            return min(2 * _vp(a1, p, n), 2 * _vp(b, p, n) + 1, top)
        return min(_vp(a1, p, n), _vp(b, p, n))

    # gens[m] = gcd of phi and the logs of N(U_E^m)
    gens = [phi] * (top + 1)
    for a in range(q):
        for b in range(q):
            if ramified:
                if a % p == 0:
                    continue
            elif a % p == 0 and b % p == 0:
                continue
            nm = (a * a - w2 * b * b) % q
            t = log[nm]
            m = level(a, b)
            for i in range(m + 1):
                gens[i] = gcd(gens[i], t)

    # same for U_F^i = 1 + p^i in (Z/p^n)^*
    base = [phi] * (n + 1)
    for y, t in log.items():
        m = min(_vp((y - 1) % q, p, n), n)
        for i in range(m + 1):
            base[i] = gcd(base[i], t)

    def conductor(j: int, filt: list[int]) -> int:
        return next(i for i, h in enumerate(filt) if (j * h) % phi == 0)

    cases = []
    for j in range(phi):
        cond = conductor(j, base)
        chi = LocalCharData(cond, (2 * j) % phi == 0)
        cases.append(CharCase(chi, conductor(j, gens), j))
    return cases
