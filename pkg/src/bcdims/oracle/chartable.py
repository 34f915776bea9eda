"""Character table of GL2(F_p) from its four families, and the fingerprints it induces.

Characters take values in Z[zeta_n] with n = p^2 - 1: fix a generator g of
F_{p^2}^*; characters of F_{p^2}^* are x -> zeta_n^(j log x), and characters
of F_p^* are their restrictions. Elements of SL2(F_p) are located in a
conjugacy class by trace and semisimplicity.
"""

from __future__ import annotations

import enum
from functools import cached_property
from itertools import product

from sympy import isprime

from ..errors import InvalidInput
from ..repmult import Parity, RepData
from .cyclotomic import Cyc

SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13)


class Family(enum.Enum):
    STEINBERG_MINUS_TRIVIAL = "st-minus-trivial"
    PRINCIPAL_SERIES_OMEGA = "ps-omega"


class Fp2:
    """F_{p^2} = F_p[s]/(s^2 - nonres), elements as pairs (a, b) = a + b s."""

    def __init__(self, p: int):
        self.p = p
        self.n = p * p - 1
        squares = {(a * a) % p for a in range(1, p)}
        self.nonres = next(u for u in range(1, p) if u not in squares) if p > 2 else None
        elems = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
        for g in elems:
            log, x = {}, (1, 0)
            for t in range(self.n):
                if x in log:
                    break
                log[x] = t
                x = self.mul(x, g)
            if len(log) == self.n:
                self.gen, self.log = g, log
                break

    def mul(self, x, y):
        p = self.p
        a, b = x
        c, d = y
        if p == 2:
            # F_4 = F_2[s]/(s^2 + s + 1)
            return ((a * c + b * d) % 2, (a * d + b * c + b * d) % 2)
        return ((a * c + self.nonres * b * d) % p, (a * d + b * c) % p)


def _classify(field: Fp2, m) -> tuple:
    """GL2 class key of a 2x2 matrix (a, b, c, d) over F_p."""
    p = field.p
    a, b, c, d = m
    t, det = (a + d) % p, (a * d - b * c) % p
    if p == 2:
        roots = [x for x in range(2) if (x * x - t * x + det) % 2 == 0]
        if not roots:
            # eigenvalue s in F_4 with s + s^2 = t = 1
            return ("e", (0, 1))
        if len(roots) == 2:
            return ("s", 0, 1)
        r = roots[0]
        return ("z", r) if (b, c, (a - r) % 2) == (0, 0, 0) else ("u", r)
    disc = (t * t - 4 * det) % p
    if disc == 0:
        r = (t * pow(2, -1, p)) % p
        return ("z", r) if (b % p, c % p, (a - r) % p) == (0, 0, 0) else ("u", r)
    sq = next((s for s in range(p) if (s * s - disc) % p == 0), None)
    if sq is not None:
        inv2 = pow(2, -1, p)
        r1, r2 = ((t + sq) * inv2) % p, ((t - sq) * inv2) % p
        return ("s", min(r1, r2), max(r1, r2))
    # elliptic: need a root of x^2 - t x + det; pick the one with positive s-part
    inv2 = pow(2, -1, p)
    c0 = next(c for c in range(1, p) if (field.nonres * c * c - disc) % p == 0)
    x = ((t * inv2) % p, min(c0 * inv2 % p, (-c0 * inv2) % p))
    return ("e", x)


class GL2CharTable:
    def __init__(self, p: int):
        if not isprime(p) or p not in SUPPORTED_PRIMES:
            raise InvalidInput(f"character table oracle supports p in {SUPPORTED_PRIMES}, got {p}")
        self.p = p
        self.F = Fp2(p)
        self.n = self.F.n

    # exponents of zeta_n -------------------------------------------------
    def lg(self, a: int) -> int:
        """log_g of a in F_p^*."""
        return self.F.log[(a % self.p, 0)]

    def lgx(self, x) -> int:
        return self.F.log[x]

    def norm_log(self, x) -> int:
        return (self.p + 1) * self.lgx(x)

    def frob_log(self, x) -> int:
        return self.p * self.lgx(x)

    def z(self, e: int, coeff: int = 1) -> Cyc:
        return Cyc.root(self.n, e, coeff)

    # classes -------------------------------------------------------------
    @cached_property
    def gl2_classes(self) -> list[tuple[tuple, int]]:
        """(class key, class size) for all conjugacy classes of GL2(F_p)."""
        p, F = self.p, self.F
        out = []
        for a in range(1, p):
            out.append((("z", a), 1))
            out.append((("u", a), p * p - 1))
        for a in range(1, p):
            for b in range(a + 1, p):
                out.append((("s", a, b), p * p + p))
        seen = set()
        for x in F.log:
            if x[1] == 0 or x in seen:
                continue
            xp = self._frob(x)
            seen.update({x, xp})
            out.append((("e", self._elliptic_rep(x)), p * p - p))
        return out

    def _frob(self, x):
        y = (1, 0)
        for _ in range(self.p):
            y = self.F.mul(y, x)
        return y

    def _elliptic_rep(self, x):
        """Canonical member of {x, x^p}, matching _classify."""
        if self.p == 2:
            return (0, 1)
        return (x[0], min(x[1], (-x[1]) % self.p))

    @property
    def gl2_order(self) -> int:
        p = self.p
        return (p * p - 1) * (p * p - p)

    # characters ----------------------------------------------------------
    def one_dim(self, i: int):
        """alpha o det with alpha = chi_i."""

        def chi(key):
            kind = key[0]
            if kind in ("z", "u"):
                return self.z(i * 2 * self.lg(key[1]))
            if kind == "s":
                return self.z(i * (self.lg(key[1]) + self.lg(key[2])))
            return self.z(i * self.norm_log(key[1]))

        return chi

    def steinberg(self, i: int):
        p = self.p

        def chi(key):
            kind = key[0]
            if kind == "z":
                return self.z(i * 2 * self.lg(key[1]), p)
            if kind == "u":
                return Cyc(self.n)
            if kind == "s":
                return self.z(i * (self.lg(key[1]) + self.lg(key[2])))
            return self.z(i * self.norm_log(key[1]), -1)

        return chi

    def principal_series(self, i: int, j: int):
        p = self.p

        def chi(key):
            kind = key[0]
            if kind in ("z", "u"):
                la = self.lg(key[1])
                return self.z((i + j) * la, p + 1 if kind == "z" else 1)
            if kind == "s":
                la, lb = self.lg(key[1]), self.lg(key[2])
                return self.z(i * la + j * lb) + self.z(i * lb + j * la)
            return Cyc(self.n)

        return chi

    def cuspidal(self, j: int):
        p = self.p

        def chi(key):
            kind = key[0]
            if kind in ("z", "u"):
                la = self.lg(key[1])
                return self.z(j * la, p - 1 if kind == "z" else -1)
            if kind == "s":
                return Cyc(self.n)
            x = key[1]
            return -(self.z(j * self.lgx(x)) + self.z(j * self.frob_log(x)))

        return chi

    def irreducibles(self) -> dict[tuple, object]:
        """All irreducible characters, keyed by (family, parameters).

        For p = 2 the indexing still works: F_2^* is trivial.
        """
        p, n = self.p, self.n
        chars = {}
        m = p - 1
        # characters of F_p^* as exponents i*(p+1) acting on logs that are multiples of p+1
        fp_chars = [i for i in range(m)]
        for i in fp_chars:
            chars[("1", i)] = self.one_dim(i)
            chars[("St", i)] = self.steinberg(i)
        for a in range(m):
            for b in range(a + 1, m):
                chars[("PS", a, b)] = self.principal_series(a, b)
        seen = set()
        for j in range(n):
            jp = (j * p) % n
            if j == jp or j in seen:
                continue
            seen.update({j, jp})
            chars[("X", j)] = self.cuspidal(j)
        return chars

    def quadratic_index(self) -> int:
        """Index i with chi_i the quadratic character of F_p^*."""
        return (self.p - 1) // 2

    def inner(self, chi1, chi2) -> Cyc:
        total = Cyc(self.n)
        for key, size in self.gl2_classes:
            total = total + (chi1(key) * chi2(key).conj()).scale(size)
        return total

    # restriction to SL2 --------------------------------------------------
    @cached_property
    def sl2_class_counts(self) -> dict[tuple, int]:
        p = self.p
        counts: dict[tuple, int] = {}
        for m in product(range(p), repeat=4):
            if (m[0] * m[3] - m[1] * m[2]) % p == 1:
                key = _classify(self.F, m)
                counts[key] = counts.get(key, 0) + 1
        return counts

    def classify(self, m) -> tuple:
        return _classify(self.F, tuple(v % self.p for v in m))

    def fingerprint(self, chi, parity: Parity) -> RepData:
        p = self.p
        dim = chi(("z", 1)).to_int()
        unip = chi(("z", 1)) + chi(("u", 1)).scale(p - 1)
        dim_u = unip.rational_over(p)
        tr4 = chi(self.classify((0, -1, 1, 0))).to_int()
        tr3 = chi(self.classify((0, -1, 1, -1))).to_int()
        total = Cyc(self.n)
        for key, cnt in self.sl2_class_counts.items():
            total = total + chi(key).scale(cnt)
        order = sum(self.sl2_class_counts.values())
        dim_g = total.rational_over(order)
        if dim_u.denominator != 1 or dim_g.denominator != 1:
            raise ValueError("non-integral invariant dimension")
        return RepData(dim, int(dim_u), tr4, tr3, int(dim_g), parity)

    def central_sign(self, chi) -> int:
        """sigma(-I) / dim sigma."""
        if self.p == 2:
            return 1
        return chi(("z", self.p - 1)).to_int() // chi(("z", 1)).to_int()


def virtual(*terms):
    """Integer combination of characters: virtual((1, chi_a), (-1, chi_b), ...)."""

    def chi(key):
        total = None
        for c, f in terms:
            v = f(key).scale(c)
            total = v if total is None else total + v
        return total

    return chi


def char_table_repdata(p: int, which: Family) -> RepData:
    which = Family(which)
    table = GL2CharTable(p)
    if which is Family.STEINBERG_MINUS_TRIVIAL:
        chi = virtual((1, table.steinberg(0)), (-1, table.one_dim(0)))
    else:
        if p == 2 or p % 4 != 3:
            raise InvalidInput(f"principal series with odd quadratic character needs p = 3 mod 4, got {p}")
        chi = table.principal_series(0, table.quadratic_index())
    parity = Parity.EVEN if table.central_sign(chi) == 1 else Parity.ODD
    return table.fingerprint(chi, parity)
