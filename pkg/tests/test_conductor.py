import pytest
from hypothesis import given, strategies as st

from bcdims.conductor import (
    LocalCharData,
    PrincipalSeries,
    Special,
    Supercuspidal,
    UnramifiedPS,
    ai_conductor,
    bc_char_conductor,
    bc_level,
    bc_local_conductor,
    bc_ps_conductor,
    bc_special_conductor,
    bc_supercuspidal_conductor,
    rep_conductor,
)
from bcdims.errors import InvalidInput, UnsupportedInput
from bcdims.oracle.units import enumerate_bc_conductors
from bcdims.quad_local import (
    ExtKind,
    ImagQuadField,
    QuadExtClass,
    RelQuadExt,
    Splitting,
    compositum_over,
    localize,
    rel_data,
)

RAM = RelQuadExt(2, 1, 1, 5)
UNRAM = RelQuadExt(1, 2, 0, 5)
U, P, EP = ExtKind.UNRAMIFIED, ExtKind.RAMIFIED_PI, ExtKind.RAMIFIED_EPS_PI


def ch(cond, order2=False):
    return LocalCharData(cond, order2)


def test_char_conductor_examples():
    assert bc_char_conductor(RAM, ch(0)) == 0
    assert bc_char_conductor(RAM, ch(1, True)) == 0
    assert bc_char_conductor(RAM, ch(1)) == 1
    assert bc_char_conductor(RAM, ch(2)) == 3
    assert bc_char_conductor(UNRAM, ch(3)) == 3


def test_unramified_char_normalised():
    assert LocalCharData(0, False).unit_order_le_2
    with pytest.raises(InvalidInput):
        LocalCharData(-1)


def test_wild_rejected():
    for ext in (RelQuadExt(2, 1, 2), RelQuadExt(2, 1, 3), RelQuadExt(2, 1, 1, p=2)):
        with pytest.raises(UnsupportedInput):
            bc_char_conductor(ext, ch(2))
        with pytest.raises(UnsupportedInput):
            ai_conductor(ext, ch(1))


def test_ps_examples():
    assert bc_ps_conductor(RAM, ch(0), ch(0)) == 0
    assert bc_ps_conductor(RAM, ch(1, True), ch(2)) == 3
    assert bc_ps_conductor(UNRAM, ch(1), ch(1)) == 2


def test_special_examples():
    assert bc_special_conductor(RAM, ch(0)) == 1
    assert bc_special_conductor(RAM, ch(1, True)) == 1
    assert bc_special_conductor(RAM, ch(1)) == 2
    assert bc_special_conductor(RAM, ch(3)) == 10


def q(kind, p=5):
    return QuadExtClass(kind, p)


def test_supercuspidal_examples():
    assert bc_supercuspidal_conductor(q(P), q(P), ch(1)) == 2
    assert bc_supercuspidal_conductor(q(P), q(U), ch(2)) == 6
    assert bc_supercuspidal_conductor(q(P), q(EP), ch(2)) == 4


def test_supercuspidal_regularity():
    with pytest.raises(InvalidInput):
        Supercuspidal(q(U), ch(1, True))
    with pytest.raises(InvalidInput):
        Supercuspidal(q(U), ch(0))
    Supercuspidal(q(U), ch(1))
    Supercuspidal(q(P), ch(0))
    with pytest.raises(InvalidInput):
        bc_supercuspidal_conductor(q(P), q(U), ch(1, True))


def test_ai_examples():
    assert ai_conductor(RAM, ch(1)) == 2
    assert ai_conductor(UNRAM, ch(1)) == 2
    assert ai_conductor(RAM, ch(0)) == 1


def test_local_conductor_examples():
    assert bc_local_conductor(Splitting.INERT, None, Special(ch(0))) == 1
    assert bc_local_conductor(Splitting.RAMIFIED, q(P), UnramifiedPS()) == 0
    assert bc_local_conductor(Splitting.RAMIFIED, q(P), Supercuspidal(q(P), ch(1))) == 2
    with pytest.raises(InvalidInput):
        bc_local_conductor(Splitting.RAMIFIED, None, UnramifiedPS())
    with pytest.raises(InvalidInput):
        bc_local_conductor(Splitting.SPLIT, q(P), UnramifiedPS())


def test_bc_level_examples():
    K = ImagQuadField(7)
    # 11 splits in Q(sqrt(-7)) since -7 = 4 mod 11 is a square
    r = bc_level(K, {11: Special(ch(0))})
    assert [(e.p, e.splitting, e.exponents) for e in r.entries] == [(11, Splitting.SPLIT, (1, 1))]
    r = bc_level(K, {5: Special(ch(0))})
    assert [(e.p, e.splitting, e.exponents) for e in r.entries] == [(5, Splitting.INERT, (1,))]
    assert bc_level(K, {}).entries == ()
    r = bc_level(K, {7: Supercuspidal(localize(K, 7), ch(1))})
    assert [(e.p, e.splitting, e.exponents) for e in r.entries] == [(7, Splitting.RAMIFIED, (2,))]
    assert r.to_json() == {"disc": -7, "entries": [{"p": 7, "splitting": "ramified", "exponents": [2]}]}


def test_bc_level_rejects_mismatched_prime():
    K = ImagQuadField(7)
    with pytest.raises(InvalidInput):
        bc_level(K, {7: Supercuspidal(q(P, 5), ch(1))})
    with pytest.raises(InvalidInput):
        bc_level(K, {9: UnramifiedPS()})


def _reps(p):
    conds = [ch(0), ch(1), ch(1, True), ch(2), ch(3)]
    out = [UnramifiedPS()]
    out += [PrincipalSeries(a, b) for a in conds for b in conds]
    out += [Special(a) for a in conds]
    for kind in ExtKind:
        for t in conds:
            try:
                out.append(Supercuspidal(q(kind, p), t))
            except InvalidInput:
                pass
    return out


@pytest.mark.parametrize("p", [3, 5, 7])
def test_unramified_primes_preserve_conductor(p):
    for rep in _reps(p):
        for s in (Splitting.SPLIT, Splitting.INERT):
            assert bc_local_conductor(s, None, rep) == rep_conductor(rep)
        # the same answer when the inert prime is pushed through the ramified-style dispatch with K_p unramified
        assert bc_local_conductor(Splitting.RAMIFIED, q(U, p), rep) == rep_conductor(rep)


def test_monotone_and_odd():
    prev = -1
    for m in range(0, 101):
        a = bc_char_conductor(RAM, ch(m))
        assert a >= prev
        if m >= 1:
            assert a > prev
        if m >= 2:
            assert a == 2 * m - 1 and a % 2 == 1
        prev = a


@given(st.integers(0, 100), st.booleans(), st.sampled_from([3, 5, 7, 11, 13]))
def test_split_case_is_twice_theta(cond, flag, p):
    for kind in ExtKind:
        try:
            assert bc_supercuspidal_conductor(q(kind, p), q(kind, p), ch(cond, flag)) == 2 * cond
        except InvalidInput:
            assert kind is U and cond <= 1


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_distinct_case_is_twice_bc_for_ramified_kp(p):
    for kp in (P, EP):
        for e in ExtKind:
            if e is kp:
                continue
            for cond in range(0, 6):
                for flag in (False, True):
                    t = ch(cond, flag)
                    if e is U and cond <= 1 and t.unit_order_le_2:
                        continue
                    _, over_e = compositum_over(q(e, p), q(kp, p))
                    assert bc_supercuspidal_conductor(q(kp, p), q(e, p), t) == 2 * bc_char_conductor(over_e, t)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("kind", list(ExtKind))
def test_char_conductor_against_finite_quotients(p, kind):
    ext = rel_data(q(kind, p))
    cases = enumerate_bc_conductors(p, kind, 3)
    assert len(cases) == p**2 * (p - 1)
    for c in cases:
        assert bc_char_conductor(ext, c.chi) == c.bc_cond, c
