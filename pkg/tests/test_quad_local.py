import pytest
from hypothesis import given, strategies as st
from sympy import factorint, primerange

from bcdims.errors import InvalidInput, UnsupportedInput
from bcdims.quad_local import (
    ExtKind,
    ImagQuadField,
    QuadExtClass,
    RelQuadExt,
    Splitting,
    compositum_over,
    is_squarefree,
    kronecker,
    localize,
    rel_data,
    splitting_type,
)


def kronecker_bruteforce(a, n):
    """Kronecker symbol from its definition: Euler's criterion at odd primes, the mod-8 rule at 2."""
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    for p, e in factorint(n).items():
        if p == 2:
            if a % 2 == 0:
                s = 0
            else:
                s = 1 if a % 8 in (1, 7) else -1
        else:
            r = pow(a % p, (p - 1) // 2, p)
            s = 0 if r == 0 else (1 if r == 1 else -1)
        result *= s**e
    return result


@pytest.mark.parametrize("a,n,expected", [(-4, 5, 1), (-3, 3, 0), (-4, 11, -1), (-3, 2, -1)])
def test_kronecker_examples(a, n, expected):
    assert kronecker(a, n) == expected


@given(st.integers(-500, 500), st.integers(-500, 500).filter(bool))
def test_kronecker_matches_definition(a, n):
    assert kronecker(a, n) == kronecker_bruteforce(a, n)


@given(st.sampled_from([-3, -7, -11, -15, -19, -23, -31, -35]), st.integers(1, 300), st.integers(1, 300))
def test_kronecker_completely_multiplicative(d, m, n):
    assert kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n)


def test_kronecker_rejects_zero():
    with pytest.raises(InvalidInput):
        kronecker(3, 0)


@pytest.mark.parametrize("D,p,expected", [
    (7, 7, Splitting.RAMIFIED),
    (7, 2, Splitting.SPLIT),
    (7, 5, Splitting.INERT),
    (7, 11, Splitting.SPLIT),
    (3, 2, Splitting.INERT),
])
def test_splitting_examples(D, p, expected):
    assert splitting_type(ImagQuadField(D), p) is expected


def test_ramified_exactly_at_odd_divisors_of_disc():
    for D in range(3, 10_001, 4):
        if not is_squarefree(D):
            continue
        K = ImagQuadField(D)
        ram = {p for p in primerange(2, D + 1) if splitting_type(K, p) is Splitting.RAMIFIED} if D < 200 else None
        if ram is not None:
            assert ram == set(factorint(D))
        assert all(splitting_type(K, p) is Splitting.RAMIFIED for p in K.ramified_primes)
        assert 2 not in K.ramified_primes
        assert splitting_type(K, 2) is not Splitting.RAMIFIED


def test_imag_quad_field_validation():
    assert ImagQuadField(7).disc == -7
    assert ImagQuadField.from_disc(-15).ramified_primes == {3, 5}
    with pytest.raises(UnsupportedInput):
        ImagQuadField(5)  # disc -20
    with pytest.raises(InvalidInput):
        ImagQuadField(27)
    with pytest.raises(InvalidInput):
        ImagQuadField.from_disc(7)


def test_localize_convention():
    # -7/7 = -1 is a non-residue mod 7
    assert localize(ImagQuadField(7), 7).kind is ExtKind.RAMIFIED_EPS_PI
    # -3/3 = -1 = 2 is a non-residue mod 3
    assert localize(ImagQuadField(3), 3).kind is ExtKind.RAMIFIED_EPS_PI
    # -15/5 = -3 = 2 mod 5, non-residue; -15/3 = -5 = 1 mod 3, residue
    K = ImagQuadField(15)
    assert localize(K, 5).kind is ExtKind.RAMIFIED_EPS_PI
    assert localize(K, 3).kind is ExtKind.RAMIFIED_PI
    with pytest.raises(UnsupportedInput):
        localize(ImagQuadField(11), 2)
    with pytest.raises(UnsupportedInput):
        localize(ImagQuadField(11), 3)


def test_rel_data():
    u = rel_data(QuadExtClass(ExtKind.UNRAMIFIED, 5))
    assert (u.e, u.f, u.d) == (1, 2, 0)
    for kind, p in [(ExtKind.RAMIFIED_PI, 5), (ExtKind.RAMIFIED_EPS_PI, 7)]:
        r = rel_data(QuadExtClass(kind, p))
        assert (r.e, r.f, r.d) == (2, 1, 1)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_rel_data_invariants(p):
    for kind in ExtKind:
        r = rel_data(QuadExtClass(kind, p))
        assert r.e * r.f == 2 and r.d == r.e - 1 and r.tame


def test_quad_ext_class_rejects_p2_and_composites():
    with pytest.raises(UnsupportedInput):
        QuadExtClass(ExtKind.UNRAMIFIED, 2)
    with pytest.raises(InvalidInput):
        QuadExtClass(ExtKind.RAMIFIED_PI, 9)


def test_rel_quad_ext_validation():
    with pytest.raises(InvalidInput):
        RelQuadExt(2, 2, 1)
    with pytest.raises(InvalidInput):
        RelQuadExt(1, 2, 1)
    assert not RelQuadExt(2, 1, 2).tame
    assert not RelQuadExt(2, 1, 1, p=2).tame


def _efd(r):
    return (r.e, r.f, r.d)


def test_compositum_examples():
    U, P, EP = ExtKind.UNRAMIFIED, ExtKind.RAMIFIED_PI, ExtKind.RAMIFIED_EPS_PI
    over_kp, over_e = compositum_over(QuadExtClass(U, 5), QuadExtClass(P, 5))
    assert _efd(over_kp) == (1, 2, 0) and _efd(over_e) == (2, 1, 1)
    over_kp, over_e = compositum_over(QuadExtClass(P, 7), QuadExtClass(EP, 7))
    assert _efd(over_kp) == (1, 2, 0) and _efd(over_e) == (1, 2, 0)
    with pytest.raises(InvalidInput):
        compositum_over(QuadExtClass(P, 3), QuadExtClass(P, 3))
    with pytest.raises(InvalidInput):
        compositum_over(QuadExtClass(P, 3), QuadExtClass(EP, 5))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_compositum_all_pairs(p):
    # biquadratic compositum: e = f = 2 over Q_p, so relative data is determined by the base
    for a in ExtKind:
        for b in ExtKind:
            if a is b:
                continue
            over_kp, over_e = compositum_over(QuadExtClass(a, p), QuadExtClass(b, p))
            for base, rel in ((b, over_kp), (a, over_e)):
                base_e = 2 if base.ramified else 1
                assert base_e * rel.e == 2
                assert _efd(rel) == ((1, 2, 0) if base.ramified else (2, 1, 1))
