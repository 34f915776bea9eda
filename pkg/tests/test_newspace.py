from fractions import Fraction

import pytest

from bcdims.errors import InternalConsistencyError, InvalidInput
from bcdims.newspace import (
    LevelSpec,
    closed_form_corr,
    closed_form_new_omega,
    closed_form_new_trivial,
    dim_corr,
    dim_new_omega,
    dim_new_trivial,
)
from bcdims.oracle.validate import BIANCHI_ELLS, squarefree_levels


def test_level_spec():
    L = LevelSpec(30)
    assert L.primes == (2, 3, 5) and L.div_n == 3
    assert LevelSpec(1).primes == () and LevelSpec(1).div_n == 0
    for bad in (0, -3, 12, 49):
        with pytest.raises(InvalidInput):
            LevelSpec(bad)


@pytest.mark.parametrize("N,k,expected", [(11, 2, 1), (11, 4, 2), (6, 2, 0), (1, 12, 1), (37, 2, 2), (23, 2, 2)])
def test_dim_new_trivial(N, k, expected):
    assert dim_new_trivial(N, k) == expected


@pytest.mark.parametrize("N,ell,k,expected", [(1, 23, 3, 3), (1, 3, 3, 0), (5, 3, 3, 2)])
def test_dim_new_omega(N, ell, k, expected):
    assert dim_new_omega(N, ell, k) == expected


@pytest.mark.parametrize("N,ell,k,expected", [(1, 7, 2, 1), (1, 11, 2, 1), (5, 7, 2, 2), (3, 7, 2, 0)])
def test_dim_corr(N, ell, k, expected):
    assert dim_corr(N, ell, k) == expected


def test_input_errors():
    with pytest.raises(InvalidInput):
        dim_new_trivial(11, 3)
    with pytest.raises(InvalidInput):
        dim_new_omega(1, 23, 4)
    with pytest.raises(InvalidInput):
        dim_new_omega(1, 13, 3)
    with pytest.raises(InvalidInput):
        dim_new_omega(23, 23, 3)
    with pytest.raises(InvalidInput):
        dim_corr(7, 7, 2)
    with pytest.raises(InvalidInput):
        dim_corr(4, 7, 2)


def test_outside_domain_is_flagged():
    # ell = 1 mod 4 never occurs as a prime discriminant; at N = 2 the corr count goes negative
    assert closed_form_corr(2, 5, 2) == -1
    with pytest.raises(InternalConsistencyError):
        dim_corr(2, 5, 2)


def test_closed_forms_disagree_at_level_one():
    # the literal closed forms drop the unipotent term, which only vanishes with a Steinberg factor
    assert closed_form_new_trivial(1, 12) == Fraction(3, 2)
    assert dim_new_trivial(1, 12) == 1
    assert closed_form_new_omega(1, 23, 3) == 4
    assert dim_new_omega(1, 23, 3) == 3
    assert closed_form_corr(1, 7, 2) == dim_corr(1, 7, 2)  # cuspidal factor has dim_u = 0


def test_closed_form_sweep_small():
    for N in squarefree_levels(2, 60):
        for k in range(2, 24):
            if k % 2 == 0:
                assert dim_new_trivial(N, k) == closed_form_new_trivial(N, k)
            for ell in BIANCHI_ELLS:
                if N % ell == 0:
                    continue
                if k % 2 == 0:
                    v = dim_corr(N, ell, k)
                    assert v == closed_form_corr(N, ell, k) and v % 2 == 0
                elif k >= 3:
                    v = dim_new_omega(N, ell, k)
                    assert v == closed_form_new_omega(N, ell, k) and v % 2 == 0
