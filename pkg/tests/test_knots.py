import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pretzel_surgery.knots import (FamilyError, FamilyTag, PretzelKnot, TorusStatus,
                                   canonicalize, enumerate_canonical, family,
                                   hyperbolicity_condition, is_torus, torus_status)


def test_canonicalize_permutation():
    assert canonicalize(7, 3, -2).indices == (-2, 3, 7)


def test_canonicalize_mirror():
    assert canonicalize(2, -3, -7).indices == (-2, 3, 7)


def test_canonicalize_fixes_figure_knot():
    assert canonicalize(-3, 3, 4).indices == (-3, 3, 4)


def test_canonicalize_rejects_zero():
    with pytest.raises(ValueError):
        canonicalize(0, 3, 4)


def test_raw_constructor_rejects_noncanonical():
    with pytest.raises(ValueError):
        PretzelKnot(3, -2, 7)


nonzero = st.integers(-20, 20).filter(lambda v: v != 0)


@given(nonzero, nonzero, nonzero)
def test_canonicalize_idempotent(p, q, r):
    k = canonicalize(p, q, r)
    assert canonicalize(*k.indices) == k


@given(nonzero, nonzero, nonzero)
def test_family_invariant_under_permutation_and_mirror(p, q, r):
    base = family(canonicalize(p, q, r)).tag
    for perm in itertools.permutations((p, q, r)):
        assert family(canonicalize(*perm)).tag == base
        mirrored = tuple(-v for v in perm)
        assert family(canonicalize(*mirrored)).tag == base


def test_torus_status():
    assert is_torus(canonicalize(-2, 3, 5))
    assert is_torus(canonicalize(2, -3, -3))
    assert not is_torus(canonicalize(-2, 3, 7))
    assert not is_torus(canonicalize(-2, 5, 5))
    assert torus_status(canonicalize(-2, 1, 7)) is TorusStatus.TORUS
    assert torus_status(canonicalize(1, 3, 4)) is TorusStatus.UNCLASSIFIED
    assert torus_status(canonicalize(-2, 5, 5)) is TorusStatus.NOT_TORUS


def test_families():
    assert family(canonicalize(-2, 3, 7)).tag is FamilyTag.MINUS2_PQ
    fam = family(canonicalize(3, 5, -4))
    assert fam.tag is FamilyTag.PQ_MINUS_R
    assert fam.odd_pair == (3, 5) and fam.even_value == -4
    assert family(canonicalize(-3, 3, 4)).tag is FamilyTag.OTHER
    assert family(canonicalize(-2, 3, 5)).tag is FamilyTag.TORUS


def test_hyperbolicity_condition():
    assert not hyperbolicity_condition(canonicalize(3, 3, -4))
    assert not hyperbolicity_condition(canonicalize(3, 5, -4))
    assert not hyperbolicity_condition(canonicalize(3, 3, -6))
    assert hyperbolicity_condition(canonicalize(3, 3, -8))
    assert hyperbolicity_condition(canonicalize(3, 7, -4))
    with pytest.raises(FamilyError):
        hyperbolicity_condition(canonicalize(3, 5, 7))


def test_is_knot():
    assert canonicalize(-2, 3, 7).is_knot
    assert canonicalize(3, 5, 7).is_knot
    assert not canonicalize(-2, 4, 7).is_knot


def test_enumerate_canonical():
    knots = list(enumerate_canonical(3))
    assert len(knots) == len(set(knots))
    seen = {k.indices for k in knots}
    for p in (-3, -2, -1, 1, 2, 3):
        for q in (-3, -2, -1, 1, 2, 3):
            for r in (-3, -2, -1, 1, 2, 3):
                assert canonicalize(p, q, r).indices in seen
    for k in knots:
        assert canonicalize(*k.indices) == k
