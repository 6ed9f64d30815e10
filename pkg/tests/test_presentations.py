import pytest

from pretzel_surgery.coxeter import CoxeterSignature
from pretzel_surgery.presentations import (coxeter_quotient, filled_presentation,
                                           longitude_triviality_check, longitude_word,
                                           reduce_modulo_orders,
                                           triangle_image_of_longitude,
                                           wirtinger_presentation)
from pretzel_surgery.words import GroupPresentation, Word, gen


def test_wirtinger_presentation_shape():
    pres = wirtinger_presentation(3, 3, 4)
    assert pres.generators == ("x", "y", "z")
    assert [w.letter_count() for w in pres.relators] == [12, 12, 14]


def test_wirtinger_relators_have_zero_total_exponent():
    for p, q, r in [(3, 3, 4), (3, 7, 4), (5, 9, 8), (7, 7, 10)]:
        for rel in wirtinger_presentation(p, q, r).relators:
            assert rel.total_exponent_sum() == 0


@pytest.mark.parametrize("p,q,r", [(3, 3, 4), (3, 7, 4), (5, 5, 6), (7, 9, 8)])
def test_knot_group_abelianizes_to_Z(p, q, r):
    assert wirtinger_presentation(p, q, r).abelianization().is_infinite_cyclic


def test_wirtinger_rejects_parity_violations():
    with pytest.raises(ValueError):
        wirtinger_presentation(4, 5, 4)
    with pytest.raises(ValueError):
        wirtinger_presentation(3, 5, 5)
    with pytest.raises(ValueError):
        wirtinger_presentation(3, 5, 2)


def test_longitude_golden_shape():
    word = longitude_word(3, 3, 4)
    assert word.letter_count() == 28
    assert (word.exponent_sum("x"), word.exponent_sum("y"),
            word.exponent_sum("z")) == (-6, 3, 3)


@pytest.mark.parametrize("p,q,r", [(3, 3, 4), (5, 7, 6), (7, 9, 10)])
def test_longitude_is_null_homologous(p, q, r):
    word = longitude_word(p, q, r)
    # All three generators are meridians, so the homology class is the
    # total exponent sum; x alone carries -(p+q) balanced by y and z.
    assert word.total_exponent_sum() == 0
    assert word.exponent_sum("x") == -(p + q)
    assert word.exponent_sum("y") == q
    assert word.exponent_sum("z") == p


@pytest.mark.parametrize("p,q,r,s", [(3, 3, 4, 13), (3, 5, 4, 1), (5, 7, 6, 9)])
def test_filled_presentation_homology(p, q, r, s):
    inv = filled_presentation(p, q, r, s).abelianization()
    assert inv.is_cyclic_of_order(s)


def test_zero_filling_has_free_rank_one():
    assert filled_presentation(3, 5, 4, 0).abelianization().is_infinite_cyclic


def test_homology_sweep():
    for p in range(3, 10, 2):
        for q in range(p, 10, 2):
            for r in (4, 6, 8):
                for s in range(1, 26, 2):
                    inv = filled_presentation(p, q, r, s).abelianization()
                    assert inv.is_cyclic_of_order(s), (p, q, r, s)


@pytest.mark.parametrize("p,r,s,expected", [
    (3, 4, 11, (3, 5, 2)),
    (5, 6, 13, (3, 5, 3)),
    (7, 8, 21, (7, 7, 4)),
])
def test_coxeter_quotient_signature(p, r, s, expected):
    assert coxeter_quotient(p, r, s).signature == CoxeterSignature(*expected)


def test_coxeter_quotient_degenerate_cases():
    with pytest.raises(ValueError):
        coxeter_quotient(3, 4, 6)  # s = 2p
    assert coxeter_quotient(3, 4, 7).signature is None  # |s-2p| = 1
    with pytest.raises(ValueError):
        coxeter_quotient(3, 4, 8)  # even slope


def test_quotient_consistent_with_adding_relators_to_filling():
    for p, q, r, s in [(3, 3, 4, 11), (3, 5, 4, 13), (5, 7, 6, 13), (3, 7, 6, 9)]:
        filled = filled_presentation(p, q, r, s)
        y, z, x = gen("y"), gen("z"), gen("x")
        augmented = GroupPresentation(
            filled.generators,
            filled.relators + ((y * ~z) ** (r // 2), y * ~x, (z * x) ** p))
        quotient = coxeter_quotient(p, r, s)
        assert augmented.abelianization() == quotient.two_generator.abelianization()


@pytest.mark.parametrize("p,q,r", [(3, 3, 4), (5, 7, 8), (3, 5, 4), (9, 11, 14)])
def test_longitude_triviality(p, q, r):
    assert longitude_triviality_check(p, q, r)


def test_longitude_triviality_negative_control():
    # Mutating one exponent of the triangle-group word must break collapse.
    p, q, r = 3, 5, 4
    k, half = (p - 1) // 2, (q - 1) // 2
    m = r // 2
    mutated = (gen("g", k) * gen("f", m) * gen("g", k + 2)
               * gen("h", half) * gen("f", m) * gen("h", half + 1))
    orders = {"f": m, "g": p, "h": q}
    assert not reduce_modulo_orders(mutated, orders).is_trivial
    genuine = triangle_image_of_longitude(p, q, r)
    assert reduce_modulo_orders(genuine, orders).is_trivial


def test_reduce_modulo_orders_cascades():
    word = Word([("g", 2), ("f", 3), ("g", 1), ("h", 7)])
    reduced = reduce_modulo_orders(word, {"f": 3, "g": 3, "h": 7})
    assert reduced.is_trivial
