import random

import pytest

from knotcert.laurent import LaurentPoly, NotSymmetrizable, ZeroPolynomial

from oracles import conv_oracle, unit_search_normalize


def rand_poly(rng, max_terms=5, exp_range=4, coeff_range=3):
    return LaurentPoly(
        {
            rng.randint(-exp_range, exp_range): rng.randint(-coeff_range, coeff_range)
            for _ in range(rng.randint(0, max_terms))
        }
    )


T = LaurentPoly.t()
TREFOIL = LaurentPoly({1: 1, 0: -1, -1: 1})


def test_add_examples():
    assert (T - 1) + (1 - T) == LaurentPoly.zero()
    assert LaurentPoly({1: 1, -1: 1}) + T == LaurentPoly({1: 2, -1: 1})


def test_add_identity_random():
    rng = random.Random(1)
    for _ in range(50):
        p = rand_poly(rng)
        assert p + LaurentPoly.zero() == p
        assert p + 0 == p


def test_mul_examples():
    assert TREFOIL * TREFOIL == LaurentPoly({2: 1, 1: -2, 0: 3, -1: -2, -2: 1})
    rng = random.Random(2)
    for _ in range(30):
        p = rand_poly(rng)
        assert p * LaurentPoly.one() == p
        assert p * 1 == p
        assert p * LaurentPoly.zero() == LaurentPoly.zero()


def test_mul_against_convolution_oracle():
    rng = random.Random(3)
    for _ in range(300):
        p, q = rand_poly(rng), rand_poly(rng)
        assert (p * q).coeffs == conv_oracle(p.coeffs, q.coeffs)


def test_ring_axioms_random():
    rng = random.Random(4)
    for _ in range(100):
        p, q, r = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert p + q == q + p
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


def test_eval_at_one():
    assert TREFOIL.eval_at_one() == 1
    assert LaurentPoly.zero().eval_at_one() == 0
    assert (TREFOIL * TREFOIL).eval_at_one() == 1


def test_degree_span():
    assert TREFOIL.degree_span() == 2
    assert LaurentPoly.one().degree_span() == 0
    assert LaurentPoly({5: 1, -5: 1}).degree_span() == 10
    with pytest.raises(ZeroPolynomial):
        LaurentPoly.zero().degree_span()


def test_degree_span_additive():
    rng = random.Random(5)
    done = 0
    while done < 100:
        p, q = rand_poly(rng), rand_poly(rng)
        if p.is_zero() or q.is_zero():
            continue
        assert (p * q).degree_span() == p.degree_span() + q.degree_span()
        done += 1


def test_symmetric_normalize_examples():
    with pytest.raises(NotSymmetrizable):
        LaurentPoly({2: -1, 1: 1}).symmetric_normalize()  # odd span
    with pytest.raises(NotSymmetrizable):
        LaurentPoly({2: 1, 1: -1}).symmetric_normalize()
    assert (-TREFOIL).symmetric_normalize() == TREFOIL
    with pytest.raises(ZeroPolynomial):
        LaurentPoly.zero().symmetric_normalize()


def test_symmetric_normalize_matches_unit_search_oracle():
    rng = random.Random(6)
    for _ in range(300):
        p = rand_poly(rng)
        if p.is_zero():
            continue
        expected = unit_search_normalize(p.coeffs)
        if expected is None:
            with pytest.raises(NotSymmetrizable):
                p.symmetric_normalize()
        else:
            assert p.symmetric_normalize().coeffs == expected


def test_symmetric_normalize_idempotent_and_multiset():
    rng = random.Random(7)
    done = 0
    while done < 100:
        p = rand_poly(rng)
        if p.is_zero():
            continue
        try:
            q = p.symmetric_normalize()
        except NotSymmetrizable:
            continue
        assert q.symmetric_normalize() == q
        original = sorted(p.coeffs.values())
        flipped = sorted(-c for c in p.coeffs.values())
        assert sorted(q.coeffs.values()) in (original, flipped)
        done += 1


def test_divexact():
    p = LaurentPoly({6: 1, 0: -1})  # t^6 - 1
    q = LaurentPoly({2: 1, 0: -1})  # t^2 - 1
    assert p.divexact(q) == LaurentPoly({4: 1, 2: 1, 0: 1})
    assert p.divexact(q) * q == p
    with pytest.raises(ValueError):
        (p + 1).divexact(q)
    with pytest.raises(ZeroPolynomial):
        p.divexact(LaurentPoly.zero())


def test_divexact_random_products():
    rng = random.Random(8)
    done = 0
    while done < 100:
        p, q = rand_poly(rng), rand_poly(rng)
        if p.is_zero() or q.is_zero():
            continue
        assert (p * q).divexact(q) == p
        done += 1


def test_text_round_trip():
    rng = random.Random(9)
    for _ in range(100):
        p = rand_poly(rng)
        assert LaurentPoly.from_text(p.to_text()) == p
    assert LaurentPoly.from_text("0") == LaurentPoly.zero()
    assert TREFOIL.to_text() == "1*t^-1 + -1*t^0 + 1*t^1"


def test_json_round_trip():
    rng = random.Random(10)
    for _ in range(100):
        p = rand_poly(rng)
        assert LaurentPoly.from_json(p.to_json()) == p
        assert LaurentPoly.from_json_dict(p.to_json_dict()) == p


def test_pretty_printing():
    assert str(TREFOIL) == "t - 1 + t^-1"
    assert str(TREFOIL * TREFOIL) == "t^2 - 2t + 3 - 2t^-1 + t^-2"
    assert str(LaurentPoly.one()) == "1"
    assert str(LaurentPoly.zero()) == "0"


def test_canonical_form_drops_zeros():
    p = LaurentPoly({3: 0, 1: 2})
    assert p.coeffs == {1: 2}
    assert LaurentPoly({0: 0}) == LaurentPoly.zero()


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        LaurentPoly({0: 1.5})
    with pytest.raises(TypeError):
        LaurentPoly({0.5: 1})
