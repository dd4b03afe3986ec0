import random

import pytest

from knotcert.intmat import (
    DimensionMismatch,
    IntMatrix,
    det,
    in_rational_span,
    reduce_mod_lattice,
    row_lattice_basis,
    smith_normal_form,
)

from oracles import determinant_divisors, solve_in_span


def rand_matrix(rng, max_dim=4, entry_range=6):
    r = rng.randint(1, max_dim)
    c = rng.randint(1, max_dim)
    return IntMatrix([[rng.randint(-entry_range, entry_range) for _ in range(c)] for _ in range(r)])


def test_snf_examples():
    assert smith_normal_form(IntMatrix.identity(3)).diagonal == (1, 1, 1)
    assert smith_normal_form(IntMatrix([[5, 5]])).diagonal == (5,)
    assert smith_normal_form(IntMatrix([[2, 4], [6, 8]])).diagonal == (2, 4)


def test_snf_reconstruction_and_unimodularity():
    rng = random.Random(11)
    for _ in range(150):
        m = rand_matrix(rng)
        diagonal, u, v = smith_normal_form(m)
        assert det(u) in (1, -1)
        assert det(v) in (1, -1)
        product = (u @ m) @ v
        for i in range(m.rows):
            for j in range(m.cols):
                expected = diagonal[i] if i == j and i < len(diagonal) else 0
                assert product.entries[i][j] == expected


def test_snf_divisibility_chain_and_sign():
    rng = random.Random(12)
    for _ in range(150):
        diagonal = smith_normal_form(rand_matrix(rng)).diagonal
        assert all(d >= 0 for d in diagonal)
        for a, b in zip(diagonal, diagonal[1:]):
            if a == 0:
                assert b == 0
            else:
                assert b % a == 0


def test_snf_against_determinant_divisor_oracle():
    rng = random.Random(13)
    for _ in range(100):
        m = rand_matrix(rng, max_dim=4, entry_range=5)
        diagonal = smith_normal_form(m).diagonal
        divisors = determinant_divisors(m.to_lists())
        prev = 1
        for k, dk in enumerate(divisors):
            expected = dk // prev if dk else 0
            if prev == 0:
                expected = 0
            assert diagonal[k] == expected
            prev = dk


def test_snf_invariant_under_permutations():
    rng = random.Random(14)
    for _ in range(60):
        m = rand_matrix(rng)
        rows = m.to_lists()
        rng.shuffle(rows)
        cols = list(range(m.cols))
        rng.shuffle(cols)
        shuffled = IntMatrix([[row[j] for j in cols] for row in rows])
        assert smith_normal_form(shuffled).diagonal == smith_normal_form(m).diagonal


def test_det_small_cases():
    assert det(IntMatrix.identity(4)) == 1
    assert det(IntMatrix([[2, 4], [6, 8]])) == -8
    assert det(IntMatrix([[1, 2], [2, 4]])) == 0
    with pytest.raises(DimensionMismatch):
        det(IntMatrix([[1, 2]]))


def test_in_rational_span_examples():
    assert in_rational_span([(1, 1)], (2, 2))
    assert not in_rational_span([(1, 1)], (1, 0))
    assert in_rational_span([(1, 0, -1), (0, 1, -1)], (1, 1, -2))
    assert in_rational_span([], (0, 0))
    assert not in_rational_span([], (1, 0))
    with pytest.raises(DimensionMismatch):
        in_rational_span([(1, 1)], (1, 1, 1))


def test_in_rational_span_against_solver_oracle():
    rng = random.Random(15)
    for _ in range(200):
        n = rng.randint(1, 4)
        vectors = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(0, 3))]
        target = [rng.randint(-3, 3) for _ in range(n)]
        assert in_rational_span(vectors, target) == solve_in_span(vectors, target)


def test_reduce_mod_lattice_is_canonical():
    rng = random.Random(16)
    for _ in range(200):
        n = rng.randint(1, 4)
        rels = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(0, 3))]
        basis = row_lattice_basis(rels)
        vec = [rng.randint(-6, 6) for _ in range(n)]
        canon = reduce_mod_lattice(basis, vec)
        # shifting by any lattice element must not change the representative
        for rel in rels:
            coeff = rng.randint(-3, 3)
            shifted = [x + coeff * y for x, y in zip(vec, rel)]
            assert reduce_mod_lattice(basis, shifted) == canon
        # the difference vec - canon is in the lattice
        assert solve_in_span(rels, [a - b for a, b in zip(vec, canon)]) or all(
            a == b for a, b in zip(vec, canon)
        )


def test_row_lattice_basis_echelon_shape():
    basis = row_lattice_basis([(2, 4, 0), (0, 0, 3), (2, 4, 3)])
    pivots = [next(j for j, x in enumerate(row) if x) for row in basis]
    assert pivots == sorted(pivots)
    assert all(row[p] > 0 for row, p in zip(basis, pivots))


def test_matrix_validation():
    with pytest.raises(DimensionMismatch):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        IntMatrix([[1.5]])
