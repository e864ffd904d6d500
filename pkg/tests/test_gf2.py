import random

import pytest

from rmenum.boolfn import (
    TruthTable,
    anf_from_truth_table,
    parse_anf,
    truth_table_from_anf,
)
from rmenum.gf2 import (
    AffineMap,
    Gf2Matrix,
    apply,
    compose,
    find_equivalence,
    invert,
    random_invertible,
    stabilizer_check,
    top_image,
    transform_anf,
)


def rand_table(rng, m):
    return TruthTable(m, rng.getrandbits(1 << m))


def rand_affine(rng, m):
    return AffineMap(random_invertible(m, rng), rng.getrandbits(m))


def test_matmul_against_identity():
    rng = random.Random(1)
    for _ in range(20):
        a = random_invertible(4, rng)
        eye = Gf2Matrix.identity(4)
        assert a @ eye == a
        assert eye @ a == a


def test_inverse_and_rank():
    rng = random.Random(2)
    for m in (1, 3, 5):
        for _ in range(10):
            a = random_invertible(m, rng)
            assert a.rank() == m
            assert a @ a.inverse() == Gf2Matrix.identity(m)
            assert a.inverse() @ a == Gf2Matrix.identity(m)


def test_singular_inverse_raises():
    with pytest.raises(ValueError):
        Gf2Matrix(2, (0b01, 0b01)).inverse()


def test_mul_vec_matches_columns():
    rng = random.Random(3)
    a = random_invertible(5, rng)
    for _ in range(20):
        x = rng.getrandbits(5)
        want = 0
        for j in range(5):
            if (x >> j) & 1:
                want ^= a.column(j)
        assert a.mul_vec(x) == want


def test_transpose_involution():
    rng = random.Random(4)
    a = random_invertible(6, rng)
    assert a.transpose().transpose() == a


def test_matrix_text_round_trip():
    rng = random.Random(5)
    a = random_invertible(4, rng)
    assert Gf2Matrix.from_text(a.to_text()) == a
    with pytest.raises(ValueError):
        Gf2Matrix.from_text("01 10 11")  # rows shorter than the count
    with pytest.raises(ValueError):
        Gf2Matrix.from_text("0a 10")


def test_apply_pointwise():
    # f(x) = x1, map x -> (x2, x1): image should be table of x2
    swap = Gf2Matrix(2, (0b10, 0b01))
    f = truth_table_from_anf(parse_anf("1", 2))
    g = apply(f, swap)
    assert g == truth_table_from_anf(parse_anf("2", 2))


def test_apply_compose_contract():
    rng = random.Random(6)
    for _ in range(20):
        m = rng.randrange(1, 6)
        f = rand_table(rng, m)
        a = rand_affine(rng, m)
        b = rand_affine(rng, m)
        assert apply(f, compose(a, b)) == apply(apply(f, b), a)


def test_invert_round_trip():
    rng = random.Random(7)
    for _ in range(20):
        m = rng.randrange(1, 6)
        f = rand_table(rng, m)
        a = rand_affine(rng, m)
        assert apply(apply(f, a), invert(a)) == f


def test_transform_anf_matches_apply():
    rng = random.Random(8)
    for _ in range(20):
        m = rng.randrange(1, 6)
        f = anf_from_truth_table(rand_table(rng, m))
        a = rand_affine(rng, m)
        want = anf_from_truth_table(apply(truth_table_from_anf(f), a))
        assert transform_anf(f, a) == want


def test_substitution_never_raises_degree():
    rng = random.Random(9)
    for _ in range(30):
        m = rng.randrange(1, 6)
        f = anf_from_truth_table(rand_table(rng, m))
        a = rand_affine(rng, m)
        assert transform_anf(f, a).degree() <= max(f.degree(), 0)


def test_top_image_drops_lower_terms():
    a = AffineMap(Gf2Matrix.identity(3), 0b001)  # x1 -> x1 + 1
    f = parse_anf("12", 3)
    # (x1+1)x2 = x1x2 + x2; top part stays x1x2
    assert top_image(f, a) == f


def test_stabilizer_check():
    rng = random.Random(10)
    e = parse_anf("12", 4)
    swap12 = Gf2Matrix(4, (0b0010, 0b0001, 0b0100, 0b1000))
    assert stabilizer_check(e, swap12)
    send1_to_3 = Gf2Matrix(4, (0b0100, 0b0010, 0b0001, 0b1000))
    assert not stabilizer_check(e, send1_to_3)
    # the zero form is stabilized by everything invertible
    for _ in range(5):
        assert stabilizer_check(parse_anf("0", 4), random_invertible(4, rng))


def test_random_invertible_is_seed_deterministic():
    a = random_invertible(5, random.Random(42))
    b = random_invertible(5, random.Random(42))
    assert a == b
    assert a.is_invertible()


def test_find_equivalence_monomial_pair():
    e1 = parse_anf("123", 5)
    e2 = parse_anf("145", 5)
    mat = find_equivalence(e1, e2, 2, 200000, random.Random(0))
    assert mat is not None
    diff = transform_anf(e1, AffineMap(mat, 0)) ^ e2
    assert diff.is_zero() or diff.degree() <= 2


def test_find_equivalence_identity_short_circuit():
    e = parse_anf("123", 4)
    mat = find_equivalence(e, e, 2, 10, random.Random(0))
    assert mat == Gf2Matrix.identity(4)


def test_find_equivalence_budget_exhaustion():
    # distinct classes: a search that cannot succeed returns None
    e1 = parse_anf("123", 5)
    e2 = parse_anf("123+145", 5)
    assert find_equivalence(e1, e2, 2, 2000, random.Random(0)) is None
