import random
from itertools import product as cartesian

import pytest

from oracles import random_point, schur_eval
from schurpos.algebra import (
    ONE,
    e_to_schur,
    h_difference_positive,
    h_to_schur,
    multiply,
    multiply_skew,
    product,
    schur,
    support,
)
from schurpos.errors import CoefficientOverflowError, SumMismatchError
from schurpos.lr import skew_schur_expand, star_concatenate
from schurpos.partitions import EMPTY, Partition, SkewShape, dominance_leq, parse_skew, partitions_of, subpartitions
from schurpos.vector import ZERO, SchurVector, is_schur_positive, omega


def s(*parts):
    return schur(parts)


def test_vector_arithmetic():
    a = s(2) + s(1, 1)
    assert (a - a).is_zero()
    assert a - s(1, 1) == s(2)
    assert -ZERO == ZERO
    assert 3 * s(1) == s(1) + s(1) + s(1)
    assert SchurVector({(2,): 1, (1, 1): 0}) == s(2)
    assert Partition((1, 1)) not in SchurVector({(2,): 1, (1, 1): 0})


def test_vector_text_and_json():
    v = s(2) - 2 * s(1, 1)
    assert str(v) == "s[2] - 2*s[1,1]"
    assert v.to_json() == [{"partition": [2], "coeff": 1}, {"partition": [1, 1], "coeff": -2}]
    assert str(ZERO) == "0"
    assert str(ONE) == "s[()]"


def test_overflow_is_an_error():
    with pytest.raises(CoefficientOverflowError):
        SchurVector({(1,): 2**63})


def test_multiply_examples():
    assert multiply(s(1), s(1)) == s(2) + s(1, 1)
    assert multiply(s(2, 1), s(4, 3, 1)).coefficient((4, 4, 2, 1)) == 2
    assert multiply(s(2, 1), s(2, 1)).coefficient((3, 2, 1)) == 2
    assert multiply(ONE, s(3, 1)) == s(3, 1)
    assert multiply(ZERO, s(3, 1)) == ZERO


def test_products_are_homogeneous():
    v = multiply(s(3, 1), s(2, 2))
    assert v.degrees() == {8}


@pytest.mark.parametrize("n", range(0, 11))
def test_commutativity(n):
    for k in range(n // 2 + 1):
        for a in partitions_of(n - k):
            for b in partitions_of(k):
                assert multiply(s(*a), s(*b)) == multiply(s(*b), s(*a))


def test_associativity_up_to_degree_10():
    shapes = [p for n in range(1, 5) for p in partitions_of(n)]
    for a, b, c in cartesian(shapes, repeat=3):
        if a.size + b.size + c.size > 10:
            continue
        x, y, z = s(*a), s(*b), s(*c)
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


def test_omega_is_a_ring_map():
    shapes = [p for n in range(0, 5) for p in partitions_of(n)]
    for a in shapes:
        for b in shapes:
            if a.size + b.size > 8:
                continue
            x, y = s(*a), s(*b)
            assert omega(multiply(x, y)) == multiply(omega(x), omega(y))


def test_omega_examples():
    assert omega(s(2, 1)) == s(2, 1)
    assert omega(s(3)) == s(1, 1, 1)
    v = s(3, 1) - 2 * s(2, 2)
    assert omega(omega(v)) == v


def test_positivity():
    assert is_schur_positive(s(2) + s(1, 1))
    assert not is_schur_positive(s(2) - s(1, 1))
    assert is_schur_positive(ZERO)


def test_support():
    assert support((1,), (1,)) == {Partition((2,)), Partition((1, 1))}
    assert support((2,), (2,)) == {Partition((4,)), Partition((3, 1)), Partition((2, 2))}
    assert support((4, 1, 1), (3, 1, 1, 1, 1, 1)) <= support((4, 1, 1, 1, 1), (3, 1, 1, 1))
    assert support(parse_skew("2,1/1"), (1,)) == {Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))}


def test_support_lies_between_union_and_sum():
    from schurpos.partitions import partition_sum, union

    for n in range(0, 13):
        for k in range(n // 2 + 1):
            for mu in partitions_of(n - k):
                for nu in partitions_of(k):
                    lo, hi = union(mu, nu), partition_sum(mu, nu)
                    for theta in support(mu, nu):
                        assert theta.size == n
                        assert dominance_leq(lo, theta) and dominance_leq(theta, hi)


def test_h_and_e():
    assert h_to_schur((1, 1)) == s(2) + s(1, 1)
    assert e_to_schur((2,)) == s(1, 1)
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert omega(h_to_schur(mu)) == e_to_schur(mu)


def test_h_expansion_is_kostka_row():
    rng = random.Random(5)
    for mu in ((2, 1), (3, 1, 1), (2, 2)):
        v = h_to_schur(mu)
        x = random_point(sum(mu), rng)
        lhs = 1
        for k in mu:
            lhs *= schur_eval((k,), x)
        assert lhs == sum(c * schur_eval(t, x) for t, c in v.items())


def test_h_difference_examples():
    assert h_difference_positive((2, 2), (3, 1))
    assert is_schur_positive(h_to_schur((2, 2)) - h_to_schur((3, 1)))
    assert h_difference_positive((3, 1), (3, 1))
    assert not h_difference_positive((3, 1, 1, 1), (2, 2, 2))
    assert not h_difference_positive((2, 2, 2), (3, 1, 1, 1))
    with pytest.raises(SumMismatchError):
        h_difference_positive((2,), (1,))


@pytest.mark.parametrize("n", range(1, 9))
def test_h_difference_matches_expansion(n):
    for theta in partitions_of(n):
        for pi in partitions_of(n):
            expanded = is_schur_positive(h_to_schur(theta) - h_to_schur(pi))
            assert expanded == h_difference_positive(theta, pi)


def test_multiply_skew():
    a, b = parse_skew("3,1"), parse_skew("2")
    assert multiply_skew(a, b) == multiply(s(3, 1), s(2))
    assert multiply_skew(parse_skew("2,1/1"), parse_skew("1")) == skew_schur_expand(parse_skew("3,2,1/2,1"))
    mu = Partition((2, 1))
    assert multiply_skew(SkewShape(mu, mu), parse_skew("3,1/1")) == skew_schur_expand(parse_skew("3,1/1"))


def test_multiply_skew_matches_product_of_expansions():
    shapes = [SkewShape(mu, a) for n in range(0, 5) for mu in partitions_of(n) for a in subpartitions(mu)]
    for x in shapes:
        for y in shapes:
            if x.size + y.size > 8:
                continue
            assert multiply_skew(x, y) == multiply(skew_schur_expand(x), skew_schur_expand(y))
            assert star_concatenate(x, y).size == x.size + y.size


def test_product_helper():
    assert product() == ONE
    assert product(s(1), s(1), s(1)) == s(3) + 2 * s(2, 1) + s(1, 1, 1)
    assert product(s(1)) == s(1)
    assert EMPTY in ONE
