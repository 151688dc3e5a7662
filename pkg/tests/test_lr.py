import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_lr, brute_words, random_point, schur_eval
from schurpos.errors import SizeMismatchError
from schurpos.lr import (
    enumerate_lr_fillings,
    is_lattice,
    lr_coefficient,
    product_terms,
    reading_word,
    skew_schur_expand,
    star_concatenate,
)
from schurpos.partitions import EMPTY, Partition, SkewShape, parse_skew, partitions_of, subpartitions


def words(fillings):
    return sorted("".join(map(str, reading_word(f))) for f in fillings)


def test_running_example_fillings():
    fs = enumerate_lr_fillings(parse_skew("4,4,2,1/2,1"), (4, 3, 1))
    assert words(fs) == ["11221213", "11221312"]
    # lexicographic order of reading words
    assert ["".join(map(str, reading_word(f))) for f in fs] == ["11221213", "11221312"]
    assert all(f.content() == (4, 3, 1) for f in fs)


def test_fillings_edge_cases():
    theta = Partition((3, 1))
    fs = enumerate_lr_fillings(SkewShape(theta, theta), ())
    assert len(fs) == 1 and reading_word(fs[0]) == ()
    fs = enumerate_lr_fillings(parse_skew("4,4/2,2"), (2, 2))
    assert len(fs) == 1 and fs[0].rows == ((1, 1), (2, 2))
    with pytest.raises(SizeMismatchError):
        enumerate_lr_fillings(parse_skew("2,1/1"), (1,))


def test_is_lattice():
    assert is_lattice((1, 1, 2, 2, 1, 3, 1, 2))
    assert not is_lattice((2,))
    assert is_lattice((1, 1, 2, 2, 1, 2))
    assert is_lattice(())


def test_coefficient_examples():
    assert lr_coefficient((4, 4, 2, 1), (2, 1), (4, 3, 1)) == 2
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_coefficient((4, 4), (2, 2, 2), (2,)) == 0
    assert lr_coefficient((2,), (1,), (1,)) == 1
    assert lr_coefficient((2,), (), (2,)) == 1
    assert lr_coefficient((2,), (1,), (2,)) == 0  # sizes do not add up
    assert lr_coefficient((2,), (1, 1), ()) == 0


def _fillings_are_lr(fs):
    for f in fs:
        cells = f.entries()
        for (i, j), v in cells.items():
            if (i, j + 1) in cells:
                assert cells[(i, j + 1)] >= v
            if (i + 1, j) in cells:
                assert cells[(i + 1, j)] > v
        assert is_lattice(reading_word(f))


@pytest.mark.parametrize("n", range(0, 9))
def test_enumeration_matches_ssyt_oracle(n):
    for theta in partitions_of(n):
        for mu in subpartitions(theta):
            for nu in partitions_of(n - mu.size):
                fs = enumerate_lr_fillings(SkewShape(theta, mu), nu)
                _fillings_are_lr(fs)
                assert len(fs) == lr_coefficient(theta, mu, nu) == brute_lr(theta, mu, nu)


def test_larger_shapes_against_oracle():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(9, 12)
        theta = rng.choice(partitions_of(n, max_length=5))
        mus = [m for m in subpartitions(theta) if 0 < m.size < n]
        mu = rng.choice(mus)
        nu = rng.choice(partitions_of(n - mu.size, max_length=4))
        assert lr_coefficient(theta, mu, nu) == brute_lr(theta, mu, nu)
    assert words(enumerate_lr_fillings(parse_skew("4,4,2,1/2,1"), (4, 3, 1))) == brute_words(
        (4, 4, 2, 1), (2, 1), (4, 3, 1))


@pytest.mark.parametrize("n", range(1, 11))
def test_symmetry(n):
    for theta in partitions_of(n):
        for mu in subpartitions(theta):
            for nu in partitions_of(n - mu.size):
                assert lr_coefficient(theta, mu, nu) == lr_coefficient(theta, nu, mu)


def test_product_terms_against_polynomial_evaluation():
    rng = random.Random(3)
    cases = [((2, 1), (2, 1)), ((2, 1), (4, 3, 1)), ((3,), (1, 1)), ((2, 2), (2, 1, 1)), ((1,), ())]
    for mu, nu in cases:
        terms = product_terms(mu, nu)
        n = len(mu) + len(nu)
        for _ in range(2):
            x = random_point(n, rng)
            lhs = schur_eval(mu, x) * schur_eval(nu, x)
            rhs = sum(c * schur_eval(t, x) for t, c in terms.items())
            assert lhs == rhs


def test_product_degree_and_size():
    for mu in partitions_of(4):
        for nu in partitions_of(3):
            terms = product_terms(mu, nu)
            assert all(t.size == 7 for t in terms)
            assert product_terms(nu, mu) == terms


def test_skew_expansion():
    v = skew_schur_expand(parse_skew("2,1/1"))
    assert dict(v) == {Partition((2,)): 1, Partition((1, 1)): 1}
    assert dict(skew_schur_expand(parse_skew("3,2"))) == {Partition((3, 2)): 1}
    assert skew_schur_expand(parse_skew("4,4,2,1/2,1")).coefficient((4, 3, 1)) == 2


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 8), st.data())
def test_skew_expansion_matches_coefficients(n, data):
    theta = data.draw(st.sampled_from(partitions_of(n)))
    mu = data.draw(st.sampled_from(list(subpartitions(theta))))
    v = skew_schur_expand(SkewShape(theta, mu))
    for nu in partitions_of(n - mu.size):
        assert v.coefficient(nu) == lr_coefficient(theta, mu, nu)


def test_star_concatenate():
    one = parse_skew("1")
    s = star_concatenate(one, one)
    assert (s.outer, s.inner) == ((2, 1), (1,))
    # the first factor goes bottom-right, shifted past the second
    s = star_concatenate(parse_skew("2"), one)
    assert (s.outer, s.inner) == ((3, 1), (1,))
    a = parse_skew("3,1/1")
    assert star_concatenate(a, SkewShape(EMPTY)) == a
    assert star_concatenate(SkewShape(EMPTY), a) == a


def test_star_concatenate_cells_are_disjoint_translates():
    for a in (parse_skew("3,1/1"), parse_skew("2,2/1"), parse_skew("2")):
        for b in (parse_skew("2,1/1"), parse_skew("1,1"), parse_skew("3,3/2")):
            s = star_concatenate(a, b)
            assert s.size == a.size + b.size
            rows = {i for i, _ in s.cells()}
            assert len(rows) == len({i for i, _ in a.cells()}) + len({i for i, _ in b.cells()})
