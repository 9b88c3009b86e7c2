"""Shared fixtures: the recurring index sets and random generators."""

from fractions import Fraction
import random

import pytest

from liestrata import enumerate_theta, parse_index_set, structure_vector, \
    validate_index_set

# Filiform algebra in dimension 4: two triples, no aligned pairs.
FILIFORM4 = "n=4; (1,2,3) (1,3,4)"
# Heisenberg algebra in dimension 5: two triples meeting only in the center.
HEISENBERG5 = "n=5; (1,2,5) (3,4,5)"
# Six triples in dimension 7 with a single quadruple of multiplicity two.
ONE_QUAD_MULT2 = "n=7; (1,2,4) (1,3,5) (1,5,6) (2,4,6) (2,5,7) (3,4,7)"
# Seven triples in dimension 7 with a single quadruple of multiplicity three.
ONE_QUAD_MULT3 = "n=7; (1,2,4) (1,3,5) (1,4,6) (1,6,7) (2,3,6) (2,5,7) (3,4,7)"
# Nine triples in dimension 7: multiplicities 2 and 3 with one common triple.
MULT2_PLUS_MULT3 = ("n=7; (1,2,3) (1,3,4) (1,4,5) (1,5,6) (1,6,7) "
                    "(2,3,5) (2,4,6) (2,5,7) (3,4,7)")
# Eight triples in dimension 8: two quadruples of multiplicity two.
TWO_QUADS_MULT2 = "n=8; (1,3,4) (1,4,6) (1,6,7) (1,7,8) (2,3,6) (2,4,7) (2,6,8) (3,5,8)"
# Nine triples in dimension 8 whose single w-vector misses half the kernel.
ONE_QUAD_NON_SPANNING = ("n=8; (1,2,4) (1,3,5) (1,4,6) (1,5,7) (1,7,8) "
                         "(2,3,6) (2,4,7) (2,6,8) (3,5,8)")


@pytest.fixture
def filiform4():
    return parse_index_set(FILIFORM4)


@pytest.fixture
def heisenberg5():
    return parse_index_set(HEISENBERG5)


@pytest.fixture
def one_quad_mult2():
    return parse_index_set(ONE_QUAD_MULT2)


@pytest.fixture
def one_quad_mult3():
    return parse_index_set(ONE_QUAD_MULT3)


@pytest.fixture
def mult2_plus_mult3():
    return parse_index_set(MULT2_PLUS_MULT3)


@pytest.fixture
def two_quads_mult2():
    return parse_index_set(TWO_QUADS_MULT2)


@pytest.fixture
def one_quad_non_spanning():
    return parse_index_set(ONE_QUAD_NON_SPANNING)


def random_index_set(rng: random.Random, n_max: int = 8, size_max: int = 10):
    n = rng.randint(3, n_max)
    theta = enumerate_theta(n)
    size = rng.randint(0, min(size_max, len(theta)))
    return validate_index_set(rng.sample(theta, size), n)


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    num = rng.choice([x for x in range(-bound, bound + 1) if x])
    return Fraction(num, rng.randint(1, bound))


def random_structure_vector(rng: random.Random, lam, bound: int = 9):
    return structure_vector(lam,
                            [random_rational(rng, bound) for _ in lam.triples])


def random_nonzero_diag(rng: random.Random, n: int, bound: int = 9):
    return [random_rational(rng, bound) for _ in range(n)]
