from fractions import Fraction

import pytest

from cmgraphs.linalg import is_prime, rank_gf2, rank_mod_p, rank_rational


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_rank_empty_and_zero():
    assert rank_mod_p([], 2) == 0
    assert rank_rational([[0, 0], [0, 0]]) == 0
    assert rank_gf2([[0, 0]]) == 0


def test_rank_identity_and_dependent_rows():
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert rank_mod_p(eye, 2) == 3
    assert rank_mod_p(eye, 5) == 3
    assert rank_rational(eye) == 3

    dep = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rank_rational(dep) == 2
    assert rank_mod_p(dep, 5) == 2


def test_rank_depends_on_characteristic():
    # 2 is invertible over Q and over F_3 but vanishes over F_2
    m = [[2, 0], [0, 1]]
    assert rank_rational(m) == 2
    assert rank_mod_p(m, 3) == 2
    assert rank_mod_p(m, 2) == 1


def test_rank_mod_p_rejects_composites():
    with pytest.raises(ValueError):
        rank_mod_p([[1]], 4)


def test_rank_rational_exactness():
    # Hilbert-like fragile pivots: floats would misjudge this rank
    m = [
        [Fraction(1, 1), Fraction(1, 2), Fraction(1, 3)],
        [Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)],
        [Fraction(1, 3), Fraction(1, 4), Fraction(1, 5)],
    ]
    assert rank_rational(m) == 3
    singular = [row[:] for row in m]
    singular[2] = [a + b for a, b in zip(m[0], m[1])]
    assert rank_rational(singular) == 2
