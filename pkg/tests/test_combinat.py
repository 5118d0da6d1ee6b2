import pytest
from fractions import Fraction

from qsegal import combinat
from qsegal.combinat import (
    FeynmanDiagram,
    PairPartition,
    Permutation,
    crossing_count,
    double_factorial,
    enumerate_feynman_diagrams,
    enumerate_pair_partitions,
    gap_count,
    inversion_count,
    inversion_set,
    q_factorial,
    q_int,
)

# first involution numbers: |F(m)| for m = 0..7
INVOLUTIONS = [1, 1, 2, 4, 10, 26, 76, 232]


def test_pair_partition_counts():
    assert enumerate_pair_partitions(0) == [PairPartition(0, ())]
    assert enumerate_pair_partitions(3) == []
    assert len(enumerate_pair_partitions(4)) == 3
    assert len(enumerate_pair_partitions(6)) == 15
    for m in range(0, 11, 2):
        assert len(enumerate_pair_partitions(m)) == double_factorial(m - 1)


def test_pair_partitions_are_canonical_and_distinct():
    parts = enumerate_pair_partitions(8)
    assert len({p.pairs for p in parts}) == len(parts)
    for p in parts:
        assert p.pairs == tuple(sorted(p.pairs))


def test_ground_set_cap():
    with pytest.raises(ValueError):
        enumerate_pair_partitions(18)


def test_crossing_count_basics():
    assert crossing_count(PairPartition(4, ((1, 2), (3, 4)))) == 0
    assert crossing_count(PairPartition(4, ((1, 3), (2, 4)))) == 1
    assert crossing_count(PairPartition(4, ((1, 4), (2, 3)))) == 0


def test_crossing_polynomial_over_six():
    # brute-force oracle: sum over all 15 pairings of q^cr as a coefficient list
    hist = {}
    for p in enumerate_pair_partitions(6):
        c = crossing_count(p)
        hist[c] = hist.get(c, 0) + 1
    assert hist == {0: 5, 1: 6, 2: 3, 3: 1}
    assert combinat.crossing_number_distribution(6) == (5, 6, 3, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_crossing_polynomial_anchors(n):
    hist = combinat.crossing_number_distribution(2 * n)
    catalan = [1, 1, 2, 5, 14, 42][n]
    assert hist[0] == catalan                      # q = 0
    assert sum(hist) == double_factorial(2 * n - 1)  # q = 1
    # q = -1: Bernoulli +-1 even moments are all 1
    assert sum(c * (-1) ** k for k, c in enumerate(hist)) == 1


def test_feynman_counts_match_involution_numbers():
    for m, count in enumerate(INVOLUTIONS):
        assert len(enumerate_feynman_diagrams(m)) == count


def test_gap_count():
    assert gap_count(FeynmanDiagram(3, ((1, 3),), (2,))) == 1
    assert gap_count(FeynmanDiagram(3, ((1, 2),), (3,))) == 0
    assert gap_count(FeynmanDiagram(5, ((1, 4), (2, 5)), (3,))) == 2


def test_inversions():
    assert inversion_set(Permutation(4, (1, 2, 3, 4))) == frozenset()
    assert inversion_set(Permutation(2, (2, 1))) == frozenset({(1, 2)})
    assert inversion_set(Permutation(3, (3, 1, 2))) == frozenset({(1, 2), (1, 3)})


@pytest.mark.parametrize("n", range(1, 8))
def test_reversal_inversion_count(n):
    rev = Permutation(n, tuple(range(n, 0, -1)))
    assert inversion_count(rev) == n * (n - 1) // 2


def test_q_integers():
    assert q_int(3, Fraction(1, 2)) == Fraction(7, 4)
    assert q_int(0, 0.3) == 0
    for n in range(6):
        assert q_int(n, 1) == n
    q = Fraction(2, 7)
    assert q_factorial(3, q) == (1 + q) * (1 + q + q * q)
    assert q_factorial(0, q) == 1


def test_q_int_float_path():
    assert isinstance(q_int(4, 0.3), float)
    assert q_int(4, 0.3) == pytest.approx(1 + 0.3 + 0.09 + 0.027)
