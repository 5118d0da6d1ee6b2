"""Exact enumeration of pair partitions, Feynman diagrams and permutations.

This is the oracle layer: every moment formula, Wick expansion and Fock inner
product in the other modules is a weighted sum over structures enumerated
here.  Enumeration order is canonical (the smallest unpaired element is
processed first) so that oracle comparisons are reproducible.

Ground sets are ``{1..m}`` in the public objects; the performance-oriented
iterators used by other modules work with 0-based position tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .exactnum import is_exact

#: Hard cap on ground-set size: (15)!! ~ 2e6 pairings is the largest
#: enumeration we allow before the factorial blowup becomes pointless.
MAX_GROUND_SET = 16


def _check_ground_set(m: int) -> None:
    if m < 0:
        raise ValueError(f"ground-set size must be nonnegative, got {m}")
    if m > MAX_GROUND_SET:
        raise ValueError(
            f"ground-set size {m} exceeds the enumeration cap {MAX_GROUND_SET}"
        )


@dataclass(frozen=True)
class PairPartition:
    """Partition of {1..m} into pairs, stored in canonical order."""

    m: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = []
        for a, b in self.pairs:
            if not a < b:
                raise ValueError(f"pair {(a, b)} not stored smaller-first")
            seen += [a, b]
        if sorted(seen) != list(range(1, self.m + 1)):
            raise ValueError("pairs do not partition the ground set")
        if list(self.pairs) != sorted(self.pairs):
            raise ValueError("pairs not sorted by first element")


@dataclass(frozen=True)
class FeynmanDiagram:
    """Partition of {1..m} into pairs and singletons.

    The singleton order is increasing; it realizes the ordered product over
    singletons in the Wick closed form.
    """

    m: int
    pairs: tuple[tuple[int, int], ...]
    singletons: tuple[int, ...]

    def __post_init__(self):
        seen = list(self.singletons)
        for a, b in self.pairs:
            if not a < b:
                raise ValueError(f"pair {(a, b)} not stored smaller-first")
            seen += [a, b]
        if sorted(seen) != list(range(1, self.m + 1)):
            raise ValueError("pairs and singletons do not partition the ground set")
        if list(self.singletons) != sorted(self.singletons):
            raise ValueError("singletons must be increasing")


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n} given by its image sequence."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise ValueError("images must be a bijection of {1..n}")

    def __call__(self, a: int) -> int:
        return self.images[a - 1]


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _pairings_raw(positions: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not positions:
        yield ()
        return
    first, rest = positions[0], positions[1:]
    for idx, mate in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for tail in _pairings_raw(remaining):
            yield ((first, mate),) + tail


def iter_pairings(m: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield all pairings of the 0-based positions {0..m-1}; none for odd m."""
    _check_ground_set(m)
    if m % 2:
        return iter(())
    return _pairings_raw(tuple(range(m)))


def enumerate_pair_partitions(m: int) -> list[PairPartition]:
    """All pair partitions of {1..m}; (m-1)!! of them for even m, none for odd."""
    _check_ground_set(m)
    if m % 2:
        return []
    return [
        PairPartition(m, tuple((a + 1, b + 1) for a, b in pairs))
        for pairs in _pairings_raw(tuple(range(m)))
    ]


def _feynman_raw(
    positions: tuple[int, ...]
) -> Iterator[tuple[tuple[tuple[int, int], ...], tuple[int, ...]]]:
    if not positions:
        yield (), ()
        return
    first, rest = positions[0], positions[1:]
    for pairs, singles in _feynman_raw(rest):
        yield pairs, (first,) + singles
    for idx, mate in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for pairs, singles in _feynman_raw(remaining):
            yield ((first, mate),) + pairs, singles


def enumerate_feynman_diagrams(m: int) -> list[FeynmanDiagram]:
    """All Feynman diagrams on {1..m} (pairs plus increasing singletons)."""
    _check_ground_set(m)
    out = []
    for pairs, singles in _feynman_raw(tuple(range(m))):
        out.append(
            FeynmanDiagram(
                m,
                tuple(sorted((a + 1, b + 1) for a, b in pairs)),
                tuple(s + 1 for s in singles),
            )
        )
    return out


# ---------------------------------------------------------------------------
# statistics
# ---------------------------------------------------------------------------

def crossing_count(obj) -> int:
    """Number of interleaved pairs i<j<k<l with {i,k} and {j,l} both pairs."""
    pairs = obj.pairs if hasattr(obj, "pairs") else tuple(obj)
    return crossing_count_raw(pairs)


def crossing_count_raw(pairs: Sequence[tuple[int, int]]) -> int:
    count = 0
    for idx, (a1, b1) in enumerate(pairs):
        for a2, b2 in pairs[idx + 1:]:
            if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
                count += 1
    return count


def crossing_edges_raw(pairs: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Indices (r, r') of pairs of ``pairs`` that cross each other."""
    edges = []
    for r, (a1, b1) in enumerate(pairs):
        for rr in range(r + 1, len(pairs)):
            a2, b2 = pairs[rr]
            if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
                edges.append((r, rr))
    return tuple(edges)


def gap_count(diagram: FeynmanDiagram) -> int:
    """Number of triples i<j<k with {i,k} a pair and {j} a singleton."""
    count = 0
    for a, b in diagram.pairs:
        for s in diagram.singletons:
            if a < s < b:
                count += 1
    return count


def inversion_set(perm: Permutation) -> frozenset[tuple[int, int]]:
    """All a<b with perm(a) >= perm(b).

    Equality cannot occur for a bijection, so >= and > coincide.
    """
    inv = []
    for a in range(1, perm.n + 1):
        for b in range(a + 1, perm.n + 1):
            if perm(a) >= perm(b):
                inv.append((a, b))
    return frozenset(inv)


def inversion_count(perm: Permutation) -> int:
    return len(inversion_set(perm))


# ---------------------------------------------------------------------------
# q-integer arithmetic
# ---------------------------------------------------------------------------

def q_int(n: int, q):
    """[n]_q = 1 + q + ... + q^(n-1), with [0]_q = 0.

    Exact (Fraction) when q is an int or Fraction, float otherwise.
    """
    if n < 0:
        raise ValueError("q_int requires n >= 0")
    acc = Fraction(0) if is_exact(q) else 0.0
    power = Fraction(1) if is_exact(q) else 1.0
    for _ in range(n):
        acc += power
        power *= q
    return acc


def q_factorial(n: int, q):
    """[n]_q! = prod_{j=1}^n [j]_q, with [0]_q! = 1."""
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    acc = Fraction(1) if is_exact(q) else 1.0
    for j in range(1, n + 1):
        acc *= q_int(j, q)
    return acc


def double_factorial(m: int) -> int:
    """(m)!! with the empty-product convention (m <= 0 gives 1)."""
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


# ---------------------------------------------------------------------------
# cached raw structures for the hot paths in qalgebra/mixedfock
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def pairings_with_crossings(m: int) -> tuple:
    """All pairings of {0..m-1} with precomputed crossing counts.

    Cached for m <= 12; larger (and still capped) sizes are recomputed on the
    fly by the callers to keep memory bounded.
    """
    _check_ground_set(m)
    if m > 12:
        raise ValueError("pairings_with_crossings caches only m <= 12; iterate instead")
    return tuple(
        (pairs, crossing_count_raw(pairs)) for pairs in iter_pairings(m)
    )


@lru_cache(maxsize=None)
def pairings_with_crossing_edges(m: int) -> tuple:
    """All pairings of {0..m-1} with the crossing edge list between pairs."""
    _check_ground_set(m)
    if m > 12:
        raise ValueError("pairings_with_crossing_edges caches only m <= 12")
    return tuple(
        (pairs, crossing_edges_raw(pairs)) for pairs in iter_pairings(m)
    )


@lru_cache(maxsize=None)
def crossing_number_distribution(m: int) -> tuple[int, ...]:
    """Histogram of crossing numbers over all pairings of {1..m}.

    Entry c is the number of pairings with exactly c crossings; summing
    entry_c * q^c gives the 2n-th moment of the unit-variance measure.  The
    histogram is q-independent, so it is enumerated once per m (lazily up to
    the ground-set cap).
    """
    _check_ground_set(m)
    if m % 2:
        return ()
    hist: dict[int, int] = {}
    for pairs in iter_pairings(m):
        c = crossing_count_raw(pairs)
        hist[c] = hist.get(c, 0) + 1
    return tuple(hist.get(c, 0) for c in range(max(hist) + 1)) if hist else (1,)


@lru_cache(maxsize=None)
def feynman_with_stats(m: int) -> tuple:
    """Feynman diagrams of {0..m-1} as (pairs, singletons, crossings, gaps)."""
    _check_ground_set(m)
    if m > 10:
        raise ValueError("feynman_with_stats caches only m <= 10")
    out = []
    for pairs, singles in _feynman_raw(tuple(range(m))):
        cr = crossing_count_raw(pairs)
        gap = sum(1 for a, b in pairs for s in singles if a < s < b)
        out.append((pairs, singles, cr, gap))
    return tuple(out)
