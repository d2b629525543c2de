"""Closed-form correlations for cycles and forests.

On a cycle, a path event succeeds along one of the two arcs, which gives
inclusion-exclusion over fully oriented arcs.  On a forest, paths are
unique, so the two events are either independent (the a-b path runs through
s, or a component boundary separates the triple) or mutually exclusive
(both events need the same edge in opposite directions).
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyadic import DyadicProb, SignedDyadic, TripleCorrelation
from .graphs import Graph, Triple


@dataclass(frozen=True)
class CycleTriple:
    """A triple on the n-cycle given by arc lengths in rotation order.

    c edges from a to s, d edges from s to b, n - c - d edges back to a;
    all three arcs must be nonempty.
    """

    n: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.c < 1 or self.d < 1 or self.n - self.c - self.d < 1:
            raise ValueError(f"arc lengths ({self.c}, {self.d}, {self.n - self.c - self.d}) must all be >= 1")


def cycle_triple_from_labels(n: int, a: int, s: int, b: int) -> CycleTriple:
    """Arc lengths for labeled vertices on the standard cycle 0-1-...-(n-1)-0."""
    if len({a % n, s % n, b % n}) != 3:
        raise ValueError(f"triple ({a}, {s}, {b}) is not distinct on the {n}-cycle")
    c = (s - a) % n
    d = (b - s) % n
    if c + d > n:
        # The rotation order is a, b, s; reflect the cycle (an automorphism,
        # so the joint law is unchanged) to make the three arcs nonempty.
        c, d = n - c, n - d
    return CycleTriple(n, c, d)


def cycle_correlation(t: CycleTriple) -> TripleCorrelation:
    """Exact correlation on the n-cycle; always negative."""
    n, c, d = t.n, t.c, t.d
    # Each probability is (count over 2^n): a->s along either arc, minus the
    # single orientation where both arcs point at s.
    n_c = (1 << (n - c)) + (1 << c) - 1
    n_d = (1 << (n - d)) + (1 << d) - 1
    n_cd = (1 << (n - c - d)) + 1
    return TripleCorrelation.from_scaled(n_c, n_d, n_cd, n)


def cycle_cov_bound(n: int) -> SignedDyadic:
    """The uniform ceiling -(1/2)^(2n) on cycle covariances; tight iff c = d = 1."""
    return SignedDyadic.of(-1, 2 * n)


@dataclass(frozen=True)
class ForestVerdict:
    """Outcome of the forest dichotomy for one triple."""

    kind: str  # "independent" or "mutually_exclusive"
    p_c: DyadicProb
    p_d: DyadicProb
    p_cd: DyadicProb
    cov: SignedDyadic

    def correlation(self) -> TripleCorrelation:
        return TripleCorrelation(self.p_c, self.p_d, self.p_cd, self.cov)


def _distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    level = 0
    while frontier:
        level += 1
        nxt = 0
        rest = frontier
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            nxt |= g.adjacency[v]
        frontier = nxt & ~seen
        seen |= frontier
        rest = frontier
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            dist[v] = level
    return dist


def _is_forest(g: Graph) -> bool:
    # A forest has n - (number of components) edges; count components by BFS.
    components = 0
    unseen = (1 << g.n) - 1
    while unseen:
        root = (unseen & -unseen).bit_length() - 1
        components += 1
        seen = frontier = 1 << root
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                nxt |= g.adjacency[v]
            frontier = nxt & ~seen
            seen |= frontier
        unseen &= ~seen
    return g.m == g.n - components


def forest_correlation(g: Graph, t: Triple) -> ForestVerdict:
    """Apply the forest dichotomy to one triple; raises on non-forests."""
    t.validate(g)
    if not _is_forest(g):
        raise ValueError("graph has a cycle; the forest dichotomy does not apply")
    from_a = _distances(g, t.a)
    from_s = _distances(g, t.s)
    d_as = from_a[t.s]
    d_sb = from_s[t.b]
    p_c = DyadicProb.of(1, d_as) if d_as is not None else DyadicProb.zero()
    p_d = DyadicProb.of(1, d_sb) if d_sb is not None else DyadicProb.zero()
    if d_as is None or d_sb is None:
        # A component boundary kills at least one event outright.
        return ForestVerdict("independent", p_c, p_d, p_c * p_d, SignedDyadic.of(0, 0))
    if from_a[t.b] == d_as + d_sb:
        # The unique a-b path runs through s: the two events use disjoint
        # edge sets, hence independence.
        return ForestVerdict("independent", p_c, p_d, p_c * p_d, SignedDyadic.of(0, 0))
    # Otherwise the a-s and s-b paths share an edge traversed both ways.
    product = p_c * p_d
    return ForestVerdict("mutually_exclusive", p_c, p_d, DyadicProb.zero(),
                         SignedDyadic.of(-product.num, product.exp))
