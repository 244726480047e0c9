"""Exhaustive generators for triangulations and k-in-n dissections.

These are the brute-force side of every count: they build each object
explicitly, so agreement with the closed forms in :mod:`catconv.core`
is a genuine check rather than a restatement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice, product
from typing import Iterator, Optional, Sequence

from catconv.core import DomainError, catalan
from catconv.model import Dissection, KInN, as_k_in_n


def _pair(a: int, b: int) -> tuple:
    return (a, b) if a < b else (b, a)


def arc_triangulations(verts: Sequence[int]) -> Iterator[list]:
    """Diagonal lists triangulating the convex polygon ``verts`` (in ccw order).

    Recurses on the root edge (verts[-1], verts[0]): pick the apex of the
    triangle on that edge, then triangulate the two pieces it leaves.
    Fewer than four vertices need no diagonals.
    """
    m = len(verts)
    if m <= 3:
        yield []
        return
    first, last = verts[0], verts[-1]
    for j in range(1, m - 1):
        apex = verts[j]
        chords = []
        if j != 1:
            chords.append(_pair(first, apex))
        if j != m - 2:
            chords.append(_pair(apex, last))
        for left in arc_triangulations(verts[: j + 1]):
            for right in arc_triangulations(verts[j:]):
                yield chords + left + right


def enumerate_triangulations(n: int, limit: Optional[int] = None) -> Iterator[Dissection]:
    """Every triangulation of the n-gon once, in a fixed order."""
    if n < 3:
        raise DomainError(f"triangulations need n >= 3, got n={n}")
    gen = (Dissection(n, tuple(ds)) for ds in arc_triangulations(range(n)))
    return islice(gen, limit)


def _arc(n: int, a: int, b: int) -> list:
    """Vertices a, a+1, ..., b (mod n)."""
    return [(a + j) % n for j in range((b - a) % n + 1)]


def _k_in_n(k: int, n: int) -> Iterator[KInN]:
    for face in combinations(range(n), k):
        gaps = [_arc(n, face[r], face[(r + 1) % k]) for r in range(k)]
        sides = [_pair(face[r], face[(r + 1) % k]) for r in range(k) if len(gaps[r]) > 2]
        for parts in product(*(arc_triangulations(g) for g in gaps)):
            diags = list(sides)
            for p in parts:
                diags.extend(p)
            yield as_k_in_n(Dissection(n, tuple(diags)), k, face)


def enumerate_k_in_n(k: int, n: int, limit: Optional[int] = None) -> Iterator[KInN]:
    """Every k-in-n dissection once.

    The k-gon is placed directly by choosing its vertex set; each gap it
    leaves against the boundary is then triangulated independently.  For
    k = 3 this gives every (triangulation, marked triangle) pair.
    """
    if not 3 <= k <= n:
        raise DomainError(f"k-in-n dissections need 3 <= k <= n, got k={k}, n={n}")
    return islice(_k_in_n(k, n), limit)


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    k: Optional[int] = None
    limit: Optional[int] = None
    order: str = "canonical"

    def __post_init__(self):
        if self.n < 3:
            raise DomainError(f"n must be >= 3, got {self.n}")
        if self.k is not None and not 3 <= self.k <= self.n:
            raise DomainError(f"need 3 <= k <= n, got k={self.k}, n={self.n}")
        if self.limit is not None and self.limit < 0:
            raise DomainError(f"limit must be >= 0, got {self.limit}")
        if self.order != "canonical":
            raise DomainError(f"unsupported order {self.order!r}")


def generate(cfg: GeneratorConfig):
    """Triangulations when ``cfg.k`` is None, else k-in-n dissections."""
    if cfg.k is None:
        return enumerate_triangulations(cfg.n, cfg.limit)
    return enumerate_k_in_n(cfg.k, cfg.n, cfg.limit)


def count_k_cycles(T: Dissection, k: int) -> int:
    """Number of k-cycles in the edge graph of a triangulation.

    With noncrossing chords every simple cycle runs through its vertices
    in boundary order, so a k-cycle is a k-subset whose cyclically
    consecutive members are all adjacent.
    """
    n = T.n
    if not 3 <= k <= n:
        raise DomainError(f"cycle length needs 3 <= k <= n, got k={k}, n={n}")
    edges = T.edges()
    total = 0
    for s in combinations(range(n), k):
        if all((s[r], s[r + 1]) in edges for r in range(k - 1)) and (s[0], s[-1]) in edges:
            total += 1
    return total


def average_cycles_bruteforce(k: int, n: int) -> Fraction:
    if not 3 <= k < n:
        raise DomainError(f"average needs 3 <= k < n, got k={k}, n={n}")
    total = sum(count_k_cycles(T, k) for T in enumerate_triangulations(n))
    return Fraction(total, catalan(n - 2))


def count_k_in_n_bruteforce(k: int, n: int) -> int:
    return sum(1 for _ in enumerate_k_in_n(k, n))
