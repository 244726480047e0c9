"""The two double-counting maps behind the k-in-n recurrences.

Marked diagonal:  (n-k) f_k(n) = n * sum_{i=2}^{n-k+1} C_{i-1} f_k(n-i+1)
    A k-in-n dissection with one diagonal marked <-> a start vertex v, a
    span i, a triangulated (i+1)-gon cap and a k-in-(n-i+1) remainder.

Marked vertex:    k f_k(n) = n * sum_{i_1+..+i_k=n} prod C_{i_r-1}
    A k-in-n dissection with a vertex of its k-gon marked <-> a start
    vertex v, a composition (i_1..i_k) of n and one triangulated cap per
    k-gon side.

Whenever a chord cuts off the counterclockwise arc a, a+1, ..., b, the
piece is relabelled 0, 1, ... starting from a.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from catconv.core import DomainError
from catconv.enumeration import arc_triangulations, enumerate_k_in_n, enumerate_triangulations
from catconv.model import Diagonal, Dissection, KInN, as_k_in_n, diagonal, from_obj, to_obj

Composition = tuple  # tuple[int, ...], positive parts


class BijectionError(ValueError):
    """Input does not belong to the domain of the map."""


def _arc_set(n: int, a: int, length: int) -> dict:
    """Map from original labels on the arc a..a+length to local labels."""
    return {(a + j) % n: j for j in range(length + 1)}


def _restrict(D: Dissection, n: int, start: int, length: int, skip=None) -> Dissection:
    """Sub-polygon on the arc start..start+length, relabelled from 0."""
    local = _arc_set(n, start, length)
    diags = []
    for d in D.diagonals:
        if d == skip:
            continue
        a, b = d
        if a in local and b in local:
            la, lb = local[a], local[b]
            if {la, lb} == {0, length}:
                continue  # the cutting chord is a side of the piece
            diags.append((la, lb))
    return Dissection(length + 1, tuple(diags))


def _embed(D: Dissection, n: int, start: int) -> list:
    return [diagonal(n, (start + a) % n, (start + b) % n) for a, b in D.diagonals]


def _check_cap(cap: Dissection, size: int) -> None:
    if cap.n != size:
        raise BijectionError(f"cap has {cap.n} vertices, expected {size}")
    if not cap.is_triangulation:
        raise BijectionError("cap is not a triangulation")


# --- marked diagonal ------------------------------------------------------


@dataclass(frozen=True, order=True)
class DiagonalMarkedKInN:
    base: KInN
    marked_diagonal: Diagonal

    def __post_init__(self):
        d = tuple(sorted(self.marked_diagonal))
        if d not in self.base.dissection.diagonals:
            raise BijectionError(f"{d} is not a diagonal of the dissection")
        object.__setattr__(self, "marked_diagonal", Diagonal(*d))


@dataclass(frozen=True, order=True)
class DiagonalDecomposition:
    v: int
    i: int
    cap: Dissection
    rest: KInN

    @property
    def n(self) -> int:
        return self.i + self.rest.n - 1

    def __post_init__(self):
        k, n = self.rest.k, self.n
        if not 2 <= self.i <= n - k + 1:
            raise BijectionError(f"span i={self.i} outside [2, {n - k + 1}]")
        if not 0 <= self.v < n:
            raise BijectionError(f"vertex {self.v} outside 0..{n - 1}")
        _check_cap(self.cap, self.i + 1)

    def to_obj(self) -> dict:
        return {"v": self.v, "i": self.i, "cap": to_obj(self.cap), "rest": to_obj(self.rest)}


def diagonal_mark_forward(x: DiagonalMarkedKInN) -> DiagonalDecomposition:
    D, n = x.base.dissection, x.base.n
    a, b = x.marked_diagonal
    face_on_ab_side = all(a <= w <= b for w in x.base.marked_face)
    # the cap is the fully triangulated side, away from the k-gon
    v, i = (b, n - (b - a)) if face_on_ab_side else (a, b - a)
    cap = _restrict(D, n, v, i, skip=x.marked_diagonal)
    rest_start = (v + i) % n
    rest_d = _restrict(D, n, rest_start, n - i, skip=x.marked_diagonal)
    local = _arc_set(n, rest_start, n - i)
    rest = as_k_in_n(rest_d, x.base.k, [local[w] for w in x.base.marked_face])
    return DiagonalDecomposition(v, i, cap, rest)


def diagonal_mark_inverse(d: DiagonalDecomposition) -> DiagonalMarkedKInN:
    n, v, i = d.n, d.v, d.i
    marked = diagonal(n, v, (v + i) % n)
    rest_start = (v + i) % n
    diags = [marked] + _embed(d.cap, n, v) + _embed(d.rest.dissection, n, rest_start)
    face = [(rest_start + w) % n for w in d.rest.marked_face]
    base = as_k_in_n(Dissection(n, tuple(diags)), d.rest.k, face)
    return DiagonalMarkedKInN(base, marked)


def diagonal_marked_domain(k: int, n: int) -> Iterator[DiagonalMarkedKInN]:
    for x in enumerate_k_in_n(k, n):
        for dg in x.dissection.diagonals:
            yield DiagonalMarkedKInN(x, dg)


def diagonal_decompositions(k: int, n: int) -> Iterator[DiagonalDecomposition]:
    """The codomain, built directly from its parts."""
    if not 3 <= k <= n:
        raise DomainError(f"need 3 <= k <= n, got k={k}, n={n}")
    for v in range(n):
        for i in range(2, n - k + 2):
            for cap in enumerate_triangulations(i + 1):
                for rest in enumerate_k_in_n(k, n - i + 1):
                    yield DiagonalDecomposition(v, i, cap, rest)


# --- marked vertex --------------------------------------------------------


@dataclass(frozen=True, order=True)
class VertexMarkedKInN:
    base: KInN
    marked_vertex: int

    def __post_init__(self):
        if self.marked_vertex not in self.base.marked_face:
            raise BijectionError(f"vertex {self.marked_vertex} is not on the marked face")


@dataclass(frozen=True, order=True)
class VertexDecomposition:
    """Start vertex, side lengths of the k-gon and one cap per side.

    A side of length 1 is a polygon side; its cap is the 2-vertex
    ``Dissection(2)``, which has exactly one (empty) triangulation.
    """

    v: int
    comp: Composition
    caps: tuple

    @property
    def n(self) -> int:
        return sum(self.comp)

    def __post_init__(self):
        comp = tuple(self.comp)
        object.__setattr__(self, "comp", comp)
        object.__setattr__(self, "caps", tuple(self.caps))
        if len(comp) < 3 or any(p < 1 for p in comp):
            raise BijectionError(f"{comp} is not a composition into >= 3 positive parts")
        if len(self.caps) != len(comp):
            raise BijectionError("need one cap per part")
        if not 0 <= self.v < self.n:
            raise BijectionError(f"vertex {self.v} outside 0..{self.n - 1}")
        for part, cap in zip(comp, self.caps):
            _check_cap(cap, part + 1)

    def to_obj(self) -> dict:
        return {"v": self.v, "comp": list(self.comp), "caps": [to_obj(c) for c in self.caps]}


def vertex_mark_forward(x: VertexMarkedKInN) -> VertexDecomposition:
    D, n, face = x.base.dissection, x.base.n, x.base.marked_face
    k = len(face)
    p = face.index(x.marked_vertex)
    order = face[p:] + face[:p]
    comp, caps = [], []
    for r in range(k):
        a, b = order[r], order[(r + 1) % k]
        length = (b - a) % n
        comp.append(length)
        caps.append(_restrict(D, n, a, length))
    return VertexDecomposition(x.marked_vertex, tuple(comp), tuple(caps))


def vertex_mark_inverse(d: VertexDecomposition) -> VertexMarkedKInN:
    n, v = d.n, d.v
    corners, diags, pos = [], [], v
    for part, cap in zip(d.comp, d.caps):
        corners.append(pos)
        nxt = (pos + part) % n
        if part >= 2:
            diags.append(diagonal(n, pos, nxt))
            diags.extend(_embed(cap, n, pos))
        pos = nxt
    base = as_k_in_n(Dissection(n, tuple(diags)), len(d.comp), corners)
    return VertexMarkedKInN(base, v)


def compositions(n: int, k: int) -> Iterator[tuple]:
    """Compositions of n into k positive parts, lexicographically by cut set."""
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[r + 1] - bounds[r] for r in range(k))


def vertex_marked_domain(k: int, n: int) -> Iterator[VertexMarkedKInN]:
    for x in enumerate_k_in_n(k, n):
        for w in x.marked_face:
            yield VertexMarkedKInN(x, w)


def vertex_decompositions(k: int, n: int) -> Iterator[VertexDecomposition]:
    if not 3 <= k <= n:
        raise DomainError(f"need 3 <= k <= n, got k={k}, n={n}")
    for v in range(n):
        for comp in compositions(n, k):
            options = [
                [Dissection(p + 1, tuple(ds)) for ds in arc_triangulations(range(p + 1))]
                for p in comp
            ]
            for caps in product(*options):
                yield VertexDecomposition(v, comp, caps)


def dumps(d) -> str:
    """Canonical JSON for a decomposition."""
    return json.dumps(d.to_obj(), separators=(",", ":"))


def loads(text: str):
    """Parse JSON written by :func:`dumps`, back into a decomposition."""
    obj = json.loads(text)
    if "comp" in obj:
        return VertexDecomposition(obj["v"], tuple(obj["comp"]), tuple(from_obj(c) for c in obj["caps"]))
    return DiagonalDecomposition(obj["v"], obj["i"], from_obj(obj["cap"]), from_obj(obj["rest"]))
