"""Convex polygon dissections: diagonals, faces, and k-in-n structures.

Vertices of an n-gon are labelled 0..n-1 counterclockwise.  A diagonal is
stored as a pair ``(a, b)`` with ``a < b``; a face is the tuple of its
boundary vertices.  Because every face of a convex dissection is itself a
convex polygon on a subset of the labels, its counterclockwise boundary
started at the minimum vertex is simply the sorted tuple.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Union

Face = tuple  # tuple[int, ...]


class Diagonal(NamedTuple):
    a: int
    b: int


class ParseError(ValueError):
    """Malformed or invalid dissection text.

    ``pos`` is a character offset for syntax errors, or a JSON path such as
    ``diagonals[1]`` for structural ones.
    """

    def __init__(self, cause: str, pos: Union[int, str, None] = None):
        self.cause = cause
        self.pos = pos
        where = f" at {pos}" if pos is not None else ""
        super().__init__(f"{cause}{where}")


class DissectionError(ValueError):
    """Diagonals that do not form a valid dissection, or a bad face profile."""


def _check_diagonal(n: int, d: tuple[int, int]) -> None:
    a, b = d
    if not (0 <= a < n and 0 <= b < n):
        raise DissectionError(f"diagonal {tuple(d)} has a vertex outside 0..{n - 1}")
    if a == b or (b - a) % n in (1, n - 1):
        raise DissectionError(f"{tuple(d)} is not a diagonal of a {n}-gon")


def diagonal(n: int, a: int, b: int) -> Diagonal:
    """Canonical diagonal {a, b} of an n-gon."""
    d = Diagonal(min(a, b), max(a, b))
    _check_diagonal(n, d)
    return d


def diagonals_cross(n: int, d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    """True iff the interiors of two diagonals of a convex n-gon intersect."""
    _check_diagonal(n, d1)
    _check_diagonal(n, d2)
    a, b = d1
    c, d = d2
    if len({a, b, c, d}) < 4:
        return False
    span = (b - a) % n
    inside_c = 0 < (c - a) % n < span
    inside_d = 0 < (d - a) % n < span
    return inside_c != inside_d


@dataclass(frozen=True, order=True)
class Dissection:
    """An n-gon together with pairwise noncrossing diagonals.

    ``n == 2`` is accepted as the degenerate edge (no diagonals, no faces);
    it stands in for the empty cap wherever a k-gon side is a polygon side.
    """

    n: int
    diagonals: tuple = ()

    def __post_init__(self):
        if self.n < 2:
            raise DissectionError(f"polygon needs at least 2 vertices, got {self.n}")
        canon = tuple(sorted(diagonal(self.n, a, b) for a, b in self.diagonals))
        if len(set(canon)) != len(canon):
            raise DissectionError("repeated diagonal")
        for i, d1 in enumerate(canon):
            for d2 in canon[i + 1:]:
                if diagonals_cross(self.n, d1, d2):
                    raise DissectionError(f"diagonals {tuple(d1)} and {tuple(d2)} cross")
        object.__setattr__(self, "diagonals", canon)

    @property
    def is_triangulation(self) -> bool:
        return len(self.diagonals) == max(self.n - 3, 0)

    def edges(self) -> set:
        """Polygon sides and diagonals, as sorted pairs."""
        if self.n == 2:
            return {(0, 1)}
        sides = {(min(v, (v + 1) % self.n), max(v, (v + 1) % self.n)) for v in range(self.n)}
        return sides | set(self.diagonals)

    def faces(self) -> list:
        return faces(self)


Triangulation = Dissection


def faces(D: Dissection) -> list:
    """Faces of ``D`` as sorted vertex tuples, in lexicographic order.

    Each diagonal splits the unique current face holding both endpoints.
    """
    if D.n == 2:
        return []
    current = [tuple(range(D.n))]
    for a, b in D.diagonals:
        for idx, f in enumerate(current):
            if a in f and b in f:
                i, j = f.index(a), f.index(b)
                current[idx] = f[i:j + 1]
                current.append(tuple(sorted(f[j:] + f[:i + 1])))
                break
    return sorted(current)


def rotate(D: Dissection, shift: int = 1) -> Dissection:
    """Relabel every vertex v as (v + shift) mod n."""
    n = D.n
    return Dissection(n, tuple(((a + shift) % n, (b + shift) % n) for a, b in D.diagonals))


@dataclass(frozen=True, order=True)
class KInN:
    """A dissection with n-k diagonals and one distinguished k-gon face.

    Every other face is a triangle.  For k = 3 the dissection is a
    triangulation and ``marked_face`` picks one of its n-2 triangles.
    Build through :func:`as_k_in_n` to get validation.
    """

    dissection: Dissection
    marked_face: tuple

    def __post_init__(self):
        checked = as_k_in_n(self.dissection, len(self.marked_face), self.marked_face)
        object.__setattr__(self, "marked_face", checked.marked_face)

    @property
    def n(self) -> int:
        return self.dissection.n

    @property
    def k(self) -> int:
        return len(self.marked_face)


def _canon_face(mark: Iterable[int]) -> tuple:
    return tuple(sorted(mark))


def as_k_in_n(D: Dissection, k: int, mark: Optional[Iterable[int]] = None) -> KInN:
    """View ``D`` as a k-in-n dissection, checking the face profile."""
    n = D.n
    if not 3 <= k <= n:
        raise DissectionError(f"need 3 <= k <= n, got k={k}, n={n}")
    if len(D.diagonals) != n - k:
        raise DissectionError(f"a {k}-in-{n} dissection has {n - k} diagonals, got {len(D.diagonals)}")
    fs = faces(D)
    if mark is not None:
        mark = _canon_face(mark)
    if k == 3:
        if mark is None:
            raise DissectionError("k=3 needs an explicit marked triangle")
        if mark not in fs:
            raise DissectionError(f"marked triangle {mark} is not a face")
        target = mark
    else:
        big = [f for f in fs if len(f) != 3]
        if len(big) != 1 or len(big[0]) != k:
            profile = sorted(len(f) for f in fs)
            raise DissectionError(f"face sizes {profile} are not one {k}-gon plus triangles")
        target = big[0]
        if mark is not None and mark != target:
            raise DissectionError(f"mark {mark} differs from the {k}-gon face {target}")
    obj = object.__new__(KInN)
    object.__setattr__(obj, "dissection", D)
    object.__setattr__(obj, "marked_face", target)
    return obj


def to_obj(x: Union[Dissection, KInN]) -> dict:
    if isinstance(x, KInN):
        return {
            "n": x.n,
            "diagonals": [list(d) for d in x.dissection.diagonals],
            "marked_face": list(x.marked_face),
        }
    return {"n": x.n, "diagonals": [list(d) for d in x.diagonals]}


def serialize(x: Union[Dissection, KInN]) -> str:
    """Canonical one-line JSON text."""
    return json.dumps(to_obj(x), separators=(",", ":"))


def _int(value, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError("expected an integer", path)
    return value


def from_obj(obj, path: str = "$") -> Union[Dissection, KInN]:
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object", path)
    extra = set(obj) - {"n", "diagonals", "marked_face"}
    if extra:
        raise ParseError(f"unknown key(s) {sorted(extra)}", path)
    if "n" not in obj or "diagonals" not in obj:
        raise ParseError("missing 'n' or 'diagonals'", path)
    n = _int(obj["n"], f"{path}.n")
    diags = obj["diagonals"]
    if not isinstance(diags, list):
        raise ParseError("expected a list", f"{path}.diagonals")
    pairs = []
    for i, d in enumerate(diags):
        where = f"{path}.diagonals[{i}]"
        if not isinstance(d, list) or len(d) != 2:
            raise ParseError("expected a pair [a, b]", where)
        pairs.append((_int(d[0], where), _int(d[1], where)))
    try:
        D = Dissection(n, tuple(pairs))
        if "marked_face" not in obj:
            return D
        mark = obj["marked_face"]
        if not isinstance(mark, list):
            raise ParseError("expected a list", f"{path}.marked_face")
        mark = [_int(v, f"{path}.marked_face") for v in mark]
        if len(set(mark)) != len(mark) or any(not 0 <= v < n for v in mark):
            raise ParseError("marked face has repeated or out-of-range vertices", f"{path}.marked_face")
        return as_k_in_n(D, len(mark), mark)
    except DissectionError as exc:
        raise ParseError(str(exc), path) from exc


def parse(text: str) -> Union[Dissection, KInN]:
    """Inverse of :func:`serialize`.

    Whitespace is free; keys, types and validity are checked strictly.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from exc
    return from_obj(obj)
