import json

import pytest
from hypothesis import given, strategies as st

from catconv.model import (
    Dissection,
    DissectionError,
    KInN,
    ParseError,
    as_k_in_n,
    diagonals_cross,
    faces,
    parse,
    rotate,
    serialize,
)
from catconv.render import five_in_twelve
from oracles import crosses


@st.composite
def dissections(draw, n_min=3, n_max=12):
    """Random valid dissection built by adding shuffled diagonals greedily."""
    n = draw(st.integers(n_min, n_max))
    cands = [(a, b) for a in range(n) for b in range(a + 2, n) if not (a == 0 and b == n - 1)]
    order = draw(st.permutations(cands)) if cands else []
    want = draw(st.integers(0, max(n - 3, 0)))
    chosen = []
    for d in order:
        if len(chosen) == want:
            break
        if not any(crosses(tuple(sorted(d)), tuple(sorted(c))) for c in chosen):
            chosen.append(d)
    return Dissection(n, tuple(chosen))


def test_cross_examples():
    assert diagonals_cross(4, (0, 2), (1, 3))
    assert not diagonals_cross(7, (0, 2), (2, 4))
    assert not diagonals_cross(6, (0, 2), (3, 5))


@pytest.mark.parametrize("bad", [(0, 1), (0, 3), (2, 2), (0, 9)])
def test_cross_rejects_invalid_diagonal(bad):
    with pytest.raises(DissectionError):
        diagonals_cross(4, bad, (1, 3))


def test_cross_matches_interval_oracle():
    n = 9
    diags = [(a, b) for a in range(n) for b in range(a + 2, n) if not (a == 0 and b == n - 1)]
    for d1 in diags:
        for d2 in diags:
            if d1 != d2:
                assert diagonals_cross(n, d1, d2) == crosses(d1, d2)


def test_faces_examples():
    assert faces(Dissection(4, ((0, 2),))) == [(0, 1, 2), (0, 2, 3)]
    assert faces(Dissection(5)) == [(0, 1, 2, 3, 4)]
    assert faces(Dissection(5, ((0, 2), (0, 3)))) == [(0, 1, 2), (0, 2, 3), (0, 3, 4)]


def test_diagonals_canonicalised():
    D = Dissection(6, ((3, 0), (5, 3)))
    assert D.diagonals == ((0, 3), (3, 5))
    assert D == Dissection(6, ((3, 5), (0, 3)))


@pytest.mark.parametrize("n, diags", [
    (4, ((0, 2), (1, 3))),
    (5, ((0, 1),)),
    (5, ((0, 2), (2, 0))),
    (5, ((0, 7),)),
    (1, ()),
])
def test_invalid_dissections(n, diags):
    with pytest.raises(DissectionError):
        Dissection(n, diags)


@given(dissections())
def test_face_count_and_edge_conservation(D):
    fs = faces(D)
    assert len(fs) == len(D.diagonals) + 1
    assert sum(len(f) for f in fs) == D.n + 2 * len(D.diagonals)
    assert len(D.diagonals) <= D.n - 3
    assert fs == sorted(fs)


@given(dissections())
def test_rotation_equivariance(D):
    R = rotate(D)
    shifted = sorted(tuple(sorted((v + 1) % D.n for v in f)) for f in faces(D))
    assert faces(R) == shifted


@given(dissections())
def test_triangulations_have_only_triangles(D):
    if len(D.diagonals) == D.n - 3:
        assert all(len(f) == 3 for f in faces(D))


@given(dissections(n_min=4))
def test_non_triangle_face_is_unique_when_profile_fits(D):
    k = D.n - len(D.diagonals)
    big = [f for f in faces(D) if len(f) > 3]
    try:
        x = as_k_in_n(D, k, None if k > 3 else faces(D)[0])
    except DissectionError:
        assert k == 3 or len(big) != 1
    else:
        assert k == 3 or big == [x.marked_face]


def test_as_k_in_n_examples():
    x = as_k_in_n(Dissection(5, ((0, 2),)), 4)
    assert x.marked_face == (0, 2, 3, 4)
    y = as_k_in_n(Dissection(4, ((0, 2),)), 3, (0, 1, 2))
    assert y.marked_face == (0, 1, 2)
    z = as_k_in_n(Dissection(6, ((0, 2), (0, 3))), 4)
    assert z.marked_face == (0, 3, 4, 5)
    with pytest.raises(DissectionError, match="face sizes"):
        as_k_in_n(Dissection(8, ((0, 4),)), 7)  # two pentagons


def test_as_k_in_n_errors():
    with pytest.raises(DissectionError):
        as_k_in_n(Dissection(5, ((0, 2),)), 3, (0, 1, 2))  # wrong diagonal count
    with pytest.raises(DissectionError):
        as_k_in_n(Dissection(4, ((0, 2),)), 3)  # k=3 needs a mark
    with pytest.raises(DissectionError):
        as_k_in_n(Dissection(4, ((0, 2),)), 3, (0, 1, 3))  # not a face
    with pytest.raises(DissectionError):
        as_k_in_n(Dissection(5, ((0, 2),)), 4, (0, 1, 2, 3))  # wrong mark


def test_kinn_constructor_validates_and_canonicalises():
    x = KInN(Dissection(5, ((0, 2),)), (4, 3, 2, 0))
    assert x.marked_face == (0, 2, 3, 4) and x.k == 4 and x.n == 5
    with pytest.raises(DissectionError):
        KInN(Dissection(5, ((0, 2),)), (0, 1, 2))


def test_serialize_format():
    assert serialize(Dissection(4, ((0, 2),))) == '{"n":4,"diagonals":[[0,2]]}'
    x = as_k_in_n(Dissection(5, ((0, 2),)), 4)
    assert serialize(x) == '{"n":5,"diagonals":[[0,2]],"marked_face":[0,2,3,4]}'


def test_figure_round_trip_bytes():
    x = five_in_twelve()
    text = serialize(x)
    assert parse(text) == x
    assert serialize(parse(text)) == text
    assert len(x.dissection.diagonals) == 7


def test_parse_examples():
    assert parse('{"n":4,"diagonals":[[0,2]]}') == Dissection(4, ((0, 2),))
    assert parse('{"n": 4, "diagonals": [[2, 0]]}') == Dissection(4, ((0, 2),))
    with pytest.raises(ParseError, match="cross"):
        parse('{"n":4,"diagonals":[[0,2],[1,3]]}')


@pytest.mark.parametrize("text, pos", [
    ('{"n":4,"diagonals":[[0,2]', 25),
    ('{"n":4}', "$"),
    ('{"n":"4","diagonals":[]}', "$.n"),
    ('{"n":5,"diagonals":[[0,2],[1]]}', "$.diagonals[1]"),
    ('{"n":5,"diagonals":[],"colour":1}', "$"),
    ('[1,2]', "$"),
    ('{"n":5,"diagonals":[[0,2]],"marked_face":[0,1,2]}', "$"),
    ('{"n":5,"diagonals":[[0,2]],"marked_face":[0,2,3,9]}', "$.marked_face"),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos


@given(dissections())
def test_serialize_round_trip(D):
    text = serialize(D)
    assert parse(text) == D
    assert json.loads(text)["diagonals"] == sorted(json.loads(text)["diagonals"])
