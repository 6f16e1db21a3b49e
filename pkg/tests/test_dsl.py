import random

import pytest

from tubular.core import Edge, GpqParams, IntVec2, TubularPresentation
from tubular.dsl import DslError, parse, unparse

V = IntVec2

GERSTEN_TEXT = """
group gersten {
  vertex V;
  edge b : V(0,1) -> V(1,1);
  edge c : V(0,1) -> V(2,1)
}
"""


def test_parse_gersten():
    g = parse(GERSTEN_TEXT)
    assert isinstance(g, TubularPresentation)
    assert g.name == "gersten"
    assert g.vertices == ("V",)
    assert [(e.label, e.v, e.w) for e in g.edges] == [
        ("b", V(0, 1), V(1, 1)),
        ("c", V(0, 1), V(2, 1)),
    ]


def test_parse_gpq():
    params = parse("gpq p=[0,0] q=[1,2]")
    assert params == GpqParams((0, 0), (1, 2))


def test_comments_and_whitespace():
    text = "group g { # a comment\n  vertex A , B ;  # another\n edge e:A(1,0)->B(-2,3); }"
    g = parse(text)
    assert g.vertices == ("A", "B")
    assert g.edges[0].w == V(-2, 3)


def test_trailing_semicolon_optional():
    with_semi = parse("group g { vertex V; edge e : V(1,0) -> V(0,1); }")
    without = parse("group g { vertex V; edge e : V(1,0) -> V(0,1) }")
    assert with_semi == without


def test_zero_vector_error_position():
    with pytest.raises(DslError) as exc:
        parse("group bad {\n  vertex V;\n  edge e : V(0,0) -> V(1,0);\n}")
    assert exc.value.line == 3
    assert "zero attaching vector" in str(exc.value)


def test_unknown_vertex_error():
    with pytest.raises(DslError) as exc:
        parse("group bad { vertex V; edge e : W(1,0) -> V(1,0); }")
    assert "unknown vertex 'W'" in str(exc.value)


def test_duplicate_label_error():
    with pytest.raises(DslError) as exc:
        parse(
            "group bad { vertex V; edge e : V(1,0) -> V(1,0); "
            "edge e : V(0,1) -> V(0,1); }"
        )
    assert "duplicate edge label" in str(exc.value)


def test_syntax_error_has_line_and_column():
    with pytest.raises(DslError) as exc:
        parse("group g {\n  vertex V\n}")
    assert exc.value.line == 3


def test_mismatched_gpq_lengths():
    with pytest.raises(DslError):
        parse("gpq p=[1] q=[1,2]")


def test_trailing_input_rejected():
    with pytest.raises(DslError):
        parse("gpq p=[1] q=[1] extra")


def _random_presentation(rng) -> TubularPresentation:
    nv = rng.randint(1, 3)
    vertices = tuple(f"V{i}" for i in range(nv))
    edges = []
    for j in range(rng.randint(0, 4)):
        while True:
            v = V(rng.randint(-9, 9), rng.randint(-9, 9))
            w = V(rng.randint(-9, 9), rng.randint(-9, 9))
            if not v.is_zero() and not w.is_zero():
                break
        edges.append(
            Edge(
                f"e{j}",
                rng.choice(vertices),
                rng.choice(vertices),
                v,
                w,
                label=f"e{j}",
            )
        )
    return TubularPresentation(vertices, tuple(edges), name=f"g{rng.randint(0, 99)}")


def test_round_trip_random_presentations():
    rng = random.Random(20240821)
    for _ in range(200):
        g = _random_presentation(rng)
        assert parse(unparse(g)) == g


def test_round_trip_corpus_entries():
    from tubular.corpus import corpus

    for entry in corpus():
        assert parse(unparse(entry.presentation)) == entry.presentation


def test_round_trip_gpq():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 4)
        params = GpqParams(
            tuple(rng.randint(-9, 9) for _ in range(n)),
            tuple(rng.randint(-9, 9) for _ in range(n)),
        )
        assert parse(unparse(params)) == params
