"""Virtual-specialness and cocompact-cubulation deciders.

Routes, from weakest to strongest:

* a sufficient determinant test on single-vertex inputs (a two-element
  equitable set exists whenever det[w1-v1, .] and det[w1+v1, .] agree up to
  sign across all edges);
* the equivalence "CAT(0) iff virtually special" for free-by-cyclic
  single-vertex groups, which upgrades a CAT(0) verdict to an iff;
* counting parallelism classes of edge groups per vertex, which controls
  cocompact cubulation (three or more classes at a vertex is fatal);
* a complete characterization for the two-parameter integer family, where the
  attaching pairs are (q_i, 1) -> (-p_i, 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cat0 import decide_cat0
from .core import (
    GpqParams,
    IntVec2,
    TubularPresentation,
    VertexId,
    det2,
    primitive_of,
    single_vertex_presentation,
)
from .fbc import decide_fbc_single_vertex

Pair = tuple[IntVec2, IntVec2]


class Answer(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


class Route(enum.Enum):
    DET_SUFFICIENT = "DetSufficient"
    FBC_CAT0_EQUIV = "FbcCat0Equiv"
    GPQ_CHARACTERIZATION = "GpqCharacterization"
    CLASS_COUNT_OBSTRUCTION = "ClassCountObstruction"


@dataclass(frozen=True)
class SpecialVerdict:
    answer: Answer
    route: Route
    citation: str
    notes: tuple[str, ...] = ()


def vspecial_sufficient(edges: list[Pair]) -> SpecialVerdict:
    """Sufficient test: Yes when both determinant families agree up to sign.

    Only ever answers Yes or Unknown; the condition is not necessary.
    """
    for v, w in edges:
        if v.is_zero() or w.is_zero():
            raise ValueError("attaching vectors must be nonzero")
    base = next((i for i, (v, w) in enumerate(edges) if det2(v, w) != 0), None)
    if base is None:
        return SpecialVerdict(
            Answer.UNKNOWN,
            Route.DET_SUFFICIENT,
            "two-element equitable set sufficiency test",
            notes=("no linearly independent attaching pair; test not applicable",),
        )
    v1, w1 = edges[base]
    z1, z2 = w1 - v1, w1 + v1
    for i, (v, w) in enumerate(edges):
        if i == base:
            continue
        if abs(det2(z1, v)) != abs(det2(z1, w)) or abs(det2(z2, v)) != abs(
            det2(z2, w)
        ):
            return SpecialVerdict(
                Answer.UNKNOWN,
                Route.DET_SUFFICIENT,
                "two-element equitable set sufficiency test",
                notes=(
                    f"edge {i}: |det| families disagree "
                    f"({abs(det2(z1, v))} vs {abs(det2(z1, w))} and "
                    f"{abs(det2(z2, v))} vs {abs(det2(z2, w))})",
                ),
            )
    return SpecialVerdict(
        Answer.YES,
        Route.DET_SUFFICIENT,
        "two-element equitable set sufficiency test",
    )


def vspecial_fbc_decide(edges: list[Pair]) -> SpecialVerdict:
    """For free-by-cyclic single-vertex inputs, virtual specialness is
    equivalent to CAT(0)ness; a No on this route is a genuine No."""
    fbc = decide_fbc_single_vertex(edges)
    if not fbc.answer:
        return SpecialVerdict(
            Answer.UNKNOWN,
            Route.FBC_CAT0_EQUIV,
            "CAT(0) <=> virtually special for free-by-cyclic one-vertex groups",
            notes=("input is not free-by-cyclic; equivalence route not applicable",),
        )
    cat0 = decide_cat0(edges)
    return SpecialVerdict(
        Answer.YES if cat0.answer else Answer.NO,
        Route.FBC_CAT0_EQUIV,
        "CAT(0) <=> virtually special for free-by-cyclic one-vertex groups",
    )


def parallelism_class_count(g: TubularPresentation, vertex: VertexId) -> int:
    """Number of lines through the origin spanned by the attaching vectors
    incident to the vertex (both ends of loops counted)."""
    if vertex not in g.vertices:
        raise ValueError(f"unknown vertex {vertex!r}")
    lines = set()
    for v in g.incident_vectors(vertex):
        p = primitive_of(v)
        if p.x < 0 or (p.x == 0 and p.y < 0):
            p = -p
        lines.add((p.x, p.y))
    return len(lines)


@dataclass(frozen=True)
class CubulationVerdict:
    answer: Answer
    class_counts: tuple[tuple[VertexId, int], ...]
    citation: str
    notes: tuple[str, ...] = ()


def cocompact_cubulation_decide(
    g: TubularPresentation, cat0_known: bool
) -> CubulationVerdict:
    """Can the group (virtually) act freely and cocompactly on a CAT(0) cube
    complex?  No when some vertex carries three or more parallelism classes;
    Yes when all counts are <= 2 and CAT(0)ness is known (which rules out the
    distorted Baumslag-Solitar subgroups); Unknown otherwise."""
    counts = tuple((v, parallelism_class_count(g, v)) for v in g.vertices)
    bad = [(v, c) for v, c in counts if c >= 3]
    if bad:
        return CubulationVerdict(
            Answer.NO,
            counts,
            "parallelism class bound: three or more classes at a vertex",
            notes=tuple(f"vertex {v}: {c} parallelism classes" for v, c in bad),
        )
    if cat0_known:
        return CubulationVerdict(
            Answer.YES,
            counts,
            "at most two parallelism classes per vertex and no distorted "
            "Baumslag-Solitar subgroup (excluded by CAT(0)ness)",
        )
    return CubulationVerdict(
        Answer.UNKNOWN,
        counts,
        "at most two parallelism classes per vertex",
        notes=(
            "CAT(0)ness not established; Baumslag-Solitar subgroup detection "
            "is not implemented",
        ),
    )


def gpq_to_tubular(params: GpqParams) -> TubularPresentation:
    """The single-vertex presentation of the family: edges (q_i,1) -> (-p_i,1)."""
    pairs = [
        (IntVec2(q, 1), IntVec2(-p, 1)) for p, q in zip(params.p, params.q)
    ]
    return single_vertex_presentation(pairs, name="gpq")


def gpq_vspecial_decide(params: GpqParams) -> SpecialVerdict:
    """Complete characterization of virtual specialness (equivalently,
    CAT(0)ness) for the family: either p_i = -q_i for all i, or, evaluated at
    the first s with p_s != -q_s,

        q_i (q_i + p_s - q_s) = p_i (p_i - p_s + q_s)   for all i.
    """
    p, q = params.p, params.q
    if all(pi == -qi for pi, qi in zip(p, q)):
        return SpecialVerdict(
            Answer.YES,
            Route.GPQ_CHARACTERIZATION,
            "family characterization, degenerate branch p_i = -q_i",
        )
    s = next(i for i in range(len(p)) if p[i] != -q[i])
    ok = all(
        q[i] * (q[i] + p[s] - q[s]) == p[i] * (p[i] - p[s] + q[s])
        for i in range(len(p))
    )
    return SpecialVerdict(
        Answer.YES if ok else Answer.NO,
        Route.GPQ_CHARACTERIZATION,
        "family characterization, quadratic identity branch",
        notes=(f"evaluated at s = {s}",),
    )


def gpq_compact_special_decide(params: GpqParams) -> SpecialVerdict:
    """Virtually compact special iff {-p_i} union {q_i} has at most two
    elements and the virtual-specialness characterization holds."""
    classes = {-pi for pi in params.p} | set(params.q)
    vs = gpq_vspecial_decide(params)
    if len(classes) <= 2 and vs.answer is Answer.YES:
        return SpecialVerdict(
            Answer.YES,
            Route.CLASS_COUNT_OBSTRUCTION,
            "at most two slope classes and virtually special",
        )
    notes = []
    if len(classes) > 2:
        notes.append(f"slope class set {sorted(classes)} has {len(classes)} elements")
    if vs.answer is not Answer.YES:
        notes.append("not virtually special")
    return SpecialVerdict(
        Answer.NO,
        Route.CLASS_COUNT_OBSTRUCTION,
        "compact specialness characterization for the family",
        notes=tuple(notes),
    )
