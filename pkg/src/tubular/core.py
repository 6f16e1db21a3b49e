"""Exact integer/rational 2x2 linear algebra and the tubular-presentation data model.

A tubular group splits as a finite graph of groups with Z^2 vertex groups and
Z edge groups.  Every vertex carries an implicit Z^2 with a fixed basis; every
edge carries two nonzero attaching vectors, one in each endpoint's basis.  All
arithmetic here is exact: unbounded integers and reduced rationals.  No
floating point is used anywhere in the deciders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

# Rationals are fractions.Fraction: always reduced, positive denominator.
Rat = Fraction

VertexId = str
EdgeId = str


@dataclass(frozen=True, order=True)
class IntVec2:
    """An element of a Z^2 vertex group, written in that vertex's chosen basis."""

    x: int
    y: int

    def __add__(self, other: "IntVec2") -> "IntVec2":
        return IntVec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "IntVec2") -> "IntVec2":
        return IntVec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "IntVec2":
        return IntVec2(-self.x, -self.y)

    def __rmul__(self, k: int) -> "IntVec2":
        return IntVec2(k * self.x, k * self.y)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def det2(u: IntVec2, v: IntVec2) -> int:
    """Determinant of the 2x2 matrix with columns u, v.

    For nonzero u, v its absolute value is the index [Z^2 : <u,v>], i.e. the
    geometric intersection number of the corresponding curves on the torus.
    """
    return u.x * v.y - u.y * v.x


def is_parallel(u: IntVec2, v: IntVec2) -> bool:
    """Whether two nonzero vectors span the same line through the origin."""
    if u.is_zero() or v.is_zero():
        raise ValueError("is_parallel requires nonzero vectors")
    return det2(u, v) == 0


def primitive_of(v: IntVec2) -> IntVec2:
    """The primitive vector with the same direction as v (coprime coordinates)."""
    if v.is_zero():
        raise ValueError("primitive_of requires a nonzero vector")
    g = math.gcd(abs(v.x), abs(v.y))
    return IntVec2(v.x // g, v.y // g)


def complete_basis(v: IntVec2) -> IntVec2:
    """A vector v' with det2(v, v') = 1, completing primitive v to a basis of Z^2.

    The solution set is v0' + Z*v; ties are broken deterministically by taking
    the representative minimal under (|x|+|y|, x, y).  Golden values:
    (1,0) -> (0,1) and (0,1) -> (-1,0).
    """
    if v.is_zero():
        raise ValueError("complete_basis requires a nonzero vector")
    if math.gcd(abs(v.x), abs(v.y)) != 1:
        raise ValueError(f"complete_basis requires a primitive vector, got {v}")
    # det2(v, v') = v.x*v'.y - v.y*v'.x = 1: extended gcd on (v.x, -v.y).
    g, a, b = _xgcd(v.x, -v.y)
    assert g == 1
    cand = IntVec2(b, a)  # v.x*a - v.y*b = 1
    assert det2(v, cand) == 1
    # Reduce along the coset cand + t*v; the key is strictly convex in t away
    # from the minimum, so step downhill until no neighbor improves.
    def key(w: IntVec2):
        return (abs(w.x) + abs(w.y), w.x, w.y)

    while True:
        down = min((cand + v, cand - v), key=key)
        if key(down) < key(cand):
            cand = down
        else:
            return cand


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with s*a + t*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class Mat2:
    """A 2x2 rational matrix, row-major: [[a, b], [c, d]]."""

    a: Rat
    b: Rat
    c: Rat
    d: Rat

    @staticmethod
    def from_columns(u: IntVec2, v: IntVec2) -> "Mat2":
        return Mat2(Fraction(u.x), Fraction(v.x), Fraction(u.y), Fraction(v.y))

    @staticmethod
    def identity() -> "Mat2":
        return Mat2(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    def det(self) -> Rat:
        return self.a * self.d - self.b * self.c

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, v: IntVec2) -> tuple[Rat, Rat]:
        return (self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)


def inv2(m: Mat2) -> Mat2:
    """Exact rational inverse of a 2x2 matrix."""
    d = m.det()
    if d == 0:
        raise ValueError("inv2: singular matrix")
    return Mat2(m.d / d, -m.b / d, -m.c / d, m.a / d)


@dataclass(frozen=True)
class IntMat2:
    """A 2x2 integer matrix, row-major, used for basis changes."""

    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply(self, v: IntVec2) -> IntVec2:
        return IntVec2(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)


@dataclass(frozen=True)
class Edge:
    """A directed edge: the relation s v s^-1 = w between the endpoint Z^2 groups.

    `v` is the attaching vector at the initial vertex `src`, `w` the attaching
    vector at the terminal vertex `dst`.  The deciders treat an edge and its
    reversal (swap v/w, src/dst) identically.
    """

    id: EdgeId
    src: VertexId
    dst: VertexId
    v: IntVec2
    w: IntVec2
    label: str = ""

    def __post_init__(self):
        if self.v.is_zero() or self.w.is_zero():
            raise ValueError(f"edge {self.id}: attaching vectors must be nonzero")

    def reversed(self) -> "Edge":
        return Edge(self.id, self.dst, self.src, self.w, self.v, self.label)


@dataclass(frozen=True)
class TubularPresentation:
    """A finite multigraph with Z^2 vertices and vector-decorated edges.

    Self-loops and parallel edges are allowed.  Vertex order and edge order are
    part of the data and all operations are deterministic with respect to them.
    """

    vertices: tuple[VertexId, ...]
    edges: tuple[Edge, ...]
    name: str = ""

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate edge ids")
        vset = set(self.vertices)
        for e in self.edges:
            if e.src not in vset or e.dst not in vset:
                raise ValueError(f"edge {e.id}: unknown vertex {e.src!r} or {e.dst!r}")

    def vertex_index(self, v: VertexId) -> int:
        return self.vertices.index(v)

    def loops_at(self, v: VertexId) -> list[Edge]:
        return [e for e in self.edges if e.src == v and e.dst == v]

    def incident_vectors(self, v: VertexId) -> list[IntVec2]:
        """All attaching vectors living in vertex v (both ends of loops counted)."""
        out = []
        for e in self.edges:
            if e.src == v:
                out.append(e.v)
            if e.dst == v:
                out.append(e.w)
        return out

    def single_vertex_pairs(self) -> list[tuple[IntVec2, IntVec2]]:
        if len(self.vertices) != 1:
            raise ValueError("presentation has more than one vertex")
        return [(e.v, e.w) for e in self.edges]


def single_vertex_presentation(
    pairs: list[tuple[IntVec2, IntVec2]], name: str = "", vertex: VertexId = "V"
) -> TubularPresentation:
    """The multiple HNN extension of one Z^2 with the given attaching pairs."""
    edges = tuple(
        Edge(f"e{i+1}", vertex, vertex, v, w, label=f"e{i+1}")
        for i, (v, w) in enumerate(pairs)
    )
    return TubularPresentation((vertex,), edges, name=name)


def change_basis(
    g: TubularPresentation, vertex: VertexId, u: IntMat2
) -> TubularPresentation:
    """Rewrite all attaching vectors at `vertex` in the basis transformed by u.

    u must be unimodular (det +-1); every decider's verdict is invariant under
    this operation, though certificates may differ.
    """
    if abs(u.det()) != 1:
        raise ValueError(f"change_basis requires a unimodular matrix, det={u.det()}")
    if vertex not in g.vertices:
        raise ValueError(f"unknown vertex {vertex!r}")
    new_edges = []
    for e in g.edges:
        v = u.apply(e.v) if e.src == vertex else e.v
        w = u.apply(e.w) if e.dst == vertex else e.w
        new_edges.append(replace(e, v=v, w=w))
    return replace(g, edges=tuple(new_edges))


@dataclass(frozen=True)
class GpqParams:
    """Integer parameters p[i], q[i] of the one-relator-per-generator family
    where a fixed generator a0 is central in the vertex group and the i-th
    stable letter conjugates a0^q[i]*t to a0^-p[i]*t."""

    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self):
        if len(self.p) != len(self.q) or not self.p:
            raise ValueError("p and q must have equal positive length")


@dataclass(frozen=True)
class QForm2:
    """A binary quadratic form Q(x,y) = a x^2 + 2 b xy + c y^2 with rational
    coefficients; used as a CAT(0) certificate, playing the role of A^T A."""

    a: Rat
    b: Rat
    c: Rat

    def is_positive_definite(self) -> bool:
        return self.a > 0 and self.a * self.c - self.b * self.b > 0

    def value(self, v: IntVec2) -> Rat:
        return self.a * v.x * v.x + 2 * self.b * v.x * v.y + self.c * v.y * v.y

    @staticmethod
    def identity() -> "QForm2":
        return QForm2(Fraction(1), Fraction(0), Fraction(1))
