"""Command-line surface: parse presentations, run deciders, emit reports.

Subcommands: analyze, cat0, fbc, special, cubulate, vrc, corpus, amalgam.
Input is the presentation DSL from a file or stdin ('-'), or a named corpus
entry via --corpus.  Output is deterministic text, or the JSON report schema
with --json.  Exit status is 0 whenever the run completes, regardless of
verdicts; nonzero only for input or usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .cat0 import decide_cat0, vertex_necessary_checks
from .core import GpqParams, IntVec2, TubularPresentation, VertexId
from .corpus import corpus, corpus_entry
from .cubulate import (
    NotFound,
    all_matching_verdicts,
    dilation_decide,
    equitable_search,
    export_arcs_text,
    export_dot,
    wall_graph,
)
from .dsl import DslError, parse
from .fbc import amalgam_fbc_sufficient, button_decide, decide_fbc_single_vertex
from .report import (
    NO,
    UNKNOWN,
    YES,
    DecisionReport,
    reports_to_json,
    serialize_cycle,
    serialize_equitable,
    serialize_functional,
    serialize_obstruction,
    serialize_forced_values,
    serialize_qform,
)
from .special import (
    Answer,
    cocompact_cubulation_decide,
    gpq_compact_special_decide,
    gpq_to_tubular,
    gpq_vspecial_decide,
    vspecial_fbc_decide,
    vspecial_sufficient,
)
from .vrc import vrc_obstruction


def _load(args) -> tuple[TubularPresentation | GpqParams, str]:
    if getattr(args, "corpus_name", None):
        entry = corpus_entry(args.corpus_name)
        obj = entry.presentation
        return obj, entry.name
    path = args.input
    if path is None:
        raise SystemExit("error: no input given (file, '-', or --corpus NAME)")
    text = sys.stdin.read() if path == "-" else open(path).read()
    obj = parse(text)
    name = obj.name if isinstance(obj, TubularPresentation) and obj.name else "G"
    if isinstance(obj, GpqParams):
        name = "gpq"
    return obj, name


def _as_tubular(obj) -> TubularPresentation:
    if isinstance(obj, GpqParams):
        return gpq_to_tubular(obj)
    return obj


def report_fbc(obj, name: str) -> DecisionReport:
    g = _as_tubular(obj)
    if len(g.vertices) == 1:
        verdict = decide_fbc_single_vertex(g.single_vertex_pairs())
        route = "LineCriterion"
        citation = "common line of difference vectors avoiding the attaching vectors"
    else:
        verdict = button_decide(g)
        route = "ButtonCriterion"
        citation = "homomorphism to Z nonzero on every edge group"
    if verdict.answer:
        notes = (
            "kernel is finitely generated free: the group is F_n-by-Z",
            "cyclic subgroups are separable",
        )
        return DecisionReport(
            name,
            "fbc",
            YES,
            route,
            certificate=serialize_functional(verdict.witness),
            citation=citation,
            notes=notes,
        )
    return DecisionReport(
        name, "fbc", NO, route, citation=citation, notes=(verdict.obstruction,)
    )


def report_cat0(obj, name: str) -> DecisionReport:
    g = _as_tubular(obj)
    citation = "positive-definite form equalizing each edge's attaching vectors"
    if len(g.vertices) == 1 and g.edges:
        verdict = decide_cat0(g.single_vertex_pairs())
        if verdict.answer:
            return DecisionReport(
                name,
                "cat0",
                YES,
                "QuadraticFormEqualization",
                certificate=serialize_qform(verdict.certificate, verdict.cos_phi),
                citation=citation,
            )
        return DecisionReport(
            name,
            "cat0",
            NO,
            "QuadraticFormEqualization",
            certificate=serialize_obstruction(verdict.obstruction),
            citation=citation,
            notes=(verdict.obstruction.describe(),),
        )
    checks = vertex_necessary_checks(g)
    bad = {v: r for v, r in checks.items() if not r.answer}
    if bad:
        v, r = next(iter(sorted(bad.items())))
        return DecisionReport(
            name,
            "cat0",
            NO,
            "VertexLoopObstruction",
            certificate=serialize_obstruction(r.obstruction),
            citation="single-vertex obstruction applied to the loops at one vertex",
            notes=(f"vertex {v}: {r.obstruction.describe()}",),
        )
    return DecisionReport(
        name,
        "cat0",
        UNKNOWN,
        "VertexLoopObstruction",
        citation="single-vertex obstruction applied to the loops at each vertex",
        notes=("per-vertex loop checks pass; criterion is necessary only",),
    )


def report_vspecial(obj, name: str) -> DecisionReport:
    if isinstance(obj, GpqParams):
        v = gpq_vspecial_decide(obj)
        return DecisionReport(
            name, "vspecial", v.answer.value, v.route.value, citation=v.citation,
            notes=v.notes,
        )
    g = _as_tubular(obj)
    if len(g.vertices) != 1 or not g.edges:
        return DecisionReport(
            name,
            "vspecial",
            UNKNOWN,
            "None",
            citation="",
            notes=("no implemented criterion applies to this presentation",),
        )
    pairs = g.single_vertex_pairs()
    v = vspecial_sufficient(pairs)
    if v.answer is Answer.YES:
        return DecisionReport(
            name, "vspecial", YES, v.route.value, citation=v.citation, notes=v.notes
        )
    attempted = ["two-element equitable set sufficiency test: inconclusive"]
    v2 = vspecial_fbc_decide(pairs)
    if v2.answer is not Answer.UNKNOWN:
        return DecisionReport(
            name,
            "vspecial",
            v2.answer.value,
            v2.route.value,
            citation=v2.citation,
            notes=v2.notes,
        )
    attempted.append("free-by-cyclic equivalence route: inconclusive")
    return DecisionReport(
        name,
        "vspecial",
        UNKNOWN,
        "None",
        citation="",
        notes=tuple(attempted),
    )


def report_compact_special(params: GpqParams, name: str) -> DecisionReport:
    v = gpq_compact_special_decide(params)
    return DecisionReport(
        name,
        "compact_special",
        v.answer.value,
        v.route.value,
        citation=v.citation,
        notes=v.notes,
    )


def report_cocompact(obj, name: str, cat0_known: bool) -> DecisionReport:
    g = _as_tubular(obj)
    v = cocompact_cubulation_decide(g, cat0_known)
    return DecisionReport(
        name,
        "cocompact_cubulation",
        v.answer.value,
        "ParallelismClassCount",
        citation=v.citation,
        notes=v.notes
        or tuple(f"vertex {vid}: {c} classes" for vid, c in v.class_counts),
    )


def report_dilation(obj, name: str, coord_bound: int = 3, size_bound: int = 3):
    g = _as_tubular(obj)
    citation = "multiplicative holonomy of wall cycles"
    found = equitable_search(g, coord_bound, size_bound)
    if isinstance(found, NotFound):
        return (
            DecisionReport(
                name,
                "dilation",
                UNKNOWN,
                "WallHolonomy",
                citation=citation,
                notes=(
                    f"no equitable set found within bounds "
                    f"({found.coord_bound}, {found.size_bound})",
                ),
            ),
            None,
        )
    w = wall_graph(g, found)
    d = dilation_decide(w)
    if d.dilated:
        return (
            DecisionReport(
                name,
                "dilation",
                "Dilated",
                "WallHolonomy",
                certificate=serialize_cycle(d.witness_cycle, d.holonomy),
                citation=citation,
                notes=(f"witness cycle holonomy {d.holonomy}",),
            ),
            w,
        )
    return (
        DecisionReport(
            name,
            "dilation",
            "NonDilated",
            "WallHolonomy",
            certificate=serialize_equitable(found),
            citation=citation,
        ),
        w,
    )


def report_vrc(params: GpqParams, name: str) -> DecisionReport:
    v = vrc_obstruction(params)
    return DecisionReport(
        name,
        "vrc",
        v.answer,
        "ForcedValueAnalysis",
        certificate=serialize_forced_values(v.forced_values),
        citation="forced-value analysis of the norm-balance equations",
        notes=(
            "the central cyclic subgroup is not a virtual retract",
        )
        if v.obstructed
        else ("obstruction not triggered; no positive claim is made",),
    )


def analyze(obj, name: str, coord_bound: int = 3, size_bound: int = 3):
    """Run all applicable deciders in dependency order."""
    reports = [report_fbc(obj, name), report_cat0(obj, name)]
    cat0_known = reports[1].verdict == YES
    reports.append(report_vspecial(obj, name))
    if isinstance(obj, GpqParams):
        reports.append(report_compact_special(obj, name))
    reports.append(report_cocompact(obj, name, cat0_known))
    reports.append(report_dilation(obj, name, coord_bound, size_bound)[0])
    if isinstance(obj, GpqParams):
        reports.append(report_vrc(obj, name))
    return reports


def _emit(reports: list[DecisionReport], as_json: bool):
    if as_json:
        sys.stdout.write(reports_to_json(reports))
        return
    for r in reports:
        line = f"{r.group} {r.property}: {r.verdict} [{r.route}]"
        if r.notes:
            line += " -- " + "; ".join(r.notes)
        print(line)


def _parse_vec_spec(spec: str, g: TubularPresentation) -> tuple[VertexId, IntVec2]:
    """Vector specs look like 'V:1,0', or '1,0' for single-vertex inputs."""
    if ":" in spec:
        vertex, coords = spec.split(":", 1)
    else:
        if len(g.vertices) != 1:
            raise SystemExit(f"error: vector spec {spec!r} needs a vertex prefix")
        vertex, coords = g.vertices[0], spec
    try:
        x, y = (int(t) for t in coords.split(","))
    except ValueError:
        raise SystemExit(f"error: bad vector spec {spec!r} (expected V:x,y)")
    return vertex, IntVec2(x, y)


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(
        prog="tubular",
        description="Decision procedures for tubular groups.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_io(p, needs_input=True):
        if needs_input:
            p.add_argument("input", nargs="?", help="DSL file, or '-' for stdin")
            p.add_argument(
                "--corpus", dest="corpus_name", help="use a named corpus entry"
            )
        p.add_argument("--json", action="store_true", help="emit the JSON schema")

    p = sub.add_parser("analyze", help="run every applicable decider")
    add_io(p)
    p.add_argument("--coord-bound", type=int, default=3)
    p.add_argument("--size-bound", type=int, default=3)

    for cmd in ("cat0", "fbc", "special", "vrc"):
        p = sub.add_parser(cmd)
        add_io(p)

    p = sub.add_parser("cubulate", help="equitable set search and wall dilation")
    add_io(p)
    p.add_argument("--coord-bound", type=int, default=3)
    p.add_argument("--size-bound", type=int, default=3)
    p.add_argument("--all-matchings", action="store_true")
    p.add_argument("--dot", action="store_true", help="emit the wall graph as DOT")

    p = sub.add_parser("corpus", help="list the named examples")
    p.add_argument("--json", action="store_true")
    p.add_argument("--run", action="store_true", help="analyze each entry")

    p = sub.add_parser("amalgam", help="glue two presentations over a cyclic subgroup")
    p.add_argument("input1")
    p.add_argument("vec1", help="gluing element in the first group, as V:x,y")
    p.add_argument("input2")
    p.add_argument("vec2", help="gluing element in the second group, as V:x,y")
    p.add_argument("--json", action="store_true")

    args = ap.parse_args(argv)
    try:
        return _dispatch(args)
    except DslError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "corpus":
        if args.run:
            reports = []
            for entry in corpus():
                reports.extend(analyze(entry.presentation, entry.name))
            _emit(reports, args.json)
        else:
            for entry in corpus():
                expected = ", ".join(f"{k}={v}" for k, v in entry.expected.items())
                print(f"{entry.name}: {expected}")
        return 0

    if cmd == "amalgam":
        g1 = _as_tubular(parse(open(args.input1).read()))
        g2 = _as_tubular(parse(open(args.input2).read()))
        a = _parse_vec_spec(args.vec1, g1)
        b = _parse_vec_spec(args.vec2, g2)
        analysis = amalgam_fbc_sufficient(g1, a, g2, b)
        name = analysis.amalgam.name
        notes = [
            f"gluing element 1 retractor certificate: "
            f"{'found' if analysis.retractor_1.answer else 'not found'}",
            f"gluing element 2 retractor certificate: "
            f"{'found' if analysis.retractor_2.answer else 'not found'}",
        ]
        if analysis.rule_applies:
            verdict, route = YES, "RetractorSufficiency"
            citation = "amalgam of free-by-cyclic groups over generalized retractors"
            cert = serialize_functional(analysis.button.witness) if (
                analysis.button.answer
            ) else None
        else:
            route = "ButtonCriterion"
            citation = "homomorphism to Z nonzero on every edge group"
            verdict = YES if analysis.button.answer else NO
            cert = (
                serialize_functional(analysis.button.witness)
                if analysis.button.answer
                else None
            )
            if not analysis.button.answer:
                notes.append(analysis.button.obstruction)
                notes.append(
                    "necessary condition: both gluing elements would have to be "
                    "generalized retractors (or lie in free complements)"
                )
        _emit(
            [
                DecisionReport(
                    name, "fbc", verdict, route, certificate=cert,
                    citation=citation, notes=tuple(notes),
                )
            ],
            args.json,
        )
        return 0

    obj, name = _load(args)

    if cmd == "analyze":
        _emit(analyze(obj, name, args.coord_bound, args.size_bound), args.json)
        return 0
    if cmd == "cat0":
        _emit([report_cat0(obj, name)], args.json)
        return 0
    if cmd == "fbc":
        _emit([report_fbc(obj, name)], args.json)
        return 0
    if cmd == "special":
        reports = [report_vspecial(obj, name)]
        if isinstance(obj, GpqParams):
            reports.append(report_compact_special(obj, name))
        _emit(reports, args.json)
        return 0
    if cmd == "vrc":
        if not isinstance(obj, GpqParams):
            print("error: vrc requires a gpq input", file=sys.stderr)
            return 2
        _emit([report_vrc(obj, name)], args.json)
        return 0
    if cmd == "cubulate":
        g = _as_tubular(obj)
        found = equitable_search(g, args.coord_bound, args.size_bound)
        if isinstance(found, NotFound):
            _emit(
                [
                    DecisionReport(
                        name,
                        "equitable_set",
                        "NotFound",
                        "BoundedSearch",
                        citation="bounded exhaustive equitable-set search",
                        notes=(
                            f"bounds ({found.coord_bound}, {found.size_bound}); "
                            "not a proof of nonexistence",
                        ),
                    )
                ],
                args.json,
            )
            return 0
        w = wall_graph(g, found)
        if args.dot:
            sys.stdout.write(export_dot(w))
            return 0
        report, _ = report_dilation(obj, name, args.coord_bound, args.size_bound)
        reports = [
            DecisionReport(
                name,
                "equitable_set",
                "Found",
                "BoundedSearch",
                certificate=serialize_equitable(found),
                citation="bounded exhaustive equitable-set search",
            ),
            report,
        ]
        if args.all_matchings:
            verdicts, complete = all_matching_verdicts(g, found)
            spectrum = sorted("Dilated" if d else "NonDilated" for d in verdicts)
            reports.append(
                DecisionReport(
                    name,
                    "dilation_spectrum",
                    "/".join(spectrum),
                    "AllMatchings",
                    citation="dilation verdicts across all point matchings",
                    notes=() if complete else ("matching enumeration truncated",),
                )
            )
        _emit(reports, args.json)
        if not args.json:
            sys.stdout.write(export_arcs_text(w))
        return 0
    raise AssertionError(f"unhandled command {cmd}")


if __name__ == "__main__":
    sys.exit(main())
