#!/usr/bin/env python3
"""
Command line for Schubert Complexity.

Usage:
    schubert-complexity ms analyze 45231 --json
    schubert-complexity ms analyze 45231 --ascii
    schubert-complexity ms reflect 251346 2
    schubert-complexity kl analyze 43125 53412
    schubert-complexity kl graph 43125 53412 --dot
    schubert-complexity bruhat chains 12435 41325 --limit 3
    schubert-complexity stat ci-realize 4 1 3,4
    schubert-complexity oracle verify toric-equivalence --n 6 --jobs 4

Exit status: 0 on success, 1 on a domain error or a failed theorem,
2 on a usage error such as an unparseable permutation.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from itertools import islice
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from schubert_complexity import bruhat, kl_variety, matrix_schubert, statmodel
from schubert_complexity.config import configure_logging, get_sweep_config, settings
from schubert_complexity.diagram import essential_set, opposite_rothe, render_ascii
from schubert_complexity.exceptions import PermutationParseError, SchubertError
from schubert_complexity.perm_core import Permutation, longest, parse
from schubert_complexity.schemas import (
    AnalyticsModel,
    ChainModel,
    CIModel,
    DiagramModel,
    GraphModel,
    IntervalModel,
    KLReportModel,
    MSReportModel,
    OutputEnvelope,
    QIModelModel,
    ReflectionModel,
    TheoremResultModel,
)

logger = logging.getLogger(__name__)


@dataclass
class Rendered:
    """What a command produced, before choosing json, dot or text."""

    payload: Any
    text: str
    dot: Optional[str] = None
    inputs: List[str] = field(default_factory=list)
    failed: bool = False


def permutation_arg(text: str) -> Permutation:
    try:
        return parse(text)
    except PermutationParseError as e:
        raise argparse.ArgumentTypeError(str(e))


def int_set_arg(text: str) -> frozenset:
    try:
        return frozenset(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of integers")


def _dump(model: Any) -> Any:
    if isinstance(model, list):
        return [_dump(m) for m in model]
    return model.model_dump() if hasattr(model, "model_dump") else model


def _lines(**values: Any) -> str:
    return "\n".join(f"{key}: {value}" for key, value in values.items())


# Matrix Schubert


def cmd_ms_analyze(args: argparse.Namespace) -> Rendered:
    report = matrix_schubert.analyze(args.w, sym_low=args.sym or args.low)
    model = MSReportModel.model_validate(report.to_dict())
    text = _lines(
        w=report.w,
        diagram_size=report.diagram_size,
        dim_X=report.dim_x,
        dim_Y=report.dim_y,
        dim_sigma=report.dim_sigma,
        complexity=report.complexity,
        toric=report.toric,
    )
    if report.sym_low is not None:
        text += "\n" + _lines(
            complexity_sym=report.sym_low.complexity, sw_upper=report.sym_low.sw_upper
        )
    if args.ascii:
        text = render_ascii(args.w) + "\n\n" + text
    return Rendered(model, text, report.graph.to_dot("G_w"), [str(args.w)])


def cmd_ms_diagram(args: argparse.Namespace) -> Rendered:
    d = opposite_rothe(args.w)
    picture = render_ascii(args.w)
    model = DiagramModel(
        w=str(args.w),
        cells=d.to_list(),
        essential=[list(c) for c in sorted(essential_set(d))],
        ascii=picture,
    )
    return Rendered(model, picture, inputs=[str(args.w)])


def cmd_ms_reflect(args: argparse.Namespace) -> Rendered:
    verdict = matrix_schubert.reflection_classify(args.w, args.m)
    model = ReflectionModel.model_validate(verdict.to_dict())
    text = _lines(
        label=verdict.label,
        case=verdict.case,
        predicted_toric=verdict.predicted_toric,
        actual_toric=verdict.actual_toric,
        weight_cone=verdict.weight_cone_delta,
    )
    return Rendered(model, text, inputs=[str(args.w)], failed=not verdict.agrees)


def cmd_ms_scan(args: argparse.Namespace) -> Rendered:
    verdicts = matrix_schubert.scan_reflections(args.w)
    models = [ReflectionModel.model_validate(v.to_dict()) for v in verdicts]
    text = "\n".join(
        f"M={v.m} {v.label} {v.case} toric={v.actual_toric} {v.weight_cone_delta}"
        for v in verdicts
    )
    return Rendered(models, text, inputs=[str(args.w)], failed=not all(v.agrees for v in verdicts))


# Kazhdan-Lusztig


def cmd_kl_analyze(args: argparse.Namespace) -> Rendered:
    report = kl_variety.analyze(
        args.v,
        args.w,
        with_generators=not args.no_generators,
        size_limit=settings.minor_size_limit,
    )
    model = KLReportModel.model_validate(report.to_dict())
    text = _lines(
        dim_N=report.dim_n,
        unexpected_zeros=sorted(report.unexpected_zeros),
        dim_sigma=report.dim_sigma,
        complexity=report.complexity,
        toric=report.toric,
    )
    if report.generators is not None:
        text += "\ngenerators:\n" + "\n".join(f"  {p}" for p in report.generators)
    return Rendered(model, text, report.graph.to_dot("G_vw"), [str(args.v), str(args.w)])


def cmd_kl_graph(args: argparse.Namespace) -> Rendered:
    graph = kl_variety.kl_graph(args.v, args.w)
    model = GraphModel(
        vertices=[str(x) for x in graph.vertices],
        edges=[[str(a), str(b)] for a, b in graph.edges],
    )
    text = "\n".join(f"{a} -> {b}" for a, b in graph.edges)
    return Rendered(model, text, graph.to_dot("G_vw"), [str(args.v), str(args.w)])


def cmd_kl_pv(args: argparse.Namespace) -> Rendered:
    analytics = kl_variety.no_unexpected_zero_analytics(args.v, longest(args.v.n))
    model = AnalyticsModel.model_validate(analytics.to_dict())
    text = _lines(
        C_v=sorted(analytics.corners),
        A_v=sorted(analytics.antidiagonal),
        P_v=analytics.pairs,
        nu=analytics.nu,
        dim_sigma=analytics.dim_sigma,
    )
    graph = kl_variety.bar_graph(args.v)
    return Rendered(model, text, graph.to_dot("G_bar"), [str(args.v)])


def cmd_kl_interval(args: argparse.Namespace) -> Rendered:
    span = bruhat.interval(args.v, args.w)
    extension = None
    text = _lines(length=span.length, components=kl_variety.toric_components(args.v, args.w))
    if args.extend is not None:
        verdict = kl_variety.extend(args.v, args.w, args.extend)
        extension = verdict.to_dict()
        text += "\n" + _lines(extend_to=args.extend, **extension)
    model = IntervalModel(
        v=str(args.v),
        w=str(args.w),
        length=span.length,
        elements=[str(u) for u in span.elements()],
        extension=extension,
    )
    return Rendered(model, text, inputs=[str(args.v), str(args.w)])


def cmd_kl_range(args: argparse.Namespace) -> Rendered:
    low, high = kl_variety.complexity_range(n=args.n, v=args.v, w=args.w)
    fixed = {"n": args.n, "v": args.v, "w": args.w}
    payload = {key: value if key == "n" else str(value) for key, value in fixed.items() if value is not None}
    payload["range"] = [low, high]
    return Rendered(payload, f"{low}..{high}")


def cmd_kl_rectangle(args: argparse.Namespace) -> Rendered:
    result = kl_variety.rectangle_complexity(args.v, args.w)
    return Rendered(result.to_dict(), _lines(**result.to_dict()), inputs=[str(args.v), str(args.w)])


def cmd_kl_w0t(args: argparse.Namespace) -> Rendered:
    result = kl_variety.w0t_complexity(args.v, args.l, args.k)
    w = kl_variety.w0t(args.v.n, args.l, args.k)
    return Rendered(result.to_dict(), _lines(w=w, **result.to_dict()), inputs=[str(args.v), str(w)])


# Bruhat order


def cmd_bruhat_leq(args: argparse.Namespace) -> Rendered:
    below = bruhat.leq(args.v, args.w)
    return Rendered({"v": str(args.v), "w": str(args.w), "leq": below}, str(below).lower())


def cmd_bruhat_interval(args: argparse.Namespace) -> Rendered:
    span = bruhat.interval(args.v, args.w)
    items = span.elements()
    model = IntervalModel(
        v=str(args.v), w=str(args.w), length=span.length, elements=[str(u) for u in items]
    )
    return Rendered(model, "\n".join(str(u) for u in items), inputs=[str(args.v), str(args.w)])


def cmd_bruhat_chains(args: argparse.Namespace) -> Rendered:
    span = bruhat.interval(args.v, args.w)
    chains = list(islice(bruhat.maximal_chains(args.v, args.w), args.limit))
    model = IntervalModel(
        v=str(args.v),
        w=str(args.w),
        length=span.length,
        elements=[str(u) for u in span.elements()],
        chains=[ChainModel.model_validate(c.to_dict()) for c in chains],
    )
    text = "\n".join(
        " < ".join(str(u) for u in c.elements) + f"  labels {list(c.labels)}" for c in chains
    )
    dot = None
    if chains:
        dot = bruhat.chain_graph(chains[0]).to_dot("G_C", directed=False)
    return Rendered(model, text, dot, [str(args.v), str(args.w)])


def cmd_bruhat_atoms(args: argparse.Namespace) -> Rendered:
    found = bruhat.atoms(args.v, args.w)
    span = bruhat.interval(args.v, args.w)
    model = IntervalModel(
        v=str(args.v),
        w=str(args.w),
        length=span.length,
        elements=[str(u) for u in span.elements()],
        atoms=[str(u) for _, u in found],
    )
    text = "\n".join(f"{u} (t_{a},{b})" for (a, b), u in found)
    return Rendered(model, text, bruhat.atom_graph(args.v, args.w).to_dot("G_at"), [str(args.v), str(args.w)])


# Statistics


def cmd_stat_ci(args: argparse.Namespace) -> Rendered:
    stmt = statmodel.CIStatement(args.m, args.a, args.b, args.c or frozenset())
    w = statmodel.ci_realize_ms(stmt)
    model = CIModel(
        statement=str(stmt),
        m=stmt.m,
        A=sorted(stmt.a),
        B=sorted(stmt.b),
        C=sorted(stmt.c),
        w=None if w is None else str(w),
        complexity=None if w is None else statmodel.ms_ci_complexity(stmt),
        generators=[str(p) for p in statmodel.ci_condition(stmt).minors(settings.minor_size_limit)],
    )
    if w is None:
        text = f"{stmt}: not realizable by a symmetric matrix Schubert variety"
    else:
        text = _lines(statement=stmt, w=w, complexity=model.complexity)
    return Rendered(model, text, inputs=[str(stmt)])


def cmd_stat_qi(args: argparse.Namespace) -> Rendered:
    models = [statmodel.qi_union(args.w)] if args.union else statmodel.qi_from_toric(args.w)
    payload = [
        QIModelModel.model_validate({**m.to_dict(), "rational_mle": statmodel.rational_mle(m)})
        for m in models
    ]
    text = "\n".join(
        f"[{m.m}] x [{m.n}]: {sorted(m.states)} rational_mle={statmodel.rational_mle(m)}"
        for m in models
    )
    dot = "\n".join(m.graph.to_dot(f"S{index}", directed=False) for index, m in enumerate(models, 1))
    return Rendered(payload, text, dot, [str(args.w)])


def cmd_stat_mle(args: argparse.Namespace) -> Rendered:
    verdicts = [statmodel.rational_mle(m) for m in statmodel.qi_from_toric(args.w)]
    payload = {"w": str(args.w), "models": len(verdicts), "rational_mle": all(verdicts)}
    return Rendered(payload, str(all(verdicts)).lower(), inputs=[str(args.w)])


def cmd_stat_kl_ci(args: argparse.Namespace) -> Rendered:
    instance = statmodel.kl_ci_construct(args.m, args.k, args.l, args.case)
    return Rendered(
        instance.to_dict(),
        _lines(v=instance.v, w=instance.w, statement=instance.statement, complexity=instance.formula),
    )


# Oracle


def _sweep_config(args: argparse.Namespace) -> Any:
    config = get_sweep_config(n=args.n, jobs=args.jobs, write_reports=args.out is not None)
    if args.out is not None:
        config.report_dir = Path(args.out)
    return config


def cmd_oracle_list(args: argparse.Namespace) -> Rendered:
    from schubert_complexity.oracle import get_theorem_descriptions

    described = get_theorem_descriptions()
    text = "\n".join(f"{name:20s} [{d['scale']}] {d['description']}" for name, d in described.items())
    return Rendered(list(described.values()), text)


def cmd_oracle_verify(args: argparse.Namespace) -> Rendered:
    from schubert_complexity.oracle import verify

    result = verify(args.theorem, _sweep_config(args))
    model = TheoremResultModel.model_validate(result.to_dict())
    status = "passed" if result.passed else f"FAILED {result.counterexample}"
    text = f"{result.theorem_id}: {status} ({result.checked} checked, n <= {result.n_max})"
    return Rendered(model, text, inputs=[args.theorem], failed=not result.passed)


def cmd_oracle_verify_all(args: argparse.Namespace) -> Rendered:
    from schubert_complexity.oracle import verify_all

    results = verify_all(_sweep_config(args))
    models = [TheoremResultModel.model_validate(r.to_dict()) for r in results]
    text = "\n".join(
        f"{r.theorem_id:20s} {'passed' if r.passed else 'FAILED'} {r.checked:8d} {r.seconds:8.2f}s"
        for r in results
    )
    return Rendered(models, text, failed=not all(r.passed for r in results))


def _output_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", help="Print a JSON envelope")
    parent.add_argument("--ascii", action="store_true", help="Include the grid picture")
    parent.add_argument("--dot", action="store_true", help="Print the graph in DOT format")
    parent.add_argument("--out", default=None, help="Write output (oracle: reports) to this path")
    parent.add_argument("--log-level", default=None, help="Override LOG_LEVEL")
    return parent


def build_parser() -> argparse.ArgumentParser:
    """Parser with ms, kl, bruhat, stat and oracle command groups."""
    flags = _output_flags()
    parser = argparse.ArgumentParser(
        prog="schubert-complexity",
        description="Complexity of matrix Schubert and Kazhdan-Lusztig varieties",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    def command(
        sub: Any, name: str, handler: Callable[[argparse.Namespace], Rendered], help_text: str
    ) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[flags], help=help_text)
        p.set_defaults(handler=handler)
        return p

    ms = groups.add_parser("ms", help="Matrix Schubert varieties").add_subparsers(dest="action", required=True)
    p = command(ms, "analyze", cmd_ms_analyze, "Dimensions, weight cone and complexity of Y_w")
    p.add_argument("w", type=permutation_arg)
    p.add_argument("--sym", action="store_true", help="Add the symmetric variant")
    p.add_argument("--low", action="store_true", help="Add the lower triangular variant")
    p = command(ms, "diagram", cmd_ms_diagram, "D°(w) and its essential set")
    p.add_argument("w", type=permutation_arg)
    p = command(ms, "reflect", cmd_ms_reflect, "Classify the reflection w -> w * s_M")
    p.add_argument("w", type=permutation_arg)
    p.add_argument("m", type=int)
    p = command(ms, "scan-reflections", cmd_ms_scan, "Classify w * s_M for every M")
    p.add_argument("w", type=permutation_arg)

    kl = groups.add_parser("kl", help="Kazhdan-Lusztig varieties").add_subparsers(dest="action", required=True)
    p = command(kl, "analyze", cmd_kl_analyze, "Report on N_{v,w}")
    p.add_argument("v", type=permutation_arg)
    p.add_argument("w", type=permutation_arg)
    p.add_argument("--no-generators", action="store_true", help="Skip the symbolic generators")
    p = command(kl, "graph", cmd_kl_graph, "The graph G_{v,w}")
    p.add_argument("v", type=permutation_arg)
    p.add_argument("w", type=permutation_arg)
    p = command(kl, "pv", cmd_kl_pv, "C_v, A_v and P_v")
    p.add_argument("v", type=permutation_arg)
    p = command(kl, "interval", cmd_kl_interval, "Components of a toric interval")
    p.add_argument("v", type=permutation_arg)
    p.add_argument("w", type=permutation_arg)
    p.add_argument("--extend", type=permutation_arg, default=None, help="Cover of w to extend to")
    p = command(kl, "range", cmd_kl_range, "Achievable complexities with n, v or w fixed")
    fixed = p.add_mutually_exclusive_group(required=True)
    fixed.add_argument("--n", type=int, default=None)
    fixed.add_argument("--v", type=permutation_arg, default=None)
    fixed.add_argument("--w", type=permutation_arg, default=None)
    p = command(kl, "rectangle", cmd_kl_rectangle, "Complexity when D°(w) is a rectangle")
    p.add_argument("v", type=permutation_arg)
    p.add_argument("w", type=permutation_arg)
    p = command(kl, "w0t", cmd_kl_w0t, "Complexity for w = w0 * t_{l,k}")
    p.add_argument("v", type=permutation_arg)
    p.add_argument("l", type=int)
    p.add_argument("k", type=int)

    br = groups.add_parser("bruhat", help="Bruhat order").add_subparsers(dest="action", required=True)
    for name, handler, help_text in (
        ("leq", cmd_bruhat_leq, "Is v <= w"),
        ("interval", cmd_bruhat_interval, "Elements of [v, w]"),
        ("chains", cmd_bruhat_chains, "Maximal chains of [v, w]"),
        ("atoms", cmd_bruhat_atoms, "Atoms of [v, w] and G^at"),
    ):
        p = command(br, name, handler, help_text)
        p.add_argument("v", type=permutation_arg)
        p.add_argument("w", type=permutation_arg)
        if name == "chains":
            p.add_argument(
                "--limit", type=int, default=settings.chain_limit, help="Chains to list (default: all)"
            )

    st = groups.add_parser("stat", help="Statistical models").add_subparsers(dest="action", required=True)
    p = command(st, "ci-realize", cmd_stat_ci, "Realize A _||_ B | C by a permutation")
    p.add_argument("m", type=int, help="Number of variables")
    p.add_argument("a", type=int_set_arg)
    p.add_argument("b", type=int_set_arg)
    p.add_argument("c", type=int_set_arg, nargs="?", default=None)
    p = command(st, "qi", cmd_stat_qi, "Quasi-independence models of a toric Y_w")
    p.add_argument("w", type=permutation_arg)
    p.add_argument("--union", action="store_true", help="One model on the union of all hooks")
    p = command(st, "mle", cmd_stat_mle, "Does every model of w have rational MLE")
    p.add_argument("w", type=permutation_arg)
    p = command(st, "kl-ci", cmd_stat_kl_ci, "Kazhdan-Lusztig pair of a CI statement")
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--case", type=int, choices=(1, 2), default=1)

    oc = groups.add_parser("oracle", help="Exhaustive theorem checks").add_subparsers(dest="action", required=True)
    command(oc, "list", cmd_oracle_list, "Registered theorems")
    for name, handler, help_text in (
        ("verify", cmd_oracle_verify, "Check one theorem"),
        ("verify-all", cmd_oracle_verify_all, "Check every theorem"),
    ):
        p = command(oc, name, handler, help_text)
        if name == "verify":
            p.add_argument("theorem")
        p.add_argument("--n", type=int, default=None, help="n_max for every scale")
        p.add_argument("--jobs", type=int, default=None, help="Worker processes (env JOBS)")

    return parser


def render(args: argparse.Namespace, rendered: Rendered, argv: Sequence[str]) -> str:
    if args.json:
        envelope = OutputEnvelope(
            command=[args.group, args.action],
            inputs=rendered.inputs,
            format="json",
            payload=_dump(rendered.payload),
        )
        return envelope.model_dump_json(indent=2)
    if args.dot:
        if rendered.dot is None:
            logger.warning(f"{' '.join(argv[:2])} has no graph to draw")
            return rendered.text
        return rendered.dot
    return rendered.text


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one command and print its output; returns the exit status."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.log_level)
    try:
        rendered = args.handler(args)
    except SchubertError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    output = render(args, rendered, argv)
    if args.out is not None and args.group != "oracle":
        Path(args.out).write_text(output + "\n")
        logger.info(f"Wrote {args.out}")
    else:
        print(output)
    return 1 if rendered.failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
