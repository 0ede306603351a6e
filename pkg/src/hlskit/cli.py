"""Command-line front end.

One command per process; output is assembled once and written at the end,
so identical invocations produce identical bytes.  Timing is only emitted
unless --no-timing is given, which is what the golden tests use.

Exit codes: 0 success, 1 usage error, 2 resource cap exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .poset import (
    CapExceededError,
    DegenerateSpecError,
    PosetSpec,
    elements_json,
    hasse_dot,
    parse_chain,
    render_element,
)
from .series import (
    HlsRational,
    TruncatedSeries,
    classical_igusa,
    expand_multichain,
    expand_rational,
    generalized_igusa,
    hls,
    hls_modified,
    mv_hls,
    relation_check,
    weak_order_igusa,
)
from .verify import (
    is_identity,
    matmul,
    mobius_matrix,
    verify_order_complex,
    verify_reciprocity,
    zeta_matrix,
)
from .weight import project

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the exit-code contract
    # reserves 2 for resource caps, so reroute through UsageError.
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _spec_from(args) -> PosetSpec:
    if args.n is None or args.r is None:
        raise UsageError("--n and --r are required")
    try:
        return PosetSpec(_int_list(args.n), _int_list(args.r))
    except ValueError as exc:
        raise UsageError(str(exc))


def _worker_bound() -> int:
    raw = os.environ.get("HLSKIT_THREADS")
    if raw is None:
        return 1
    try:
        bound = int(raw)
    except ValueError:
        raise UsageError(f"HLSKIT_THREADS must be an integer, got {raw!r}")
    if bound < 1:
        raise UsageError("HLSKIT_THREADS must be at least 1")
    return bound


def _spec_json(spec: PosetSpec | None) -> dict | None:
    if spec is None:
        return None
    return {"n": list(spec.n), "r": list(spec.r)}


def _series_text(value: HlsRational, stats: dict, stats_only: bool) -> str:
    lines = []
    if not stats_only:
        lines.append(f"numerator = {value.numerator.text()}")
        lines.append(f"denominator = {value.denominator_text()}")
    lines.extend(f"{key} = {val}" for key, val in stats.items())
    return "\n".join(lines) + "\n"


def _series_json(value: HlsRational, stats: dict, stats_only: bool) -> dict:
    out: dict = {"spec": _spec_json(value.spec)}
    if not stats_only:
        out["numerator"] = value.numerator.text()
        out["denominator"] = list(value.denominator_names)
    out["stats"] = stats
    return out


def _series_stats(value: HlsRational, millis: int | None) -> dict:
    stats = {
        "terms": str(value.term_count),
        "denominator_factors": str(len(value.denominator_vars)),
        "chains": str(value.chain_count),
    }
    if millis is not None:
        stats["millis"] = str(millis)
    return stats


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_series(args, value: HlsRational, millis: int | None) -> None:
    stats = _series_stats(value, millis)
    if args.format == "json":
        _emit(args, json.dumps(_series_json(value, stats, args.stats_only), indent=2) + "\n")
    else:
        _emit(args, _series_text(value, stats, args.stats_only))


def cmd_compute(args) -> int:
    spec = _spec_from(args)
    started = time.perf_counter()
    build = hls_modified if args.modified else hls
    value = build(spec, args.max_chains, args.max_elements)
    millis = None if args.no_timing else int((time.perf_counter() - started) * 1000)
    _render_series(args, value, millis)
    return EXIT_OK


def _x_label(series: TruncatedSeries, key: tuple[int, ...]) -> str:
    parts = []
    for pos, e in enumerate(key):
        if e:
            name = series.table.name(series.x_vars[pos])
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def cmd_expand(args) -> int:
    spec = _spec_from(args)
    if args.max_degree is None or args.max_degree < 0:
        raise UsageError("--max-degree is required and must be nonnegative")
    if args.method == "rational":
        series = expand_rational(hls(spec, args.max_chains, args.max_elements), args.max_degree)
    else:
        series = expand_multichain(spec, args.max_degree, args.max_chains, args.max_elements)
    if args.format == "json":
        element_names = [series.table.name(v)[2:-1] for v in series.x_vars]
        rows = []
        for key, coeff in series.sorted_items():
            mono = {element_names[pos]: e for pos, e in enumerate(key) if e}
            rows.append({"monomial": mono, "coefficient": coeff.text()})
        payload = {
            "spec": _spec_json(spec),
            "max_degree": args.max_degree,
            "coefficients": rows,
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [
            f"{_x_label(series, key)} : {coeff.text()}"
            for key, coeff in series.sorted_items()
        ]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_project(args) -> int:
    spec = _spec_from(args)
    if not args.chain:
        raise UsageError("--chain is required")
    try:
        chain = parse_chain(args.chain, spec)
    except ValueError as exc:
        raise UsageError(f"bad chain literal: {exc}")
    bottom = spec.bottom()
    if any(e == bottom for e in chain):
        raise UsageError("chain elements must lie strictly above the bottom")
    tableaux = [project(chain, i, spec) for i in range(spec.g)]
    if args.format == "json":
        payload = {
            "spec": _spec_json(spec),
            "tableaux": [t.to_json() for t in tableaux],
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        blocks = []
        for i, t in enumerate(tableaux):
            blocks.append(f"component {i + 1}:")
            blocks.append(t.pretty())
        _emit(args, "\n".join(blocks) + "\n")
    return EXIT_OK


def cmd_hasse(args) -> int:
    spec = _spec_from(args)
    if args.format == "json":
        from .poset import cover_relations, enumerate_elements

        covers = cover_relations(spec, args.max_elements)
        payload = {
            "spec": _spec_json(spec),
            "nodes": [render_element(e) for e in enumerate_elements(spec, args.max_elements)],
            "edges": [[render_element(a), render_element(b)] for a, b in covers],
            "vectors": elements_json(spec, args.max_elements),
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        _emit(args, hasse_dot(spec, args.max_elements))
    return EXIT_OK


def cmd_specialize(args) -> int:
    started = time.perf_counter()
    if args.kind == "classical-igusa":
        if args.r is None:
            raise UsageError("classical-igusa needs --r R")
        parts = _int_list(args.r)
        if len(parts) != 1:
            raise UsageError("classical-igusa takes a single r")
        value = classical_igusa(parts[0], args.max_elements)
    elif args.kind == "generalized-igusa":
        if args.r is None:
            raise UsageError("generalized-igusa needs --r R1,R2,...")
        value = generalized_igusa(_int_list(args.r), args.max_elements)
    elif args.kind == "mv-hls":
        if args.n is None:
            raise UsageError("mv-hls needs --n N")
        parts = _int_list(args.n)
        if len(parts) != 1:
            raise UsageError("mv-hls takes a single n")
        value = mv_hls(parts[0], args.max_elements)
    elif args.kind == "weak-order-igusa":
        if args.g is None:
            raise UsageError("weak-order-igusa needs --g G")
        value = weak_order_igusa(args.g, args.max_elements)
    else:
        raise UsageError(f"unknown specialization {args.kind!r}")
    millis = None if args.no_timing else int((time.perf_counter() - started) * 1000)
    _render_series(args, value, millis)
    return EXIT_OK


def _verdict(args, check: str, spec, passed, millis, counterexample=None) -> int:
    payload = {"check": check, "spec": _spec_json(spec), "pass": passed}
    if counterexample is not None:
        payload["counterexample"] = counterexample
    if millis is not None:
        payload["millis"] = str(millis)
    _emit(args, json.dumps(payload, indent=2) + "\n")
    if passed is True or passed == "vacuous":
        return EXIT_OK
    return EXIT_VERIFY


def cmd_verify(args) -> int:
    spec = _spec_from(args)
    started = time.perf_counter()

    def elapsed():
        return None if args.no_timing else int((time.perf_counter() - started) * 1000)

    if args.check == "reciprocity":
        kind = "hls_modified" if args.modified else "hls"
        try:
            cert = verify_reciprocity(spec, kind, args.max_chains, args.max_elements)
        except DegenerateSpecError:
            return _verdict(args, "reciprocity", spec, "vacuous", elapsed())
        counterexample = None
        if not cert.equal:
            counterexample = {"lhs": cert.lhs.text(), "rhs": cert.rhs.text()}
        return _verdict(args, "reciprocity", spec, cert.equal, elapsed(), counterexample)

    if args.check == "order-complex":
        try:
            report = verify_order_complex(spec, args.max_subsets)
        except DegenerateSpecError:
            return _verdict(args, "order-complex", spec, "vacuous", elapsed())
        counterexample = list(report.failures[:8]) if report.failures else None
        return _verdict(args, "order-complex", spec, report.passed, elapsed(), counterexample)

    if args.check == "zeta-mobius":
        product = matmul(
            zeta_matrix(spec, max_elements=args.max_elements),
            mobius_matrix(spec, max_elements=args.max_elements),
        )
        ok = is_identity(product)
        counterexample = None
        if not ok:
            for i in range(product.dim):
                for j in range(product.dim):
                    expected_one = i == j
                    entry = product.entries[i][j]
                    if entry.is_one() != expected_one or (not expected_one and not entry.is_zero()):
                        counterexample = {
                            "row": render_element(product.labels[i]),
                            "column": render_element(product.labels[j]),
                            "entry": entry.text(),
                        }
                        break
                if counterexample:
                    break
        return _verdict(args, "zeta-mobius", spec, ok, elapsed(), counterexample)

    if args.check == "relation":
        try:
            ok = relation_check(spec)
        except DegenerateSpecError:
            return _verdict(args, "relation", spec, "vacuous", elapsed())
        return _verdict(args, "relation", spec, ok, elapsed())

    raise UsageError(f"unknown check {args.check!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hlskit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_spec=True):
        if need_spec:
            p.add_argument("--n", help="comma-separated component bounds n_1,...,n_g")
            p.add_argument("--r", help="comma-separated component bounds r_1,...,r_g")
        p.add_argument("--max-elements", type=int, default=None)
        p.add_argument("--max-chains", type=int, default=None)
        p.add_argument("--no-timing", action="store_true")
        p.add_argument("--output", default=None)

    p = sub.add_parser("compute", help="numerator and denominator of the series")
    common(p)
    p.add_argument("--modified", action="store_true", help="open-interval series")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--stats-only", action="store_true")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("expand", help="truncated multichain expansion")
    common(p)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--method", choices=["multichain", "rational"], default="multichain")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("project", help="project a chain literal to skew tableaux")
    common(p)
    p.add_argument("--chain", help="chain literal, e.g. '2|- < 2 5|2'")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_project)

    p = sub.add_parser("hasse", help="Hasse diagram export")
    common(p)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(fn=cmd_hasse)

    p = sub.add_parser("specialize", help="classical and weak-order specializations")
    common(p)
    p.add_argument(
        "--kind",
        required=True,
        choices=["classical-igusa", "generalized-igusa", "mv-hls", "weak-order-igusa"],
    )
    p.add_argument("--g", type=int, default=None, help="rank for weak-order-igusa")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--stats-only", action="store_true")
    p.set_defaults(fn=cmd_specialize)

    p = sub.add_parser("verify", help="machine-checked identities, JSON verdicts")
    p.add_argument("check", choices=["reciprocity", "order-complex", "zeta-mobius", "relation"])
    common(p)
    p.add_argument("--modified", action="store_true")
    p.add_argument("--max-subsets", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _worker_bound()
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except BrokenPipeError:
        return EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
