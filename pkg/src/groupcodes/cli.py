"""Command line front end.

Subgroups are described in a small line-oriented text format:

    # comment lines and blank lines are ignored
    prefix: 2,4 2,4
    tail: 2
    gen: 1,0 0,2 | 1
    gen: 1,2

``prefix:`` (optional) lists one coordinate group per token, each token a
comma-joined list of cyclic orders.  ``tail:`` (required, once) gives the
group shared by all later coordinates.  Each ``gen:`` line lists explicit
values, one token per coordinate from 0 on; an optional ``|`` separates
them from the repeating block, whose values lie in the tail group.  With
no ``|`` the generator has finite support.

Exit codes: 0 success, 1 a reproduction claim failed, 2 malformed input,
3 enumeration cap exceeded, 4 internal inconsistency, 5 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence, TextIO

from . import __version__
from .control import (
    STRONGLY_CONTROLLABLE,
    Certificate,
    DefectProfile,
    Verdict,
    Witness,
    WindowOracle,
    hierarchy_consistent,
    is_controllable,
    is_k_controllable,
    is_strongly_controllable,
    is_uniformly_controllable,
    is_weakly_controllable_discrete,
    strong_index,
    uniformity_defect,
    verify_verdict,
)
from .errors import (
    CapExceeded,
    ChainNotStrict,
    InternalInconsistency,
    ParseError,
    PreconditionFailed,
    SchemaMismatch,
)
from .families import (
    block_family,
    chain_faces_hold,
    defect_growth,
    dense_trivial_sum_family,
    torsion_torus_example,
    z2_power_example,
)
from .finabel import FiniteAbelianGroup, span
from .seqspace import (
    CoordSchema,
    ProductSubgroup,
    SeqElement,
    effective_window,
    intersect_directsum,
    project,
    subgroup_order,
)
from .structure import decompose
from .torus import (
    approximate_constant,
    closure_diff_check,
    in_span,
    noncontrollability_witness,
    qz,
    qz_order,
    qz_str,
    to_product_subgroup,
)

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_INCONSISTENT = 4
EXIT_IO = 5


# ---------------------------------------------------------------------------
# input format


def _parse_group(token: str, where: str) -> FiniteAbelianGroup:
    orders = []
    for part in token.split(","):
        part = part.strip()
        if not part.isdigit() or int(part) < 1:
            raise ParseError(f"{where}: bad cyclic order {part!r}")
        orders.append(int(part))
    if not orders:
        raise ParseError(f"{where}: empty group description")
    return FiniteAbelianGroup(tuple(orders))


def _parse_value(token: str, group: FiniteAbelianGroup, where: str) -> Any:
    parts = token.split(",")
    if len(parts) != group.n:
        raise ParseError(
            f"{where}: value {token!r} has {len(parts)} residues, the coordinate group has {group.n}"
        )
    coords = []
    for part in parts:
        part = part.strip()
        if not (part.isdigit() or (part.startswith("-") and part[1:].isdigit())):
            raise ParseError(f"{where}: bad residue {part!r}")
        coords.append(int(part))
    return group.element(tuple(coords))


def parse_subgroup(text: str) -> ProductSubgroup:
    """Parse the line-oriented subgroup format; raise ParseError on any flaw."""
    prefix_groups: tuple[FiniteAbelianGroup, ...] | None = None
    tail: FiniteAbelianGroup | None = None
    gen_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'key: value'")
        key = key.strip()
        rest = rest.strip()
        if key == "prefix":
            if prefix_groups is not None:
                raise ParseError(f"line {lineno}: duplicate prefix declaration")
            if tail is not None or gen_lines:
                raise ParseError(f"line {lineno}: prefix must come first")
            prefix_groups = tuple(
                _parse_group(tok, f"line {lineno}") for tok in rest.split()
            )
        elif key == "tail":
            if tail is not None:
                raise ParseError(f"line {lineno}: duplicate tail declaration")
            if gen_lines:
                raise ParseError(f"line {lineno}: tail must precede generators")
            if not rest:
                raise ParseError(f"line {lineno}: tail group is missing")
            tail = _parse_group(rest, f"line {lineno}")
        elif key == "gen":
            gen_lines.append((lineno, rest))
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
    if tail is None:
        raise ParseError("no tail group declared")
    schema = CoordSchema(prefix_groups or (), tail)
    gens = []
    for lineno, rest in gen_lines:
        where = f"line {lineno}"
        head, bar, block = rest.partition("|")
        vals = []
        for i, tok in enumerate(head.split()):
            vals.append(_parse_value(tok, schema.group_at(i), where))
        if bar:
            period_tokens = block.split()
            if not period_tokens:
                raise ParseError(f"{where}: '|' requires a repeating block")
            period = tuple(_parse_value(tok, tail, where) for tok in period_tokens)
        else:
            period = (tail.zero(),)
        if len(vals) < schema.w0:
            vals.extend(schema.group_at(i).zero() for i in range(len(vals), schema.w0))
        try:
            gens.append(SeqElement(schema, tuple(vals), period))
        except SchemaMismatch as exc:
            raise ParseError(f"{where}: {exc}") from exc
    return ProductSubgroup(schema, tuple(gens))


def render_subgroup(h: ProductSubgroup) -> str:
    """Inverse of parse_subgroup on canonical representations."""
    lines = []
    if h.schema.prefix:
        lines.append(
            "prefix: " + " ".join(",".join(map(str, g.orders)) for g in h.schema.prefix)
        )
    lines.append("tail: " + ",".join(map(str, h.schema.tail.orders)))
    for g in h.gens:
        head = " ".join(",".join(map(str, v.coords)) for v in g.prefix_vals)
        block = " ".join(",".join(map(str, v.coords)) for v in g.period)
        if all(v.is_zero() for v in g.period):
            lines.append(("gen: " + head).rstrip())
        else:
            lines.append("gen: " + (head + " | " if head else "| ") + block)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# report JSON

REPORT_FIELDS = (
    "engine_version",
    "schema",
    "subgroup",
    "truncation_params",
    "verdicts",
    "certificates",
    "defect_profile",
    "invariant_factors",
)


def _element_json(e: SeqElement) -> dict:
    return {
        "prefix": [list(v.coords) for v in e.prefix_vals],
        "period": [list(v.coords) for v in e.period],
    }


def _evidence_json(ev: Certificate | Witness) -> dict:
    if isinstance(ev, Witness):
        return {
            "type": "witness",
            "j": list(ev.j),
            "pattern": list(ev.h_proj.coords),
            "variant": ev.variant,
            "n": ev.n,
            "k": ev.k,
            "context": ev.context,
        }
    return {
        "type": "certificate",
        "kind": ev.kind,
        "note": ev.note,
        "claims": [
            {
                "j": list(c.j),
                "lhs_basis": [list(r) for r in c.lhs_basis],
                "rhs_basis": [list(r) for r in c.rhs_basis],
                "n": c.n,
                "k": c.k,
            }
            for c in ev.claims
        ],
    }


def _verdict_json(v: Verdict) -> dict:
    return {"property": v.property, "holds": v.holds, "k": v.k}


def build_report(h: ProductSubgroup, kmax: int | None = None) -> dict:
    """All hierarchy verdicts plus structural data, as one JSON-ready mapping."""
    w, l = effective_window(h)
    verdicts = [
        is_weakly_controllable_discrete(h),
        is_controllable(h),
        is_uniformly_controllable(h),
        is_strongly_controllable(h, k_max=kmax),
    ]
    if not hierarchy_consistent({v.property: v.holds for v in verdicts}):
        raise InternalInconsistency("computed verdicts violate the implication chain")
    profile = uniformity_defect(h, (0,))
    report = {
        "engine_version": __version__,
        "schema": {
            "prefix": [list(g.orders) for g in h.schema.prefix],
            "tail": list(h.schema.tail.orders),
        },
        "subgroup": {"gens": [_element_json(g) for g in h.gens]},
        "truncation_params": {"window": w, "period": l},
        "verdicts": [_verdict_json(v) for v in verdicts],
        "certificates": [_evidence_json(v.evidence) for v in verdicts],
        "defect_profile": {
            "j": list(profile.j),
            "defect": profile.defect,
            "table": [[k, order] for k, order in profile.table],
        },
        "invariant_factors": list(decompose(h).factors),
    }
    validate_report(report)
    return report


def render_json(obj: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def validate_report(obj: Any) -> None:
    """Reject mappings that are not well-formed reports."""
    if not isinstance(obj, dict):
        raise ParseError("report must be a JSON object")
    unknown = set(obj) - set(REPORT_FIELDS)
    if unknown:
        raise ParseError(f"unknown report fields: {sorted(unknown)}")
    missing = set(REPORT_FIELDS) - set(obj)
    if missing:
        raise ParseError(f"missing report fields: {sorted(missing)}")
    if not isinstance(obj["verdicts"], list) or not obj["verdicts"]:
        raise ParseError("a report must carry at least one verdict")
    if len(obj["certificates"]) != len(obj["verdicts"]):
        raise ParseError("one certificate entry per verdict is required")
    for v in obj["verdicts"]:
        if not isinstance(v, dict) or set(v) != {"property", "holds", "k"}:
            raise ParseError("verdict entries carry exactly property, holds, k")


def parse_report(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    validate_report(obj)
    return obj


# ---------------------------------------------------------------------------
# reproduction registry


class _Claims:
    """Collects named pass/fail checks and renders them uniformly."""

    def __init__(self) -> None:
        self.rows: list[dict] = []

    def check(self, name: str, expected: Any, actual: Any) -> None:
        self.rows.append(
            {
                "name": name,
                "expected": _plain(expected),
                "actual": _plain(actual),
                "pass": expected == actual,
            }
        )

    @property
    def ok(self) -> bool:
        return all(r["pass"] for r in self.rows)


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return qz_str(value)
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    return value


def _reproduce_chain_growth(claims: _Claims) -> None:
    """Ascending chains over powers of Z/2: controllable, defect one below depth."""
    for depth in range(2, 7):
        h = z2_power_example(depth)
        m = FiniteAbelianGroup((2,) * depth)
        chain = []
        for i in range(depth):
            rows = []
            for j in range(i + 1):
                row = [0] * depth
                row[j] = 1
                rows.append(m.element(row))
            chain.append(span(m, rows))
        claims.check(f"depth {depth}: controllable", True, is_controllable(h).holds)
        claims.check(
            f"depth {depth}: defect at coordinate 0",
            depth - 1,
            uniformity_defect(h, (0,)).defect,
        )
        faces = all(chain_faces_hold(m, chain, k) for k in range(depth))
        claims.check(f"depth {depth}: finite-faces identity", True, faces)


def _reproduce_torus(claims: _Claims) -> None:
    """Torus steps at odd prime reciprocals plus the constant one half."""
    tsub = torsion_torus_example(4)
    half = qz(1, 2)
    claims.check("1/2 outside the span of the steps", False, in_span(half, tsub.y))
    for g, tag in zip(tsub.gens, tsub.tags):
        claims.check(f"closure differences hold for {tag}", (True, None), closure_diff_check(g, tsub.y))
    verdict = noncontrollability_witness(tsub, half)
    claims.check("witness verdict: not controllable", False, verdict.holds)
    ps, _q = to_product_subgroup(tsub)
    claims.check("witness re-verifies", True, verify_verdict(ps, verdict))
    claims.check("step orders are odd", True, all(qz_order(v) % 2 == 1 for v in tsub.y))
    claims.check("constant value has even order", 2, qz_order(half))
    claims.check(
        "closest step multiple to 1/2 on coordinate 0 within 1/10",
        [2, 3],
        list(approximate_constant(half, tsub.y, (0,), Fraction(1, 10)) or ()),
    )


def _reproduce_dense(claims: _Claims) -> None:
    """Residue-class family: trivial finite-support part, full finite faces."""
    group = FiniteAbelianGroup((2,))
    h = dense_trivial_sum_family(group, 3, 12)
    dsum = intersect_directsum(h)
    claims.check("finite-support part is trivial", 1, subgroup_order(dsum))
    for j in range(12):
        claims.check(f"projection onto coordinate {j} is full", group.order(), project(h, (j,)).order())
    face = project(h, (0, 1, 2))
    claims.check("restriction to the first cycle is full", group.order() ** 3, face.order())
    claims.check("weakly controllable", False, is_weakly_controllable_discrete(h).holds)


def _reproduce_blocks(claims: _Claims) -> None:
    """Two blocks over Z/2: uniform but not k-controllable below the block size."""
    h = block_family(2, (2, 3))
    claims.check("uniformly controllable", True, is_uniformly_controllable(h).holds)
    for k in range(2):
        claims.check(f"{k}-controllable", False, is_k_controllable(h, k).holds)
    idx = strong_index(h)
    claims.check("least working gap", 2, idx)
    oracle = WindowOracle(h)
    claims.check("least working gap, by enumeration", oracle.strong_index(), idx)


REPRODUCE_IDS: dict[str, Callable[[_Claims], None]] = {
    "ex-3.5": _reproduce_chain_growth,
    "ex-4.6": _reproduce_torus,
    "ex-5-dense": _reproduce_dense,
    "thm-7.1": _reproduce_blocks,
}


def run_reproduce(exp_id: str) -> dict:
    if exp_id not in REPRODUCE_IDS:
        raise ParseError(
            f"unknown experiment id {exp_id!r}; known ids: {', '.join(sorted(REPRODUCE_IDS))}"
        )
    claims = _Claims()
    REPRODUCE_IDS[exp_id](claims)
    return {
        "id": exp_id,
        "engine_version": __version__,
        "claims": claims.rows,
        "overall": claims.ok,
    }


# ---------------------------------------------------------------------------
# subcommands


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(text: str, path: str | None, out: TextIO) -> None:
    if path is None:
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _yesno(b: bool) -> str:
    return "yes" if b else "no"


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    h = parse_subgroup(_read_input(args.input))
    report = build_report(h, kmax=args.kmax)
    if args.cap is not None:
        _cross_check(h, report, args.cap)
    if args.format == "json":
        _write_output(render_json(report), args.out, out)
        return EXIT_OK
    w, l = effective_window(h)
    lines = [f"window: explicit {w}, repeating block {l}"]
    for v in report["verdicts"]:
        label = v["property"]
        extra = f" (least gap {v['k']})" if label == STRONGLY_CONTROLLABLE and v["k"] is not None else ""
        lines.append(f"{label}: {_yesno(v['holds'])}{extra}")
    lines.append(f"invariant factors: {report['invariant_factors']}")
    _write_output("\n".join(lines) + "\n", args.out, out)
    return EXIT_OK


def _cross_check(h: ProductSubgroup, report: dict, cap: int) -> None:
    """Re-derive every verdict by capped enumeration; disagreement is a bug."""
    oracle = WindowOracle(h, cap=cap)
    expected = {
        "weakly_controllable": oracle.weakly_controllable(),
        "controllable": oracle.controllable(),
        "uniformly_controllable": oracle.uniformly_controllable(),
        "strongly_controllable": oracle.strong_index() is not None,
    }
    for v in report["verdicts"]:
        if v["property"] in expected and v["holds"] != expected[v["property"]]:
            raise InternalInconsistency(
                f"{v['property']}: engine says {v['holds']}, enumeration says the opposite"
            )


def _coords_arg(text: str) -> tuple[int, ...]:
    try:
        coords = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad coordinate list {text!r}") from exc
    if not coords or any(c < 0 for c in coords):
        raise ParseError(f"bad coordinate list {text!r}")
    return coords


def _depths_arg(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit() or int(lo) > int(hi):
        raise ParseError(f"bad depth range {text!r}; expected e.g. 2..6")
    return range(int(lo), int(hi) + 1)


def _profile_csv(rows: Iterable[tuple[Any, int, int, Any]]) -> str:
    out = ["parameter,k,image_order,defect"]
    for parameter, k, image_order, defect in rows:
        out.append(f"{parameter},{k},{image_order},{'' if defect is None else defect}")
    return "\n".join(out) + "\n"


def _profile_rows(parameter: Any, profile: DefectProfile) -> list[tuple[Any, int, int, Any]]:
    return [(parameter, k, order, profile.defect) for k, order in profile.table]


def cmd_defect(args: argparse.Namespace, out: TextIO) -> int:
    if args.family:
        if args.depths is None:
            raise ParseError("--family requires --depths a..b")
        rows = defect_growth(args.family, _depths_arg(args.depths), _coords_arg(args.coords))
        if args.format == "json":
            payload = [
                {
                    "parameter": r.parameter,
                    "defect": r.profile.defect,
                    "controllable": r.controllable,
                    "least_gap": r.strong,
                    "table": [[k, order] for k, order in r.profile.table],
                }
                for r in rows
            ]
            _write_output(render_json(payload), args.out, out)
        elif args.format == "csv":
            flat: list[tuple[Any, int, int, Any]] = []
            for r in rows:
                flat.extend(_profile_rows(r.parameter, r.profile))
            _write_output(_profile_csv(flat), args.out, out)
        else:
            lines = []
            for r in rows:
                lines.append(
                    f"parameter {r.parameter}: defect {r.profile.defect}, "
                    f"controllable {_yesno(r.controllable)}, least gap {r.strong}"
                )
            _write_output("\n".join(lines) + "\n", args.out, out)
        return EXIT_OK
    h = parse_subgroup(_read_input(args.input))
    coords = _coords_arg(args.coords)
    profile = uniformity_defect(h, coords)
    label = ";".join(map(str, coords))
    if args.format == "json":
        payload = {
            "j": list(profile.j),
            "defect": profile.defect,
            "table": [[k, order] for k, order in profile.table],
        }
        _write_output(render_json(payload), args.out, out)
    elif args.format == "csv":
        _write_output(_profile_csv(_profile_rows(label, profile)), args.out, out)
    else:
        lines = [f"coordinates: {list(coords)}"]
        for k, order in profile.table:
            lines.append(f"window [0, {k}]: image order {order}")
        lines.append(
            "defect: exceeds the effective window"
            if profile.exceeds_window
            else f"defect: {profile.defect}"
        )
        _write_output("\n".join(lines) + "\n", args.out, out)
    return EXIT_OK


def cmd_kcontrol(args: argparse.Namespace, out: TextIO) -> int:
    h = parse_subgroup(_read_input(args.input))
    w, l = effective_window(h)
    kmax = (w + l) if args.kmax is None else args.kmax
    results = [(k, is_k_controllable(h, k)) for k in range(kmax + 1)]
    idx = next((k for k, v in results if v.holds), None)
    if args.format == "json":
        payload = {
            "kmax": kmax,
            "results": [{"k": k, "holds": v.holds} for k, v in results],
            "least_gap": idx,
        }
        _write_output(render_json(payload), args.out, out)
        return EXIT_OK
    lines = [f"gap {k}: {_yesno(v.holds)}" for k, v in results]
    lines.append(f"least working gap: {'none up to ' + str(kmax) if idx is None else idx}")
    _write_output("\n".join(lines) + "\n", args.out, out)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace, out: TextIO) -> int:
    h = parse_subgroup(_read_input(args.input))
    report = decompose(h)
    if args.format == "json":
        payload = {
            "window": list(report.window),
            "invariant_factors": list(report.factors),
            "order": report.order,
        }
        _write_output(render_json(payload), args.out, out)
        return EXIT_OK
    lines = [
        f"window: explicit {report.window[0]}, repeating block {report.window[1]}",
        f"order: {report.order}",
        f"invariant factors: {list(report.factors)}",
    ]
    _write_output("\n".join(lines) + "\n", args.out, out)
    return EXIT_OK


def cmd_report(args: argparse.Namespace, out: TextIO) -> int:
    h = parse_subgroup(_read_input(args.input))
    report = build_report(h, kmax=args.kmax)
    _write_output(render_json(report), args.out, out)
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace, out: TextIO) -> int:
    result = run_reproduce(args.id)
    if args.format == "json":
        _write_output(render_json(result), args.out, out)
    else:
        lines = []
        for row in result["claims"]:
            status = "PASS" if row["pass"] else "FAIL"
            detail = "" if row["pass"] else f" (expected {row['expected']!r}, got {row['actual']!r})"
            lines.append(f"{status} {result['id']}: {row['name']}{detail}")
        lines.append(f"{result['id']}: {'all claims hold' if result['overall'] else 'CLAIMS FAILED'}")
        _write_output("\n".join(lines) + "\n", args.out, out)
    return EXIT_OK if result["overall"] else EXIT_CLAIM_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupcodes",
        description="Decide the controllability hierarchy for finitely generated sequence subgroups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
        p.add_argument("--input", "-i", help="input file (default: stdin)")
        p.add_argument("--format", "-f", choices=list(formats), default=formats[0])
        p.add_argument("--out", "-o", help="write output to this file")

    p = sub.add_parser("check", help="compute every hierarchy verdict")
    common(p, ("human", "json"))
    p.add_argument("--kmax", type=int, help="largest gap to try for the least index")
    p.add_argument(
        "--cap",
        type=int,
        help="also cross-check all verdicts by enumeration, up to this many elements",
    )
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("defect", help="support-window profile of a projection")
    common(p, ("human", "json", "csv"))
    p.add_argument("--coords", default="0", help="comma-joined coordinates (default 0)")
    p.add_argument("--family", choices=("chain", "block"), help="tabulate a growth family instead")
    p.add_argument("--depths", help="parameter range a..b for --family")
    p.set_defaults(func=cmd_defect)

    p = sub.add_parser("kcontrol", help="gap-by-gap splice check")
    common(p, ("human", "json"))
    p.add_argument("--kmax", type=int, help="largest gap to test (default: window size)")
    p.set_defaults(func=cmd_kcontrol)

    p = sub.add_parser("decompose", help="invariant factors of the window image")
    common(p, ("human", "json"))
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("report", help="full canonical JSON report")
    common(p, ("json",))
    p.add_argument("--kmax", type=int, help="largest gap to try for the least index")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("reproduce", help="re-run a packaged experiment")
    common(p, ("human", "json"))
    p.add_argument("--id", required=True, help=f"one of: {', '.join(sorted(REPRODUCE_IDS))}")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InternalInconsistency as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ChainNotStrict, PreconditionFailed, SchemaMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
