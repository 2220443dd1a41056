"""Command-line surface.

One verb per library operation; reports are JSON by default (deterministic:
sorted keys, no timestamps) with a --text summary where it helps. Exit codes:
0 success (witnessed failures are still reports), 1 domain error, 2 usage
error. The enumeration cap honors --budget, then RINGUA_BUDGET, then the
built-in default.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .errors import RinguaError
from .hasse import emit_dot, ring_ideal_poset
from .ideals import (
    classify_subset,
    check_ako_family,
    check_oka_family,
    enumerate_one_sided_ideals,
    ideal_list_json,
    longest_ideal_chain,
    maximal_and_prime,
    principal_ideal_family,
)
from .modules import module_from_json, verify_module_axioms
from .opparse import parse_formula_text, postfix_text, shunting_yard
from .plane import PlaneTransform, emit_svg, transform_report
from .rings import (
    load_ring,
    parse_ring_json,
    quotient_ring,
    subset_members,
    verify_ring_axioms,
)
from .sublang import (
    default_system,
    diachronic_profile,
    formulaize,
    in_core,
    ingest_corpus,
    load_lexicon,
    load_spec,
    verify_right_ideal_property,
)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise RinguaError(f"cannot read {path}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_json(obj, out: str | None) -> None:
    _emit(json.dumps(obj, indent=2, sort_keys=True) + "\n", out)


def _parse_subset(spec: str) -> int:
    """A subset is a hex mask (0x1f) or comma-separated element indices."""
    spec = spec.strip()
    try:
        if "," in spec:
            mask = 0
            for part in spec.split(","):
                mask |= 1 << int(part.strip())
            return mask
        if spec.lower().startswith("0x"):
            return int(spec, 16)
        return int(spec)
    except ValueError as exc:
        raise RinguaError(f"cannot parse subset {spec!r}: use 0xMASK or i,j,k") from exc


def _load_system(args):
    if getattr(args, "spec", None):
        text = _read(args.spec)
        lex = load_lexicon(text)
        spec = load_spec(text)
    else:
        lex, spec = default_system()
    if getattr(args, "lexicon", None):
        lex = load_lexicon(_read(args.lexicon))
    return lex, spec


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_ring_verify(args) -> int:
    ring = parse_ring_json(_read(args.ring))
    report = verify_ring_axioms(ring)
    if args.text:
        for check in report.checks:
            mark = "ok  " if check.ok else "FAIL"
            extra = f" witness={check.witness}" if check.witness else ""
            print(f"{mark} {check.axiom}{extra}")
        print("ring is valid" if report.ok else "ring is NOT valid")
    else:
        _emit_json(report.to_json(), args.out)
    return 0


def _cmd_ring_quotient(args) -> int:
    ring = load_ring(_read(args.ring))
    result = quotient_ring(ring, _parse_subset(args.subset))
    _emit_json(result.to_json(), args.out)
    return 0


def _cmd_ideals(args) -> int:
    ring = load_ring(_read(args.ring))
    ideals = enumerate_one_sided_ideals(ring, args.side, args.budget)
    if args.text:
        flags = maximal_and_prime(ring, ideals, args.side)
        print(f"{len(ideals)} {args.side} ideal(s)")
        for f in flags:
            members = "{" + ring.subset_label(f.subset) + "}"
            marks = [f.kind]
            if f.maximal:
                marks.append("maximal")
            if f.prime:
                marks.append("prime")
            print(f"  {format(f.subset, '#x'):>8}  {members}  [{', '.join(marks)}]")
    else:
        _emit_json(ideal_list_json(ring, ideals, args.side), args.out)
    return 0


def _cmd_classify(args) -> int:
    ring = load_ring(_read(args.ring))
    mask = _parse_subset(args.subset)
    cls = classify_subset(ring, mask)
    payload = cls.to_json()
    payload["members"] = [ring.label(i) for i in subset_members(mask, ring.size)]
    _emit_json(payload, args.out)
    return 0


def _cmd_chain(args) -> int:
    ring = load_ring(_read(args.ring))
    length = longest_ideal_chain(ring, args.side, args.budget)
    _emit_json({"side": args.side, "length": length}, args.out)
    return 0


def _cmd_module_verify(args) -> int:
    try:
        data = json.loads(_read(args.module))
    except json.JSONDecodeError as exc:
        raise RinguaError(f"module file is not valid JSON: {exc}") from exc
    report = verify_module_axioms(module_from_json(data))
    _emit_json(report.to_json(), args.out)
    return 0


def _cmd_oka(args) -> int:
    ring = load_ring(_read(args.ring))
    if args.family == "principal":
        family = principal_ideal_family(ring, args.budget)
    else:
        family = lambda mask: True  # noqa: E731 - every ideal
    checker = check_ako_family if args.condition == "ako" else check_oka_family
    report = checker(ring, family, args.budget)
    payload = report.to_json()
    payload["family"] = args.family
    _emit_json(payload, args.out)
    return 0


def _cmd_hasse(args) -> int:
    ring = load_ring(_read(args.ring))
    ideals = enumerate_one_sided_ideals(ring, args.side, args.budget)
    kinds = {f.subset: f.kind for f in maximal_and_prime(ring, ideals, args.side)}
    _emit(emit_dot(ring_ideal_poset(ring, ideals, kinds)), args.out)
    return 0


def _cmd_transform(args) -> int:
    try:
        entries = [float(v) for v in args.matrix.split(",")]
    except ValueError as exc:
        raise RinguaError(f"cannot parse matrix {args.matrix!r}: expected a,b,c,d") from exc
    if len(entries) != 4:
        raise RinguaError(f"matrix needs 4 entries a,b,c,d, got {len(entries)}")
    t = PlaneTransform(*entries)
    if args.svg:
        _emit(emit_svg(t), args.out)
    else:
        _emit_json(transform_report(t).to_json(), args.out)
    return 0


def _cmd_sparse(args) -> int:
    from .sparse import (
        csr_from_json,
        csr_multiply,
        dense_from_json,
        dense_to_json,
        from_yale,
        sparsity,
        to_yale,
        zero_fraction,
    )

    def load_json(path):
        try:
            return json.loads(_read(path))
        except json.JSONDecodeError as exc:
            raise RinguaError(f"{path} is not valid JSON: {exc}") from exc

    if args.sparse_cmd == "encode":
        csr = to_yale(dense_from_json(load_json(args.dense)))
        _emit_json(csr.to_json(), args.out)
    elif args.sparse_cmd == "decode":
        dense = from_yale(csr_from_json(load_json(args.csr)))
        _emit_json(dense_to_json(dense), args.out)
    elif args.sparse_cmd == "mul":
        product = csr_multiply(
            csr_from_json(load_json(args.left)), csr_from_json(load_json(args.right))
        )
        _emit_json(product.to_json(), args.out)
    else:  # sparsity
        dense = dense_from_json(load_json(args.dense))
        nnz = sum(1 for row in dense for v in row if v != 0)
        _emit_json(
            {
                "sparsity": str(sparsity(dense)),
                "zero_fraction": str(zero_fraction(dense)),
                "nnz": nnz,
                "total": len(dense) * len(dense[0]),
            },
            args.out,
        )
    return 0


def _cmd_parse(args) -> int:
    _emit_json(parse_formula_text(args.formula).to_json(), args.out)
    return 0


def _cmd_yard(args) -> int:
    _emit(postfix_text(shunting_yard(args.infix)) + "\n", args.out)
    return 0


def _cmd_sublang_check(args) -> int:
    lex, spec = _load_system(args)
    formula = formulaize(args.text, lex)
    decision = in_core(formula, spec)
    payload = decision.to_json()
    payload["text"] = args.text
    _emit_json(payload, args.out)
    return 0


def _cmd_sublang_closure(args) -> int:
    lex, spec = _load_system(args)
    core = [l for l in _read(args.core).splitlines() if l.strip()]
    general = [l for l in _read(args.general).splitlines() if l.strip()]
    report = verify_right_ideal_property(lex, spec, core, general, args.depth)
    _emit_json(report.to_json(), args.out)
    if not args.quiet:
        print(
            f"right absorption: {'ok' if report.r1_ok else 'FAILED'} "
            f"({report.r1_checked} extensions to depth {report.depth}); "
            f"left side: {report.r2_status}",
            file=sys.stderr,
        )
    return 0


def _cmd_sublang_drift(args) -> int:
    lex, spec = _load_system(args)
    records, issues = ingest_corpus(args.corpus, strict=args.strict)
    for issue in issues:
        print(f"warning: {issue}", file=sys.stderr)
    profile = diachronic_profile(records, lex, spec, period_years=args.period_years)
    _emit_json(profile.to_json(), args.out)
    return 0


# ---------------------------------------------------------------------------
# parser wiring


def _add_out(p):
    p.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringua",
        description="Finite rings and one-sided ideals, sublanguage membership, "
        "Yale sparse matrices, shunting-yard parsing, Hasse and unit-square output.",
    )
    parser.add_argument("--version", action="version", version=f"ringua {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="verify a ring spec file or build a quotient ring")
    ring_sub = ring.add_subparsers(dest="ring_cmd", required=True)
    rv = ring_sub.add_parser("verify", help="check every ring axiom, reporting witnesses")
    rv.add_argument("--ring", required=True, help="ring spec JSON file")
    rv.add_argument("--text", action="store_true", help="human-readable summary")
    _add_out(rv)
    rv.set_defaults(func=_cmd_ring_verify)
    rq = ring_sub.add_parser("quotient", help="quotient by a two-sided ideal")
    rq.add_argument("--ring", required=True)
    rq.add_argument("--subset", required=True, help="ideal as 0xMASK or i,j,k")
    _add_out(rq)
    rq.set_defaults(func=_cmd_ring_quotient)

    ideals = sub.add_parser("ideals", help="enumerate all ideals of one side exhaustively")
    ideals.add_argument("--ring", required=True)
    ideals.add_argument("--side", choices=["left", "right", "two-sided"], required=True)
    ideals.add_argument("--budget", type=int, help="override the enumeration size cap")
    ideals.add_argument("--text", action="store_true")
    _add_out(ideals)
    ideals.set_defaults(func=_cmd_ideals)

    classify = sub.add_parser(
        "classify", help="classify a carrier subset: subgroup / left / right / two-sided"
    )
    classify.add_argument("--ring", required=True)
    classify.add_argument("--subset", required=True)
    _add_out(classify)
    classify.set_defaults(func=_cmd_classify)

    chain = sub.add_parser("chain", help="longest strict inclusion chain of ideals")
    chain.add_argument("--ring", required=True)
    chain.add_argument("--side", choices=["left", "right", "two-sided"], required=True)
    chain.add_argument("--budget", type=int)
    _add_out(chain)
    chain.set_defaults(func=_cmd_chain)

    module = sub.add_parser("module", help="verify one-sided module axioms")
    module_sub = module.add_subparsers(dest="module_cmd", required=True)
    mv = module_sub.add_parser("verify", help="check the module laws with witnesses")
    mv.add_argument("--module", required=True, help="module spec JSON file")
    _add_out(mv)
    mv.set_defaults(func=_cmd_module_verify)

    oka = sub.add_parser(
        "oka", help="check an ideal family's Oka/Ako condition and the prime consequence"
    )
    oka.add_argument("--ring", required=True)
    oka.add_argument("--family", choices=["principal", "all"], default="principal")
    oka.add_argument("--condition", choices=["oka", "ako"], default="oka")
    oka.add_argument("--budget", type=int)
    _add_out(oka)
    oka.set_defaults(func=_cmd_oka)

    hasse = sub.add_parser("hasse", help="ideal inclusion poset as a DOT Hasse diagram")
    hasse.add_argument("--ring", required=True)
    hasse.add_argument("--side", choices=["left", "right", "two-sided"], default="two-sided")
    hasse.add_argument("--budget", type=int)
    _add_out(hasse)
    hasse.set_defaults(func=_cmd_hasse)

    transform = sub.add_parser(
        "transform", help="report on a 2x2 matrix as a unit-square transformation"
    )
    transform.add_argument("--matrix", required=True, help="entries a,b,c,d (row-major)")
    transform.add_argument("--svg", action="store_true", help="emit an SVG drawing instead")
    _add_out(transform)
    transform.set_defaults(func=_cmd_transform)

    sparse = sub.add_parser("sparse", help="Yale/CSR codec, product, and sparsity metric")
    sparse_sub = sparse.add_subparsers(dest="sparse_cmd", required=True)
    se = sparse_sub.add_parser("encode", help="dense JSON grid to CSR")
    se.add_argument("--dense", required=True)
    _add_out(se)
    sd = sparse_sub.add_parser("decode", help="CSR to dense JSON grid")
    sd.add_argument("--csr", required=True)
    _add_out(sd)
    sm = sparse_sub.add_parser("mul", help="exact sparse product")
    sm.add_argument("--left", required=True)
    sm.add_argument("--right", required=True)
    _add_out(sm)
    ss = sparse_sub.add_parser("sparsity", help="nonzero fraction of a dense grid")
    ss.add_argument("--dense", required=True)
    _add_out(ss)
    for p in (se, sd, sm, ss):
        p.set_defaults(func=_cmd_sparse)

    parse_cmd = sub.add_parser("parse", help="parse formula text like 'A_1^p V C_2'")
    parse_cmd.add_argument("--formula", required=True)
    _add_out(parse_cmd)
    parse_cmd.set_defaults(func=_cmd_parse)

    yard = sub.add_parser("yard", help="infix to postfix via the shunting yard")
    yard.add_argument("--infix", required=True)
    _add_out(yard)
    yard.set_defaults(func=_cmd_yard)

    sublang = sub.add_parser("sublang", help="sublanguage membership, closure, drift")
    sublang_sub = sublang.add_subparsers(dest="sublang_cmd", required=True)
    sc = sublang_sub.add_parser("check", help="core membership of one sentence")
    sc.add_argument("--text", required=True)
    sc.add_argument("--spec", help="lexicon+grammar JSON (default: bundled system)")
    sc.add_argument("--lexicon", help="override the lexicon separately")
    _add_out(sc)
    sc.set_defaults(func=_cmd_sublang_check)
    scl = sublang_sub.add_parser(
        "closure", help="exhaustive right-absorption check over sentence pools"
    )
    scl.add_argument("--core", required=True, help="file of core sentences, one per line")
    scl.add_argument("--general", required=True, help="file of non-core sentences")
    scl.add_argument("--spec", help="lexicon+grammar JSON (default: bundled system)")
    scl.add_argument("--lexicon")
    scl.add_argument("--depth", type=int, default=3)
    scl.add_argument("--quiet", action="store_true")
    _add_out(scl)
    scl.set_defaults(func=_cmd_sublang_closure)
    sdr = sublang_sub.add_parser("drift", help="pattern histogram per period, modal sequence")
    sdr.add_argument("--corpus", required=True, help="line-delimited JSON records")
    sdr.add_argument("--spec")
    sdr.add_argument("--lexicon")
    sdr.add_argument("--period-years", type=int, default=10)
    sdr.add_argument("--strict", action="store_true", help="abort on the first bad line")
    _add_out(sdr)
    sdr.set_defaults(func=_cmd_sublang_drift)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RinguaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
