"""Command-line entry point.

Every command reads JSON payloads (a path, or ``catalog:<name>`` for a
bundled object), writes one canonical-JSON report to standard output, and
keeps all diagnostics on standard error.  Exit codes: 0 when the command
succeeds and any checked property holds, 1 when a checked property fails
(the report carries the witness), 2 for invalid input, 3 when a search or
enumeration bound is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braces import SkewBrace, lambda_map, validate_brace
from .catalog import catalog_entries, catalog_get
from .cohomology.maps import diagram_check, diagram_instance
from .cohomology.relative import (
    RRB2Cochain,
    RRBExtension,
    enumerate_rrb_coboundaries,
    enumerate_rrb_cocycles,
    extension_from_rrb_cocycle,
    h2_rrb,
    rrb_cocycle_failure,
    rrb_cocycle_from_extension,
)
from .cohomology.rota_baxter import (
    RB2Cochain,
    RBExtension,
    enumerate_rb_coboundaries,
    enumerate_rb_cocycles,
    extension_from_rb_cocycle,
    h2_rb,
    rb_cocycle_failure,
    rb_cocycle_from_extension,
    trivial_rb_module,
    validate_rb_module,
)
from .cohomology.skew_brace import (
    SB2Cochain,
    enumerate_sb_coboundaries,
    enumerate_sb_cocycles,
    extension_from_sb_cocycle,
    h2_sb,
    sb_cocycle_failure,
    sb_cocycle_from_extension,
    trivial_triplet,
)
from .errors import AlgebraError, BadPayload, BoundExceeded
from .groups import ElementMap, FiniteGroup
from .isoclinism import (
    check_isoclinism,
    find_isoclinism,
    square_annihilator_hypothesis,
    square_isoclinism,
)
from .rota_baxter import enumerate_rb, rb_on_semidirect, validate_rb
from .serialization import (
    action_images,
    canonical_json,
    from_data,
    loads,
    to_data,
)
from .squares import double_brace, square_brace, square_vs_double
from .yang_baxter import (
    YBESolution,
    check_braid,
    check_nondegenerate,
    gv_solution,
    is_pair_bijection,
)


def _read(ref):
    if ref.startswith("catalog:"):
        return catalog_get(ref[len("catalog:"):]).payload
    try:
        with open(ref, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise BadPayload(f"cannot read {ref}: {exc.strerror}") from exc


def _load(ref, **context):
    return loads(_read(ref), **context)


def _load_typed(ref, cls, what, **context):
    obj = _load(ref, **context)
    if not isinstance(obj, cls):
        raise BadPayload(f"{ref} is not a {what} payload")
    return obj


def _emit(report, args):
    text = canonical_json(report)
    print(text)
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0


def _witness(exc):
    w = exc.witness
    if w is None:
        return None
    if isinstance(w, (tuple, list)):
        return [int(v) if isinstance(v, (int, bool)) else str(v) for v in w]
    return int(w) if isinstance(w, int) else str(w)


# --- plain object commands ---------------------------------------------------


def _cmd_validate(args):
    try:
        data = json.loads(_read(args.object))
    except json.JSONDecodeError as exc:
        raise BadPayload(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "kind" not in data:
        raise BadPayload("payload must be a JSON object with a 'kind' field")
    kind = data["kind"]
    if kind == "action":
        action_images(data)  # shape check; the law needs ambient groups
    elif kind == "triplet":
        for part in ("xi", "zeta", "eps"):
            if part not in data:
                raise BadPayload(f"triplet payload is missing {part!r}")
            action_images(data[part])
    else:
        from_data(data)
    print(canonical_json({"kind": kind, "valid": True}))
    return 0


def _cmd_lambda(args):
    brace = _load_typed(args.brace, SkewBrace, "skew brace")
    return _emit(to_data(lambda_map(brace)), args)


def _cmd_square(args):
    brace = _load_typed(args.brace, SkewBrace, "skew brace")
    return _emit(to_data(square_brace(brace).brace), args)


def _cmd_double(args):
    brace = _load_typed(args.brace, SkewBrace, "skew brace")
    return _emit(to_data(double_brace(brace).brace), args)


def _cmd_square_vs_double(args):
    brace = _load_typed(args.brace, SkewBrace, "skew brace")
    return _emit(square_vs_double(brace), args)


def _cmd_rb_enumerate(args):
    group = _load_typed(args.group, FiniteGroup, "group")
    ops = enumerate_rb(group)
    report = {
        "count": len(ops),
        "operators": [[int(v) for v in op.map] for op in ops],
    }
    return _emit(report, args)


def _cmd_rb_validate(args):
    group = _load_typed(args.group, FiniteGroup, "group")
    values = _load_typed(args.map, ElementMap, "map")
    validate_rb(group, values)
    print(canonical_json({"valid": True}))
    return 0


def _cmd_rrb_validate(args):
    _load(args.rrb)  # the rrb loader re-validates the axiom
    print(canonical_json({"valid": True}))
    return 0


def _cmd_rrb_semidirect(args):
    rrb = _load(args.rrb)
    E, op = rb_on_semidirect(rrb)
    return _emit({"group": to_data(E), "r": to_data(op.map)}, args)


def _cmd_ybe_check(args):
    obj = _load(args.object)
    if isinstance(obj, SkewBrace):
        sol = gv_solution(obj)
    elif isinstance(obj, YBESolution):
        sol = obj
    else:
        raise BadPayload(f"{args.object} is neither a brace nor a solution payload")
    report = {
        "size": sol.size,
        "braid": check_braid(sol),
        "bijective": is_pair_bijection(sol),
        "nondegenerate": check_nondegenerate(sol),
    }
    print(canonical_json(report))
    return 0 if all(report[k] for k in ("braid", "bijective", "nondegenerate")) else 1


# --- cohomology --------------------------------------------------------------


def _need(args, names, theory):
    for name in names:
        if getattr(args, name, None) is None:
            raise BadPayload(f"coh {theory} needs --{name.replace('_', '-')}")


def _sb_module(args):
    _need(args, ("brace", "coeff"), "sb")
    brace = _load_typed(args.brace, SkewBrace, "skew brace")
    coeff = _load_typed(args.coeff, FiniteGroup, "group")
    if args.triplet:
        return _load(args.triplet, brace=brace, coeff=coeff)
    return trivial_triplet(brace, coeff)


def _rb_module(args):
    _need(args, ("group", "r", "coeff"), "rb")
    group = _load_typed(args.group, FiniteGroup, "group")
    base = validate_rb(group, _load_typed(args.r, ElementMap, "map"))
    coeff = _load_typed(args.coeff, FiniteGroup, "group")
    if args.ri is None and args.gamma is None:
        return trivial_rb_module(base, coeff)
    r_i = (
        tuple(_load_typed(args.ri, ElementMap, "map"))
        if args.ri
        else (0,) * coeff.n
    )
    if args.gamma:
        try:
            data = json.loads(_read(args.gamma))
        except json.JSONDecodeError as exc:
            raise BadPayload(f"not valid JSON: {exc}") from exc
        images, contravariant = action_images(data)
        if not contravariant:
            raise BadPayload("the coefficient action must be contravariant")
        gamma = tuple(tuple(p) for p in images)
    else:
        gamma = tuple(tuple(range(coeff.n)) for _ in range(group.n))
    return validate_rb_module(base, coeff, r_i, gamma)


def _rrb_module(args):
    _need(args, ("brace", "coeff"), "rrb")
    brace = _load_typed(args.brace, SkewBrace, "skew brace")
    coeff = _load_typed(args.coeff, FiniteGroup, "group")
    return diagram_instance(brace, coeff).quadruple


def _table_fits(rows, n_rows, n_cols, limit):
    return (
        len(rows) == n_rows
        and all(len(row) == n_cols for row in rows)
        and all(0 <= v < limit for row in rows for v in row)
    )


def _row_fits(row, n, limit):
    return len(row) == n and all(0 <= v < limit for v in row)


def _check_cochain(theory, module, c):
    """Reject cochains whose tables do not match the module's carriers."""
    if theory == "sb":
        ok = isinstance(c, SB2Cochain) and all(
            _table_fits(t, module.base.n, module.base.n, module.coeff.n)
            for t in (c.g, c.f)
        )
    elif theory == "rb":
        n = module.base.group.n
        ok = (
            isinstance(c, RB2Cochain)
            and _table_fits(c.tau, n, n, module.coeff.n)
            and _row_fits(c.r, n, module.coeff.n)
        )
    else:
        na, nb = module.base.h_group.n, module.base.g_group.n
        ok = (
            isinstance(c, RRB2Cochain)
            and _table_fits(c.tau1, na, na, module.coeff_k.n)
            and _table_fits(c.tau2, nb, nb, module.coeff_l.n)
            and _table_fits(c.rho, na, nb, module.coeff_k.n)
            and _row_fits(c.chi, na, module.coeff_l.n)
        )
    if not ok:
        raise BadPayload(f"the cochain does not fit the {theory} module")
    return c


def _cmd_coh(args):
    theory = args.theory
    if theory == "sb":
        module = _sb_module(args)
        failure = lambda c: sb_cocycle_failure(module, c)
        counts = lambda: (
            len(enumerate_sb_cocycles(module)),
            len(enumerate_sb_coboundaries(module)),
            len(h2_sb(module)),
        )
    elif theory == "rb":
        module = _rb_module(args)
        failure = lambda c: rb_cocycle_failure(module, c)
        counts = lambda: (
            len(enumerate_rb_cocycles(module)),
            len(enumerate_rb_coboundaries(module)),
            len(h2_rb(module)),
        )
    else:
        module = _rrb_module(args)
        failure = lambda c: rrb_cocycle_failure(module, c)
        counts = lambda: (
            len(enumerate_rrb_cocycles(module)),
            len(enumerate_rrb_coboundaries(module)),
            len(h2_rrb(module)),
        )

    if args.verb == "check":
        cochain = _check_cochain(theory, module, _load(args.cocycle))
        bad = failure(cochain)
        if bad is None:
            print(canonical_json({"cocycle": True}))
            return 0
        name, where = bad
        print(
            canonical_json(
                {"cocycle": False, "identity": name, "witness": list(where)}
            )
        )
        return 1

    if args.verb == "classes":
        z2, b2, h2 = counts()
        return _emit({"z2": z2, "b2": b2, "h2": h2}, args)

    if args.verb == "extend":
        cochain = _check_cochain(theory, module, _load(args.cocycle))
        if theory == "sb":
            brace, embed, project = extension_from_sb_cocycle(module, cochain)
            report = {
                "brace": to_data(brace),
                "embed": to_data(embed),
                "project": to_data(project),
            }
        elif theory == "rb":
            ext = extension_from_rb_cocycle(module, cochain)
            report = {
                "group": to_data(ext.op.group),
                "r": to_data(ext.op.map),
                "embed": to_data(ext.embed),
                "project": to_data(ext.project),
            }
        else:
            ext = extension_from_rrb_cocycle(module, cochain)
            report = {
                "rrb": to_data(ext.rrb),
                "embed_k": to_data(ext.embed_k),
                "embed_l": to_data(ext.embed_l),
                "project_h": to_data(ext.project_h),
                "project_g": to_data(ext.project_g),
            }
        return _emit(report, args)

    # extract: recover the cochain of section defects from an extension
    if theory == "sb":
        _need(args, ("total", "embed", "project", "section"), "sb extract")
        total = _load_typed(args.total, SkewBrace, "skew brace")
        embed = _load_typed(args.embed, ElementMap, "map")
        project = _load_typed(args.project, ElementMap, "map")
        section = _load_typed(args.section, ElementMap, "map")
        cochain = sb_cocycle_from_extension(total, embed, project, section)
    elif theory == "rb":
        _need(args, ("total", "r", "embed", "project", "section"), "rb extract")
        total = _load_typed(args.total, FiniteGroup, "group")
        op = validate_rb(total, _load_typed(args.r, ElementMap, "map"))
        ext = RBExtension(
            op,
            _load_typed(args.embed, ElementMap, "map"),
            _load_typed(args.project, ElementMap, "map"),
        )
        cochain = rb_cocycle_from_extension(
            ext, _load_typed(args.section, ElementMap, "map")
        )
    else:
        _need(
            args,
            (
                "rrb_total",
                "embed_k",
                "embed_l",
                "project_h",
                "project_g",
                "section_h",
                "section_g",
            ),
            "rrb extract",
        )
        ext = RRBExtension(
            _load(args.rrb_total),
            _load_typed(args.embed_k, ElementMap, "map"),
            _load_typed(args.embed_l, ElementMap, "map"),
            _load_typed(args.project_h, ElementMap, "map"),
            _load_typed(args.project_g, ElementMap, "map"),
        )
        cochain = rrb_cocycle_from_extension(
            ext,
            _load_typed(args.section_h, ElementMap, "map"),
            _load_typed(args.section_g, ElementMap, "map"),
        )
    return _emit(to_data(cochain), args)


def _cmd_diagram_check(args):
    brace = _load_typed(args.brace, SkewBrace, "skew brace")
    coeff = _load_typed(args.coeff, FiniteGroup, "group")
    triplet = (
        _load(args.triplet, brace=brace, coeff=coeff) if args.triplet else None
    )
    inst = diagram_instance(brace, coeff, triplet)
    q = inst.quadruple
    class_counts = {
        "z2": len(enumerate_rrb_cocycles(q)),
        "b2": len(enumerate_rrb_coboundaries(q)),
        "h2": len(h2_rrb(q)),
    }
    if args.cocycle:
        cocycles = [_check_cochain("rrb", q, _load(args.cocycle))]
    else:
        cocycles = enumerate_rrb_cocycles(q)
    reports = []
    all_commute = True
    for c in cocycles:
        verdict = diagram_check(inst, c)
        all_commute = all_commute and verdict.commutes
        reports.append(
            {
                "commutes": verdict.commutes,
                "witness": verdict.witness,
                "class_counts": class_counts,
            }
        )
    print(canonical_json(reports[0] if args.cocycle else reports))
    return 0 if all_commute else 1


def _cmd_isoclinism(args):
    a = _load_typed(args.first, SkewBrace, "skew brace")
    b = _load_typed(args.second, SkewBrace, "skew brace")
    witness = find_isoclinism(a, b)
    hypothesis = [square_annihilator_hypothesis(a), square_annihilator_hypothesis(b)]
    report = {
        "isoclinic": witness is not None,
        "witness": None
        if witness is None
        else {
            "xi1": [int(v) for v in witness.xi1],
            "xi2": [int(v) for v in witness.xi2],
        },
        "square_hypothesis": hypothesis,
        "squares_isoclinic": "skipped",
    }
    if args.squares and witness is not None and all(hypothesis):
        verdict = square_isoclinism(a, b, witness)
        report["squares_isoclinic"] = bool(
            verdict.isoclinic
            and check_isoclinism(
                square_brace(a).brace, square_brace(b).brace, verdict.witness
            )
        )
    print(canonical_json(report))
    return 0 if witness is not None else 1


def _cmd_catalog_list(args):
    entries = [
        {"kind": e.kind, "name": e.name, "order": e.load().n}
        for e in catalog_entries()
    ]
    return _emit({"entries": entries}, args)


def _cmd_acceptance_run(args):
    from .acceptance import run_all

    results = run_all(stream=sys.stderr)
    report = {
        "all_pass": all(r["pass"] for r in results),
        "criteria": [{k: r[k] for k in ("id", "name", "pass")} for r in results],
    }
    print(canonical_json(report))
    return 0 if report["all_pass"] else 1


# --- parser ------------------------------------------------------------------


def _add_output(p):
    p.add_argument("-o", "--output", help="also write the report to this file")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bracelab",
        description="Finite skew braces, Rota-Baxter operators, Yang-Baxter "
        "solutions, second cohomology, and isoclinism.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=1,
        metavar="N",
        help="maximum internal parallelism (commands may use fewer)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate any JSON payload")
    p.add_argument("object")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("lambda", help="emit the lambda action of a brace")
    p.add_argument("brace")
    _add_output(p)
    p.set_defaults(func=_cmd_lambda)

    p = sub.add_parser("square", help="the square brace on pairs")
    p.add_argument("brace")
    _add_output(p)
    p.set_defaults(func=_cmd_square)

    p = sub.add_parser("double", help="the double brace on pairs")
    p.add_argument("brace")
    _add_output(p)
    p.set_defaults(func=_cmd_double)

    p = sub.add_parser(
        "square-vs-double", help="compare the two pair constructions"
    )
    p.add_argument("brace")
    _add_output(p)
    p.set_defaults(func=_cmd_square_vs_double)

    p = sub.add_parser("rb", help="Rota-Baxter operators")
    rb_sub = p.add_subparsers(dest="verb", required=True)
    q = rb_sub.add_parser("enumerate", help="all operators on a group")
    q.add_argument("group")
    _add_output(q)
    q.set_defaults(func=_cmd_rb_enumerate)
    q = rb_sub.add_parser("validate", help="check the operator axiom")
    q.add_argument("group")
    q.add_argument("map")
    q.set_defaults(func=_cmd_rb_validate)

    p = sub.add_parser("rrb", help="relative Rota-Baxter groups")
    rrb_sub = p.add_subparsers(dest="verb", required=True)
    q = rrb_sub.add_parser("validate", help="check the relative axiom")
    q.add_argument("rrb")
    q.set_defaults(func=_cmd_rrb_validate)
    q = rrb_sub.add_parser(
        "semidirect", help="the induced operator on the semi-direct product"
    )
    q.add_argument("rrb")
    _add_output(q)
    q.set_defaults(func=_cmd_rrb_semidirect)

    p = sub.add_parser("ybe", help="Yang-Baxter solutions")
    ybe_sub = p.add_subparsers(dest="verb", required=True)
    q = ybe_sub.add_parser(
        "check", help="braid, bijectivity, non-degeneracy of a brace's solution"
    )
    q.add_argument("object", help="a skew-brace or solution payload")
    q.set_defaults(func=_cmd_ybe_check)

    p = sub.add_parser("coh", help="second cohomology")
    p.add_argument("theory", choices=("sb", "rb", "rrb"))
    coh_sub = p.add_subparsers(dest="verb", required=True)

    def _coh_common(q):
        q.add_argument("--brace", help="base skew brace (sb, rrb)")
        q.add_argument("--coeff", help="coefficient group")
        q.add_argument("--triplet", help="coefficient actions (sb only)")
        q.add_argument("--group", help="base group (rb only)")
        q.add_argument("--r", help="operator map (rb only)")
        q.add_argument("--ri", help="coefficient operator map (rb only)")
        q.add_argument("--gamma", help="coefficient action (rb only)")
        q.set_defaults(func=_cmd_coh)

    q = coh_sub.add_parser("check", help="is the cochain a cocycle")
    q.add_argument("--cocycle", required=True)
    _coh_common(q)
    q = coh_sub.add_parser("classes", help="count Z2, B2, H2")
    _coh_common(q)
    _add_output(q)
    q = coh_sub.add_parser("extend", help="build the extension of a cocycle")
    q.add_argument("--cocycle", required=True)
    _coh_common(q)
    _add_output(q)
    q = coh_sub.add_parser(
        "extract", help="recover the cocycle of a split extension"
    )
    q.add_argument("--total", help="extension brace (sb) or group (rb)")
    q.add_argument("--rrb-total", help="extension rrb payload (rrb)")
    q.add_argument("--embed", help="coefficient embedding (sb, rb)")
    q.add_argument("--project", help="projection to the base (sb, rb)")
    q.add_argument("--section", help="section of the projection (sb, rb)")
    q.add_argument("--embed-k")
    q.add_argument("--embed-l")
    q.add_argument("--project-h")
    q.add_argument("--project-g")
    q.add_argument("--section-h")
    q.add_argument("--section-g")
    _coh_common(q)
    _add_output(q)

    p = sub.add_parser("diagram-check", help="transport a cocycle both ways")
    p.add_argument("--brace", required=True)
    p.add_argument("--coeff", required=True)
    p.add_argument("--triplet")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true")
    group.add_argument("--cocycle")
    p.set_defaults(func=_cmd_diagram_check)

    p = sub.add_parser("isoclinism", help="search for an isoclinism")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--squares", action="store_true")
    p.set_defaults(func=_cmd_isoclinism)

    p = sub.add_parser("catalog", help="bundled objects")
    cat_sub = p.add_subparsers(dest="verb", required=True)
    q = cat_sub.add_parser("list", help="names, kinds, orders")
    _add_output(q)
    q.set_defaults(func=_cmd_catalog_list)

    p = sub.add_parser("acceptance", help="reproducible acceptance criteria")
    acc_sub = p.add_subparsers(dest="verb", required=True)
    q = acc_sub.add_parser("run", help="run all criteria")
    q.set_defaults(func=_cmd_acceptance_run)

    return parser


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.threads < 1:
        print("--threads must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except BadPayload as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return 3
    except AlgebraError as exc:
        report = {
            "error": type(exc).__name__,
            "message": str(exc),
            "witness": _witness(exc),
        }
        print(canonical_json(report))
        print(f"property fails: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
