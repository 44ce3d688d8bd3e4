"""Command line entry point: ``steiner <subcommand> ...``.

Exit status is 0 when the result matches what is expected, 1 when it does
not, and 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import admiss, census, construct, design, pgl
from .perm import PermError, read_group

INPUT_ERRORS = (
    ValueError,  # all package errors derive from ValueError
    OSError,
    PermError,
)


def _dump(obj, fh=None):
    json.dump(obj, fh or sys.stdout, indent=2, sort_keys=True)
    (fh or sys.stdout).write("\n")


def cmd_census(args):
    q_cap = args.q_cap if args.q_cap is not None else (2048 if args.t == 5 else 10**5)
    reports = census.run_census(args.t, q_cap, args.d_cap)
    data = census.census_json(reports, args.t, q_cap, args.d_cap)
    if args.json:
        with open(args.json, "w") as fh:
            _dump(data, fh)
    quiet = 0
    for r in reports:
        routine = r.case_id.startswith("as_PSL2(") and r.verdict == "eliminated" and r.case_id != "as_PSL2(subcases)"
        if routine and not args.verbose:
            quiet += 1
            continue
        print(census.explain(r))
    if quiet:
        print(f"({quiet} further as_PSL2(q) cases eliminated; use --verbose or --json for details)")
    ok = data["matches_expected"]
    print(f"survivors: {', '.join(data['survivors']) or 'none'}")
    print("census matches expected: " + ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def _build(family, params):
    """Design, group used to certify it, and the block stabilizer order (if known)."""
    if family == "ag":
        (d,) = params
        D = construct.ag_plane_design(d)
        G = pgl.make_group(pgl.GroupDescriptor("SLd2_affine", d=d))
    elif family == "spherical":
        q, e = params
        D = construct.spherical_design(q, e)
        G = pgl.make_group(pgl.GroupDescriptor("PGL2", q**e))
    elif family == "netto":
        (q,) = params
        D = construct.netto_extension_design(q)
        G = pgl.make_group(pgl.GroupDescriptor("PSL2", q))
    else:
        (q,) = params
        D, cert = construct.witt_design_via_psl(q)
        G = pgl.make_group(cert.group)
        return D, G, cert.stabilizer_order
    return D, G, G.setwise_stabilizer(D.blocks[0]).order()


PARAM_COUNT = {"ag": 1, "spherical": 2, "netto": 1, "witt": 1}


def cmd_construct(args):
    if len(args.params) != PARAM_COUNT[args.family]:
        raise ValueError(f"{args.family} takes {PARAM_COUNT[args.family]} parameter(s)")
    D, G, stab = _build(args.family, args.params)
    sharp = construct.sharpness_check(D, G)
    cert = {"family": args.family, "params": args.params, "b": D.b,
            "stabilizer_order": stab, **sharp}
    out = args.out or f"{args.family}-{'-'.join(map(str, args.params))}.design"
    design.write_design(D, out)
    cert["design_file"] = out
    if args.cert:
        with open(args.cert, "w") as fh:
            _dump(cert, fh)
    _dump(cert)
    return 0


def cmd_verify(args):
    D = design.read_design(args.design)
    G = read_group(args.group)
    if G.degree != D.v:
        raise ValueError(f"group degree {G.degree} differs from v = {D.v}")
    if not design.is_automorphism_group(D, G):
        _dump({"design": [D.t, D.v, D.k, D.lam, D.b], "automorphisms": False})
        return 1
    rep = design.transitivity_report(D, G)
    _dump({"design": [D.t, D.v, D.k, D.lam, D.b], "automorphisms": True, **rep.__dict__})
    return 0


def cmd_orbits(args):
    row = pgl.observed_orbit_census(args.q, pgl.SubgroupKind.parse(args.kind))
    data = row.as_dict()
    _dump(data)
    print("PASS" if row.match else "FAIL")
    return 0 if row.match else 1


def cmd_derive(args):
    D = design.read_design(args.design)
    E = design.derived_design(D, args.point)
    if args.out:
        design.write_design(E, args.out)
    else:
        sys.stdout.write(design.format_design(E))
    return 0


def cmd_admiss(args):
    ps = admiss.param_arithmetic(args.t, args.v, args.k, args.lam)
    data = ps.as_dict()
    if args.t >= 3:
        cam = admiss.cameron_bounds(args.t, args.v, args.k)
        data["cameron_a"] = cam.a_ok
        data["cameron_b"] = cam.b_ok
    _dump(data)
    if not ps.feasible:
        print(f"not integral: {ps.failure}")
    return 0 if ps.feasible else 1


def cmd_scan(args):
    rows = admiss.subcase_equation_scan(args.equation, args.cap)
    for row in rows:
        print(json.dumps(row.as_dict(), sort_keys=True))
    print(f"{args.equation}: {len(rows)} survivors", file=sys.stderr)
    return 0 if not rows else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="steiner", description="Steiner designs and flag-transitive groups.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="run the case census for t = 5 or 6")
    p.add_argument("--t", type=int, choices=(5, 6), required=True)
    p.add_argument("--q-cap", type=int, default=None, help="largest q for PSL(2,q) (default 2048, or 10^5 for t=6)")
    p.add_argument("--d-cap", type=int, default=10, help="largest d for SL(d,2)")
    p.add_argument("--json", metavar="PATH", help="write the full report as JSON")
    p.add_argument("--verbose", action="store_true", help="print every PSL(2,q) case")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("construct", help="build a design and certify it")
    p.add_argument("--family", choices=sorted(PARAM_COUNT), required=True)
    p.add_argument("--params", type=int, nargs="+", required=True,
                   help="ag: d; spherical: q e; netto: q; witt: q in {11, 23}")
    p.add_argument("--out", metavar="FILE", help="design file to write")
    p.add_argument("--cert", metavar="FILE", help="also write the certificate JSON here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check that a group preserves a design")
    p.add_argument("--design", required=True)
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbits", help="predicted vs observed orbit lengths of a PSL(2,q) subgroup")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--kind", required=True, help="e.g. cyclic(6), dihedral(4), A5, psl2(3,2)")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("derive", help="derived design at a point")
    p.add_argument("--design", required=True)
    p.add_argument("--point", type=int, required=True)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("admiss", help="parameter arithmetic for a Steiner system")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, default=1)
    p.set_defaults(func=cmd_admiss)

    p = sub.add_parser("scan", help="survivors of a subcase equation")
    p.add_argument("--equation", required=True, help=", ".join(admiss.EQUATION_IDS))
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
