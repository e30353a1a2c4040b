"""Batch front end: build algebras, run verdicts, solvers and the
table-reproduction suite, JSON in/out.

Exit codes: 0 success, 1 validation error (unknown name, bad parameters),
2 internal assertion failure (the two verdict routes disagreeing).
Geometric parameters are exact rationals written num/den; floats are
accepted only for the flow and search controls.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .catalog import (G_STANDARD, J_GK_MINUS, J_GK_PLUS, ParameterError,
                      UnknownAlgebraError, build, known_structures,
                      manifest)
from .dolbeault import DolbeaultData, holomorphic_poisson_space
from .flow import FlowState, integrate, scaling_factor_squared
from .genkahler import GKTriple, canonical_generators, verify_gk
from .hermitian import HermitianStructure, RouteDisagreementError, skt_verdict
from .liealg import AlmostAbelianData, adapted_data, from_almost_abelian
from .linalg import Matrix
from .obstruction import J_ADAPTED, search_compatible_jminus
from .recognition import recognize
from .scalars import Q


class CliError(Exception):
    pass


def _parse_params(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        if "=" not in item:
            raise CliError(f"malformed parameter {item!r}, expected name=num/den")
        k, v = item.split("=", 1)
        try:
            out[k.strip()] = Q(v.strip())
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise CliError(f"bad rational {v!r}: {exc}") from exc
    return out


def _parse_vector(text: str, length: int = 4) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != length:
        raise CliError(f"expected {length} comma-separated rationals")
    return tuple(Q(p) for p in parts)


def _form_str(form) -> str:
    if form is None or form.is_zero():
        return "0"
    parts = []
    for idx in sorted(form.coeffs):
        c = form.coeffs[idx]
        label = "f" + "".join(str(i + 1) for i in idx)
        parts.append(f"({c})*{label}")
    return " + ".join(parts)


def _structure_for(name: str, params: dict, role_request: str):
    roles = known_structures(name, params)
    # "example1" names the standard diagonal-metric structure, which backs
    # both the SKT and the Kaehler rows; "auto" prefers SKT over Kaehler
    wanted = ("skt", "kahler") if role_request in ("auto", "example1") \
        else (role_request,)
    for want in wanted:
        for ks in roles:
            if ks.role == want:
                return ks
    raise CliError(
        f"no printed {role_request!r} structure for {name} with {params}; "
        f"available roles: {[k.role for k in roles]}")


def cmd_build(args) -> dict:
    alg = build(args.algebra, _parse_params(args.params))
    return {"algebra": args.algebra, "structure_constants":
            json.loads(alg.to_json())}


def cmd_verdict(args) -> dict:
    params = _parse_params(args.params)
    alg = build(args.algebra, params)
    ks = _structure_for(args.algebra, params, args.structure)
    verdict = skt_verdict(alg, HermitianStructure(ks.j_plus, ks.g))
    doc = verdict.to_json_obj()
    doc["H_pretty"] = _form_str(verdict.torsion_H)
    doc["role"] = ks.role
    doc["exactness"] = "exact"
    return doc


def cmd_poisson(args) -> dict:
    params = _parse_params(args.params)
    if args.v is not None or args.s is not None:
        # generic non-Kaehler data: a = 0, rotation parameter s, vector v
        s = Q(args.s) if args.s is not None else Fraction(1)
        v = _parse_vector(args.v) if args.v is not None else (0, 0, 0, 0)
        amat = Matrix([[0, 0, 0, 0], [0, 0, s, 0],
                       [0, -s, 0, 0], [0, 0, 0, 0]])
        data = AlmostAbelianData(0, v, amat)
    else:
        alg = build(args.algebra, params)
        ks = _structure_for(args.algebra, params, "auto")
        frame = adapted_data(alg, ks.j_plus, ks.g)
        if not frame.exact:
            raise CliError("adapted data is not rationally orthonormal")
        data = frame.data
    dd = DolbeaultData.from_data(data)
    space = holomorphic_poisson_space(dd)
    gens = []
    basis = ["Z1^Z2", "Z1^Z3", "Z2^Z3"]
    for rep in space.representatives:
        terms = [f"({c})*{b}" for c, b in zip(rep.components, basis)
                 if not c.is_zero()]
        gens.append(" + ".join(terms) if terms else "0")
    return {"algebra": args.algebra, "dim": space.span_dim,
            "is_linear_locus": space.is_linear, "generators": gens,
            "kernel_dim": len(space.kernel), "exactness": "exact"}


def cmd_gk_verify(args) -> dict:
    params = _parse_params(args.params)
    alg = build(args.algebra, params)
    triple = GKTriple(J_GK_PLUS, J_GK_MINUS, G_STANDARD)
    verdict = verify_gk(alg, triple)
    doc = verdict.to_json_obj()
    doc["H_pretty"] = _form_str(verdict.torsion)
    if verdict.valid:
        _, _, closed = canonical_generators(alg, triple)
        doc["canonical_generators_twisted_closed"] = list(closed)
    doc["exactness"] = "exact"
    return doc


def cmd_gk_search(args) -> dict:
    if args.v is not None:
        s = Q(args.s) if args.s is not None else Fraction(1)
        v = _parse_vector(args.v)
        amat = Matrix([[0, 0, 0, 0], [0, 0, s, 0],
                       [0, -s, 0, 0], [0, 0, 0, 0]])
        alg = from_almost_abelian(AlmostAbelianData(0, v, amat))
        j_plus = J_ADAPTED
    else:
        params = _parse_params(args.params)
        alg = build(args.algebra, params)
        ks = _structure_for(args.algebra, params, "auto")
        j_plus = ks.j_plus
    rep = search_compatible_jminus(alg, j_plus, G_STANDARD,
                                   budget=args.budget, seed=args.seed)
    doc = rep.to_json_obj()
    doc["exactness"] = "numeric search (floats) + exact constraint chain"
    return doc


def cmd_flow(args) -> dict:
    params = _parse_params(args.params)
    alg = build(args.algebra, params)
    ks = _structure_for(args.algebra, params, "auto")
    frame = adapted_data(alg, ks.j_plus, ks.g)
    if not frame.exact:
        raise CliError("adapted data is not rationally orthonormal")
    data = frame.data
    state = FlowState.initial(data.a, data.v, data.A)
    traj = integrate(state, args.t_end, args.dt)
    rows = traj.to_rows()
    doc = {"algebra": args.algebra, "t_end": args.t_end, "dt": args.dt,
           "k_half_rank": state.k_half_rank,
           "a_final": rows[-1][1], "aborted": traj.aborted,
           "exactness": f"numeric RK4, dt={args.dt}"}
    if all(x == 0 for x in data.v):
        c2 = scaling_factor_squared(
            data.a, state.k_half_rank,
            Fraction(args.t_end).limit_denominator(10 ** 9))
        doc["closed_form_a"] = float(data.a) * float(c2) ** 0.5
    if args.csv:
        import csv as _csv
        with open(args.csv, "w", newline="") as fh:
            writer = _csv.writer(fh)
            header = (["t", "a"] + [f"v{i}" for i in range(1, 5)]
                      + [f"A{i}{j}" for i in range(1, 5)
                         for j in range(1, 5)])
            writer.writerow(header)
            writer.writerows(rows)
        doc["csv"] = args.csv
    if args.include_trajectory:
        doc["trajectory"] = traj.to_json_obj()
    return doc


def cmd_recognize(args) -> dict:
    if args.json_in:
        from .liealg import LieAlgebra
        with open(args.json_in) as fh:
            alg = LieAlgebra.from_json(fh.read())
    else:
        alg = build(args.algebra, _parse_params(args.params))
    cands, inv = recognize(alg)
    return {
        "candidates": [{"name": c.name,
                        "params": {k: str(v) for k, v in c.params.items()},
                        "scale": str(c.scale),
                        "scale_free": c.scale_free} for c in cands],
        "invariants": {
            "almost_abelian": inv.almost_abelian,
            "nilpotent": inv.nilpotent,
            "unimodular": inv.unimodular,
            "abelian": inv.abelian,
            "derived_dim": inv.dim_derived,
            "jordan_type": [list(map(str, t)) for t in inv.jordan_type],
        },
        "exactness": "exact",
    }


def cmd_reproduce_tables(args) -> dict:
    from .acceptance import run_all
    results = run_all(fast=args.fast)
    doc = {"checks": [r.to_json_obj() for r in results],
           "all_passed": all(r.passed for r in results)}
    return doc


def cmd_manifest(args) -> dict:
    return {"families": manifest()}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="hermlie",
        description="Exact Hermitian geometry on six-dimensional almost "
                    "abelian Lie algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--algebra", help="catalog name, e.g. k17 or g6.1")
        p.add_argument("--params", help="comma list name=num/den, "
                                        "e.g. p=-1/2,s=1")

    p = sub.add_parser("build", help="structure constants of a catalog row")
    common(p)
    p = sub.add_parser("verdict", help="SKT/Kaehler verdict for a printed "
                                       "structure")
    common(p)
    p.add_argument("--structure", default="auto",
                   help="kahler | skt | auto | example1")
    p = sub.add_parser("poisson", help="holomorphic Poisson structures")
    common(p)
    p.add_argument("--v", help="four rationals v1,v2,v3,v4 (generic data)")
    p.add_argument("--s", help="rotation parameter for the generic data")
    p = sub.add_parser("gk-verify", help="verify the split generalized "
                                         "Kaehler structure")
    common(p)
    p = sub.add_parser("gk-search", help="numeric search for a compatible "
                                         "second complex structure")
    common(p)
    p.add_argument("--v", help="four rationals for the generic data")
    p.add_argument("--s", help="rotation parameter for the generic data")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=42)
    p = sub.add_parser("flow", help="integrate the reduced metric flow")
    common(p)
    p.add_argument("--t-end", type=float, default=2.0)
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--csv", help="write the trajectory to this CSV file")
    p.add_argument("--include-trajectory", action="store_true",
                   help="embed the sampled trajectory in the JSON report")
    p = sub.add_parser("recognize", help="match an algebra against the "
                                         "catalog")
    common(p)
    p.add_argument("--json-in", help="read structure constants from a JSON "
                                     "document")
    p = sub.add_parser("reproduce-tables", help="run the acceptance suite")
    p.add_argument("--fast", action="store_true",
                   help="reduced search budget (development only)")
    sub.add_parser("manifest", help="dump the catalog as JSON")

    args = parser.parse_args(argv)
    handlers = {
        "build": cmd_build,
        "verdict": cmd_verdict,
        "poisson": cmd_poisson,
        "gk-verify": cmd_gk_verify,
        "gk-search": cmd_gk_search,
        "flow": cmd_flow,
        "recognize": cmd_recognize,
        "reproduce-tables": cmd_reproduce_tables,
        "manifest": cmd_manifest,
    }
    try:
        doc = handlers[args.command](args)
    except (CliError, ParameterError, UnknownAlgebraError, ValueError) as exc:
        json.dump({"error": str(exc), "kind": type(exc).__name__},
                  sys.stdout, indent=2)
        print()
        return 1
    except (RouteDisagreementError, AssertionError) as exc:
        json.dump({"error": f"internal assertion: {exc}",
                   "kind": "internal"}, sys.stdout, indent=2)
        print()
        return 2
    doc = {"command": args.command,
           "inputs": {k: v for k, v in vars(args).items()
                      if k != "command" and v is not None},
           **doc}
    json.dump(doc, sys.stdout, indent=2, default=str)
    print()
    if args.command == "reproduce-tables" and not doc.get("all_passed"):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
