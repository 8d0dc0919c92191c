"""JSON command-line front end.

Subcommands: count-orbits, root-invariant, table-mod2, lattice-info,
f2-normal-form, solve-quad, validate.  Exit codes: 0 success, 1 invalid
input, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .e10map import EXPECTED_TABLE, ComponentType, e10_space, table_root_mod2
from .f2group import IsometryF2, NormalFormF2, QuadSpaceF2, normal_form, vkey
from .invariant import (
    GluedK3Input,
    GluePair,
    RootInvariant,
    build_canonical_invariant,
    nikulin_root_invariant,
    validate_invariant,
)
from .lattice import IntMatrix, Lattice, discriminant_group, signature, snf_diagonal
from .orbitcount import VinbergGroupSpec, count_curve_orbits, solve_binary_quadratic
from .rootsys import ADEType


class CliError(Exception):
    def __init__(self, message, code=1):
        super().__init__(message)
        self.code = code


def _dump(obj, pretty):
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _load_input(path):
    if path is None:
        raise CliError("missing --input")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read input: {exc}")
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON: {exc}")


def _lattice_from_json(obj) -> Lattice:
    try:
        gram = IntMatrix(obj["gram"])
        scale = Fraction(obj.get("scale", "1"))
        return Lattice(gram, scale)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"invalid lattice: {exc}")


def _lattice_to_json(l: Lattice):
    out = {"gram": [list(row) for row in l.gram.data]}
    if l.scale != 1:
        out["scale"] = str(l.scale)
    return out


def _mask_to_bits(mask):
    return [(mask >> i) & 1 for i in range(10)]


def _bits_to_mask(bits):
    if len(bits) != 10 or any(b not in (0, 1) for b in bits):
        raise CliError("sigma vectors must be 10 bits of 0/1")
    return sum(b << i for i, b in enumerate(bits))


def _invariant_from_json(obj) -> tuple:
    try:
        comps = obj["components"]
    except (KeyError, TypeError):
        raise CliError("invariant JSON needs a 'components' list")
    types = []
    sigmas = []
    for c in comps:
        try:
            t = ComponentType(ADEType.parse(c["type"]), int(c.get("kernel", 0)))
        except (KeyError, ValueError, TypeError) as exc:
            raise CliError(f"invalid component: {exc}")
        types.append(t)
        if "sigma" in c:
            sigmas.append(frozenset(_bits_to_mask(v) for v in c["sigma"]))
        else:
            sigmas.append(None)
    gens = []
    for rows in obj.get("extra_generators", ()):
        if len(rows) != 10:
            raise CliError("extra generators must be 10x10 bit matrices")
        gens.append(IsometryF2(tuple(_bits_to_mask(r) for r in rows)))
    if any(s is None for s in sigmas):
        if any(s is not None for s in sigmas):
            raise CliError("either all components or none may carry 'sigma'")
        try:
            inv = build_canonical_invariant(types)
        except ValueError as exc:
            raise CliError(str(exc))
    else:
        inv = RootInvariant(
            tuple(zip(types, sigmas)), sum(t.ade.rank for t in types)
        )
    return inv, VinbergGroupSpec(tuple(gens))


def _invariant_to_json(inv: RootInvariant):
    comps = []
    for t, sigma in inv.components:
        entry = {"type": str(t.ade), "kernel": t.kernel}
        if sigma is not None:
            entry["sigma"] = [
                _mask_to_bits(v) for v in sorted(sigma, key=lambda v: vkey(v, 10))
            ]
        comps.append(entry)
    return {"components": comps, "total_rank": inv.total_rank}


def _cmd_count_orbits(args):
    inv, spec = _invariant_from_json(_load_input(args.input))
    try:
        res = count_curve_orbits(inv, spec)
    except ValueError as exc:
        raise CliError(str(exc))
    return {
        "total": res.total,
        "component_orbits": [list(o) for o in res.component_orbits],
        "per_orbit_weight": list(res.per_orbit_weight),
        "types": [str(t) for t, _ in inv.components],
    }


def _cmd_validate(args):
    inv, _ = _invariant_from_json(_load_input(args.input))
    violations = validate_invariant(inv)
    return {"violations": violations, "valid": not violations}


def _cmd_root_invariant(args):
    obj = _load_input(args.input)
    try:
        gram = IntMatrix(obj["gram_minus"])
        glue = tuple(
            GluePair(tuple(Fraction(x) for x in p["minus"]), _bits_to_mask(p["plus"]))
            for p in obj.get("glue", ())
        )
        inv = nikulin_root_invariant(GluedK3Input(gram, glue))
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"invalid glued input: {exc}")
    return _invariant_to_json(inv)


def _cmd_table_mod2(args):
    rows = table_root_mod2()
    payload = {
        "rows": [
            {"R": r, "closure": rp, "normal_form": nf.to_json(), "label": nf.label()}
            for r, rp, nf in rows
        ]
    }
    expected = [(r, rp, nf) for r, rp, nf in EXPECTED_TABLE]
    if rows != expected:
        raise CliError("table regeneration mismatch", code=2)
    return payload


def _cmd_lattice_info(args):
    l = _lattice_from_json(_load_input(args.input))
    pos, neg = signature(l)
    try:
        disc = discriminant_group(l)
        orders = [str(d) for d in disc.orders]
        qvals = [str(q) for q in disc.qvalues]
    except ValueError:
        orders = None
        qvals = None
    return {
        "lattice": _lattice_to_json(l),
        "rank": l.rank,
        "det": str(l.det()),
        "even": l.is_even(),
        "signature": {"pos": pos, "neg": neg},
        "snf": [str(d) for d in snf_diagonal(l.gram)],
        "discriminant_orders": orders,
        "discriminant_qvalues": qvals,
    }


def _cmd_f2_normal_form(args):
    obj = _load_input(args.input)
    try:
        rows = obj["bilinear"]
        dim = len(rows)
        bil = tuple(sum((int(x) & 1) << j for j, x in enumerate(r)) for r in rows)
        qd = sum((int(x) & 1) << i for i, x in enumerate(obj["qdiag"]))
        space = QuadSpaceF2(dim, bil, qd)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"invalid quadratic space: {exc}")
    nf = normal_form(space)
    return {"normal_form": nf.to_json(), "label": nf.label()}


def _cmd_solve_quad(args):
    if args.c is None:
        raise CliError("missing --c")
    try:
        sols = solve_binary_quadratic(args.c)
    except ValueError as exc:
        raise CliError(str(exc))
    return {"solutions": [list(p) for p in sols]}


_COMMANDS = {
    "count-orbits": _cmd_count_orbits,
    "root-invariant": _cmd_root_invariant,
    "table-mod2": _cmd_table_mod2,
    "lattice-info": _cmd_lattice_info,
    "f2-normal-form": _cmd_f2_normal_form,
    "solve-quad": _cmd_solve_quad,
    "validate": _cmd_validate,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _build_parser():
    parser = _Parser(prog="enriques", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", default=None)
        p.add_argument("--pretty", action="store_true")
        if name == "solve-quad":
            p.add_argument("--c", type=int, default=None)
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        payload = _COMMANDS[args.command](args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    sys.stdout.write(_dump(payload, args.pretty))
    if args.command == "validate" and payload["violations"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
