"""Command-line interface.

Every computation is exposed with a stable JSON encoding on stdout:
field elements are ascending coefficient arrays over the next-lower level
(K elements are arrays of ints when s = 1 and arrays of arrays when s > 1),
polynomials are ascending coefficient arrays, and characteristic
polynomials are arrays of F_q[T]-coefficient arrays.  --pretty switches to
the classical display strings instead.  Exit codes: 0 success, 1 on
mathematical errors, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time

from . import analytic as _analytic
from . import hom as _hom
from . import motive as _motive
from .dmodule import DrinfeldModule, basic_j_invariant_parameters
from .dmodule import is_isomorphic as _is_isomorphic
from .errors import DrinfeldError
from .ff import FieldElement, FieldTower, make_tower
from .ore import OrePolynomial
from .poly import DensePolynomial, RationalFunction


class MalformedInput(Exception):
    pass


# ---------------------------------------------------------------------------
# encoding / decoding
# ---------------------------------------------------------------------------

def _decode_K(tower: FieldTower, obj) -> FieldElement:
    try:
        return tower.element("K", obj)
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"bad K element {obj!r}: {exc}") from exc


def _encode_K(x: FieldElement):
    x = x.lift("K")
    if x.tower.flat:
        return list(x.data)
    return [list(c) for c in x.data]


def _decode_fq(tower: FieldTower, obj) -> FieldElement:
    try:
        return tower.element("q", obj)
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"bad F_q element {obj!r}: {exc}") from exc


def _encode_fq(x: FieldElement):
    if x.tower.flat:
        return x.lift("q").data
    return list(x.lift("q").data)


def _decode_fq_poly(tower: FieldTower, arr) -> DensePolynomial:
    if not isinstance(arr, list):
        raise MalformedInput(f"polynomial must be an array, got {arr!r}")
    return DensePolynomial([_decode_fq(tower, c) for c in arr],
                           tower.zero("q"), "T")


def _encode_fq_poly(f: DensePolynomial):
    return [_encode_fq(c) for c in f.coeffs]


def _decode_ore(tower: FieldTower, arr) -> OrePolynomial:
    if not isinstance(arr, list):
        raise MalformedInput(f"Ore polynomial must be an array, got {arr!r}")
    return OrePolynomial(tower, [_decode_K(tower, c) for c in arr])


def _encode_ore(f: OrePolynomial):
    return [_encode_K(c) for c in f.coeffs]


def _encode_charpoly(cp: DensePolynomial):
    return [_encode_fq_poly(c) for c in cp.coeffs]


def _decode_rational(tower: FieldTower, obj) -> RationalFunction:
    if isinstance(obj, dict):
        if set(obj) - {"num", "den"}:
            raise MalformedInput(f"bad rational function {obj!r}")
        num = _decode_fq_poly(tower, obj.get("num", []))
        den = _decode_fq_poly(tower, obj.get("den", [1]))
        return RationalFunction(num, den)
    if isinstance(obj, list):
        return RationalFunction(_decode_fq_poly(tower, obj))
    if isinstance(obj, int):
        return RationalFunction(_decode_fq_poly(tower, [obj]))
    raise MalformedInput(f"bad rational function {obj!r}")


def _encode_rational(x: RationalFunction):
    return {"num": _encode_fq_poly(x.num), "den": _encode_fq_poly(x.den)}


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON for {what}: {exc}") from exc


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _add_field_args(sp):
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--s", type=int, default=1)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--modulus-q", dest="modulus_q")
    sp.add_argument("--modulus-K", dest="modulus_K")


def _add_module_arg(sp, name="--module", required=True):
    sp.add_argument(name, dest=name.lstrip("-").replace("-", "_"),
                    required=required)


def _add_morphism_args(sp):
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--u", help="Ore polynomial (array of K elements)")
    grp.add_argument("--a", help="polynomial in F_q[T] (coefficient array)")
    grp.add_argument("--c", help="constant in K")


def _tower(args) -> FieldTower:
    modq = _json_arg(args.modulus_q, "--modulus-q") if args.modulus_q else None
    modK = _json_arg(args.modulus_K, "--modulus-K") if args.modulus_K else None
    return make_tower(args.p, args.s, args.n, modq, modK)


def _module(tower, text) -> DrinfeldModule:
    arr = _json_arg(text, "module coefficients")
    if not isinstance(arr, list):
        raise MalformedInput("module coefficients must be an array")
    return DrinfeldModule(tower, [_decode_K(tower, c) for c in arr])


def _morphism(args, phi: DrinfeldModule):
    tw = phi.tower
    if args.u is not None:
        return _hom.hom(phi, _decode_ore(tw, _json_arg(args.u, "--u")))
    if args.a is not None:
        return _hom.hom(phi, _decode_fq_poly(tw, _json_arg(args.a, "--a")))
    return _hom.hom(phi, _decode_K(tw, _json_arg(args.c, "--c")))


def _emit(args, document, pretty_text):
    if args.pretty:
        print(pretty_text)
    else:
        print(json.dumps(document))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_info(args):
    tw = _tower(args)
    phi = _module(tw, args.module)
    char = phi.characteristic()
    doc = {
        "rank": phi.rank,
        "characteristic": _encode_fq_poly(char),
        "height": phi.height(),
        "phi_T": _encode_ore(phi.phi_T()),
    }
    pretty = (f"phi_T: {phi.phi_T()}\nrank: {phi.rank}\n"
              f"characteristic: {char}\nheight: {phi.height()}")
    _emit(args, doc, pretty)


def _cmd_eval(args):
    tw = _tower(args)
    phi = _module(tw, args.module)
    a = _decode_fq_poly(tw, _json_arg(args.a, "--a"))
    image = phi.evaluate(a)
    _emit(args, {"ore": _encode_ore(image)}, str(image))


def _cmd_hom(args):
    tw = _tower(args)
    phi = _module(tw, args.module)
    f = _morphism(args, phi)
    doc = {
        "defining": _encode_ore(f.ore),
        "codomain": [_encode_K(c) for c in f.codomain.coeffs],
        "is_isomorphism": f.is_isomorphism(),
    }
    lines = [f"Defn: {f.ore}", f"Codomain: T |--> {f.codomain.phi_T()}",
             f"Isomorphism: {f.is_isomorphism()}"]
    if f.is_isomorphism():
        inv = f.inverse()
        doc["inverse"] = _encode_ore(inv.ore)
        lines.append(f"Inverse: {inv.ore}")
    _emit(args, doc, "\n".join(lines))


def _cmd_hom_basis(args):
    tw = _tower(args)
    phi = _module(tw, args.module)
    psi = _module(tw, args.codomain)
    basis = _hom.hom_basis(phi, psi, args.degree)
    doc = {"basis": [_encode_ore(f.ore) for f in basis]}
    pretty = "\n".join(str(f.ore) for f in basis) if basis else "(empty)"
    _emit(args, doc, pretty)


def _cmd_an_isogeny(args):
    tw = _tower(args)
    phi = _module(tw, args.module)
    psi = _module(tw, args.codomain)
    f = _hom.an_isogeny(phi, psi)
    if f is None:
        _emit(args, {"isogeny": None}, "None")
    else:
        _emit(args, {"isogeny": _encode_ore(f.ore)}, str(f.ore))


def _cmd_is_isogenous(args):
    tw = _tower(args)
    phi = _module(tw, args.module)
    psi = _module(tw, args.other)
    res = _motive.is_isogenous(phi, psi)
    _emit(args, {"is_isogenous": res}, str(res))


def _cmd_is_isomorphic(args):
    tw = _tower(args)
    phi = _module(tw, args.module)
    psi = _module(tw, args.other)
    res = _is_isomorphic(phi, psi, absolutely=args.absolutely)
    _emit(args, {"is_isomorphic": res}, str(res))


def _cmd_jinv(args):
    tw = _tower(args)
    phi = _module(tw, args.module)
    if args.param is not None:
        raw = _json_arg(args.param, "--param")
        try:
            ks, dd = raw
        except (TypeError, ValueError) as exc:
            raise MalformedInput(f"bad parameter {raw!r}") from exc
        j = phi.j_invariant((tuple(ks), tuple(dd)))
    elif args.k is not None:
        j = phi.j_invariant(args.k)
    else:
        j = phi.j_invariant()
    _emit(args, {"j": _encode_K(j)}, str(j))


def _cmd_jinv_params(args):
    slots = None
    if args.nonzero_slots is not None:
        slots = _json_arg(args.nonzero_slots, "--nonzero-slots")
        if not isinstance(slots, list):
            raise MalformedInput("--nonzero-slots must be an array")
    params = basic_j_invariant_parameters(args.rank, args.q, slots)
    if args.count_only:
        _emit(args, {"count": len(params)}, str(len(params)))
        return
    pairs = [[list(p.ks), list(p.ds) + [p.d]] for p in params]
    pretty = "\n".join(str(p.as_pair()) for p in params) if params else "(empty)"
    _emit(args, {"parameters": pairs}, pretty)


def _cmd_norm(args):
    tw = _tower(args)
    phi = _module(tw, args.module)
    f = _morphism(args, phi)
    value = _motive.norm(f, as_ideal=not args.element)
    doc = {"norm": _encode_fq_poly(value), "as_ideal": not args.element}
    pretty = f"Principal ideal ({value})" if not args.element else str(value)
    _emit(args, doc, pretty)


def _cmd_charpoly(args):
    tw = _tower(args)
    phi = _module(tw, args.module)
    f = _morphism(args, phi)
    cp = _motive.charpoly(f, var=args.var)
    _emit(args, {"charpoly": _encode_charpoly(cp), "var": args.var}, str(cp))


def _cmd_frobenius_charpoly(args):
    tw = _tower(args)
    phi = _module(tw, args.module)
    cp = _motive.frobenius_charpoly(phi, algorithm=args.algorithm)
    _emit(args, {"charpoly": _encode_charpoly(cp), "algorithm": args.algorithm},
          str(cp))


def _analytic_module(args) -> _analytic.AnalyticDrinfeldModule:
    tw = make_tower(args.p, args.s, 1)
    arr = _json_arg(args.module, "module coefficients")
    if not isinstance(arr, list):
        raise MalformedInput("module coefficients must be an array")
    coeffs = [_decode_rational(tw, c) for c in arr]
    return _analytic.AnalyticDrinfeldModule(tw, coeffs)


def _cmd_series(args, which: str):
    phi = _analytic_module(args)
    series = (_analytic.exponential if which == "exp"
              else _analytic.logarithm)(phi)
    coeffs = series.slice(0, args.upto)
    doc = {"coefficients": [_encode_rational(c) for c in coeffs]}
    terms = []
    for e, c in enumerate(coeffs):
        if c.is_zero():
            continue
        zs = "z" if e == 1 else f"z^{e}"
        terms.append(zs if c.is_one() else f"({c})*{zs}")
    pretty = " + ".join(terms) + f" + O(z^{args.upto})"
    _emit(args, doc, pretty)


def _cmd_bench(args):
    grid = _json_arg(args.grid, "--grid")
    if not isinstance(grid, list) or not all(
            isinstance(g, list) and len(g) == 2 for g in grid):
        raise MalformedInput("--grid must be an array of [n, r] pairs")
    algorithms = args.algorithms.split(",")
    d = args.q
    if d < 2:
        raise MalformedInput("--q must be a prime power")
    p = next(c for c in range(2, d + 1) if d % c == 0)
    s = 0
    while d > 1:
        if d % p:
            raise MalformedInput("--q must be a prime power")
        d //= p
        s += 1
    rows = ["n,r,algorithm,median_ms"]
    for n, r in grid:
        tw = make_tower(p, s, n)
        rng = random.Random(args.seed * 1000003 + n * 1009 + r)
        coeffs = [tw.gen_K()]
        for i in range(r):
            coeffs.append(tw._element_from_index(
                rng.randrange(tw.order_K)))
        if coeffs[-1].is_zero():
            coeffs[-1] = tw.one("K")
        phi = DrinfeldModule(tw, coeffs)
        for alg in algorithms:
            times = []
            for _ in range(args.trials):
                t0 = time.perf_counter()
                _motive.frobenius_charpoly(phi, algorithm=alg)
                times.append((time.perf_counter() - t0) * 1000.0)
            rows.append(f"{n},{r},{alg},{statistics.median(times):.3f}")
    print("\n".join(rows))


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="drinfeld",
        description="Exact arithmetic for Drinfeld modules.")
    ap.add_argument("--pretty", action="store_true",
                    help="human-readable output instead of JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("info")
    _add_field_args(sp)
    _add_module_arg(sp)
    sp.set_defaults(func=_cmd_info)

    sp = sub.add_parser("eval")
    _add_field_args(sp)
    _add_module_arg(sp)
    sp.add_argument("--a", required=True)
    sp.set_defaults(func=_cmd_eval)

    sp = sub.add_parser("hom")
    _add_field_args(sp)
    _add_module_arg(sp)
    _add_morphism_args(sp)
    sp.set_defaults(func=_cmd_hom)

    sp = sub.add_parser("hom-basis")
    _add_field_args(sp)
    _add_module_arg(sp)
    _add_module_arg(sp, "--codomain")
    sp.add_argument("--degree", type=int, required=True)
    sp.set_defaults(func=_cmd_hom_basis)

    sp = sub.add_parser("an-isogeny")
    _add_field_args(sp)
    _add_module_arg(sp)
    _add_module_arg(sp, "--codomain")
    sp.set_defaults(func=_cmd_an_isogeny)

    sp = sub.add_parser("is-isogenous")
    _add_field_args(sp)
    _add_module_arg(sp)
    _add_module_arg(sp, "--other")
    sp.set_defaults(func=_cmd_is_isogenous)

    sp = sub.add_parser("is-isomorphic")
    _add_field_args(sp)
    _add_module_arg(sp)
    _add_module_arg(sp, "--other")
    sp.add_argument("--absolutely", action="store_true")
    sp.set_defaults(func=_cmd_is_isomorphic)

    sp = sub.add_parser("jinv")
    _add_field_args(sp)
    _add_module_arg(sp)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--param")
    grp.add_argument("--k", type=int)
    sp.set_defaults(func=_cmd_jinv)

    sp = sub.add_parser("jinv-params")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--nonzero-slots", dest="nonzero_slots")
    sp.add_argument("--count-only", dest="count_only", action="store_true")
    sp.set_defaults(func=_cmd_jinv_params)

    sp = sub.add_parser("norm")
    _add_field_args(sp)
    _add_module_arg(sp)
    _add_morphism_args(sp)
    sp.add_argument("--element", action="store_true",
                    help="element form (endomorphisms only)")
    sp.set_defaults(func=_cmd_norm)

    sp = sub.add_parser("charpoly")
    _add_field_args(sp)
    _add_module_arg(sp)
    _add_morphism_args(sp)
    sp.add_argument("--var", default="X")
    sp.set_defaults(func=_cmd_charpoly)

    sp = sub.add_parser("frobenius-charpoly")
    _add_field_args(sp)
    _add_module_arg(sp)
    sp.add_argument("--algorithm", choices=["motive", "gekeler"],
                    default="motive")
    sp.set_defaults(func=_cmd_frobenius_charpoly)

    for name in ("exp", "log"):
        sp = sub.add_parser(name)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--s", type=int, default=1)
        _add_module_arg(sp)
        sp.add_argument("--upto", type=int, default=8,
                        help="plain-exponent slice bound")
        sp.set_defaults(func=lambda a, w=name: _cmd_series(a, w))

    sp = sub.add_parser("bench")
    sp.add_argument("--grid", required=True, help="JSON array of [n, r]")
    sp.add_argument("--q", type=int, default=5)
    sp.add_argument("--trials", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--algorithms", default="motive,gekeler")
    sp.set_defaults(func=_cmd_bench)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        args.func(args)
    except MalformedInput as exc:
        print(json.dumps({"code": "malformed", "message": str(exc)}),
              file=sys.stderr)
        return 2
    except DrinfeldError as exc:
        print(json.dumps({"code": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
