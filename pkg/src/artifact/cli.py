"""Command-line front end.  Every command prints JSON on stdout.

Exit codes: 0 on success, 1 when ``verify`` finds a failing suite, 2 on
usage errors or malformed input.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from typing import Callable, Optional, Sequence

from . import classifier, cycles, numerics, weights


class UsageError(Exception):
    pass


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _parse_weight(dyn: weights.DynkinType, text: str) -> weights.WeightVector:
    if text.replace(",", " ").replace("-", "").replace(" ", "").isdigit():
        coords = [int(x) for x in text.replace(",", " ").split()]
        return weights.WeightVector(tuple(coords), dyn)
    return weights.named_weight(dyn, text)


# --- commands ----------------------------------------------------------------

def cmd_orbit(args) -> int:
    dyn = weights.DynkinType.parse(args.type)
    w = _parse_weight(dyn, args.weight)
    _dump(weights.weyl_orbit(dyn, w).to_json())
    return 0


def _cycle_from(args) -> cycles.CleanCycle:
    n = args.n
    if n is None or n < 1:
        raise UsageError("--n must be a positive integer")
    op = args.op
    if op == "free":
        return cycles.CleanCycle.of(cycles.free_fiber(n, args.symmetric))
    if op in ("wedge", "sym-wedge"):
        alpha = tuple(int(x) for x in (args.alpha or "").split(",") if x.strip())
        if not alpha:
            raise UsageError("--alpha is required, e.g. --alpha 1,1")
        if op == "wedge":
            return cycles.wedge_alpha(cycles.free_fiber(n, args.symmetric), alpha)
        return cycles.sym_wedge_alpha(cycles.free_fiber(n, True), alpha)
    if op in ("halfspin+", "halfspin-"):
        plus, minus = cycles.half_spin_split(cycles.free_fiber(n, True))
        return plus if op == "halfspin+" else minus
    raise UsageError(f"unknown cycle op {op!r}")


def cmd_cycle(args) -> int:
    c = _cycle_from(args)
    if args.scale is not None:
        c = cycles.scale_pushforward(c, args.scale)
    out = c.to_json()
    out["degree"] = str(c.degree)
    _dump(out)
    return 0


def cmd_euler_ci(args) -> int:
    if args.g is None or args.divisors is None:
        raise UsageError("euler-ci needs --g and --divisors")
    rows = _load_json(args.divisors)
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise UsageError("divisors file must hold a list of integer rows")
    model = numerics.EllipticProductModel(args.g, tuple(tuple(r) for r in rows))
    e = numerics.euler_complete_intersection(model)
    d = args.g - model.r
    report = numerics.euler_bounds(args.g, d, "complete_intersection", e)
    if not model.ample:
        report.violated.clear()
    _dump({"e": e, "abs_e": abs(e), "ample": model.ample,
           "bounds": report.to_json(), "violations": list(report.violated)})
    return 0


def cmd_bounds(args) -> int:
    if args.g is None or args.d is None:
        raise UsageError("bounds needs --g and --d")
    _dump(numerics.euler_bounds(args.g, args.d, args.kind, args.e).to_json())
    return 0


def cmd_classify(args) -> int:
    if args.input:
        data = _load_json(args.input)
        if not isinstance(data, dict):
            raise UsageError("descriptor must be a JSON object")
    else:
        if args.g is None or args.d is None or args.e is None:
            raise UsageError("classify needs --input or --g, --d and --e")
        data = {"g": args.g, "d": args.d, "e": args.e}
    desc = classifier.SubvarietyDescriptor.from_json(data)
    _dump(classifier.bigness_verdict(desc).to_json())
    return 0


# --- verify ------------------------------------------------------------------

def _suite_orbit(max_n: int) -> bool:
    ok = True
    for n in range(1, max_n + 1):
        dyn = weights.DynkinType("A", n)
        for r in range(n + 2):
            w = weights.named_weight(dyn, f"wedge:{r}")
            ok &= weights.weyl_orbit(dyn, w).dim == math.comb(n + 1, r)
    for n in range(2, max_n + 1):
        b = weights.DynkinType("B", n)
        ok &= weights.weyl_orbit(b, weights.named_weight(b, "spin")).dim == 2 ** n
        c = weights.DynkinType("C", n)
        ok &= weights.weyl_orbit(c, weights.named_weight(c, "standard")).dim == 2 * n
    for n in range(3, max_n + 1):
        d = weights.DynkinType("D", n)
        ok &= weights.weyl_orbit(d, weights.named_weight(d, "standard")).dim == 2 * n
        for s in ("halfspin+", "halfspin-"):
            ok &= weights.weyl_orbit(d, weights.named_weight(d, s)).dim == 2 ** (n - 1)
    return ok


def _suite_wedge(max_n: int) -> bool:
    ok = True
    for n in range(1, max_n + 1):
        f = cycles.free_fiber(n)
        for r in range(1, n + 1):
            ok &= cycles.wedge_alpha(f, (1,) * r).degree == math.comb(n, r)
            ok &= sum(cycles.wedge_alpha_raw(f, (1,) * r).values()) == cycles.raw_wedge_degree(n, r)
    return ok


def _suite_spin(max_n: int) -> bool:
    ok = True
    for n in range(1, max_n + 1):
        f = cycles.free_fiber(n, True)
        for r in range(1, n + 1):
            ok &= cycles.sym_wedge_alpha(f, (1,) * r).degree == 2 ** r * math.comb(n, r)
        if n >= 2:
            plus, minus = cycles.half_spin_split(f)
            top = cycles.sym_wedge_alpha(f, (1,) * n)
            ok &= plus.degree == minus.degree == 2 ** (n - 1)
            ok &= not (plus.support() & minus.support())
            ok &= (plus + minus).fiber_cycle() == top.fiber_cycle()
    return ok


def _suite_halfspin(max_n: int) -> bool:
    return all(cycles.half_spin_identity_check(n) for n in range(2, max_n + 1))


def _suite_support(max_n: int) -> bool:
    return all(cycles.support_inclusion_check(cycles.free_fiber(n, True), n)
               for n in range(2, max_n + 1))


def _suite_euler(max_n: int) -> bool:
    rng = random.Random(0)
    ok = True
    for _ in range(50):
        g = rng.randint(2, max(2, min(max_n, 6)))
        r = rng.randint(1, g - 1)
        rows = tuple(tuple(rng.randint(1, 3) for _ in range(g)) for _ in range(r))
        model = numerics.EllipticProductModel(g, rows)
        e = numerics.euler_complete_intersection(model)
        ok &= e % 2 == 0 and abs(e) >= numerics.ci_lower_bound(g, g - r)
    return ok


def _suite_tensor(max_n: int) -> bool:
    ok = True
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
        for n in range(lo, max_n + 1):
            dyn = weights.DynkinType(fam, n)
            orbits = [weights.weyl_orbit(dyn, w) for w in weights.minuscule_weights(dyn)]
            for i, a in enumerate(orbits):
                for b in orbits[i:]:
                    ok &= not weights.is_minuscule(dyn, weights.tensor_weights(a, b))
    return ok


def _suite_curve(max_n: int) -> bool:
    ok = True
    for genus in range(2, max(2, max_n) + 1):
        top = 2 * genus - 2
        for i in range(top + 1):
            d = cycles.curve_wedge_dim(genus, i)
            ok &= d == cycles.curve_wedge_dim(genus, top - i)
            ok &= i > genus - 1 or d == i
    return ok


SUITES: dict[str, tuple[Callable[[int], bool], int]] = {
    "orbit": (_suite_orbit, 8),
    "wedge": (_suite_wedge, 8),
    "spin": (_suite_spin, 6),
    "halfspin": (_suite_halfspin, 6),
    "support": (_suite_support, 5),
    "euler": (_suite_euler, 6),
    "tensor": (_suite_tensor, 5),
    "curve": (_suite_curve, 10),
}


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite in (None, "all") else [args.suite]
    if any(n not in SUITES for n in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)} or all")
    results = []
    for name in names:
        fn, default_n = SUITES[name]
        n = args.max_n if args.max_n is not None else default_n
        t0 = time.perf_counter()
        ok = bool(fn(n))
        results.append({"suite": name, "max_n": n, "passed": ok,
                        "seconds": round(time.perf_counter() - t0, 3)})
    _dump({"passed": all(r["passed"] for r in results), "suites": results})
    return 0 if all(r["passed"] for r in results) else 1


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artifact", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    o = sub.add_parser("orbit", help="Weyl orbit of a dominant weight")
    o.add_argument("--type", required=True, help="Dynkin type, e.g. A3, B4, D6")
    o.add_argument("--weight", required=True,
                   help="standard, spin, halfspin+, halfspin-, wedge:r, or doubled coords '2,2,0,0'")
    o.set_defaults(func=cmd_orbit)

    c = sub.add_parser("cycle", help="clean cycles on the free generic fiber")
    c.add_argument("op", choices=["free", "wedge", "sym-wedge", "halfspin+", "halfspin-"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--alpha", help="comma-separated integer tuple")
    c.add_argument("--symmetric", action="store_true")
    c.add_argument("--scale", type=int, help="apply [m]_* to the result")
    c.set_defaults(func=cmd_cycle)

    e = sub.add_parser("euler-ci", help="Euler characteristic of a complete intersection")
    e.add_argument("--g", type=int)
    e.add_argument("--divisors", help="JSON file with the divisor rows")
    e.set_defaults(func=cmd_euler_ci)

    b = sub.add_parser("bounds", help="lower bounds on |e|")
    b.add_argument("--g", type=int)
    b.add_argument("--d", type=int)
    b.add_argument("--e", type=int)
    b.add_argument("--kind", default="ample_normal_bundle", choices=numerics.KINDS)
    b.set_defaults(func=cmd_bounds)

    k = sub.add_parser("classify", help="big / not big verdict for a descriptor")
    k.add_argument("--input", help="descriptor JSON file")
    k.add_argument("--g", type=int)
    k.add_argument("--d", type=int)
    k.add_argument("--e", type=int)
    k.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="run the invariant suites")
    v.add_argument("--suite", default="all")
    v.add_argument("--max-n", type=int, dest="max_n")
    v.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
