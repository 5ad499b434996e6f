"""Command line front end.

    uturn atom --type C --rank 2 --shape 2,1 --weyl "s2 s1"
    uturn key --type C --rank 2 --tableau "[[2b,1],[1]]"
    uturn verify ybe --kind gamma-gamma

Exit status: 0 success, 1 a verification failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import demazure, model, patterns, ybe
from .algebra import to_text
from .demazure import CartanData, pad_partition, rho_monomial
from .weyl import all_elements, parse_weyl, window_text, word_text

KINDS = {"gamma-gamma": "GG", "delta-delta": "DD", "delta-gamma": "DG", "gamma-delta": "GD"}
TARGETS = ("ybe", "reflection", "unitarity", "nonexistence", "kernel", "rq-limit",
           "functional", "theorems", "bijection")
DEFAULT_SEED = 20240


class UsageError(Exception):
    pass


def _shape(text, n):
    try:
        parts = [int(x) for x in text.replace(" ", "").strip("()[]").split(",") if x]
    except ValueError:
        raise UsageError(f"bad partition {text!r}; expected a comma list like 2,1")
    try:
        return pad_partition(parts, n)
    except ValueError as e:
        raise UsageError(str(e))


def _weyl(text, n):
    try:
        return parse_weyl(text, n)
    except ValueError as e:
        raise UsageError(str(e))


def _common(p, weyl=True, shape=True, family=False):
    p.add_argument("--type", choices=("B", "C"), default="C")
    p.add_argument("--rank", type=int, default=2)
    if shape:
        p.add_argument("--shape", default=None, help="partition as a comma list, e.g. 2,1")
    if weyl:
        p.add_argument("--weyl", default="w0", help='window "[2,-1]" or word "s1 s2"')
    if family:
        p.add_argument("--family", choices=("atom", "character"), default="atom")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None, help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="uturn", description="Colored U-turn lattice models "
                                 "for Demazure atoms and characters in types B and C.")
    sub = ap.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("atom", help="z^rho * A_w(z; lambda)"))
    _common(sub.add_parser("character", help="z^rho * D_w(z; lambda)"))
    _common(sub.add_parser("states", help="list admissible states"), family=True)
    _common(sub.add_parser("partition", help="partition function of a model"), family=True)
    _common(sub.add_parser("patterns", help="Proctor patterns with top row lambda"), weyl=False)
    p = sub.add_parser("tableaux", help="King or Sundaram tableaux of shape lambda")
    _common(p, weyl=False)
    p.add_argument("--keys", action="store_true", help="also print the right key")
    p = sub.add_parser("key", help="right key of a tableau or pattern")
    _common(p, weyl=False, shape=False)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--tableau")
    g.add_argument("--pattern")
    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("target", choices=TARGETS)
    p.add_argument("--kind", choices=tuple(KINDS) + ("all",), default="all")
    p.add_argument("--family", choices=("atom", "character", "both"), default="both")
    p.add_argument("--type", choices=("B", "C", "both"), default="both")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None)
    return ap


def _rank(args):
    if args.rank < 1:
        raise UsageError("--rank must be positive")
    return args.rank


def _need_shape(args, n):
    if args.shape is None:
        raise UsageError("--shape is required")
    return _shape(args.shape, n)


def _rho_note(n):
    rho = rho_monomial(n)
    return f"convention: printed values carry the factor z^rho = {to_text(rho)}"


def cmd_polynomial(args, atom):
    n = _rank(args)
    lam, w = _need_shape(args, n), _weyl(args.weyl, n)
    cd = CartanData(args.type, n)
    f = demazure.atom_polynomial(w, lam, cd) if atom else demazure.demazure_polynomial(w, lam, cd)
    val = rho_monomial(n) * f
    z = model.partition_function(model.build_model(lam, w, "atom" if atom else "character",
                                                   args.type))
    checks = [("partition function agrees", z == val, "lattice model sum equals the operator value")]
    inputs = {"type": args.type, "rank": n, "shape": list(lam), "weyl": word_text(w)}
    return inputs, to_text(val), _rho_note(n) + "\n" + to_text(val), checks


def cmd_states(args):
    n = _rank(args)
    lam, w = _need_shape(args, n), _weyl(args.weyl, n)
    m = model.build_model(lam, w, args.family, args.type)
    states = model.enumerate_states(m)
    inputs = {**m.describe()}
    result = [model.state_to_json(m, s) for s in states]
    return inputs, result, model.dump_states(m, "text"), []


def cmd_partition(args):
    n = _rank(args)
    lam, w = _need_shape(args, n), _weyl(args.weyl, n)
    m = model.build_model(lam, w, args.family, args.type)
    z = model.partition_function(m)
    cd = CartanData(args.type, n)
    op = demazure.atom_polynomial if args.family == "atom" else demazure.demazure_polynomial
    ok = z == rho_monomial(n) * op(w, lam, cd)
    checks = [("operator agreement", ok, f"Z equals z^rho times the {args.family} polynomial")]
    nstates = len(model.enumerate_states(m))
    text = f"{_rho_note(n)}\nstates: {nstates}\nZ = {to_text(z)}"
    return m.describe(), {"states": nstates, "value": to_text(z)}, text, checks


def cmd_patterns(args):
    n = _rank(args)
    lam = _need_shape(args, n)
    pats = patterns.enumerate_patterns(lam, args.type, n)
    result = [{"pattern": p.to_json(), "weight": to_text(patterns.pattern_weight(p))}
              for p in pats]
    lines = [f"# {len(pats)} patterns"] + [f"{p}  {to_text(patterns.pattern_weight(p))}"
                                          for p in pats]
    return {"type": args.type, "rank": n, "shape": list(lam)}, result, "\n".join(lines), []


def cmd_tableaux(args):
    n = _rank(args)
    lam = _need_shape(args, n)
    result, lines = [], []
    for p in patterns.enumerate_patterns(lam, args.type, n):
        t = patterns.pattern_to_tableau(p, args.type)
        item = {"tableau": t.to_json(), "weight": to_text(patterns.pattern_weight(p))}
        line = f"{t}  {item['weight']}"
        if args.keys:
            k = word_text(patterns.compute_key(p, args.type).w)
            item["key"] = k
            line += f"  key {k}"
        result.append(item)
        lines.append(line)
    lines.insert(0, f"# {len(result)} tableaux")
    return {"type": args.type, "rank": n, "shape": list(lam)}, result, "\n".join(lines), []


def cmd_key(args):
    n = _rank(args)
    try:
        if args.tableau:
            obj = patterns.parse_tableau(args.tableau, n)
            if not patterns.validate_tableau(obj):
                raise ValueError(f"invalid tableau {args.tableau}")
        else:
            obj = patterns.parse_pattern(args.pattern)
            if obj.n != n or not patterns.validate_pattern(obj, args.type):
                raise ValueError(f"invalid pattern {args.pattern}")
    except (ValueError, json.JSONDecodeError) as e:
        raise UsageError(str(e))
    res = patterns.compute_key(obj, args.type)
    inputs = {"type": args.type, "rank": n, "tableau": args.tableau, "pattern": args.pattern}
    return inputs, {"word": word_text(res.w), "window": window_text(res.w)}, word_text(res.w), []


# verify targets

def _families(args):
    return ("atom", "character") if args.family == "both" else (args.family,)


def _types(args):
    return ("B", "C") if args.type == "both" else (args.type,)


def v_ybe(args):
    kinds = ("GG", "DD", "DG") if args.kind == "all" else (KINDS[args.kind],)
    out = []
    for k in kinds:
        for fam in _families(args):
            # GD is expected to fail; the nonexistence target refutes it properly
            bad = ybe.ybe_discrepancies(k, fam)
            out.append((f"ybe {k} {fam}", not bad, f"{len(bad)} boundaries differ"))
    return out


def v_reflection(args):
    return [(f"reflection {t} {fam}", ybe.verify_reflection_equation(fam, t),
             "LHS = zi^-2 RHS on every boundary")
            for t in _types(args) for fam in _families(args)]


def v_unitarity(args):
    out = []
    for k in ("GG", "DD"):
        for fam in _families(args):
            try:
                beta = ybe.verify_unitarity(k, fam)
                out.append((f"unitarity {k} {fam}", True, f"beta = {beta}"))
            except AssertionError as e:
                out.append((f"unitarity {k} {fam}", False, str(e)))
    return out


def v_nonexistence(args):
    rng = random.Random(args.seed)
    out = []
    for fam in _families(args):
        frees = [ybe.DEFAULT_FREE] + [ybe.random_free(rng) for _ in range(5)]
        for free in frees:
            try:
                c = ybe.refute_gamma_delta_ybe(free, fam)
                out.append((f"GD counterexample {fam} free={free}", True,
                            f"boundary {c['boundary']}: {c['lhs']} != {c['rhs']}"))
            except AssertionError as e:
                out.append((f"GD counterexample {fam} free={free}", False, str(e)))
    return out


def v_kernel(args):
    rng = random.Random(args.seed)
    want = {"GG": 1, "DD": 1, "DG": 1, "GD": 0}
    kinds = tuple(want) if args.kind == "all" else (KINDS[args.kind],)
    out = []
    for k in kinds:
        dim, pts = ybe.generic_kernel_dimension(k, rng)
        out.append((f"kernel {k}", dim == want[k],
                    f"dimension {dim} at {[tuple(map(str, p)) for p in pts]}, expected {want[k]}"))
        if k == "GD":
            red = [ybe.constrained_kernel_dimension(k, p) for p in pts]
            out.append(("kernel GD constrained", red == [0, 0],
                        f"dimension {red} after dropping slots absent from every equation"))
    if "GG" in kinds:
        out.append(("kernel GG matches table", ybe.kernel_matches_table("GG"), "up to scalar"))
    return out


def v_rq(args):
    rep = ybe.rq_limit_report()
    return [("rq limit", not rep["limit_mismatches"],
             f"{len(rep['limit_mismatches'])} entries differ from the atom GG table"),
            ("rq transpose", not rep["transpose_mismatches"],
             f"{len(rep['transpose_mismatches'])} entries differ between GG^t and DD")]


def v_functional(args):
    n = _rank(args)
    out = []
    for t in _types(args):
        for fam in _families(args):
            bad = 0
            total = 0
            for lam in ((1, 0), (1, 1), (2, 1)):
                lam = pad_partition(lam[:n] if n < 2 else lam, n)
                for rel, w, i in model.admissible_steps(n):
                    total += 1
                    if not model.verify_functional_equation(rel, fam, lam, w, i, t):
                        bad += 1
            out.append((f"functional equations {t} {fam}", bad == 0, f"{total - bad}/{total} hold"))
    return out


def v_theorems(args):
    n = _rank(args)
    out = []
    for t in _types(args):
        cd = CartanData(t, n)
        bad = total = 0
        for lam in _small_partitions(n, 4):
            for w in all_elements(n):
                total += 1
                za = model.partition_function(model.build_model(lam, w, "atom", t))
                zc = model.partition_function(model.build_model(lam, w, "character", t))
                rho = rho_monomial(n)
                ok = (za == rho * demazure.atom_polynomial(w, lam, cd)
                      and zc == rho * demazure.demazure_polynomial(w, lam, cd)
                      and zc == model.sum_of_atoms(lam, w, t))
                bad += not ok
        out.append((f"atom and character theorems {t}", bad == 0, f"{total - bad}/{total} hold"))
    return out


def v_bijection(args):
    n = _rank(args)
    out = []
    for t in _types(args):
        msgs = []
        for lam in _small_partitions(n, 4):
            msgs += patterns.verify_bijection(lam, t, n)
        out.append((f"pattern and tableau bijections {t}", not msgs, "; ".join(msgs[:3]) or "exhaustive"))
    return out


def _small_partitions(n, size):
    from itertools import product
    return [lam for lam in product(range(size + 1), repeat=n)
            if sum(lam) <= size and all(lam[k] >= lam[k + 1] for k in range(n - 1))]


VERIFY = {"ybe": v_ybe, "reflection": v_reflection, "unitarity": v_unitarity,
          "nonexistence": v_nonexistence, "kernel": v_kernel, "rq-limit": v_rq,
          "functional": v_functional, "theorems": v_theorems, "bijection": v_bijection}


def cmd_verify(args):
    checks = VERIFY[args.target](args)
    inputs = {"target": args.target, "kind": args.kind, "family": args.family,
              "type": args.type, "seed": args.seed}
    ok = all(c[1] for c in checks)
    text = "\n".join(f"{'PASS' if c[1] else 'FAIL'} {c[0]}: {c[2]}" for c in checks)
    return inputs, "pass" if ok else "fail", text, checks


COMMANDS = {
    "atom": lambda a: cmd_polynomial(a, True),
    "character": lambda a: cmd_polynomial(a, False),
    "states": cmd_states,
    "partition": cmd_partition,
    "patterns": cmd_patterns,
    "tableaux": cmd_tableaux,
    "key": cmd_key,
    "verify": cmd_verify,
}


def run_command(argv) -> tuple[int, str]:
    """Run one command; returns (exit code, output text).

    With --output the text is also written to that file.
    """
    code, out, _ = _execute(argv)
    return code, out


def _execute(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0), "", None
    try:
        inputs, result, text, checks = COMMANDS[args.command](args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"uturn: error: {e}", file=sys.stderr)
        return 2, "", None
    code = 0 if all(c[1] for c in checks) else 1
    if args.format == "json":
        out = json.dumps({"command": args.command, "inputs": inputs, "result": result,
                          "checks": [{"name": c[0], "pass": bool(c[1]), "detail": c[2]}
                                     for c in checks]}, indent=2, sort_keys=True)
    else:
        out = text
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    return code, out, args.output


def main(argv=None) -> int:
    code, out, dest = _execute(sys.argv[1:] if argv is None else argv)
    if out and not dest:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
