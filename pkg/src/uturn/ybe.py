"""R-matrices, K-matrices and the local identities behind solvability.

An R-matrix entry is keyed by the spins at its four corners in the order
(BL, TL, TR, BR).  The line BL -> TR carries z_i and the line TL -> BR
carries z_j.  Every printed weight is a linear form x*z_i + y*z_j, stored
as the integer pair (x, y) so that it can be evaluated at any pair of
parameters (polynomials, inverses, or rationals).

Spins follow module ``model``: 0 empty, +j for c_j, -j for its bar.  With
n = 2 the four colors u > u' > u'b > ub are 1 > 2 > -2 > -1.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .algebra import LaurentPolynomial, constant, variables
from .model import delta_label, gamma_label, k_label, spin_key

KINDS = ("GG", "DD", "DG", "GD")
ZNAMES = ("zi", "zj")

ZI = (1, 0)
ZJ = (0, 1)
ZI_MINUS_ZJ = (1, -1)
MINUS_ZI = (-1, 0)


def spin_set(ncolors: int = 4) -> tuple[int, ...]:
    """0 plus ``ncolors`` colors, in increasing internal order."""
    colors = {1: (1,), 2: (1, -1), 3: (1, 2, -2), 4: (1, 2, -2, -1)}[ncolors]
    n = 2 if ncolors > 2 else 1
    return (0,) + tuple(sorted(colors, key=lambda s: spin_key(s, n)))


def _gt_for(spins):
    n = max(abs(s) for s in spins) if len(spins) > 1 else 1
    return lambda a, b: spin_key(a, n) > spin_key(b, n)


def conserving(kind, bl, tl, tr, br) -> bool:
    """Paths run left to right on Gamma lines and right to left on Delta lines."""
    if kind in ("GG", "DD"):
        return sorted((bl, tl)) == sorted((tr, br))
    return sorted((tr, tl)) == sorted((bl, br))


def _entry(kind, family, bl, tl, tr, br, gt, free, printed=False):
    """Weight form of one R entry, or None when it is zero.

    For the character family the DG lift entry is reversed to (c, c, c', c')
    unless ``printed`` asks for the table exactly as drawn for atoms.
    """
    if not conserving(kind, bl, tl, tr, br):
        return None
    if kind == "GG":
        if bl == tl == tr == br:
            return ZI if bl else ZJ
        if bl == 0 and tl != 0:
            return ZJ if (tr, br) == (tl, 0) else None
        if tl == 0 and bl != 0:
            return ZI_MINUS_ZJ if (tr, br) == (bl, 0) else ZI
        # two distinct colors
        hi = gt(tl, bl)
        if (tr, br) == (tl, bl):      # crossing straight through
            if family == "atom":
                return ZI if hi else ZJ
            return ZJ if hi else ZI
        # (tr, br) == (bl, tl): both bounce
        return ZI_MINUS_ZJ if not hi else None
    if kind == "DD":
        if bl == tl == tr == br:
            return ZI if bl else ZJ
        if bl == 0 and tl != 0:
            return ZI if (tr, br) == (tl, 0) else ZI_MINUS_ZJ
        if tl == 0 and bl != 0:
            return ZJ if (tr, br) == (0, bl) else None
        hi = gt(tl, bl)
        if (tr, br) == (tl, bl):
            if family == "atom":
                return ZJ if hi else ZI
            return ZI if hi else ZJ
        return ZI_MINUS_ZJ if not hi else None
    # mixed kinds: conservation {TR, TL} = {BL, BR}
    table = {
        "DG": {"0000": ZI_MINUS_ZJ, "00dd": ZI, "d0d0": ZJ, "0d0d": ZJ, "dd00": ZJ,
               "lift": ZJ, "cross": ZJ, "dddd": ZJ},
        "GD": {"0000": MINUS_ZI, "00dd": ZJ, "d0d0": ZI, "0d0d": ZI, "dd00": ZI,
               "lift": free[0], "cross": free[1], "dddd": ZI_MINUS_ZJ},
    }[kind]
    zeros = (bl == 0, tl == 0, tr == 0, br == 0)
    if all(zeros):
        return table["0000"]
    if not any(zeros):
        if bl == tl == tr == br:
            return table["dddd"]
        # two distinct colors c > c'
        if bl == tl and tr == br:
            up = gt(tr, bl)
            if kind == "DG" and family == "character" and not printed:
                up = not up
            return table["lift"] if up else None    # (c', c', c, c)
        if bl == tr and tl == br and gt(tl, bl):
            return table["cross"]      # (c', c, c', c)
        return None
    pattern = "".join("0" if z else "d" for z in zeros)
    return table.get(pattern)


DEFAULT_FREE = (ZI, ZI_MINUS_ZJ)


@lru_cache(maxsize=None)
def r_table(kind: str, family: str = "atom", spins: tuple = None, free=DEFAULT_FREE,
            printed: bool = False) -> dict:
    """Nonzero entries {(BL, TL, TR, BR): (x, y)} over the spin set."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    spins = spins or spin_set(4)
    gt = _gt_for(spins)
    out = {}
    for q in product(spins, repeat=4):
        f = _entry(kind, family, *q, gt, free, printed)
        if f is not None and f != (0, 0):
            out[q] = f
    return out


def form_value(form, x, y):
    a, b = form
    return a * x + b * y


def r_matrix(kind, family="atom", spins=None, free=DEFAULT_FREE) -> dict:
    """Entries as polynomials in (zi, zj)."""
    zi, zj = variables(2, names=ZNAMES)
    return {k: form_value(f, zi, zj) for k, f in r_table(kind, family, spins, free).items()}


# lattice vertices used in the RLL relation

@lru_cache(maxsize=None)
def l_table(row: str, family: str, spins: tuple) -> dict:
    """{(l, t): [(r, b, z-exponent)]} for a Gamma ('G') or Delta ('D') vertex."""
    gt = _gt_for(spins)
    out: dict = {}
    for l, t, r, b in product(spins, repeat=4):
        fn = gamma_label if row == "G" else delta_label
        res = fn(l, t, r, b, gt, family)
        if res is not None:
            out.setdefault((l, t), []).append((r, b, res[1]))
    return out


def _by_input(table):
    out: dict = {}
    for (bl, tl, tr, br), f in table.items():
        out.setdefault((bl, tl), []).append((tr, br, f))
    return out


def rll_sides(kind, family, spins, zi, zj, free=DEFAULT_FREE, printed=False):
    """Both three-vertex partition functions for every boundary.

    Returns (lhs, rhs) as dicts keyed by (a, b, c, d, e, f): a, b on the
    left (z_i line below), c on top, d, e on the right (z_i line above),
    f on the bottom.
    """
    phi = l_table(kind[0], family, spins)
    theta = l_table(kind[1], family, spins)
    rin = _by_input(r_table(kind, family, spins, free, printed))
    lhs: dict = {}
    rhs: dict = {}

    def add(d, key, val):
        s = d.get(key)
        d[key] = val if s is None else s + val

    for a, b, c in product(spins, repeat=3):
        # R first, then the column
        for x, y, f in rin.get((a, b), ()):
            rw = form_value(f, zi, zj)
            for d, m, e1 in phi.get((x, c), ()):
                for e, ff, e2 in theta.get((y, m), ()):
                    add(lhs, (a, b, c, d, e, ff), rw * zi ** e1 * zj ** e2)
        # column first, then R
        for x2, m2, e2 in theta.get((b, c), ()):
            for y2, ff, e1 in phi.get((a, m2), ()):
                for d, e, f in rin.get((y2, x2), ()):
                    add(rhs, (a, b, c, d, e, ff), zj ** e2 * zi ** e1 * form_value(f, zi, zj))
    return lhs, rhs


def _poly_z():
    return variables(2, names=ZNAMES)


def ybe_discrepancies(kind, family="atom", ncolors=4, free=DEFAULT_FREE,
                      printed=False) -> dict:
    zi, zj = _poly_z()
    spins = spin_set(ncolors)
    lhs, rhs = rll_sides(kind, family, spins, zi, zj, free, printed)
    out = {}
    for key in set(lhs) | set(rhs):
        diff = lhs.get(key, 0) - rhs.get(key, 0)
        if isinstance(diff, int):
            diff = constant(diff, ZNAMES)
        if not diff.is_zero():
            out[key] = diff
    return out


def verify_ybe(kind: str, family: str = "atom", ncolors: int = 4) -> bool:
    if kind not in ("GG", "DD", "DG"):
        raise ValueError("the Yang-Baxter equation is claimed for GG, DD and DG")
    return not ybe_discrepancies(kind, family, ncolors)


def random_free(rng: random.Random):
    def form():
        while True:
            f = (rng.randint(-5, 5), rng.randint(-5, 5))
            if f != (0, 0):
                return f
    return (form(), form())


def refute_gamma_delta_ybe(free=DEFAULT_FREE, family="atom", ncolors=4):
    """A boundary where the two sides of the GD relation differ, with both values."""
    bad = ybe_discrepancies("GD", family, ncolors, free)
    if not bad:
        raise AssertionError("no counterexample found for the GD relation")
    key = min(bad, key=lambda k: tuple(spin_key(s, 2) for s in k))
    zi, zj = _poly_z()
    lhs, rhs = rll_sides("GD", family, spin_set(ncolors), zi, zj, free)
    return {"boundary": key, "lhs": lhs.get(key, constant(0, ZNAMES)),
            "rhs": rhs.get(key, constant(0, ZNAMES))}


LOOP_BOUNDARY = (0, 0, 0, 1, 1, 0)


def loop_sides(ncolors: int, family="atom", free=DEFAULT_FREE, boundary=LOOP_BOUNDARY):
    """Both sides of the GD relation on a boundary that lets a closed loop of
    any color form on the right-hand side; that side then counts colors."""
    zi, zj = _poly_z()
    lhs, rhs = rll_sides("GD", family, spin_set(ncolors), zi, zj, free)
    zero = constant(0, ZNAMES)
    return lhs.get(boundary, zero), rhs.get(boundary, zero)


# unitarity

def unitarity_products(kind, family="atom", ncolors=4) -> dict:
    """{(a, b, a2, b2): sum over x, y of R(zi, zj) R(zj, zi)}."""
    zi, zj = _poly_z()
    spins = spin_set(ncolors)
    rin = _by_input(r_table(kind, family, spins))
    out: dict = {}
    for a, b in product(spins, repeat=2):
        # first crossing: BL = b, TL = a
        for x, y, f1 in rin.get((b, a), ()):
            for a2, b2, f2 in rin.get((y, x), ()):
                key = (a, b, a2, b2)
                val = form_value(f1, zi, zj) * form_value(f2, zj, zi)
                out[key] = out.get(key, 0) + val
    return {k: v for k, v in out.items() if not v.is_zero()}


def verify_unitarity(kind: str, family: str = "atom", ncolors: int = 4) -> LaurentPolynomial:
    """Return beta with R(zi, zj) R(zj, zi) = beta * identity; raise otherwise."""
    if kind not in ("GG", "DD"):
        raise ValueError("unitarity is checked for GG and DD")
    prods = unitarity_products(kind, family, ncolors)
    spins = spin_set(ncolors)
    beta = None
    for a, b in product(spins, repeat=2):
        v = prods.get((a, b, a, b))
        if v is None:
            raise AssertionError(f"unitarity fails: zero diagonal at {(a, b)}")
        if beta is None:
            beta = v
        elif v != beta:
            raise AssertionError(f"unitarity fails: {v} != {beta} at {(a, b)}")
    off = [k for k in prods if (k[0], k[1]) != (k[2], k[3])]
    if off:
        raise AssertionError(f"unitarity fails off the diagonal at {off[0]}")
    return beta


# reflection equation

def k_value(top, bottom, z, family, cartan):
    lab = k_label(top, bottom, family)
    if lab is None:
        return None
    if lab == "k1":
        zi = z ** -1
        return zi * zi + (zi if cartan == "B" else 0)
    return constant(1, z.names)


def reflection_sides(family="atom", cartan="C") -> tuple[dict, dict]:
    """Both sides of the reflection equation for every boundary (a, b, c, d).

    a and b sit on the upper left, c and d on the lower left.  The left side
    is R^DD(1/zi, 1/zj), then R^DG(1/zi, zj), then the two U-turns; the
    right side is R^GG(zj, zi), then R^DG(1/zj, zi), then the U-turns.
    """
    zi, zj = _poly_z()
    zin, zjn = zi ** -1, zj ** -1
    spins = spin_set(4)
    dd = r_table("DD", family, spins)
    dg = _by_input(r_table("DG", family, spins))
    gg = r_table("GG", family, spins)
    lhs: dict = {}
    rhs: dict = {}

    def kv(t, b, z):
        return k_value(t, b, z, family, cartan)

    for (d, c, q, p), f1 in dd.items():
        w1 = form_value(f1, zin, zjn)
        for b in spins:
            for t, s, f2 in dg.get((q, b), ()):
                kj = kv(s, p, zj)
                if kj is None:
                    continue
                w2 = form_value(f2, zin, zj)
                for a in spins:
                    ki = kv(a, t, zi)
                    if ki is None:
                        continue
                    key = (a, b, c, d)
                    lhs[key] = lhs.get(key, 0) + w1 * w2 * kj * ki
    for (b, a, y, x), f3 in gg.items():
        w3 = form_value(f3, zj, zi)
        for c in spins:
            for s, r, f4 in dg.get((c, x), ()):
                kj = kv(y, s, zj)
                if kj is None:
                    continue
                w4 = form_value(f4, zjn, zi)
                for d in spins:
                    ki = kv(r, d, zi)
                    if ki is None:
                        continue
                    key = (a, b, c, d)
                    rhs[key] = rhs.get(key, 0) + w3 * w4 * kj * ki
    clean = lambda dct: {k: v for k, v in dct.items() if not v.is_zero()}
    return clean(lhs), clean(rhs)


def reflection_failures(family="atom", cartan="C") -> dict:
    zi, _ = _poly_z()
    alpha = zi ** -2
    lhs, rhs = reflection_sides(family, cartan)
    zero = constant(0, ZNAMES)
    bad = {}
    for key in set(lhs) | set(rhs):
        l, r = lhs.get(key, zero), rhs.get(key, zero)
        if l != alpha * r:
            bad[key] = (l, r)
    return bad


def verify_reflection_equation(family: str = "atom", cartan: str = "C") -> bool:
    return not reflection_failures(family, cartan)


# kernel of RLL - LLR in the unknown R entries

def kernel(rows, ncols):
    """Exact null space of a list of sparse rational rows {col: value}."""
    pivots: dict = {}     # pivot column -> reduced row
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        for p in sorted(pivots):
            if p in row:
                c = row[p]
                for k, v in pivots[p].items():
                    row[k] = row.get(k, 0) - c * v
                row = {k: v for k, v in row.items() if v}
        if not row:
            continue
        p = min(row)
        inv = 1 / Fraction(row[p])
        row = {k: v * inv for k, v in row.items()}
        for q, other in pivots.items():
            if p in other:
                c = other[p]
                for k, v in row.items():
                    other[k] = other.get(k, 0) - c * v
                pivots[q] = {k: v for k, v in other.items() if v}
        pivots[p] = row
        if len(pivots) == ncols:
            break
    free = [k for k in range(ncols) if k not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for p, row in pivots.items():
            vec[p] = -row.get(f, 0)
        basis.append(vec)
    return basis


def rll_system(kind, family, spins, zi, zj):
    """Unknowns and sparse equations of RLL - LLR = 0 at a rational point."""
    slots = [q for q in product(spins, repeat=4) if conserving(kind, *q)]
    index = {q: k for k, q in enumerate(slots)}
    phi = l_table(kind[0], family, spins)
    theta = l_table(kind[1], family, spins)
    eqs: dict = {}
    for a, b, c in product(spins, repeat=3):
        for x, y in product(spins, repeat=2):
            u = index.get((a, b, x, y))
            if u is None:
                continue
            for d, m, e1 in phi.get((x, c), ()):
                for e, f, e2 in theta.get((y, m), ()):
                    row = eqs.setdefault((a, b, c, d, e, f), {})
                    row[u] = row.get(u, 0) + zi ** e1 * zj ** e2
        for x2, m2, e2 in theta.get((b, c), ()):
            for y2, f, e1 in phi.get((a, m2), ()):
                for d, e in product(spins, repeat=2):
                    u = index.get((y2, x2, d, e))
                    if u is None:
                        continue
                    row = eqs.setdefault((a, b, c, d, e, f), {})
                    row[u] = row.get(u, 0) - zj ** e2 * zi ** e1
    return slots, list(eqs.values())


def solve_rll_kernel(kind, point=(2, 3), ncolors=4, family="atom"):
    """(dimension, basis, slots) of the R entries solving RLL = LLR at ``point``."""
    zi, zj = (Fraction(x) for x in point)
    if zi == zj or zi == 0 or zj == 0:
        raise ValueError("need distinct nonzero parameters")
    spins = spin_set(ncolors)
    slots, rows = rll_system(kind, family, spins, zi, zj)
    basis = kernel(rows, len(slots))
    return len(basis), basis, slots


def unconstrained_slots(kind, point=(2, 3), ncolors=4, family="atom") -> list:
    """R entries that never occur in RLL = LLR; each spans a kernel line on its own."""
    zi, zj = (Fraction(x) for x in point)
    slots, rows = rll_system(kind, family, spin_set(ncolors), zi, zj)
    used = {k for row in rows for k, v in row.items() if v}
    return [q for k, q in enumerate(slots) if k not in used]


def constrained_kernel_dimension(kind, point=(2, 3), ncolors=4, family="atom") -> int:
    """Kernel dimension after discarding the unconstrained slots.

    A solution supported only on unconstrained slots vanishes on every
    configuration that a Yang-Baxter move actually uses.
    """
    dim, basis, slots = solve_rll_kernel(kind, point, ncolors, family)
    drop = set(unconstrained_slots(kind, point, ncolors, family))
    keep = [k for k, q in enumerate(slots) if q not in drop]
    rows = [{j: vec[k] for j, k in enumerate(keep) if vec[k]} for vec in basis]
    return len(keep) - len(kernel(rows, len(keep)))


def generic_kernel_dimension(kind, rng=None, ncolors=4, family="atom", tries=5):
    """Kernel dimension agreed on by two random specializations."""
    rng = rng or random.Random(0)
    for _ in range(tries):
        pts = []
        while len(pts) < 2:
            p = (Fraction(rng.randint(2, 97), rng.randint(1, 13)),
                 Fraction(rng.randint(2, 97), rng.randint(1, 13)))
            if p[0] != p[1]:
                pts.append(p)
        dims = [solve_rll_kernel(kind, p, ncolors, family)[0] for p in pts]
        if dims[0] == dims[1]:
            return dims[0], pts
    raise RuntimeError("kernel dimension unstable across specializations; retry")


def kernel_matches_table(kind="GG", point=(2, 3), family="atom", ncolors=4) -> bool:
    dim, basis, slots = solve_rll_kernel(kind, point, ncolors, family)
    if dim != 1:
        return False
    vec = dict(zip(slots, basis[0]))
    zi, zj = (Fraction(x) for x in point)
    table = r_table(kind, family, spin_set(ncolors))
    expect = {q: Fraction(form_value(table[q], zi, zj)) if q in table else Fraction(0)
              for q in slots}
    empty = (0, 0, 0, 0)
    if vec[empty] == 0:
        return False
    scale = expect[empty] / vec[empty]
    return all(vec[q] * scale == expect[q] for q in slots)


# the q-deformed R-matrix and its crystal limit

RQ_NAMES = ("zi", "zj", "q")


def rq_class(bl, tl, tr, br, gt):
    """Name of the R_q entry for a configuration, or None."""
    q = (bl, tl, tr, br)
    if q == (0, 0, 0, 0):
        return "a1"
    if 0 in q:
        d = max(q, key=abs)
        return {(0, d, 0, d): "b1", (d, 0, d, 0): "b2", (d, 0, 0, d): "c1",
                (0, d, d, 0): "c2"}.get(q)
    if bl == tl == tr == br:
        return "a2"
    if bl == br and tl == tr and bl != tl:
        return "c1'" if gt(tl, bl) else "c2'"
    if bl == tr and tl == br and bl != tl:
        return "b2'" if gt(bl, tl) else "b1'"
    return None


def rq_weights() -> dict:
    zi, zj, q = variables(3, names=RQ_NAMES)
    z = zj * zi ** -1
    one = constant(1, RQ_NAMES)
    return {
        "a1": z - q * q,
        "b1": (one - z) * q,
        "b2": (one - z) * q,
        "c1": (one - q * q) * z,
        "c2": one - q * q,
        "c1'": -(one - q * q) * z,
        "c2'": -(one - q * q),
        "b2'": (one - z) * q,
        "b1'": (one - z) * q,
        "a2": q * q * z - 1,
    }


def rq_limit() -> dict:
    """Apply the twist steps and q -> 0, then scale by zi.  Returns class -> (zi, zj) poly."""
    zi, zj, q = variables(3, names=RQ_NAMES)
    z = zj * zi ** -1
    zinv = zi * zj ** -1
    qinv = q ** -1
    w = dict(rq_weights())
    for k in ("c1'", "c2'", "b2'", "b1'", "a2"):
        w[k] = -w[k]
    for k in ("c1", "c1'"):
        w[k] = w[k] * zinv
    for k in ("c2", "c2'"):
        w[k] = w[k] * z
    w["b1"] = w["b1"] * q
    w["b2"] = w["b2"] * qinv
    w["b1'"] = -w["b1'"] * q
    w["b2'"] = -w["b2'"] * qinv
    out = {}
    for k, v in w.items():
        v = (v.set_variable(2, 0) * zi)
        out[k] = LaurentPolynomial({e[:2]: c for e, c in v.terms.items()}, ZNAMES)
    return out


def transpose(table: dict) -> dict:
    """Reindex (BL, TL, TR, BR) = (a, b, c, d) to (c, d, a, b)."""
    return {(c, d, a, b): v for (a, b, c, d), v in table.items()}


def rq_limit_report(ncolors=4) -> dict:
    spins = spin_set(ncolors)
    gt = _gt_for(spins)
    lim = rq_limit()
    gg = r_matrix("GG", "atom", spins)
    dd = r_matrix("DD", "atom", spins)
    zero = constant(0, ZNAMES)
    mism = []
    for cfg in product(spins, repeat=4):
        cls = rq_class(*cfg, gt)
        got = lim[cls] if cls else zero
        if got != gg.get(cfg, zero):
            mism.append((cfg, cls, str(got), str(gg.get(cfg, zero))))
    tr = transpose(gg)
    tmism = [(cfg, str(tr.get(cfg, zero)), str(dd.get(cfg, zero)))
             for cfg in product(spins, repeat=4) if tr.get(cfg, zero) != dd.get(cfg, zero)]
    return {"limit_mismatches": mism, "transpose_mismatches": tmism}


def rq_limit_check(ncolors=4) -> bool:
    rep = rq_limit_report(ncolors)
    return not rep["limit_mismatches"] and not rep["transpose_mismatches"]


# fish: K^Gamma_Gamma with free parameters

FISH_ENTRIES = ("h1", "h1bar", "h2", "h2bar")


def fish_k_matrix(H1, H1bar, H2, H2bar) -> dict:
    """{(top, bottom pattern): value}; u is any unbarred color."""
    vals = (H1, H1bar, H2, H2bar)
    if any(v == 0 for v in vals):
        raise ValueError("fish parameters must be nonzero")
    return {("0", "u"): H1, ("0", "ub"): H1bar, ("u", "0"): H2, ("ub", "0"): H2bar}
