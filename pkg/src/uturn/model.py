"""Colored U-turn lattice models for Sp(2n) and SO(2n+1).

Spins are ints: 0 is empty, +j is the color c_j and -j its bar.  The
internal order is

    c1b < c2b < ... < cnb < cn < ... < c2 < c1

so unbarred colors sit above barred ones and c1 is the largest.

Grid layout: rows 1..2n from the top, odd rows are Gamma rows with
parameter z_i, even rows are Delta rows with parameter 1/z_i, and U-turn i
joins the right ends of rows 2i-1 and 2i.  Columns are labelled right to
left, 0..ncols-1.  Horizontal edge index e in row r sits just left of
column e-1, so e = 0 is the edge into the U-turn and e = ncols is the left
boundary.  Vertical layer k lies below row k (layer 0 is the top boundary).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .algebra import LaurentPolynomial, act_variables, constant, monomial, variables
from .demazure import CartanData, pad_partition
from .weyl import (SignedPermutation, color_word, length, longest_element,
                   lower_interval, simple_reflection, word_text, window_text)

FAMILIES = ("atom", "character")
TYPES = ("B", "C")


# spins

def spin_key(s: int, n: int) -> int:
    """Position in the internal total order (0 for the empty spin)."""
    if s == 0:
        return 0
    return -s if s < 0 else 2 * n + 1 - s


def spin_text(s: int) -> str:
    if s == 0:
        return "0"
    return f"{-s}b" if s < 0 else str(s)


def parse_spin(t: str) -> int:
    t = t.strip()
    if t.endswith("b"):
        return -int(t[:-1])
    return int(t)


# local weights
#
# Each table maps (left, top) to a list of (right, bottom, label, z-exponent).
# ``gt`` is the comparison of two distinct colors in the internal order.

def gamma_options(l, t, gt, family):
    if l == 0 and t == 0:
        return [(0, 0, "a1", 0)]
    if l == 0:
        return [(t, 0, "c1", 0)]
    if t == 0:
        return [(l, 0, "b2", 1), (0, l, "c2", 1)]
    if l == t:
        return [(l, l, "a2deg", 1)]
    if family == "atom":
        if gt(t, l):
            return [(t, l, "a2", 1)]
        return [(l, t, "a2dag", 1)]
    if gt(l, t):
        return [(l, t, "a2dag", 1), (t, l, "a2prime", 1)]
    return []


def delta_options(r, t, gt, family):
    """Delta vertices indexed by the incoming (right, top); returns (left, bottom, ...)."""
    if r == 0 and t == 0:
        return [(0, 0, "a1", 1)]
    if r == 0:
        return [(t, 0, "c1", 0)]
    if t == 0:
        return [(r, 0, "b2", 0), (0, r, "c2", 1)]
    if r == t:
        return [(r, r, "a2deg", 0)]
    if family == "atom":
        if gt(r, t):
            return [(t, r, "a2", 0)]
        return [(r, t, "a2dag", 0)]
    if gt(t, r):
        return [(r, t, "a2dag", 0), (t, r, "a2prime", 0)]
    return []


def gamma_label(l, t, r, b, gt, family):
    for rr, bb, lab, e in gamma_options(l, t, gt, family):
        if (rr, bb) == (r, b):
            return lab, e
    return None


def delta_label(l, t, r, b, gt, family):
    for ll, bb, lab, e in delta_options(r, t, gt, family):
        if (ll, bb) == (l, b):
            return lab, e
    return None


def k_options(top, family):
    """U-turn entries for a given top spin: list of (bottom, label)."""
    if top == 0:
        return [(0, "k1")]
    if top > 0:
        return [(-top, "k2")] + ([(top, "k3prime")] if family == "character" else [])
    return [(top, "k3")] if family == "atom" else []


def k_label(top, bottom, family):
    for b, lab in k_options(top, family):
        if b == bottom:
            return lab
    return None


def k_weight(label, z: LaurentPolynomial, cartan: str) -> LaurentPolynomial:
    """Weight of a U-turn entry at parameter z (a variable)."""
    if label == "k1":
        zi = z ** -1
        return zi * zi + (zi if cartan == "B" else 0)
    return constant(1, z.names)


# models and states

@dataclass(frozen=True)
class Model:
    lam: tuple
    w: SignedPermutation
    family: str = "atom"
    type: str = "C"
    pad: int = 0        # extra empty columns on the left

    @property
    def n(self) -> int:
        return self.w.rank

    @property
    def ncols(self) -> int:
        return self.lam[0] + self.n + self.pad if self.n else 0

    @property
    def top_boundary(self) -> tuple:
        n = self.n
        row = [0] * self.ncols
        for i in range(n):
            row[self.lam[i] + n - 1 - i] = i + 1
        return tuple(row)

    @property
    def left_boundary(self) -> tuple:
        """Left spin of each row 1..2n."""
        cw = color_word(self.w)
        out = []
        for i in range(self.n):
            out += [0, cw[i]]
        return tuple(out)

    def gt(self, a, b) -> bool:
        return spin_key(a, self.n) > spin_key(b, self.n)

    def cartan(self) -> CartanData:
        return CartanData(self.type, self.n)

    def with_type(self, t) -> "Model":
        return Model(self.lam, self.w, self.family, t, self.pad)

    def describe(self) -> dict:
        return {"lambda": list(self.lam), "w": window_text(self.w), "word": word_text(self.w),
                "family": self.family, "type": self.type, "rank": self.n,
                "columns": self.ncols}


def build_model(lam, w: SignedPermutation, family: str = "atom", type: str = "C") -> Model:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if type not in TYPES:
        raise ValueError(f"type must be one of {TYPES}")
    return Model(pad_partition(lam, w.rank), w, family, type)


@dataclass(frozen=True)
class State:
    """Full edge assignment.  ``h[r]`` are the horizontal edges of row r+1
    indexed by edge index, ``v[k]`` the vertical layer k indexed by column."""
    h: tuple
    v: tuple

    @property
    def nrows(self):
        return len(self.h)

    def uturn(self, i: int) -> tuple[int, int]:
        """(top, bottom) spins at U-turn i (1-based)."""
        return self.h[2 * i - 2][0], self.h[2 * i - 1][0]

    def key(self):
        # row-major edge order: each row's horizontal edges left to right,
        # then the layer below it left to right
        out = []
        for r in range(self.nrows):
            out.extend(reversed(self.h[r]))
            out.extend(reversed(self.v[r + 1]))
        return tuple(out)


@dataclass(frozen=True)
class MarkedState:
    state: State
    marks: frozenset = field(default_factory=frozenset)


def _row_gamma(m: Model, above, left):
    """Yield (edges, below) for a Gamma row, scanning left to right."""
    nc = m.ncols
    gt, fam = m.gt, m.family
    h = [0] * (nc + 1)
    below = [0] * nc
    h[nc] = left

    def rec(c):
        if c < 0:
            yield tuple(h), tuple(below)
            return
        for r, b, _, _ in gamma_options(h[c + 1], above[c], gt, fam):
            h[c] = r
            below[c] = b
            yield from rec(c - 1)
    yield from rec(nc - 1)


def _row_delta(m: Model, above, right, left):
    """Yield (edges, below) for a Delta row, scanning right to left."""
    nc = m.ncols
    gt, fam = m.gt, m.family
    h = [0] * (nc + 1)
    below = [0] * nc
    h[0] = right

    def rec(c):
        if c == nc:
            if h[nc] == left:
                yield tuple(h), tuple(below)
            return
        for l, b, _, _ in delta_options(h[c], above[c], gt, fam):
            h[c + 1] = l
            below[c] = b
            yield from rec(c + 1)
    yield from rec(0)


@lru_cache(maxsize=2048)
def _enumerate(lam, w, family, pad=0) -> tuple:
    m = Model(lam, w, family, "C", pad)
    n = m.n
    lefts = m.left_boundary
    out = []

    def rec(i, layers, rows):
        if i == n:
            if not any(layers[-1]):
                out.append(State(tuple(rows), tuple(layers)))
            return
        for hg, mid in _row_gamma(m, layers[-1], 0):
            for bot, _ in k_options(hg[0], family):
                for hd, low in _row_delta(m, mid, bot, lefts[2 * i + 1]):
                    rec(i + 1, layers + [mid, low], rows + [hg, hd])
    rec(0, [m.top_boundary], [])
    out.sort(key=State.key)
    return tuple(out)


def enumerate_states(m: Model) -> list[State]:
    """All admissible states in canonical order (independent of the Cartan type)."""
    return list(_enumerate(m.lam, m.w, m.family, m.pad))


def vertex_labels(m: Model, s: State) -> dict:
    """Classification of every vertex and U-turn.

    Keys are ("L", row, column) for lattice vertices and ("K", i) for
    U-turns; values are (label, z-exponent) with label None if the local
    configuration is not in the tables.
    """
    out = {}
    for r in range(s.nrows):
        row = s.h[r]
        for c in range(m.ncols):
            l, t, rt, b = row[c + 1], s.v[r][c], row[c], s.v[r + 1][c]
            if r % 2 == 0:
                res = gamma_label(l, t, rt, b, m.gt, m.family)
            else:
                res = delta_label(l, t, rt, b, m.gt, m.family)
            out[("L", r + 1, c)] = res
    for i in range(1, m.n + 1):
        top, bot = s.uturn(i)
        lab = k_label(top, bot, m.family)
        out[("K", i)] = (lab, 0) if lab else None
    return out


def _check_boundary(m: Model, s: State):
    if s.v[0] != m.top_boundary or any(s.v[-1]):
        raise ValueError("state does not match the model's top/bottom boundary")
    for r in range(2 * m.n):
        if s.h[r][m.ncols] != m.left_boundary[r]:
            raise ValueError("state does not match the model's left boundary")


def state_weight(m: Model, s: State, marks=None) -> LaurentPolynomial:
    """Product of local weights; ``marks`` selects z^-1 at marked k1 U-turns."""
    _check_boundary(m, s)
    n = m.n
    exps = [0] * n
    k1 = []
    for key, res in vertex_labels(m, s).items():
        if res is None:
            raise ValueError(f"inadmissible configuration at {key}: zero weight")
        if key[0] == "L":
            i = (key[1] + 1) // 2 - 1
            exps[i] += res[1] if key[1] % 2 else -res[1]
        elif res[0] == "k1":
            k1.append(key[1])
    zs = variables(n)
    wt = monomial(exps)
    for i in k1:
        if marks is not None:
            exps_k = -1 if i in marks else -2
            wt = wt * zs[i - 1] ** exps_k
        else:
            wt = wt * k_weight("k1", zs[i - 1], m.type)
    return wt


def partition_function(m: Model) -> LaurentPolynomial:
    total = constant(0, m.n)
    for s in enumerate_states(m):
        total = total + state_weight(m, s)
    return total


def k1_uturns(m: Model, s: State) -> list[int]:
    return [i for i in range(1, m.n + 1) if s.uturn(i) == (0, 0)]


def enumerate_marked_states(m: Model) -> list[MarkedState]:
    if m.type != "B":
        raise ValueError("marked states are defined for type B only")
    out = []
    for s in enumerate_states(m):
        ks = k1_uturns(m, s)
        for k in range(len(ks) + 1):
            for sub in combinations(ks, k):
                out.append(MarkedState(s, frozenset(sub)))
    return out


def marked_weight(m: Model, ms: MarkedState) -> LaurentPolynomial:
    if not ms.marks <= set(k1_uturns(m, ms.state)):
        raise ValueError("only k1 U-turns can be marked")
    return state_weight(m, ms.state, marks=ms.marks)


def inversion_statistics(m: Model, s: State) -> int:
    if m.family != "atom":
        raise ValueError("the inversion statistic is defined for the atom family")
    labels = vertex_labels(m, s)
    return sum(1 for res in labels.values() if res and res[0] in ("a2dag", "k2"))


# bottom two rows: Delta row re-read as a Gamma row

_FISH_K = {"k1": None, "k2": "h2", "k3": "h2bar", "k3prime": "h2"}


def bottom_row_gamma_transform(m: Model, s: State) -> tuple[State, str]:
    """Swap d <-> 0 on the horizontal edges of the last row.

    d is the color on the left boundary of that row (the only color that
    can travel along it).  Returns the new state and the name of the
    K^Gamma_Gamma entry the U-turn becomes.  Applying it twice restores s.
    """
    d = m.left_boundary[-1]
    last = tuple(d if x == 0 else 0 if x == d else x for x in s.h[-1])
    if any(x not in (0, d) for x in s.h[-1]):
        raise ValueError("last row carries more than one color")
    top, bot = s.uturn(m.n)
    lab = k_label(top, bot, m.family)
    entry = _FISH_K.get(lab)
    if lab == "k1":
        entry = "h1" if d > 0 else "h1bar"
    return State(s.h[:-1] + (last,), s.v), entry


def fish_k_entry(top: int, bottom: int) -> str | None:
    """K^Gamma_Gamma entry for (top, bottom) spins, or None."""
    if top == 0 and bottom != 0:
        return "h1" if bottom > 0 else "h1bar"
    if bottom == 0 and top != 0:
        return "h2" if top > 0 else "h2bar"
    return None


def transformed_row_weights(m: Model, s: State) -> list:
    """Gamma labels of the last row after the swap, one per column."""
    t, _ = bottom_row_gamma_transform(m, s)
    r = 2 * m.n - 1
    row = t.h[r]
    return [gamma_label(row[c + 1], t.v[r][c], row[c], t.v[r + 1][c], m.gt, "atom")
            for c in range(m.ncols)]


# functional equations

RELATIONS = ("A-step", "BC-step")


def _z(n):
    return variables(n)


def verify_functional_equation(relation: str, family: str, lam, w: SignedPermutation,
                               i: int, type: str, printed: bool = False) -> bool:
    """Check one exchange relation between Z_w and Z_{s_i w} exactly.

    ``printed=True`` uses the literal form of the character A-step as
    printed alongside the atom one; the default uses the form implied by
    the Demazure operator.
    """
    n = w.rank
    if relation == "BC-step":
        i = n
    elif relation != "A-step":
        raise ValueError(f"relation must be one of {RELATIONS}")
    elif not 1 <= i < n:
        raise ValueError("A-step needs i < n")
    si = simple_reflection(i, n)
    if length(si * w) != length(w) + 1:
        raise ValueError(f"l(s{i} w) != l(w) + 1")
    zw = partition_function(build_model(lam, w, family, type))
    zsw = partition_function(build_model(lam, si * w, family, type))
    zw_s = act_variables(si, zw)
    z = _z(n)
    if relation == "A-step":
        zi, zj = z[i - 1], z[i]
        lhs = (zi - zj) * zsw
        if family == "atom" or printed:
            rhs = zj * zw - zi * zw_s
        else:
            rhs = zi * (zw - zw_s)
        return lhs == rhs
    zn = z[n - 1]
    g = zn * zn if type == "C" else zn
    lhs = (g - 1) * zsw
    rhs = (zw if family == "atom" else g * zw) - zw_s
    return lhs == rhs


def admissible_steps(n: int):
    """All (relation, w, i) with l(s_i w) = l(w) + 1."""
    from .weyl import all_elements
    out = []
    for w in all_elements(n):
        for i in range(1, n + 1):
            if length(simple_reflection(i, n) * w) == length(w) + 1:
                out.append(("A-step" if i < n else "BC-step", w, i))
    return out


def sum_of_atoms(lam, w, type) -> LaurentPolynomial:
    total = constant(0, w.rank)
    for y in lower_interval(w):
        total = total + partition_function(build_model(lam, y, "atom", type))
    return total


# output

def state_to_json(m: Model, s: State) -> dict:
    edges = []
    for r in range(s.nrows):
        for e, x in enumerate(s.h[r]):
            edges.append({"kind": "H", "row": r + 1, "edge": e, "spin": spin_text(x)})
    for k, layer in enumerate(s.v):
        for c, x in enumerate(layer):
            edges.append({"kind": "V", "layer": k, "column": c, "spin": spin_text(x)})
    cells = []
    for key, res in sorted(vertex_labels(m, s).items(), key=lambda kv: str(kv[0])):
        if key[0] == "L":
            cells.append({"row": key[1], "column": key[2], "entry": res and res[0]})
        else:
            cells.append({"uturn": key[1], "entry": res and res[0]})
    return {"edges": edges, "vertices": cells, "weight": str(state_weight(m, s))}


def state_from_json(m: Model, data: dict) -> State:
    h = [[0] * (m.ncols + 1) for _ in range(2 * m.n)]
    v = [[0] * m.ncols for _ in range(2 * m.n + 1)]
    for e in data["edges"]:
        if e["kind"] == "H":
            h[e["row"] - 1][e["edge"]] = parse_spin(e["spin"])
        else:
            v[e["layer"]][e["column"]] = parse_spin(e["spin"])
    return State(tuple(map(tuple, h)), tuple(map(tuple, v)))


def render_state(m: Model, s: State) -> str:
    """ASCII picture: vertices are '+', spins printed on edges."""
    w = 3

    def tok(x):
        return spin_text(x).center(w) if x else " . "[:w].center(w)

    lines = []
    nc = m.ncols
    header = "   " + "".join(f"{c:^{w + 1}}" for c in range(nc - 1, -1, -1))
    lines.append(header)
    for r in range(s.nrows + 1):
        lines.append("    " + "".join(tok(s.v[r][c]).ljust(w + 1) for c in range(nc - 1, -1, -1)))
        if r == s.nrows:
            break
        row = s.h[r]
        kind = "G" if r % 2 == 0 else "D"
        txt = tok(row[nc]) + "".join("+" + tok(row[c]) for c in range(nc - 1, -1, -1))
        if r % 2 == 0:
            txt += "\\"
        else:
            txt += "/"
        lines.append(f"{kind}{r + 1:<2}" + txt)
    return "\n".join(lines)


def dump_states(m: Model, fmt: str = "text") -> str:
    states = enumerate_states(m)
    if fmt == "json":
        return json.dumps({"model": m.describe(),
                           "states": [state_to_json(m, s) for s in states]}, indent=2)
    blocks = [f"# {len(states)} states"]
    for k, s in enumerate(states):
        blocks.append(f"state {k}: weight {state_weight(m, s)}\n{render_state(m, s)}")
    return "\n\n".join(blocks)
