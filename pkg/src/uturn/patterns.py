"""Proctor patterns, King and Sundaram tableaux, and the right key.

A pattern of rank n is the list of rows a_1, b_1, a_2, b_2, ..., a_n, b_n
where a_i and b_i have n - i + 1 entries.  Each row interlaces with the
next one (a horizontal strip):

    a_{i,j} >= b_{i,j} >= a_{i,j+1}        b_{i,j} >= a_{i+1,j+1} >= b_{i,j+1}

with missing entries on the right read as 0.  In type B the last entry
b_{i,n} of each b-row may be a half-integer.

Tableaux use the reversed alphabet 1 < 1b < 2 < 2b < ... < nb (written
"i" and "ib", plus "inf" for the Sundaram letter).
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .algebra import LaurentPolynomial, monomial
from .demazure import pad_partition
from .model import (MarkedState, Model, State, build_model, enumerate_marked_states,
                    enumerate_states, k1_uturns)
from .weyl import SignedPermutation, all_elements, longest_element

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ProctorPattern:
    rows: tuple     # (a_1, b_1, a_2, b_2, ...), entries int or Fraction

    @classmethod
    def from_rows(cls, rows) -> "ProctorPattern":
        return cls(tuple(tuple(_num(x) for x in r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.rows) // 2

    def a(self, i):
        return self.rows[2 * i - 2]

    def b(self, i):
        return self.rows[2 * i - 1]

    @property
    def top(self):
        return self.rows[0]

    def __str__(self):
        return "[" + ", ".join("(" + ",".join(str(x) for x in r) + ")" for r in self.rows) + "]"

    def to_json(self):
        return [[x if isinstance(x, int) else str(x) for x in r] for r in self.rows]


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


def parse_pattern(text: str) -> ProctorPattern:
    """Parse "[(2,1),(1,0),(1),(1/2)]" or a JSON list of lists."""
    t = text.strip().replace("(", "[").replace(")", "]").replace("'", "").replace('"', "")
    t = re.sub(r"(\d+/\d+)", r'"\1"', t)
    t = re.sub(r"\[\s*(-?\d+|\"[\d/]+\")\s*,\s*\]", r"[\1]", t)   # (1,) style
    return ProctorPattern.from_rows(json.loads(t))


def validate_pattern(p: ProctorPattern, type: str = "C") -> bool:
    n = p.n
    if len(p.rows) != 2 * n or n == 0:
        return False
    for k, r in enumerate(p.rows):
        if len(r) != n - k // 2:
            return False
        for j, x in enumerate(r):
            x = Fraction(x)
            if x < 0:
                return False
            last_b = (k % 2 == 1 and j == len(r) - 1)
            if x.denominator != 1 and not (type == "B" and last_b and x.denominator == 2):
                return False
    for k in range(len(p.rows) - 1):
        if not _interlaces(p.rows[k], p.rows[k + 1]):
            return False
    return True


def _interlaces(upper, lower) -> bool:
    """lower is a horizontal strip under upper (same or one shorter length)."""
    for j, y in enumerate(lower):
        if len(lower) == len(upper):
            hi, lo = upper[j], upper[j + 1] if j + 1 < len(upper) else 0
        else:
            hi, lo = upper[j], upper[j + 1]
        if not lo <= y <= hi:
            return False
    return True


def _next_rows(upper, length, half_last):
    ranges = []
    for j in range(length):
        if length == len(upper):
            hi, lo = upper[j], upper[j + 1] if j + 1 < len(upper) else 0
        else:
            hi, lo = upper[j], upper[j + 1]
        if half_last and j == length - 1:
            vals = [_num(Fraction(k, 2)) for k in range(math.ceil(2 * Fraction(lo)),
                                                        math.floor(2 * Fraction(hi)) + 1)]
        else:
            vals = list(range(math.ceil(lo), math.floor(hi) + 1))
        ranges.append(vals)
    return [tuple(r) for r in product(*ranges)]


@lru_cache(maxsize=None)
def _enum(lam, type):
    n = len(lam)
    out = []

    def rec(rows):
        k = len(rows)
        if k == 2 * n:
            out.append(ProctorPattern(tuple(rows)))
            return
        upper = rows[-1]
        length = n - k // 2
        half = type == "B" and k % 2 == 1
        for r in _next_rows(upper, length, half):
            rec(rows + [r])
    rec([tuple(lam)])
    return tuple(out)


def enumerate_patterns(lam, type: str = "C", n: int | None = None) -> list[ProctorPattern]:
    n = n if n is not None else len(lam)
    return list(_enum(pad_partition(lam, n), type))


def pattern_weight(p: ProctorPattern) -> LaurentPolynomial:
    n = p.n
    A = [sum(p.a(i)) for i in range(1, n + 1)] + [0]
    B = [sum(p.b(i)) for i in range(1, n + 1)]
    exps = []
    for i in range(n):
        e = A[i] - 2 * B[i] + A[i + 1]
        if Fraction(e).denominator != 1:
            raise ValueError("non-integral weight")
        exps.append(int(e))
    return monomial(exps)


# states <-> patterns

def occupied(layer) -> list[int]:
    """Columns of colored edges, largest column first."""
    return sorted((c for c, x in enumerate(layer) if x), reverse=True)


def state_to_pattern(m: Model, s) -> ProctorPattern:
    """Read a pattern off the vertical layers; marked k1 U-turns give halves."""
    marks = frozenset()
    if isinstance(s, MarkedState):
        s, marks = s.state, s.marks
    elif m.type == "B" and k1_uturns(m, s):
        raise ValueError("type B needs a marked state")
    n = m.n
    rows = []
    for i in range(1, n + 1):
        cols = occupied(s.v[2 * i - 2])
        if len(cols) != n - i + 1:
            raise ValueError(f"layer {2 * i - 2} does not carry {n - i + 1} paths")
        rows.append(tuple(c - (n - j) for j, c in zip(range(i, n + 1), cols)))
        cols = occupied(s.v[2 * i - 1])
        if len(cols) not in (n - i, n - i + 1):
            raise ValueError(f"layer {2 * i - 1} has the wrong number of paths")
        b = [c - (n - j) + 1 for j, c in zip(range(i, n + 1), cols)]
        b += [0] * (n - i + 1 - len(b))
        if i in marks:
            b[-1] = _num(b[-1] - HALF)
        rows.append(tuple(b))
    p = ProctorPattern(tuple(rows))
    if not validate_pattern(p, m.type):
        raise ValueError("state does not give a valid pattern")
    return p


def pattern_skeleton(p: ProctorPattern) -> tuple:
    """Occupied vertical columns per layer (layer 2n is empty)."""
    n = p.n
    layers = []
    for i in range(1, n + 1):
        layers.append(frozenset(p.a(i)[j - i] + (n - j) for j in range(i, n + 1)))
        cols = (math.ceil(p.b(i)[j - i]) + (n - j) - 1 for j in range(i, n + 1))
        layers.append(frozenset(c for c in cols if c >= 0))
    layers.append(frozenset())
    return tuple(layers)


def state_skeleton(s: State) -> tuple:
    return tuple(frozenset(c for c, x in enumerate(layer) if x) for layer in s.v)


def _marks(p: ProctorPattern):
    return frozenset(i for i in range(1, p.n + 1)
                     if Fraction(p.b(i)[-1]).denominator == 2)


def pattern_to_state(p: ProctorPattern, type: str = "C", family: str = "character",
                     w: SignedPermutation | None = None):
    """Inverse of state_to_pattern: the unique coloring of the pattern's skeleton."""
    if not validate_pattern(p, type):
        raise ValueError("invalid pattern")
    w = w if w is not None else longest_element(p.n)
    m = build_model(p.top, w, family, type)
    skel = pattern_skeleton(p)
    found = [s for s in enumerate_states(m) if state_skeleton(s) == skel]
    if len(found) != 1:
        raise ValueError(f"pattern skeleton has {len(found)} colorings in this model")
    s = found[0]
    marks = _marks(p)
    if type == "B":
        if not marks <= set(k1_uturns(m, s)):
            raise ValueError("half-integer entry without an empty U-turn")
        return MarkedState(s, marks)
    return s


# tableaux

def letter_index(tok: str, n: int) -> int:
    """'i' -> 2i-2, 'ib' -> 2i-1; 'inf' -> -1."""
    tok = tok.strip()
    if tok in ("inf", "∞"):
        return -1
    bar = tok.endswith("b")
    i = int(tok[:-1] if bar else tok)
    if not 1 <= i <= n:
        raise ValueError(f"letter {tok!r} out of range for rank {n}")
    return 2 * i - 1 if bar else 2 * i - 2


def letter_text(k: int) -> str:
    if k < 0:
        return "inf"
    return f"{k // 2 + 1}b" if k % 2 else str(k // 2 + 1)


@dataclass(frozen=True)
class Tableau:
    rows: tuple      # tuples of letter tokens
    n: int

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    @property
    def flavor(self):
        return "sundaram" if any(t == "inf" for r in self.rows for t in r) else "king"

    def __str__(self):
        return "[" + ",".join("[" + ",".join(r) + "]" for r in self.rows) + "]"

    def to_json(self):
        return [list(r) for r in self.rows]


def parse_tableau(text: str, n: int) -> Tableau:
    rows = re.findall(r"\[([^\[\]]*)\]", text)
    out = []
    for r in rows:
        toks = [t.strip().strip("'\"") for t in r.split(",") if t.strip()]
        out.append(tuple(letter_text(letter_index(t, n)) for t in toks))
    return Tableau(tuple(r for r in out if r), n)


def validate_tableau(t: Tableau) -> bool:
    n = t.n
    try:
        rows = [[letter_index(x, n) for x in r] for r in t.rows]
    except ValueError:
        return False
    if len(rows) > n or any(len(rows[k]) < len(rows[k + 1]) for k in range(len(rows) - 1)):
        return False
    for r, row in enumerate(rows, start=1):
        infs = [c for c, x in enumerate(row) if x < 0]
        if infs and infs != [0]:
            return False
        if infs:
            row[0] = 2 * (n + 1 - r) - 1
    for r, row in enumerate(rows, start=1):
        if any(x > 2 * (n + 1 - r) - 1 for x in row):
            return False
        if any(row[c] < row[c + 1] for c in range(len(row) - 1)):
            return False
        if r > 1:
            above = rows[r - 2]
            if any(above[c] <= row[c] for c in range(len(row))):
                return False
    return True


def pattern_to_tableau(p: ProctorPattern, type: str = "C") -> Tableau:
    n = p.n
    shapes = []
    for k, row in enumerate(p.rows):
        i = k // 2 + 1
        shapes.append([math.ceil(x) for x in row] + [0] * (i - 1))
        # shapes[k][r] = length of row r+1 of the subshape of letters >= letter k
    lam = shapes[0]
    cells = []
    for r in range(n):
        row = []
        for c in range(lam[r]):
            k = max(k for k in range(2 * n) if _row_len(shapes[k], r) > c)
            row.append(k)
        cells.append(row)
    if type == "B":
        for i in _marks(p):
            r = n + 1 - i
            cells[r - 1][0] = -1
    return Tableau(tuple(tuple(letter_text(k) for k in row) for row in cells if row), n)


def _row_len(shape, r):
    # shapes of later rows are stored starting at row 1; padding handled by caller
    return shape[r] if r < len(shape) else 0


def tableau_to_pattern(t: Tableau, type: str | None = None) -> ProctorPattern:
    if not validate_tableau(t):
        raise ValueError(f"malformed tableau {t}")
    n = t.n
    rows = [[letter_index(x, n) for x in r] for r in t.rows]
    rows += [[] for _ in range(n - len(rows))]
    halves = set()
    for r, row in enumerate(rows, start=1):
        if row and row[0] < 0:
            row[0] = 2 * (n + 1 - r) - 1
            halves.add(n + 1 - r)
    if halves and type == "C":
        raise ValueError("the infinity letter needs type B")
    out = []
    for k in range(2 * n):
        i = k // 2 + 1
        shape = [sum(1 for x in row if x >= k) for row in rows]
        entries = shape[: n - i + 1]
        if k % 2 == 1 and i in halves:
            entries[-1] = _num(entries[-1] - HALF)
        out.append(tuple(entries))
    return ProctorPattern(tuple(out))


def enumerate_tableaux(lam, n: int, type: str = "C") -> list[Tableau]:
    return [pattern_to_tableau(p, type) for p in enumerate_patterns(lam, type, n)]


def tableau_weight(t: Tableau) -> LaurentPolynomial:
    """z_i^(#i - #ib), ignoring infinity."""
    n = t.n
    e = [0] * n
    for r in t.rows:
        for x in r:
            k = letter_index(x, n)
            if k >= 0:
                e[k // 2] += -1 if k % 2 else 1
    return monomial(e)


def king_relabel(t: Tableau) -> Tableau:
    """Display helper: i <-> n+1-i, giving the ordinary King alphabet."""
    n = t.n

    def f(x):
        if x == "inf":
            return x
        bar = x.endswith("b")
        i = n + 1 - int(x[:-1] if bar else x)
        return f"{i}b" if bar else str(i)
    return Tableau(tuple(tuple(f(x) for x in r) for r in t.rows), n)


# right key

@dataclass(frozen=True)
class KeyResult:
    w: SignedPermutation
    state: State


def compute_key(obj, type: str = "C", n: int | None = None) -> KeyResult:
    """The unique w whose atom model colors the given skeleton.

    ``obj`` is a Tableau, a ProctorPattern, or a (model, state) pair.
    """
    if isinstance(obj, Tableau):
        p = tableau_to_pattern(obj, type)
    elif isinstance(obj, ProctorPattern):
        p = obj
    else:
        m, s = obj
        p = state_to_pattern(m, s) if not (m.type == "B" and not isinstance(s, MarkedState)) \
            else state_to_pattern(m, MarkedState(s, frozenset()))
    skel = pattern_skeleton(p)
    hits = []
    for w in all_elements(p.n):
        m = build_model(p.top, w, "atom", type)
        for s in enumerate_states(m):
            if state_skeleton(s) == skel:
                hits.append(KeyResult(w, s))
    if len(hits) != 1:
        raise AssertionError(f"skeleton has {len(hits)} atom colorings; expected exactly 1")
    return hits[0]


# exhaustive checks

def verify_bijection(lam, type: str = "C", n: int | None = None) -> list[str]:
    """Check Psi and Theta on the w0 character model; returns failure messages."""
    n = n if n is not None else len(lam)
    lam = pad_partition(lam, n)
    m = build_model(lam, longest_element(n), "character", type)
    from .demazure import rho_monomial
    from .model import marked_weight, state_weight
    rho = rho_monomial(n)
    states = enumerate_marked_states(m) if type == "B" else enumerate_states(m)
    bad = []
    image = []
    for s in states:
        p = state_to_pattern(m, s)
        image.append(p)
        wt = marked_weight(m, s) if type == "B" else state_weight(m, s)
        if rho * pattern_weight(p) != wt:
            bad.append(f"weight mismatch at {p}")
        back = pattern_to_state(p, type)
        if back != s:
            bad.append(f"state round trip fails at {p}")
    pats = enumerate_patterns(lam, type, n)
    if sorted(map(str, image)) != sorted(map(str, pats)):
        bad.append(f"{len(image)} states against {len(pats)} patterns")
    tabs = set()
    for p in pats:
        t = pattern_to_tableau(p, type)
        if not validate_tableau(t):
            bad.append(f"invalid tableau {t}")
        if tableau_to_pattern(t, type) != p:
            bad.append(f"tableau round trip fails at {p}")
        if type == "C" and tableau_weight(t) != pattern_weight(p):
            bad.append(f"tableau weight differs at {p}")
        tabs.add(t)
    if len(tabs) != len(pats):
        bad.append("Theta is not injective")
    return bad


def key_partition(lam, type: str = "C", n: int | None = None) -> dict:
    """w -> list of tableaux whose right key is w."""
    n = n if n is not None else len(lam)
    out = {w: [] for w in all_elements(n)}
    for p in enumerate_patterns(lam, type, n):
        out[compute_key(p, type).w].append(pattern_to_tableau(p, type))
    return out
