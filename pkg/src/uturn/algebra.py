"""Exact Laurent polynomials with integer coefficients.

A polynomial is a mapping from exponent tuples to nonzero ints together
with a tuple of variable names.  The default names are ``z1..zn``; the
Yang-Baxter code also uses ``zi, zj`` and an extra ``q`` slot.

    >>> z1, z2 = variables(2)
    >>> str((z1 + z2) * (z1 - z2))
    'z1^2 - z2^2'
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "LaurentPolynomial", "variables", "monomial", "constant", "default_names",
    "multiply", "act_variables", "exact_divide", "evaluate", "parse",
    "DivisibilityError",
]


class DivisibilityError(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


def default_names(n: int, q: bool = False) -> tuple[str, ...]:
    names = tuple(f"z{i}" for i in range(1, n + 1))
    return names + ("q",) if q else names


class LaurentPolynomial:
    """Immutable Laurent polynomial over the integers."""

    __slots__ = ("_terms", "_names", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None,
                 names: Sequence[str] | int = 1):
        if isinstance(names, int):
            names = default_names(names)
        self._names = tuple(names)
        k = len(self._names)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != k:
                raise ValueError(f"exponent {e} has wrong length for {k} variables")
            if c:
                c = int(c)
                s = clean.get(e, 0) + c
                if s:
                    clean[e] = s
                else:
                    clean.pop(e, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms, names):
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p._terms = terms
        p._names = names
        p._hash = None
        return p

    # basic accessors
    @property
    def names(self):
        return self._names

    @property
    def nvars(self) -> int:
        return len(self._names)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order (descending lex on exponents)."""
        return sorted(self._terms.items(), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, exps) -> int:
        return self._terms.get(tuple(exps), 0)

    def _check(self, other):
        if not isinstance(other, LaurentPolynomial):
            if isinstance(other, int):
                return constant(other, self._names)
            return NotImplemented
        if other._names != self._names:
            raise ValueError(f"variable mismatch: {self._names} vs {other._names}")
        return other

    # ring operations
    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPolynomial._raw(out, self._names)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -c for e, c in self._terms.items()}, self._names)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPolynomial._raw(out, self._names)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise DivisibilityError("only monomials are units")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise DivisibilityError("coefficient is not a unit")
            return LaurentPolynomial._raw({tuple(x * k for x in e): c ** (-k)}, self._names)
        out = constant(1, self._names)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = constant(other, self._names)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._names == other._names and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._names, frozenset(self._terms.items())))
        return self._hash

    def shift(self, exps: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the monomial with exponent vector ``exps``."""
        return LaurentPolynomial._raw(
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()},
            self._names)

    def substitute(self, images: Sequence[tuple[int, int]]) -> "LaurentPolynomial":
        """Send variable k to variable ``images[k][0]`` raised to ``images[k][1]``."""
        out: dict = {}
        k = len(self._names)
        for e, c in self._terms.items():
            f = [0] * k
            for pos, x in enumerate(e):
                j, s = images[pos]
                f[j] += s * x
            f = tuple(f)
            s = out.get(f, 0) + c
            if s:
                out[f] = s
            else:
                del out[f]
        return LaurentPolynomial._raw(out, self._names)

    def invert_variables(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw(
            {tuple(-x for x in e): c for e, c in self._terms.items()}, self._names)

    def set_variable(self, index: int, value: int) -> "LaurentPolynomial":
        """Specialize one variable to an integer (value 0 needs no negative powers)."""
        out: dict = {}
        for e, c in self._terms.items():
            x = e[index]
            if value == 0:
                if x < 0:
                    raise ZeroDivisionError("negative power of a variable set to 0")
                if x > 0:
                    continue
                v = c
            elif x < 0:
                v = Fraction(c, value ** -x)
                if v.denominator != 1:
                    raise DivisibilityError("non-integral specialization")
                v = int(v)
            else:
                v = c * value ** x
            f = e[:index] + (0,) + e[index + 1:]
            s = out.get(f, 0) + v
            if s:
                out[f] = s
            else:
                out.pop(f, None)
        return LaurentPolynomial._raw(out, self._names)

    def min_exponents(self):
        return tuple(min(col) for col in zip(*self._terms)) if self._terms else (0,) * self.nvars

    # text and json
    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"LaurentPolynomial({to_text(self)!r})"

    def to_json(self):
        return [{"coeff": c, "exponents": list(e)} for e, c in self.items()]

    @classmethod
    def from_json(cls, data, names):
        return cls({tuple(t["exponents"]): t["coeff"] for t in data}, names)


def constant(c: int, names: Sequence[str] | int = 1) -> LaurentPolynomial:
    if isinstance(names, int):
        names = default_names(names)
    names = tuple(names)
    return LaurentPolynomial._raw({(0,) * len(names): c} if c else {}, names)


def monomial(exps: Sequence[int], names: Sequence[str] | None = None, coeff: int = 1):
    exps = tuple(exps)
    if names is None:
        names = default_names(len(exps))
    return LaurentPolynomial({exps: coeff}, names)


def variables(n: int, q: bool = False, names: Sequence[str] | None = None):
    names = tuple(names) if names is not None else default_names(n, q)
    k = len(names)
    return tuple(monomial(tuple(int(i == j) for j in range(k)), names) for i in range(k))


def multiply(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    return p * q


def act_variables(w, p: LaurentPolynomial) -> LaurentPolynomial:
    """Replace z_i by z_{|w(i)|}, inverted when w(i) is barred.

    Only the first ``w.rank`` slots are acted on; a trailing q slot is fixed.
    """
    n = w.rank
    if p.nvars < n or p.nvars > n + 1:
        raise ValueError(f"rank {n} does not match {p.nvars} variables")
    images = [(abs(v) - 1, 1 if v > 0 else -1) for v in w.images]
    images += [(k, 1) for k in range(n, p.nvars)]
    return p.substitute(images)


def _lead(terms):
    return max(terms)


def exact_divide(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Return r with r*q == p, or raise DivisibilityError.

    Both operands are shifted into the polynomial ring with q free of
    monomial factors, then ordinary lex division is run.  Since q is then
    coprime to every variable, divisibility in the Laurent ring agrees with
    divisibility in the polynomial ring.
    """
    q = p._check(q)
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return p
    pm, qm = p.min_exponents(), q.min_exponents()
    rem = dict(p.shift([-x for x in pm])._terms)
    qq = q.shift([-x for x in qm])._terms
    ql = _lead(qq)
    qc = qq[ql]
    quot: dict = {}
    while rem:
        lt = _lead(rem)
        c = rem[lt]
        d = tuple(a - b for a, b in zip(lt, ql))
        if min(d) < 0 or c % qc:
            raise DivisibilityError(f"{q} does not divide {p}")
        m = c // qc
        quot[d] = m
        for e, cq in qq.items():
            f = tuple(a + b for a, b in zip(e, d))
            s = rem.get(f, 0) - m * cq
            if s:
                rem[f] = s
            else:
                del rem[f]
    shift = tuple(a - b for a, b in zip(pm, qm))
    return LaurentPolynomial._raw(quot, p.names).shift(shift)


def evaluate(p: LaurentPolynomial, point: Sequence) -> Fraction:
    """Exact value at a point with nonzero rational coordinates."""
    if len(point) != p.nvars:
        raise ValueError(f"point has {len(point)} coordinates, need {p.nvars}")
    pt = [Fraction(x) for x in point]
    if any(x == 0 for x in pt):
        raise ValueError("coordinates must be nonzero")
    total = Fraction(0)
    for e, c in p._terms.items():
        v = Fraction(c)
        for x, k in zip(pt, e):
            if k:
                v *= x ** k
        total += v
    return total


# text form

def _term_text(e, c, names):
    factors = []
    for name, k in zip(names, e):
        if k == 1:
            factors.append(name)
        elif k:
            factors.append(f"{name}^{k}")
    mono = "*".join(factors)
    a = abs(c)
    if not mono:
        return str(a)
    return mono if a == 1 else f"{a}*{mono}"


def to_text(p: LaurentPolynomial) -> str:
    items = p.items()
    if not items:
        return "0"
    out = []
    for k, (e, c) in enumerate(items):
        t = _term_text(e, c, p.names)
        if k == 0:
            out.append("-" + t if c < 0 else t)
        else:
            out.append(("- " if c < 0 else "+ ") + t)
    return " ".join(out)


def parse(text: str, names: Sequence[str] | int | None = None) -> LaurentPolynomial:
    """Parse the canonical text form.  Unicode minus is accepted."""
    text = text.replace("−", "-").strip()
    if names is None:
        found = sorted(set(re.findall(r"[A-Za-z]\w*", text)))
        zs = [s for s in found if re.fullmatch(r"z\d+", s)]
        n = max((int(s[1:]) for s in zs), default=1)
        names = default_names(n, "q" in found)
    elif isinstance(names, int):
        names = default_names(names)
    names = tuple(names)
    index = {s: k for k, s in enumerate(names)}
    if text == "0":
        return LaurentPolynomial({}, names)
    # split on + or - that are not exponent signs
    pieces = re.split(r"(?<!\^)\s*([+-])\s*", text)
    terms: dict = {}
    sign = 1
    if pieces and pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    for k in range(0, len(pieces), 2):
        sign = -1 if pieces[k] == "-" else 1
        body = pieces[k + 1].strip()
        coeff = 1
        e = [0] * len(names)
        for f in body.split("*"):
            f = f.strip()
            if re.fullmatch(r"\d+", f):
                coeff *= int(f)
                continue
            m = re.fullmatch(r"([A-Za-z]\w*)(?:\^\(?(-?\d+)\)?)?", f)
            if not m or m.group(1) not in index:
                raise ValueError(f"cannot parse factor {f!r}")
            e[index[m.group(1)]] += int(m.group(2) or 1)
        e = tuple(e)
        terms[e] = terms.get(e, 0) + sign * coeff
    return LaurentPolynomial(terms, names)
