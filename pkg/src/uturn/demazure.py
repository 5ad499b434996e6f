"""Isobaric Demazure operators and Demazure atoms in types B and C.

For an exponent vector mu let k = <mu, alpha_i^vee>.  The operator D_i
sends z^mu to the string z^mu + z^(mu - alpha_i) + ... + z^(s_i mu) when
k >= 0, kills it when k = -1, and gives minus the interior string when
k < -1.  Atoms use A_i = D_i - 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import LaurentPolynomial, act_variables, exact_divide, monomial, constant
from .weyl import SignedPermutation, longest_element, reduced_word, simple_reflection


@dataclass(frozen=True)
class CartanData:
    type: str
    n: int

    def __post_init__(self):
        if self.type not in ("B", "C"):
            raise ValueError(f"Cartan type must be B or C, got {self.type!r}")
        if self.n < 1:
            raise ValueError("rank must be positive")

    def root(self, i: int) -> tuple[int, ...]:
        n = self.n
        v = [0] * n
        if i < n:
            v[i - 1], v[i] = 1, -1
        else:
            v[n - 1] = 1 if self.type == "B" else 2
        return tuple(v)

    def pairing(self, mu, i: int) -> int:
        """<mu, alpha_i^vee>."""
        n = self.n
        if i < n:
            return mu[i - 1] - mu[i]
        return 2 * mu[n - 1] if self.type == "B" else mu[n - 1]

    @property
    def rho(self) -> tuple[int, ...]:
        return tuple(range(self.n - 1, -1, -1))


def _check_index(i, cd):
    if not 1 <= i <= cd.n:
        raise ValueError(f"index {i} out of range 1..{cd.n}")


def _demazure_terms(i, p: LaurentPolynomial, cd: CartanData) -> dict:
    n = cd.n
    alpha = cd.root(i)
    out: dict = {}
    for e, c in p.terms.items():
        mu = e[:n]
        k = cd.pairing(mu, i)
        if k >= 0:
            steps, sign = range(0, k + 1), 1
            d = -1
        elif k == -1:
            continue
        else:
            steps, sign = range(1, -k), -1
            d = 1
        for t in steps:
            f = tuple(m + d * t * a for m, a in zip(mu, alpha)) + e[n:]
            s = out.get(f, 0) + sign * c
            if s:
                out[f] = s
            else:
                del out[f]
    return out


def apply_demazure(i: int, p: LaurentPolynomial, cd: CartanData) -> LaurentPolynomial:
    _check_index(i, cd)
    return LaurentPolynomial(_demazure_terms(i, p, cd), p.names)


def apply_atom(i: int, p: LaurentPolynomial, cd: CartanData) -> LaurentPolynomial:
    return apply_demazure(i, p, cd) - p


def demazure_quotient(i: int, p: LaurentPolynomial, cd: CartanData) -> LaurentPolynomial:
    """D_i f = (f - z^(-alpha_i) f(s_i z)) / (1 - z^(-alpha_i)), by exact division.

    Second implementation, used to cross-check the monomial strings.
    """
    _check_index(i, cd)
    neg = tuple(-a for a in cd.root(i)) + (0,) * (p.nvars - cd.n)
    m = monomial(neg, p.names)
    num = p - m * act_variables(simple_reflection(i, cd.n), p)
    return exact_divide(num, constant(1, p.names) - m)


def atom_quotient(i: int, p: LaurentPolynomial, cd: CartanData) -> LaurentPolynomial:
    """A_i f = (f - f(s_i z)) / (z^alpha_i - 1)."""
    _check_index(i, cd)
    pos = tuple(cd.root(i)) + (0,) * (p.nvars - cd.n)
    num = p - act_variables(simple_reflection(i, cd.n), p)
    return exact_divide(num, monomial(pos, p.names) - 1)


def pad_partition(lam, n: int) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"partition {lam} has more than {n} parts")
        lam = lam[:n]
    lam = lam + (0,) * (n - len(lam))
    if any(x < 0 for x in lam) or any(lam[k] < lam[k + 1] for k in range(n - 1)):
        raise ValueError(f"{lam} is not a partition")
    return lam


def apply_word(word, p, cd, op=apply_demazure):
    # D_{i1} ... D_{ik} p: the rightmost letter acts first
    for i in reversed(word):
        p = op(i, p, cd)
    return p


@lru_cache(maxsize=4096)
def _dw(w, lam, cd, atom):
    op = apply_atom if atom else apply_demazure
    return apply_word(reduced_word(w), monomial(lam), cd, op)


def demazure_polynomial(w: SignedPermutation, lam, cd: CartanData) -> LaurentPolynomial:
    """D_w z^lambda along the canonical reduced word of w."""
    return _dw(w, pad_partition(lam, cd.n), cd, False)


def atom_polynomial(w: SignedPermutation, lam, cd: CartanData) -> LaurentPolynomial:
    """A_w z^lambda along the canonical reduced word of w."""
    return _dw(w, pad_partition(lam, cd.n), cd, True)


def rho_monomial(n: int) -> LaurentPolynomial:
    return monomial(CartanData("C", n).rho)


def character(lam, cd: CartanData) -> LaurentPolynomial:
    return demazure_polynomial(longest_element(cd.n), lam, cd)
