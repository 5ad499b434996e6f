"""Signed permutations: the Weyl group of types B and C.

An element is stored by its window ``(w(1), ..., w(n))``; a negative entry
-j stands for the barred letter.  Products compose as functions,
``(u*v)(i) = u(v(i))``.  The generator s_i (i < n) swaps i and i+1, and
s_n negates n.
"""
from __future__ import annotations

import re
from collections import deque
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Sequence


class SignedPermutation:
    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(abs(x) for x in images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a signed permutation: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("SignedPermutation is immutable")

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image of a signed letter; w(-i) = -w(i)."""
        v = self.images[abs(i) - 1]
        return v if i > 0 else -v

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def inverse(self) -> "SignedPermutation":
        out = [0] * self.rank
        for i, v in enumerate(self.images, start=1):
            out[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(out)

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        # only for sorting in a fixed order
        return (length(self), self.images) < (length(other), other.images)

    def __repr__(self):
        return f"SignedPermutation({list(self.images)})"

    def __str__(self):
        return word_text(self)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.rank + 1))


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(range(1, n + 1))


def simple_reflection(i: int, n: int) -> SignedPermutation:
    if not 1 <= i <= n:
        raise ValueError(f"generator s{i} out of range for rank {n}")
    img = list(range(1, n + 1))
    if i < n:
        img[i - 1], img[i] = img[i], img[i - 1]
    else:
        img[n - 1] = -n
    return SignedPermutation(img)


def longest_element(n: int) -> SignedPermutation:
    return SignedPermutation(-i for i in range(1, n + 1))


def compose(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    if u.rank != v.rank:
        raise ValueError("rank mismatch")
    return SignedPermutation(u(x) for x in v.images)


def from_word(word: Sequence[int], n: int) -> SignedPermutation:
    w = identity(n)
    for i in word:
        w = w * simple_reflection(i, n)
    return w


def all_elements(n: int) -> list[SignedPermutation]:
    """All 2^n n! elements, sorted by length then window."""
    out = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            out.append(SignedPermutation(s * p for s, p in zip(signs, perm)))
    return sorted(out)


@lru_cache(maxsize=None)
def _bfs(n: int) -> dict:
    # breadth-first search from the identity, right-multiplying by s_1..s_n
    words = {identity(n): ()}
    queue = deque([identity(n)])
    gens = [simple_reflection(i, n) for i in range(1, n + 1)]
    while queue:
        u = queue.popleft()
        for i, s in enumerate(gens, start=1):
            v = u * s
            if v not in words:
                words[v] = words[u] + (i,)
                queue.append(v)
    return words


def length_and_reduced_word(w: SignedPermutation) -> tuple[int, tuple[int, ...]]:
    word = _bfs(w.rank)[w]
    return len(word), word


def length(w: SignedPermutation) -> int:
    return len(_bfs(w.rank)[w])


def reduced_word(w: SignedPermutation) -> tuple[int, ...]:
    return _bfs(w.rank)[w]


def all_reduced_words(w: SignedPermutation) -> list[tuple[int, ...]]:
    """Every reduced word, found by peeling right descents."""
    n = w.rank
    if w.is_identity():
        return [()]
    out = []
    ell = length(w)
    for i in range(1, n + 1):
        u = w * simple_reflection(i, n)
        if length(u) == ell - 1:
            out.extend(word + (i,) for word in all_reduced_words(u))
    return sorted(out)


@lru_cache(maxsize=None)
def lower_interval(w: SignedPermutation, word: tuple[int, ...] | None = None) -> frozenset:
    """{y : y <= w}, read off the subwords of one reduced word of w."""
    n = w.rank
    if word is None:
        word = reduced_word(w)
    found = set()
    for k in range(len(word) + 1):
        for sub in combinations(word, k):
            y = from_word(sub, n)
            if length(y) == k:
                found.add(y)
    return frozenset(found)


def bruhat_leq(y: SignedPermutation, w: SignedPermutation) -> bool:
    if y.rank != w.rank:
        raise ValueError("rank mismatch")
    return y in lower_interval(w)


def color_word(w: SignedPermutation) -> tuple[int, ...]:
    """Left boundary colors of the Delta rows, top to bottom.

    These are the first n entries of the color vector (c1..cn, cnb..c1b)
    after w w0 acts on its positions, so entry i is c_{(w w0)^-1 (i)}.
    Returned as signed indices: +j for c_j, -j for its bar.
    """
    return (w * longest_element(w.rank)).inverse().images


# text forms

def word_text(w: SignedPermutation) -> str:
    word = reduced_word(w)
    return " ".join(f"s{i}" for i in word) if word else "1"


def window_text(w: SignedPermutation) -> str:
    return "[" + ", ".join(str(x) for x in w.images) + "]"


def parse_weyl(text: str, n: int) -> SignedPermutation:
    """Accept "[2, -1]" window notation or a word such as "s1 s2 s1" or "1"."""
    t = text.strip()
    if t.startswith("["):
        vals = [int(x) for x in re.findall(r"-?\d+", t)]
        if len(vals) != n:
            raise ValueError(f"window {t!r} does not have rank {n}")
        return SignedPermutation(vals)
    if t in ("", "1", "e", "id", "identity"):
        return identity(n)
    if t == "w0":
        return longest_element(n)
    gens = re.findall(r"s?(\d+)", t.replace("*", " ").replace(",", " "))
    if not gens or re.sub(r"[s\d\s*,]", "", t):
        raise ValueError(f"cannot parse Weyl element {text!r}")
    return from_word([int(g) for g in gens], n)
