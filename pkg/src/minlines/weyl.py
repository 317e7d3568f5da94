"""
Weyl group elements, reduced words, Bruhat order and parabolic data.

An element is stored as the tuple of images of the simple roots, which is
faithful and composes without growing words.  Reduced words are recovered
by descent extraction.

>>> from minlines.rootsys import build_root_system
>>> R = build_root_system("A4")
>>> w = from_word((2, 1, 4, 3, 2), R)
>>> w.length, w.is_reduced_word
(5, True)
>>> w.inverse()(R.simple_root(2))
(-1, -1, -1, 0)
"""

from __future__ import annotations

import os
import re
from collections.abc import Iterable, Iterator
from functools import cached_property, lru_cache

from .rootsys import Root, RootSystem, RootSystemError, weyl_group_order

__all__ = [
    "WeylElement", "WeylError", "EnumerationCapError", "ParabolicSet",
    "from_word", "parse_word", "identity", "simple_reflection", "reflection",
    "longest_element", "min_coset_rep", "bruhat_leq", "parabolic_invariants",
    "is_minuscule_element", "enumerate_group", "enumerate_coset_reps",
    "reduced_words", "enum_cap", "commutes", "parabolic_order",
]

ParabolicSet = frozenset  # of 1-based simple-root indices

DEFAULT_ENUM_CAP = 10 ** 7


class WeylError(ValueError):
    pass


class EnumerationCapError(RuntimeError):
    pass


def enum_cap() -> int:
    return int(os.environ.get("MINLINES_ENUM_CAP", DEFAULT_ENUM_CAP))


class WeylElement:
    """An element of the Weyl group of ``system``.

    ``word`` is the word the element was built from (possibly not reduced);
    ``reduced_word`` is always reduced.
    """

    def __init__(self, system: RootSystem, images: tuple[Root, ...], word=None):
        self.system = system
        self.images = tuple(tuple(v) for v in images)
        self.word = tuple(word) if word is not None else None

    # -- basic protocol -----------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.system == other.system \
            and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        letters = " ".join(map(str, self.reduced_word)) or "e"
        return f"WeylElement({self.system.name}: {letters})"

    def _same(self, other: WeylElement):
        if self.system != other.system:
            raise WeylError("elements of different Weyl groups")

    def __call__(self, beta: Root) -> Root:
        """Act on a root given in simple-root coordinates."""
        if len(beta) != self.system.rank:
            raise RootSystemError(f"root {beta} does not belong to {self.system.name}")
        out = [0] * self.system.rank
        for c, img in zip(beta, self.images):
            if c:
                for k, x in enumerate(img):
                    out[k] += c * x
        return tuple(out)

    act_on_root = __call__

    def __mul__(self, other: WeylElement) -> WeylElement:
        self._same(other)
        return WeylElement(self.system, tuple(self(img) for img in other.images))

    # -- derived data -------------------------------------------------------
    @cached_property
    def length(self) -> int:
        return sum(1 for b in self.system.positive_roots if self.system.is_negative(self(b)))

    @property
    def is_reduced_word(self) -> bool:
        """Whether the word this element was built from is reduced."""
        return self.word is None or len(self.word) == self.length

    def is_identity(self) -> bool:
        return all(self.system.is_simple(img) == i + 1 for i, img in enumerate(self.images))

    def right_descents(self) -> frozenset[int]:
        return frozenset(i + 1 for i, img in enumerate(self.images)
                         if self.system.is_negative(img))

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    def times_simple(self, i: int) -> WeylElement:
        """``w s_i``."""
        # w s_i (alpha_j) = w(alpha_j) - <alpha_j, alpha_i^v> w(alpha_i)
        row = self.system.cartan[i - 1]
        pivot = self.images[i - 1]
        out = []
        for j, img in enumerate(self.images):
            k = row[j]
            out.append(img if not k else tuple(x - k * y for x, y in zip(img, pivot)))
        return WeylElement(self.system, tuple(out))

    def simple_times(self, i: int) -> WeylElement:
        """``s_i w``."""
        R = self.system
        return WeylElement(R, tuple(R.reflect(i, img) for img in self.images))

    @cached_property
    def reduced_word(self) -> tuple[int, ...]:
        """The lexicographically least reduced word."""
        out, u = [], self.inverse()
        # first letter of w = smallest right descent of w^{-1}
        while True:
            d = u.right_descents()
            if not d:
                return tuple(out)
            i = min(d)
            out.append(i)
            u = u.times_simple(i)

    @cached_property
    def _some_reduced_word(self) -> tuple[int, ...]:
        word, u = [], self
        while True:
            d = u.right_descents()
            if not d:
                return tuple(reversed(word))
            i = min(d)
            word.append(i)
            u = u.times_simple(i)

    def inverse(self) -> WeylElement:
        inv = self.__dict__.get("_inverse")
        if inv is None:
            inv = from_word(tuple(reversed(self._some_reduced_word)), self.system)
            inv.__dict__["_inverse"] = self
            self.__dict__["_inverse"] = inv
        return inv

    def inversion_set(self) -> frozenset[Root]:
        """``{gamma in R+ : w(gamma) in R-}``."""
        R = self.system
        return frozenset(b for b in R.positive_roots if R.is_negative(self(b)))

    def support(self) -> frozenset[int]:
        return frozenset(self.reduced_word)

    def commutes_with(self, other: WeylElement) -> bool:
        return self * other == other * self

    def to_json(self) -> list[int]:
        return list(self.reduced_word)


# -- constructors -----------------------------------------------------------

def identity(R: RootSystem) -> WeylElement:
    return WeylElement(R, tuple(R.simple_root(i) for i in range(1, R.rank + 1)), ())


def simple_reflection(R: RootSystem, i: int) -> WeylElement:
    return WeylElement(R, tuple(R.reflect(i, R.simple_root(j))
                                for j in range(1, R.rank + 1)), (i,))


def reflection(R: RootSystem, beta: Root) -> WeylElement:
    """The reflection ``s_beta`` for an arbitrary root ``beta``."""
    if not R.is_root(beta):
        raise WeylError(f"{beta} is not a root of {R.name}")
    return WeylElement(R, tuple(R.reflect_by(beta, R.simple_root(j))
                                for j in range(1, R.rank + 1)))


def from_word(word: Iterable[int], R: RootSystem) -> WeylElement:
    """The product ``s_{i_1} ... s_{i_l}``; non-reduced words are flagged, not rejected."""
    word = tuple(word)
    w = identity(R)
    for i in word:
        R._check_index(i)
        w = w.times_simple(i)
    return WeylElement(R, w.images, word)


def parse_word(text: str) -> tuple[int, ...]:
    """Parse ``"2 1 4 3 2"``, ``"2,1,4"`` or ``"s2s1s4"``; ``""``/``"e"`` is empty."""
    text = text.strip()
    if text in ("", "e", "id"):
        return ()
    if "s" in text:
        text = text.replace("s", " ")
    parts = [p for p in re.split(r"[\s,]+", text) if p]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise WeylError(f"cannot parse word {text!r}") from None


# -- Bruhat order -----------------------------------------------------------

def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """``u <= w`` in Bruhat order.

    Scans a reduced word of ``w`` from the left and strips the letter from
    ``u`` whenever it is a left descent of ``u``; then ``u <= w`` iff
    ``u`` is exhausted.  This is the leftmost greedy subword search.
    """
    u._same(w)
    if u.length > w.length:
        return False
    cur = u.inverse()  # left descents of u = right descents of u^{-1}
    for i in w.reduced_word:
        if cur.system.is_negative(cur.images[i - 1]):
            cur = cur.times_simple(i)
    return cur.is_identity()


# -- parabolic machinery ----------------------------------------------------

def _as_set(R: RootSystem, I) -> frozenset[int]:
    I = frozenset(I)
    for i in I:
        R._check_index(i)
    return I


def min_coset_rep(w: WeylElement, I) -> WeylElement:
    """The minimal-length element of ``w W_I``."""
    I = _as_set(w.system, I)
    R = w.system
    while True:
        bad = [i for i in sorted(I) if R.is_negative(w.images[i - 1])]
        if not bad:
            return w
        w = w.times_simple(bad[0])


def longest_element(R: RootSystem, I=None) -> WeylElement:
    """The longest element of ``W_I`` (``I=None`` for all of ``W``)."""
    I = R.simple_indices if I is None else _as_set(R, I)
    w = identity(R)
    while True:
        up = [i for i in sorted(I) if R.is_positive(w.images[i - 1])]
        if not up:
            return w
        w = w.times_simple(up[0])


def commutes(R: RootSystem, i: int, j: int) -> bool:
    return i == j or R.cartan[i - 1][j - 1] == 0


def parabolic_order(R: RootSystem, I) -> int:
    I = _as_set(R, I)
    if not I:
        return 1
    sub, _ = R.restrict(I)
    out = 1
    for t in sub.types:
        out *= weyl_group_order(t)
    return out


def parabolic_invariants(w: WeylElement):
    """``(I^w, I_w, w^perp)`` as frozensets of simple-root indices.

    ``I_w`` uses the non-strict order on ``W / W_{I^w}``: ``alpha`` belongs to
    it when the coset of ``s_alpha w`` is at or below that of ``w``.
    """
    R = w.system
    upper = frozenset(i for i in R.simple_indices if R.is_positive(w.images[i - 1]))
    rep = min_coset_rep(w, upper)
    lower = frozenset(i for i in R.simple_indices
                      if bruhat_leq(min_coset_rep(w.simple_times(i), upper), rep))
    perp = frozenset(i for i in R.simple_indices
                     if w.simple_times(i) == w.times_simple(i))
    return upper, lower, perp


def is_minuscule_element(w: WeylElement) -> bool:
    """``S \\ I^w`` is a single root whose fundamental weight is minuscule."""
    R = w.system
    if not (R.irreducible and R.simply_laced):
        raise WeylError("minuscule elements need an irreducible simply-laced system")
    desc = w.right_descents()
    return len(desc) == 1 and R.is_minuscule_node(next(iter(desc)))


# -- enumeration ------------------------------------------------------------

def enumerate_group(R: RootSystem, I=None) -> list[WeylElement]:
    """All of ``W_I`` by breadth-first search, sorted by length then word."""
    I = R.simple_indices if I is None else _as_set(R, I)
    return list(_enumerate_group(R, I, enum_cap()))


@lru_cache(maxsize=32)
def _enumerate_group(R: RootSystem, I: frozenset[int], cap: int) -> tuple[WeylElement, ...]:
    size = parabolic_order(R, I)
    if size > cap:
        raise EnumerationCapError(f"|W_I| = {size} exceeds enumeration cap {cap}")
    start = identity(R)
    seen = {start.images: start}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for i in sorted(I):
                v = u.times_simple(i)
                if v.images not in seen:
                    seen[v.images] = v
                    nxt.append(v)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda v: (v.length, v.reduced_word)))


def enumerate_coset_reps(R: RootSystem, I, within=None) -> list[WeylElement]:
    """``W^I``, the minimal representatives of ``W / W_I``, sorted by length.

    With ``within=J`` only the representatives lying in ``W_J`` are produced.
    """
    I = _as_set(R, I)
    gens = sorted(R.simple_indices if within is None else _as_set(R, within))
    cap = enum_cap()
    start = identity(R)
    seen = {start.images: start}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for i in gens:
                v = u.simple_times(i)
                if v.images in seen or v.length <= u.length:
                    continue
                if any(R.is_negative(v.images[j - 1]) for j in I):
                    continue
                seen[v.images] = v
                nxt.append(v)
                if len(seen) > cap:
                    raise EnumerationCapError(f"|W^I| exceeds enumeration cap {cap}")
        frontier = nxt
    return sorted(seen.values(), key=lambda v: (v.length, v.reduced_word))


def reduced_words(w: WeylElement) -> Iterator[tuple[int, ...]]:
    """All reduced words of ``w``, by depth-first search over right descents."""
    memo: dict = {}

    def rec(u: WeylElement) -> list[tuple[int, ...]]:
        key = u.images
        if key in memo:
            return memo[key]
        d = u.right_descents()
        if not d:
            res = [()]
        else:
            res = [word + (i,) for i in sorted(d) for word in rec(u.times_simple(i))]
        memo[key] = res
        return res

    yield from sorted(rec(w))
