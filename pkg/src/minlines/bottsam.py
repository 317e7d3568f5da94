"""
Bott-Samelson resolutions of Schubert varieties, combinatorially.

Everything here is a formula in the letters of a reduced word
``(i_1, ..., i_l)``: the roots ``beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})``
labelling the T-stable curves through the base point, their intersection
numbers with the Picard basis ``L_1 .. L_l``, their anticanonical degrees,
and which of them are lines or minimal rational curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .rootsys import Root
from .schubert import FlagSpace, PreconditionError
from .weyl import WeylElement, commutes, from_word, identity, min_coset_rep

__all__ = ["BSVariety", "MinimalCurve", "suffix_root"]


@dataclass(frozen=True)
class MinimalCurve:
    j: int
    target: int  # index k of the simple root alpha_k
    exchange_holds: bool


@dataclass(frozen=True)
class BSVariety:
    """The Bott-Samelson variety of a reduced word whose product lies in ``W^I``."""

    space: FlagSpace
    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        w = from_word(self.word, self.space.system)
        if not w.is_reduced_word:
            raise PreconditionError(f"word {self.word} is not reduced")
        if min_coset_rep(w, self.space.levi) != w:
            raise PreconditionError(f"product of {self.word} is not in W^I")

    @property
    def length(self) -> int:
        return len(self.word)

    @cached_property
    def w(self) -> WeylElement:
        return from_word(self.word, self.space.system)

    def _check(self, *idx):
        for j in idx:
            if not 1 <= j <= self.length:
                raise IndexError(f"curve index {j} out of range 1..{self.length}")

    def beta_sequence(self) -> list[Root]:
        R = self.space.system
        out, prefix = [], identity(R)
        for i in self.word:
            out.append(prefix(R.simple_root(i)))
            prefix = prefix.times_simple(i)
        return out

    def pic_degree(self, k: int, j: int) -> int:
        """``L_k . C_j``: zero for ``j > k``, else the ``alpha_{i_k}^v``
        coefficient of ``s_{i_k} ... s_{i_{j+1}}(alpha_{i_j}^v)``."""
        self._check(k, j)
        if j > k:
            return 0
        R = self.space.system
        root = R.simple_root(self.word[j - 1])
        for i in self.word[j:k]:
            root = R.reflect(i, root)
        return R.coroot(root)[self.word[k - 1] - 1]

    def suffix_root(self, j: int) -> Root:
        """``s_{i_l} ... s_{i_{j+1}}(alpha_{i_j})``, which equals ``-w^{-1}(beta_j)``."""
        self._check(j)
        return suffix_root(self.space.system, self.word, j)

    def anticanonical_degree(self, j: int) -> int:
        R = self.space.system
        return R.height(R.coroot(self.suffix_root(j))) + 1

    def is_line(self, j: int) -> bool:
        """``C_j`` is a line iff ``s_{i_j}`` commutes with every later letter."""
        self._check(j)
        R = self.space.system
        a = self.word[j - 1]
        res = all(commutes(R, a, b) for b in self.word[j:])
        assert res == all(self.pic_degree(k, j) == 0 for k in range(j + 1, self.length + 1))
        return res

    def exchange_holds(self, j: int, k: int) -> bool:
        """``w == s_{i_1} .. (s_{i_j} omitted) .. s_{i_l} s_k`` as group elements."""
        self._check(j)
        R = self.space.system
        rest = self.word[:j - 1] + self.word[j:] + (k,)
        return from_word(rest, R) == self.w

    def minimal_curves(self) -> list[MinimalCurve]:
        """Indices ``j`` whose suffix root is simple, with that simple root."""
        R = self.space.system
        out = []
        for j in range(1, self.length + 1):
            k = R.is_simple(self.suffix_root(j))
            if k is not None:
                out.append(MinimalCurve(j, k, self.exchange_holds(j, k)))
        targets = {c.target for c in out}
        if targets != self.w.right_descents():
            raise AssertionError(f"targets {targets} differ from descents of w")
        if not all(c.exchange_holds for c in out):
            raise AssertionError("exchange condition fails for a minimal curve")
        return out

    def rows(self) -> list[dict]:
        minimal = {c.j: c.target for c in self.minimal_curves()}
        return [
            {"j": j, "beta": list(beta), "antican": self.anticanonical_degree(j),
             "is_line": self.is_line(j), "minimal": j in minimal,
             "target": minimal.get(j)}
            for j, beta in enumerate(self.beta_sequence(), start=1)
        ]


def suffix_root(R, word, j) -> Root:
    root = R.simple_root(word[j - 1])
    for i in word[j:]:
        root = R.reflect(i, root)
    return root
