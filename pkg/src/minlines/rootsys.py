"""
Root systems of crystallographic Cartan types, Bourbaki numbering.

Roots, coroots and weights are plain integer tuples:

* a root is written over the simple roots ``alpha_1 .. alpha_n``,
* a coroot over the simple coroots ``alpha_1^v .. alpha_n^v``,
* a weight over the fundamental weights ``varpi_1 .. varpi_n``.

Indices in the public API are 1-based, as in Bourbaki; tuple positions are
0-based. ``cartan[i][j]`` is ``<alpha_j, alpha_i^v>`` (0-based positions).

>>> R = build_root_system("A3")
>>> len(R.positive_roots)
6
>>> R.highest_root()
(1, 1, 1)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial

__all__ = [
    "Root", "Coroot", "Weight", "DynkinType", "RootSystem", "RootSystemError",
    "parse_type", "build_root_system", "cartan_matrix", "weyl_group_order",
    "identify_component",
]

Root = tuple[int, ...]
Coroot = tuple[int, ...]
Weight = tuple[int, ...]


class RootSystemError(ValueError):
    pass


_RANK_BOUNDS = {
    "A": (1, None), "B": (2, None), "C": (2, None), "D": (3, None),
    "E": (6, 8), "F": (4, 4), "G": (2, 2),
}


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise RootSystemError(f"unknown family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise RootSystemError(f"invalid rank {self.rank} for type {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"


def parse_type(spec: str | DynkinType) -> tuple[DynkinType, ...]:
    """Parse ``"A4"``, ``"e7"`` or a product such as ``"A1xA2"``."""
    if isinstance(spec, DynkinType):
        return (spec,)
    parts = [p for p in re.split(r"[x×*+\s]+", spec.strip()) if p]
    if not parts:
        raise RootSystemError(f"empty type string {spec!r}")
    out = []
    for p in parts:
        m = re.fullmatch(r"([A-Ga-g])(\d+)", p)
        if not m:
            raise RootSystemError(f"cannot parse type {p!r}")
        out.append(DynkinType(m.group(1).upper(), int(m.group(2))))
    return tuple(out)


def _edges(t: DynkinType) -> list[tuple[int, int]]:
    n = t.rank
    if t.family in "ABC":
        return [(i, i + 1) for i in range(1, n)]
    if t.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if t.family == "E":
        return [(1, 3), (3, 4), (4, 5), (2, 4)] + [(i, i + 1) for i in range(5, n)]
    if t.family == "F":
        return [(1, 2), (2, 3), (3, 4)]
    return [(1, 2)]  # G2


def _short_nodes(t: DynkinType) -> set[int]:
    if t.family == "B":
        return {t.rank}
    if t.family == "C":
        return set(range(1, t.rank))
    if t.family == "F":
        return {3, 4}
    if t.family == "G":
        return {1}
    return set()


def _symmetrizer(t: DynkinType) -> list[int]:
    """Squared root lengths (up to scale) per node, 1-based order."""
    ratio = 3 if t.family == "G" else 2
    short = _short_nodes(t)
    return [1 if i in short else ratio for i in range(1, t.rank + 1)] if short \
        else [1] * t.rank


def cartan_matrix(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    d = _symmetrizer(t)
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for i, j in _edges(t):
        i, j = i - 1, j - 1
        # <alpha_j, alpha_i^v> = 2 (a_j, a_i)/(a_i, a_i); the longer root gets the bigger |entry|
        if d[i] == d[j]:
            a[i][j] = a[j][i] = -1
        elif d[i] < d[j]:
            a[i][j], a[j][i] = -(d[j] // d[i]), -1
        else:
            a[i][j], a[j][i] = -1, -(d[i] // d[j])
    return tuple(tuple(r) for r in a)


def weyl_group_order(t: DynkinType) -> int:
    n = t.rank
    if t.family == "A":
        return factorial(n + 1)
    if t.family in "BC":
        return 2 ** n * factorial(n)
    if t.family == "D":
        return 2 ** (n - 1) * factorial(n)
    return {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}[str(t)]


def _block_diag(blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = b[i][j]
        off += k
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A (possibly reducible) root system given by its Cartan matrix.

    Components of a product type are numbered consecutively, so ``A1xA2``
    has simple roots 1 (first factor) and 2, 3 (second factor).
    """

    types: tuple[DynkinType, ...]
    cartan: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]  # squared lengths of simple roots, up to scale
    positive_roots: tuple[Root, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "positive_roots", self._close())

    # -- construction -------------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def name(self) -> str:
        return "x".join(str(t) for t in self.types)

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan == other.cartan \
            and self.lengths == other.lengths

    def __hash__(self):
        return hash((self.cartan, self.lengths))

    def _close(self) -> tuple[Root, ...]:
        n = self.rank
        simple = [self.simple_root(i) for i in range(1, n + 1)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(1, n + 1):
                    gamma = self.reflect(i, beta)
                    if gamma not in seen and all(c >= 0 for c in gamma):
                        seen.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        return tuple(sorted(seen, key=lambda r: (sum(r), tuple(-c for c in r))))

    @property
    def simply_laced(self) -> bool:
        return all(t.simply_laced for t in self.types)

    @property
    def irreducible(self) -> bool:
        return len(self.types) == 1

    @property
    def simple_indices(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1))

    # -- vectors ------------------------------------------------------------
    def simple_root(self, i: int) -> Root:
        self._check_index(i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def _check_index(self, i: int):
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"simple root index {i} out of range 1..{self.rank}")

    def _check_vec(self, v, what="vector"):
        if len(v) != self.rank:
            raise RootSystemError(f"{what} {v} has length {len(v)}, expected {self.rank}")

    def pairing(self, beta: Root, coroot: Coroot) -> int:
        """``<beta, coroot>``; bilinear, with ``<alpha_i, alpha_j^v> = cartan[j][i]``."""
        self._check_vec(beta, "root")
        self._check_vec(coroot, "coroot")
        a = self.cartan
        return sum(c * beta[i] * a[j][i]
                   for j, c in enumerate(coroot) if c
                   for i in range(self.rank) if beta[i])

    def coroot(self, beta: Root) -> Coroot:
        """``beta^v = 2 beta / (beta, beta)`` in simple-coroot coordinates."""
        self._check_vec(beta, "root")
        if self.simply_laced:
            return tuple(beta)
        d = self.lengths
        norm = sum(Fraction(b * b2) * self._form(i, j)
                   for i, b in enumerate(beta) for j, b2 in enumerate(beta))
        out = []
        for i, b in enumerate(beta):
            # alpha_i = (|alpha_i|^2 / 2) alpha_i^v
            c = Fraction(b * d[i]) / norm
            if c.denominator != 1:
                raise RootSystemError(f"{beta} is not a root")
            out.append(int(c))
        return tuple(out)

    def root_of_coroot(self, coroot: Coroot) -> Root:
        if self.simply_laced:
            return tuple(coroot)
        for beta in self.positive_roots:
            if self.coroot(beta) == tuple(coroot):
                return beta
            if self.coroot(beta) == tuple(-c for c in coroot):
                return tuple(-c for c in beta)
        raise RootSystemError(f"{coroot} is not a coroot")

    def _form(self, i: int, j: int) -> Fraction:
        # (alpha_i, alpha_j) = <alpha_i, alpha_j^v> |alpha_j|^2 / 2
        return Fraction(self.cartan[j][i] * self.lengths[j], 2)

    def weight_pairing(self, lam: Weight, coroot: Coroot) -> int:
        self._check_vec(lam, "weight")
        self._check_vec(coroot, "coroot")
        return sum(l * c for l, c in zip(lam, coroot))

    def root_as_weight(self, beta: Root) -> Weight:
        """Coordinates of ``beta`` over the fundamental weights."""
        self._check_vec(beta, "root")
        return tuple(sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
                     for i in range(self.rank))

    def height(self, coroot: Coroot) -> int:
        return sum(coroot)

    def reflect(self, i: int, beta: Root) -> Root:
        """``s_i(beta) = beta - <beta, alpha_i^v> alpha_i``."""
        k = sum(self.cartan[i - 1][j] * c for j, c in enumerate(beta) if c)
        if not k:
            return tuple(beta)
        out = list(beta)
        out[i - 1] -= k
        return tuple(out)

    def reflect_by(self, gamma: Root, beta: Root) -> Root:
        """``s_gamma(beta)`` for an arbitrary root ``gamma``."""
        k = self.pairing(beta, self.coroot(gamma))
        return tuple(b - k * g for b, g in zip(beta, gamma))

    def fundamental_weight(self, i: int) -> Weight:
        self._check_index(i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def positive_root_set(self) -> frozenset[Root]:
        return frozenset(self.positive_roots)

    def is_positive(self, beta: Root) -> bool:
        return all(c >= 0 for c in beta) and any(beta)

    def is_negative(self, beta: Root) -> bool:
        return all(c <= 0 for c in beta) and any(beta)

    def is_root(self, beta: Root) -> bool:
        beta = tuple(beta)
        return beta in self.positive_root_set or \
            tuple(-c for c in beta) in self.positive_root_set

    def is_simple(self, beta: Root) -> int | None:
        """The index ``i`` if ``beta == alpha_i``, else ``None``."""
        if sum(beta) == 1 and all(c >= 0 for c in beta):
            return beta.index(1) + 1
        return None

    def support(self, beta: Root) -> frozenset[int]:
        return frozenset(i + 1 for i, c in enumerate(beta) if c)

    # -- distinguished elements ---------------------------------------------
    def highest_root(self) -> Root:
        if not self.irreducible:
            raise RootSystemError("highest root requested for a reducible system")
        best = max(self.positive_roots, key=sum)
        assert all(all(x >= y for x, y in zip(best, b)) for b in self.positive_roots)
        return best

    def roots_of(self, J) -> tuple[Root, ...]:
        """Positive roots supported on the index set ``J``."""
        J = frozenset(J)
        return tuple(b for b in self.positive_roots if self.support(b) <= J)

    def half_sum_doubled(self, J=None) -> Root:
        """``2 rho_J`` as a root-coordinate vector (``J=None`` means all of S)."""
        roots = self.positive_roots if J is None else self.roots_of(J)
        return tuple(sum(b[k] for b in roots) for k in range(self.rank))

    def is_minuscule_weight(self, lam: Weight) -> bool:
        """True iff ``lam`` is a fundamental weight with ``<lam, beta^v> <= 1`` on R+."""
        self._check_vec(lam, "weight")
        if sorted(lam) != [0] * (self.rank - 1) + [1]:
            raise RootSystemError(f"{lam} is not a fundamental weight")
        return max(self.weight_pairing(lam, self.coroot(b))
                   for b in self.positive_roots) == 1

    def is_minuscule_node(self, i: int) -> bool:
        return self.is_minuscule_weight(self.fundamental_weight(i))

    def orthogonal(self, i: int) -> frozenset[int]:
        """``alpha_i^perp``: simple roots orthogonal to ``alpha_i``."""
        return frozenset(j for j in self.simple_indices if self.cartan[i - 1][j - 1] == 0)

    def components(self, J=None) -> list[list[int]]:
        """Connected components of the Dynkin subdiagram on ``J``, sorted."""
        J = sorted(self.simple_indices if J is None else J)
        left, comps = set(J), []
        for start in J:
            if start not in left:
                continue
            comp, stack = [], [start]
            left.discard(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in list(left):
                    if self.cartan[i - 1][j - 1]:
                        left.discard(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return sorted(comps)

    def restrict(self, J) -> tuple["RootSystem", list[int]]:
        """Subsystem on ``J``; returns it with the list of original indices."""
        J = sorted(J)
        if not J:
            raise RootSystemError("empty subsystem")
        comps = self.components(J)
        types, order = [], []
        for comp in comps:
            t, bourbaki = identify_component(self, comp)
            types.append(t)
            order.extend(bourbaki)
        sub = [[self.cartan[i - 1][j - 1] for j in order] for i in order]
        return RootSystem(tuple(types), tuple(tuple(r) for r in sub),
                          tuple(self.lengths[i - 1] for i in order)), order

    def levi_type(self, J) -> str:
        comps = self.components(J)
        if not comps:
            return "trivial"
        return "x".join(str(identify_component(self, c)[0]) for c in comps)


def identify_component(R: RootSystem, comp) -> tuple[DynkinType, list[int]]:
    """Dynkin type of a connected node set, and its nodes in Bourbaki order.

    Ambiguous orientations (the ends of a type A chain, the legs of D4 and
    E6) are broken toward the smaller original index.
    """
    comp = sorted(comp)
    n = len(comp)
    nb = {i: sorted(j for j in comp if j != i and R.cartan[i - 1][j - 1]) for i in comp}
    if any(len(v) > 3 for v in nb.values()):
        raise RootSystemError(f"nodes {comp} do not form a Dynkin diagram")
    lengths = {i: R.lengths[i - 1] for i in comp}
    if n == 1:
        return DynkinType("A", 1), comp

    def walk(start, avoid):
        path, prev, cur = [start], avoid, start
        while True:
            nxt = [j for j in nb[cur] if j != prev and j not in path]
            if len(nxt) != 1:
                return path
            prev, cur = cur, nxt[0]
            path.append(cur)

    branch = [i for i in comp if len(nb[i]) == 3]
    if branch:
        b = branch[0]
        arms = sorted((walk(j, b) for j in nb[b]), key=lambda a: (len(a), a[-1]))
        la = [len(a) for a in arms]
        if la[0] == 1 and la[1] == 1:
            # D_n: long arm end is node 1, the two short legs are n-1, n
            if n == 4:
                arms = sorted(arms, key=lambda a: a[0])
            long_arm = arms[2]
            order = list(reversed(long_arm)) + [b] + sorted([arms[0][0], arms[1][0]])
            return DynkinType("D", n), order
        if la[0] == 1 and la[1] == 2 and la[2] in (2, 3, 4):
            a2 = arms[1]
            long_arm = arms[2]
            if la[2] == 2:
                # E6: both length-2 legs, orient by smaller end index
                a2, long_arm = sorted([arms[1], arms[2]], key=lambda a: a[-1])
            order = [a2[1], arms[0][0], a2[0], b] + long_arm
            return DynkinType("E", n), order
        raise RootSystemError(f"nodes {comp} do not form a Dynkin diagram")

    ends = sorted(i for i in comp if len(nb[i]) == 1)
    path = walk(ends[0], None)
    multi = [(path[k], path[k + 1]) for k in range(n - 1)
             if lengths[path[k]] != lengths[path[k + 1]]]
    if not multi:
        return DynkinType("A", n), path
    i, j = multi[0]
    ratio = max(lengths[i], lengths[j]) // min(lengths[i], lengths[j])
    if ratio == 3:
        if lengths[path[0]] > lengths[path[1]]:
            path.reverse()
        return DynkinType("G", 2), path
    if n == 4 and {path.index(i), path.index(j)} == {1, 2}:
        # F4: double bond in the middle, long roots first
        if lengths[path[0]] < lengths[path[-1]]:
            path.reverse()
        return DynkinType("F", 4), path
    # B_n / C_n: double bond at the end of the chain
    if path.index(i) == 0 and path.index(j) == 1:
        path.reverse()
    if n == 2:
        if lengths[path[0]] < lengths[path[1]]:
            path.reverse()
        return DynkinType("B", 2), path
    last, before = path[-1], path[-2]
    fam = "B" if lengths[last] < lengths[before] else "C"
    return DynkinType(fam, n), path


def build_root_system(spec: str | DynkinType | tuple[DynkinType, ...]) -> RootSystem:
    """Root system of a Dynkin type string such as ``"E7"`` or ``"A1xA2"``."""
    types = spec if isinstance(spec, tuple) else parse_type(spec)
    cart = _block_diag([cartan_matrix(t) for t in types])
    lengths = tuple(x for t in types for x in _symmetrizer(t))
    return RootSystem(tuple(types), cart, lengths)
