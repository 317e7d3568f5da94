"""
T-stable curves, degrees, line families and smoothness on Schubert varieties.

A flag space ``G/P_I`` is named by its root system and its Levi set ``I``.
Curves are keyed by ``(w, beta)`` with ``beta`` in ``w(R+ \\ R+_I)``: the
curve ``C_{w,beta}`` joins ``wx`` and ``s_beta wx``, and its degree
against a line bundle is the pairing of the weight with ``w^{-1}(beta^v)``.
For curves lying in ``X(w)`` this ``beta`` is a negative root.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .rootsys import Root, RootSystem, Weight
from .weyl import (
    WeylElement, WeylError, bruhat_leq, enumerate_coset_reps,
    is_minuscule_element, longest_element, min_coset_rep, parabolic_invariants,
    reflection,
)

__all__ = [
    "FlagSpace", "SchubertVariety", "TStableCurve", "LineFamilyReport",
    "LinesReport", "PreconditionError", "maximal_flag_space",
    "t_curves_through_flag", "t_curves_through_schubert", "curve_degree",
    "anticanonical_degree", "anticanonical_degree_via_canonical_class",
    "covered_by_schubert_line", "lines_through_point_space",
    "line_families_on_schubert", "is_smooth_minuscule", "curves_at_base_point",
    "homogeneous_space_label", "lines_space_label",
]


class PreconditionError(ValueError):
    """An input violates the precondition of an operation."""


@dataclass(frozen=True)
class FlagSpace:
    system: RootSystem
    levi: frozenset[int]

    def __post_init__(self):
        levi = frozenset(self.levi)
        object.__setattr__(self, "levi", levi)
        if not levi <= self.system.simple_indices:
            raise PreconditionError(f"Levi set {sorted(levi)} not inside S")

    @property
    def marked(self) -> frozenset[int]:
        """``S \\ I``, the nodes carrying the ample generators."""
        return self.system.simple_indices - self.levi

    @property
    def min_ample(self) -> Weight:
        """``varpi_I``, the sum of the fundamental weights off ``I``."""
        return tuple(int(i + 1 not in self.levi) for i in range(self.system.rank))

    @property
    def is_minuscule(self) -> bool:
        m = self.marked
        return len(m) == 1 and self.system.irreducible and \
            self.system.is_minuscule_node(next(iter(m)))

    @cached_property
    def w0_levi(self) -> WeylElement:
        return longest_element(self.system, self.levi)

    @cached_property
    def anticanonical_root(self) -> Root:
        """``2(rho - rho_I)`` in root coordinates."""
        R = self.system
        full, part = R.half_sum_doubled(), R.half_sum_doubled(self.levi)
        return tuple(a - b for a, b in zip(full, part))

    def describe(self) -> str:
        return f"{self.system.name}/{{{','.join(map(str, sorted(self.levi)))}}}"


def maximal_flag_space(R: RootSystem, node: int) -> FlagSpace:
    R._check_index(node)
    return FlagSpace(R, R.simple_indices - {node})


@dataclass(frozen=True)
class SchubertVariety:
    space: FlagSpace
    w: WeylElement

    def __post_init__(self):
        if min_coset_rep(self.w, self.space.levi) != self.w:
            raise PreconditionError(f"{self.w} is not a minimal coset representative "
                                    f"for {self.space.describe()}")

    @property
    def dim(self) -> int:
        return self.w.length


@dataclass(frozen=True)
class TStableCurve:
    w: WeylElement
    beta: Root
    degrees: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def fixed_points(self) -> tuple[WeylElement, WeylElement]:
        return self.w, reflection(self.w.system, self.beta) * self.w

    @cached_property
    def pulled_back_coroot(self):
        """``w^{-1}(beta^v)``."""
        R = self.w.system
        return R.coroot(self.w.inverse()(self.beta))


def _check_rep(space: FlagSpace, w: WeylElement):
    if w.system != space.system:
        raise PreconditionError("element and flag space live in different systems")
    if min_coset_rep(w, space.levi) != w:
        raise PreconditionError(f"{w} is not in W^I for {space.describe()}")


def t_curves_through_flag(space: FlagSpace, w: WeylElement) -> list[TStableCurve]:
    """All T-stable curves of ``G/P`` through ``wx``: one per ``beta in w(R+ \\ R+_I)``."""
    _check_rep(space, w)
    R = space.system
    levi_roots = set(R.roots_of(space.levi))
    out = [TStableCurve(w, w(b)) for b in R.positive_roots if b not in levi_roots]
    return sorted(out, key=lambda c: _root_key(R, c.beta))


def t_curves_through_schubert(X: SchubertVariety) -> list[TStableCurve]:
    """T-stable curves of ``X(w)`` through ``wx``: ``beta in w(R+) cap R-``."""
    R, w = X.space.system, X.w
    out = [TStableCurve(w, w(b)) for b in R.positive_roots if R.is_negative(w(b))]
    assert len(out) == w.length
    return sorted(out, key=lambda c: _root_key(R, c.beta))


def _root_key(R: RootSystem, beta: Root) -> int:
    pos = beta if R.is_positive(beta) else tuple(-c for c in beta)
    return R.positive_roots.index(pos)


def curve_degree(C: TStableCurve, lam: Weight, space: FlagSpace) -> int:
    """Degree of ``L(lam)`` on ``C``, for ``lam`` a character of ``P``."""
    R = space.system
    if any(lam[i - 1] for i in space.levi):
        raise PreconditionError(f"weight {lam} is not a character of P_I")
    d = R.weight_pairing(lam, C.pulled_back_coroot)
    C.degrees[tuple(lam)] = d
    return d


def anticanonical_degree(C: TStableCurve, space: FlagSpace) -> int:
    """``-K . C`` as ``ht(w^{-1} beta^v) + ht(w_{0,I} w^{-1} beta^v)``."""
    R = space.system
    v = C.pulled_back_coroot
    moved = R.coroot(space.w0_levi(R.root_of_coroot(v)))
    return R.height(v) + R.height(moved)


def anticanonical_degree_via_canonical_class(C: TStableCurve, space: FlagSpace) -> int:
    """``-K . C`` as ``<2(rho - rho_I), w^{-1}(beta^v)>``."""
    return space.system.pairing(space.anticanonical_root, C.pulled_back_coroot)


def covered_by_schubert_line(X: SchubertVariety, alpha: int) -> bool:
    """Whether ``X(w)`` is covered by translates of the Schubert line ``X(s_alpha)``."""
    if alpha in X.space.levi:
        raise PreconditionError(f"alpha_{alpha} lies in the Levi set")
    R = X.space.system
    return R.is_negative(X.w(R.simple_root(alpha)))


# -- lines on minuscule spaces ----------------------------------------------

# (family, node) -> label of G/P and of the lines through a point, for the
# minuscule pairs of simply-laced types.
def homogeneous_space_label(family: str, rank: int, node: int) -> str | None:
    n, m = rank, node
    if family == "A":
        return f"G({m},{n + 1})" if 1 < m < n else f"P^{n}"
    if family == "D":
        if m == 1:
            return f"Q^{2 * n - 2}"
        if m in (n - 1, n):
            return f"S^{n * (n - 1) // 2}"
    if family == "E":
        if n == 6 and m in (1, 6):
            return "X^16"
        if n == 7 and m == 7:
            return "X^27"
    return None


def lines_space_label(family: str, rank: int, node: int) -> str | None:
    n, m = rank, node
    if family == "A":
        parts = []
        if m - 1:
            parts.append(f"(P^{m - 1})*")
        if n - m:
            parts.append(f"P^{n - m}")
        return " x ".join(parts) or "point"
    if family == "D":
        if m == 1:
            return f"Q^{2 * n - 4}"
        if m in (n - 1, n):
            return f"G(2,{n})"
    if family == "E":
        if n == 6 and m in (1, 6):
            return "S^10"
        if n == 7 and m == 7:
            return "X^16"
    return None


@dataclass(frozen=True)
class LinesReport:
    system: str
    node: int
    dimension: int
    height_formula: int
    stabilizer_levi: frozenset[int]
    levi_type: str
    space_label: str | None
    lines_label: str | None

    def to_json(self) -> dict:
        return {
            "system": self.system, "node": self.node, "dimension": self.dimension,
            "height_formula": self.height_formula,
            "stabilizer_levi": sorted(self.stabilizer_levi),
            "levi_type": self.levi_type, "space": self.space_label,
            "lines": self.lines_label,
        }


def lines_through_point_space(R: RootSystem, alpha: int) -> LinesReport:
    """Variety of lines through the base point of ``G/P^alpha``.

    The dimension is counted as ``#(R+_I \\ R+_{I cap alpha^perp})`` and
    also as ``ht(w_{0,I}(alpha^v)) - 1``; the two must agree.
    """
    R._check_index(alpha)
    if not R.irreducible:
        raise PreconditionError("lines through a point need a simple group")
    if R.lengths[alpha - 1] != max(R.lengths):
        raise PreconditionError(f"alpha_{alpha} is a short root")
    I = R.simple_indices - {alpha}
    stab = I & R.orthogonal(alpha)
    count = len(R.roots_of(I)) - len(R.roots_of(stab))
    w0I = longest_element(R, I)
    via_height = R.height(R.coroot(w0I(R.simple_root(alpha)))) - 1
    if count != via_height:
        raise AssertionError(f"dimension mismatch {count} != {via_height}")
    t = R.types[0]
    return LinesReport(R.name, alpha, count, via_height, stab, R.levi_type(I),
                       homogeneous_space_label(t.family, t.rank, alpha),
                       lines_space_label(t.family, t.rank, alpha))


@dataclass(frozen=True)
class LineFamilyReport:
    v: WeylElement
    dimension: int
    is_maximal: bool

    def to_json(self) -> dict:
        return {"v": self.v.to_json(), "dimension": self.dimension,
                "maximal": self.is_maximal}


def _minuscule_node(space: FlagSpace) -> int:
    if not space.is_minuscule:
        raise PreconditionError(f"{space.describe()} is not a minuscule flag space")
    return next(iter(space.marked))


def line_families_on_schubert(X: SchubertVariety, maximal_only=True) -> list[LineFamilyReport]:
    """Families of lines in ``X(w)`` through ``wx``, one per Bruhat-maximal ``v``.

    ``v`` runs over minimal representatives of ``W_I / W_{I cap alpha^perp}``
    with ``w v(alpha)`` negative.  With ``maximal_only=False`` every such ``v``
    is returned, flagged.
    """
    space = X.space
    alpha = _minuscule_node(space)
    R = space.system
    I = space.levi
    stab = I & R.orthogonal(alpha)
    # minimal reps of W_I / W_stab: BFS from e by left multiplication inside W_I
    reps = enumerate_coset_reps(R, stab, within=I)
    a = R.simple_root(alpha)
    good = [v for v in reps if R.is_negative(X.w(v(a)))]
    out = []
    for v in good:
        top = not any(u != v and bruhat_leq(v, u) for u in good)
        if top or not maximal_only:
            out.append(LineFamilyReport(v, v.length, top))
    return sorted(out, key=lambda r: (-r.dimension, r.v.reduced_word))


def is_smooth_minuscule(X: SchubertVariety) -> bool:
    """``X(w)`` is smooth iff ``Supp(w)`` lies in ``I_w``."""
    try:
        ok = is_minuscule_element(X.w)
    except WeylError as exc:
        raise PreconditionError(str(exc)) from None
    if not ok:
        raise PreconditionError(f"{X.w} is not a minuscule element")
    _, lower, _ = parabolic_invariants(X.w)
    return X.w.support() <= lower


def curves_at_base_point(X: SchubertVariety) -> int:
    """Number of T-stable curves of ``X(w)`` through the base point ``x``."""
    R, I = X.space.system, X.space.levi
    levi_roots = set(R.roots_of(I))
    return sum(1 for b in R.positive_roots if b not in levi_roots
               and bruhat_leq(min_coset_rep(reflection(R, b), I), X.w))
