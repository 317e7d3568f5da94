"""
Quivers of minuscule words, peak-ordered block decompositions, and checks.

The quiver of a reduced word has one vertex per letter, coloured by its
simple root; ``i`` precedes ``j`` when ``i < j`` and the colours are not
orthogonal, and the partial order is the transitive closure.  Its minimal
vertices are the peaks.  Given an ordering of the peaks, the decomposition
is cut out greedily: each peak in turn takes the remaining letters that lie
above it and above no other remaining peak.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations

from .rootsys import Root, RootSystem
from .schubert import (
    FlagSpace, LinesReport, PreconditionError, SchubertVariety,
    is_smooth_minuscule, lines_through_point_space,
)
from .weyl import (
    EnumerationCapError, WeylElement, enumerate_group, from_word, identity,
    is_minuscule_element, min_coset_rep, parabolic_invariants, parabolic_order,
    enum_cap,
)

__all__ = [
    "Quiver", "GeneralizedDecomposition", "MinimalFamilyReport", "ConstructionError",
    "build_quiver", "construction1", "peak_ordering", "all_peak_orderings",
    "goodness_check", "gamma_sequence", "minimal_lift", "section5_checks",
    "stabilizer_weyl_groups", "minimal_families_generalized",
]


class ConstructionError(RuntimeError):
    """Block extraction produced an inconsistent decomposition."""


def _require_simply_laced(R: RootSystem, simple=True):
    if not R.simply_laced:
        raise PreconditionError(f"{R.name} is not simply-laced")
    if simple and not R.irreducible:
        raise PreconditionError(f"{R.name} is not simple")


# -- quiver -----------------------------------------------------------------

@dataclass(frozen=True)
class Quiver:
    system: RootSystem
    word: tuple[int, ...]
    below: tuple[frozenset[int], ...]  # below[j-1] = {i : i <= j}, 1-based vertices

    @property
    def size(self) -> int:
        return len(self.word)

    def color(self, j: int) -> int:
        return self.word[j - 1]

    def precedes(self, i: int, j: int) -> bool:
        return i in self.below[j - 1]

    @cached_property
    def peaks(self) -> tuple[int, ...]:
        return tuple(j for j in range(1, self.size + 1) if self.below[j - 1] == {j})

    @property
    def peak_colors(self) -> tuple[int, ...]:
        return tuple(self.color(p) for p in self.peaks)

    def to_json(self) -> dict:
        return {
            "word": list(self.word),
            "peaks": list(self.peaks),
            "peak_colors": list(self.peak_colors),
            "covers": [[i, j] for j in range(1, self.size + 1)
                       for i in sorted(self.below[j - 1]) if i != j],
        }


def build_quiver(word, R: RootSystem, check=True) -> Quiver:
    """Quiver of a reduced word; ``check`` insists on a minuscule product."""
    word = tuple(word)
    _require_simply_laced(R)
    w = from_word(word, R)
    if not w.is_reduced_word:
        raise PreconditionError(f"word {word} is not reduced")
    if check and not is_minuscule_element(w):
        raise PreconditionError(f"{w} is not a minuscule element")
    below: list[frozenset[int]] = []
    for j, b in enumerate(word, start=1):
        acc = {j}
        for i in range(1, j):
            if R.cartan[b - 1][word[i - 1] - 1] != 0:
                acc |= below[i - 1]
        below.append(frozenset(acc))
    q = Quiver(R, word, tuple(below))
    if check and set(q.peak_colors) != w.left_descents():
        raise ConstructionError(f"peak colours {q.peak_colors} differ from "
                                f"left descents {sorted(w.left_descents())}")
    return q


# -- decompositions ---------------------------------------------------------

@dataclass(frozen=True)
class GeneralizedDecomposition:
    system: RootSystem
    block_words: tuple[tuple[int, ...], ...]
    provenance: str = "manual"
    peak_order: tuple[int, ...] | None = None  # peak positions in the source word
    letter_assignment: tuple[int, ...] | None = None  # source position -> block (1-based)

    def __post_init__(self):
        object.__setattr__(self, "block_words", tuple(tuple(b) for b in self.block_words))
        if not self.block_words or any(not b for b in self.block_words):
            raise PreconditionError("blocks must be non-empty")
        total = sum(len(b) for b in self.block_words)
        if self.w.length != total:
            raise ConstructionError(f"lengths do not add up: l(w) = {self.w.length}, "
                                    f"sum of blocks = {total}")

    @classmethod
    def from_blocks(cls, R: RootSystem, blocks) -> "GeneralizedDecomposition":
        return cls(R, tuple(tuple(b) for b in blocks))

    @property
    def m(self) -> int:
        return len(self.block_words)

    @cached_property
    def blocks(self) -> tuple[WeylElement, ...]:
        return tuple(from_word(b, self.system) for b in self.block_words)

    @cached_property
    def refined_word(self) -> tuple[int, ...]:
        return tuple(i for b in self.block_words for i in b)

    @cached_property
    def w(self) -> WeylElement:
        return from_word(self.refined_word, self.system)

    @property
    def boundaries(self) -> tuple[int, ...]:
        """``l_1 = 1, l_2, ..., l_{m+1} = r`` with ``l_{j+1}`` the end of block ``j``."""
        out, acc = [1], 0
        for b in self.block_words:
            acc += len(b)
            out.append(acc)
        return tuple(out)

    def tail(self, i: int) -> WeylElement:
        """``w_i w_{i+1} ... w_m`` (1-based ``i``; ``i = m+1`` is the identity)."""
        return from_word(tuple(x for b in self.block_words[i - 1:] for x in b), self.system)

    def to_json(self) -> dict:
        out = {"blocks": [" ".join(map(str, b)) for b in self.block_words],
               "boundaries": list(self.boundaries), "provenance": self.provenance}
        if self.peak_order is not None:
            out["peak_order"] = list(self.peak_order)
        if self.letter_assignment is not None:
            out["letter_assignment"] = list(self.letter_assignment)
        return out


def peak_ordering(q: Quiver, order="standard") -> tuple[int, ...]:
    """``"standard"`` (peaks in word order) or a permutation of peak positions."""
    if order == "standard" or order is None:
        return q.peaks
    order = tuple(order)
    if sorted(order) != sorted(q.peaks):
        raise PreconditionError(f"ordering {order} is not a permutation of peaks {q.peaks}")
    return order


def peak_ordering_from_colors(q: Quiver, colors) -> tuple[int, ...]:
    by_color = {q.color(p): p for p in q.peaks}
    try:
        return peak_ordering(q, tuple(by_color[c] for c in colors))
    except KeyError as exc:
        raise PreconditionError(f"alpha_{exc.args[0]} is not a peak colour") from None


def all_peak_orderings(q: Quiver):
    return permutations(q.peaks)


def construction1(q: Quiver, order="standard") -> GeneralizedDecomposition:
    """Cut the word into blocks, one per peak, in the given peak order."""
    order = peak_ordering(q, order)
    remaining = set(range(1, q.size + 1))
    live = list(order)
    blocks, assign = [], [0] * q.size
    for n, p in enumerate(order, start=1):
        others = [r for r in live if r != p]
        block = sorted(j for j in remaining
                       if q.precedes(p, j) and not any(q.precedes(r, j) for r in others))
        # the block must be an order ideal of what is left
        for j in block:
            if any(i in remaining and i not in block for i in q.below[j - 1]):
                raise ConstructionError(f"block of peak {p} is not down-closed")
        blocks.append(tuple(q.color(j) for j in block))
        for j in block:
            assign[j - 1] = n
        remaining -= set(block)
        live.remove(p)
    if remaining:
        raise ConstructionError(f"letters {sorted(remaining)} lie above no peak")
    d = GeneralizedDecomposition(q.system, tuple(blocks), "construction1",
                                 tuple(order), tuple(assign))
    if d.w != from_word(q.word, q.system):
        raise ConstructionError("block product differs from the input element")
    return d


# -- goodness ---------------------------------------------------------------

def goodness_check(d: GeneralizedDecomposition) -> dict:
    """Both inclusions of the goodness condition, reported per block."""
    rows = []
    for i in range(1, d.m):
        wi = d.blocks[i - 1]
        upper_i, _, perp_i = parabolic_invariants(wi)
        supp_i = wi.support()
        _, tail_lower, _ = parabolic_invariants(d.tail(i + 1))
        left = upper_i & supp_i
        right = perp_i | supp_i
        rows.append({
            "block": i,
            "left_ok": left <= tail_lower,
            "right_ok": tail_lower <= right,
            "left_set": sorted(left),
            "tail_lower": sorted(tail_lower),
            "right_set": sorted(right),
            "left_violations": sorted(left - tail_lower),
            "right_violations": sorted(tail_lower - right),
        })
    try:
        minuscule = is_minuscule_element(d.w)
    except Exception:
        minuscule = False
    return {
        "provenance": d.provenance,
        "minuscule": minuscule,
        "rows": rows,
        "good": minuscule and all(r["left_ok"] and r["right_ok"] for r in rows),
    }


# -- root sequences ---------------------------------------------------------

def gamma_sequence(word, R: RootSystem) -> list[Root]:
    """``gamma_i = s_{b_i} ... s_{b_1}(alpha_{b_1})`` for the colours ``b`` of ``word``."""
    word = tuple(word)
    if not word:
        return []
    cur = R.simple_root(word[0])
    out = []
    for b in word:
        cur = R.reflect(b, cur)
        out.append(cur)
    return out


def minimal_lift(gamma: Root, R: RootSystem) -> WeylElement:
    """A shortest ``v`` with ``v(gamma)`` the highest root, by greedy ascent.

    Each step applies ``s_i`` for the smallest ``i`` with
    ``<current, alpha_i^v> < 0``, raising the height by one.
    """
    _require_simply_laced(R)
    if not R.is_positive(gamma) or not R.is_root(gamma):
        raise PreconditionError(f"{gamma} is not a positive root")
    top = R.highest_root()
    v = identity(R)
    cur = tuple(gamma)
    while cur != top:
        i = next(i for i in sorted(R.simple_indices)
                 if R.pairing(cur, R.simple_root(i)) < 0)
        cur = R.reflect(i, cur)
        v = v.simple_times(i)
    assert v(gamma) == top and v.length == sum(top) - sum(gamma)
    bad = [mu for mu in v.inversion_set() if R.pairing(mu, R.coroot(gamma)) != -1]
    if bad:
        raise AssertionError(f"inversions {bad} pair with {gamma} to something else than -1")
    return v


def _dominates(a: Root, b: Root) -> bool:
    """``a >= b`` coefficientwise."""
    return all(x >= y for x, y in zip(a, b))


def _neg(beta: Root) -> Root:
    return tuple(-c for c in beta)


def _check5_pre(d: GeneralizedDecomposition):
    if d.provenance != "construction1":
        raise PreconditionError("these checks need a decomposition built by construction1")
    _require_simply_laced(d.system)


def section5_checks(d: GeneralizedDecomposition) -> dict:
    """Evaluate the combinatorial statements on a peak-ordered decomposition.

    Each entry has ``ok`` plus the witnesses it was decided on.
    """
    _check5_pre(d)
    R = d.system
    w, w1 = d.w, d.blocks[0]
    word = d.refined_word
    b1 = word[0]
    beta1 = R.simple_root(b1)
    out: dict = {}

    desc = w1.left_descents()
    out["first_block_single_descent"] = {
        "ok": desc == {b1}, "descents": sorted(desc), "first_color": b1}

    block_desc = [sorted(b.left_descents()) for b in d.blocks]
    out["every_block_single_descent"] = {
        "ok": all(len(x) == 1 for x in block_desc), "descents": block_desc}

    winv = w.inverse()
    bad = [mu for mu in winv.inversion_set() if R.pairing(mu, R.coroot(beta1)) < 0]
    out["pairings_nonnegative"] = {
        "ok": not bad, "checked": len(winv.inversion_set()), "violations": bad}

    image1 = w1.inverse()(beta1)
    supp_root = R.support(image1)
    out["support_match"] = {
        "ok": w1.support() == supp_root, "block_support": sorted(w1.support()),
        "root": list(image1), "root_support": sorted(supp_root)}

    gam = gamma_sequence(word, R)
    drops = [k for k in range(len(gam) - 1) if not _dominates(gam[k], gam[k + 1])]
    out["gamma_monotone"] = {
        "ok": not drops and gam[-1] == winv(beta1) and all(R.is_negative(g) for g in gam),
        "gamma": [list(g) for g in gam], "violations": [k + 1 for k in drops]}

    image = winv(beta1)
    if w == w1:
        out["strict_root_drop"] = {"ok": True, "vacuous": True,
                                   "block_image": list(image1), "full_image": list(image)}
    else:
        out["strict_root_drop"] = {
            "ok": _dominates(image1, image) and image1 != image, "vacuous": False,
            "block_image": list(image1), "full_image": list(image)}

    # with a single block both remaining statements hold trivially
    if d.m == 1:
        out["length_additive"] = {"ok": True, "vacuous": True, "checked": 0, "violations": []}
        out["stabilizers_equal"] = {"ok": True, "vacuous": True}
    else:
        rest = d.tail(2)
        supp1 = w1.support()
        size = parabolic_order(R, supp1)
        if size > enum_cap():
            raise EnumerationCapError(f"|W_Supp(w_1)| = {size} exceeds the enumeration cap")
        fails = [u.reduced_word for u in enumerate_group(R, supp1)
                 if (u * rest).length != u.length + rest.length]
        out["length_additive"] = {"ok": not fails, "vacuous": False, "checked": size,
                                  "violations": fails}
        stab = stabilizer_weyl_groups(d)
        out["stabilizers_equal"] = {
            "ok": stab["equal"], "vacuous": False, "A": stab["A"], "B": stab["B"]}

    out["ok"] = all(v["ok"] for v in out.values() if isinstance(v, dict))
    return out


def stabilizer_weyl_groups(d: GeneralizedDecomposition) -> dict:
    """Elements of ``W_Supp(w_1)`` fixing ``wx`` (A) and fixing ``w_1 x_1`` (B)."""
    R = d.system
    w, w1 = d.w, d.blocks[0]
    up_w, up_1 = w.right_descents(), w1.right_descents()
    I_w = R.simple_indices - up_w
    I_1 = R.simple_indices - up_1
    rep_w, rep_1 = min_coset_rep(w, I_w), min_coset_rep(w1, I_1)
    A, B = [], []
    for v in enumerate_group(R, w1.support()):
        if min_coset_rep(v * w, I_w) == rep_w:
            A.append(v.reduced_word)
        if min_coset_rep(v * w1, I_1) == rep_1:
            B.append(v.reduced_word)
    A, B = sorted(A, key=lambda x: (len(x), x)), sorted(B, key=lambda x: (len(x), x))
    return {"A": [list(x) for x in A], "B": [list(x) for x in B], "equal": A == B}


# -- minimal families -------------------------------------------------------

@dataclass(frozen=True)
class MinimalFamilyReport:
    block_index: int
    alpha: int
    height_pair: tuple[int, int]
    is_minimal: bool
    family_dimension: int | None
    tail_descends: bool
    fiber_block: tuple[int, ...]
    fiber_lines: LinesReport | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        fiber = {"block": " ".join(map(str, self.fiber_block))}
        if self.fiber_lines is not None:
            fiber["lines"] = self.fiber_lines.to_json()
        return {"block": self.block_index, "alpha": self.alpha,
                "heights": list(self.height_pair), "minimal": self.is_minimal,
                "dimension": self.family_dimension, "fiber": fiber}


def _block_lines(wi: WeylElement) -> LinesReport:
    """Lines through a point of the homogeneous space ``X(w_i)``."""
    R = wi.system
    (delta,) = tuple(wi.right_descents())
    comp = next(c for c in R.components(wi.support()) if delta in c)
    sub, order = R.restrict(comp)
    return lines_through_point_space(sub, order.index(delta) + 1)


def minimal_families_generalized(d: GeneralizedDecomposition) -> list[MinimalFamilyReport]:
    """Classify the T-stable curve families of the resolution block by block.

    For block ``i`` with tail ``w_i ... w_m`` and each simple factor of the
    tail's support, the left descent ``alpha`` of ``w_i`` in that factor gives
    the heights ``(ht(-tail^{-1} alpha), ht(-w_i^{-1} alpha))``; the family is
    minimal exactly when they agree.
    """
    R = d.system
    _require_simply_laced(R)
    for n, wi in enumerate(d.blocks, start=1):
        try:
            mini = is_minuscule_element(wi)
        except Exception as exc:
            raise PreconditionError(str(exc)) from None
        if not mini:
            raise PreconditionError(f"block {n} ({wi}) is not minuscule")
        space = FlagSpace(R, R.simple_indices - wi.right_descents())
        if not is_smooth_minuscule(SchubertVariety(space, wi)):
            raise PreconditionError(f"block {n} ({wi}) has a singular Schubert variety")
    out = []
    for n, wi in enumerate(d.blocks, start=1):
        tail = d.tail(n)
        tinv, iinv = tail.inverse(), wi.inverse()
        lines = _block_lines(wi)
        for comp in R.components(tail.support()):
            for alpha in sorted(wi.left_descents() & set(comp)):
                a = R.simple_root(alpha)
                t_img, b_img = tinv(a), iinv(a)
                heights = (R.height(R.coroot(_neg(t_img))), R.height(R.coroot(_neg(b_img))))
                minimal = heights[0] == heights[1]
                dim = heights[1] - 1 if minimal else None
                if minimal and dim != lines.dimension:
                    raise AssertionError(f"block {n}: dimension {dim} but the block's "
                                         f"space of lines has dimension {lines.dimension}")
                out.append(MinimalFamilyReport(
                    n, alpha, heights, minimal, dim, R.is_negative(t_img),
                    d.block_words[n - 1], lines))
    return out
