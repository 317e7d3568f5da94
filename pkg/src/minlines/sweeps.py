"""Exhaustive property sweeps over minuscule elements of small types."""

from __future__ import annotations

from .bottsam import BSVariety
from .perrin import all_peak_orderings, build_quiver, construction1, section5_checks
from .rootsys import RootSystem, build_root_system
from .schubert import (
    SchubertVariety, anticanonical_degree,
    anticanonical_degree_via_canonical_class, curves_at_base_point,
    is_smooth_minuscule, maximal_flag_space, t_curves_through_flag,
)
from .weyl import (
    bruhat_leq, enumerate_coset_reps, enumerate_group, identity,
    reduced_words,
)

__all__ = [
    "minuscule_elements", "sweep_bott_exchange", "sweep_peak_orderings",
    "sweep_oracles", "subword_products", "BOTT_TYPES", "PEAK_TYPES", "run_sweep",
]

BOTT_TYPES = (("A4", None), ("D4", None))
PEAK_TYPES = (("A5", None), ("D5", (1, 4, 5)), ("E6", (1,)))

CHECK_NAMES = ("first_block_single_descent", "pairings_nonnegative", "support_match",
               "gamma_monotone", "strict_root_drop", "length_additive", "stabilizers_equal")


def _minuscule_nodes(R: RootSystem, nodes=None) -> list[int]:
    if nodes is None:
        return [i for i in sorted(R.simple_indices) if R.is_minuscule_node(i)]
    return list(nodes)


def minuscule_elements(R: RootSystem, node: int):
    """Non-identity minimal coset representatives for ``G/P^node``."""
    space = maximal_flag_space(R, node)
    return [w for w in enumerate_coset_reps(R, space.levi) if not w.is_identity()]


def sweep_bott_exchange(types=BOTT_TYPES) -> dict:
    """Simple suffix root against the exchange identity, over all reduced words."""
    words = curves = failures = 0
    bad = []
    for name, nodes in types:
        R = build_root_system(name)
        for node in _minuscule_nodes(R, nodes):
            space = maximal_flag_space(R, node)
            for w in minuscule_elements(R, node):
                for word in reduced_words(w):
                    words += 1
                    bs = BSVariety(space, word)
                    targets = set()
                    for j in range(1, len(word) + 1):
                        curves += 1
                        k = R.is_simple(bs.suffix_root(j))
                        exch = [a for a in sorted(R.simple_indices) if bs.exchange_holds(j, a)]
                        if (k is None) != (not exch) or (k is not None and exch != [k]):
                            failures += 1
                            bad.append((name, node, word, j))
                        if k is not None:
                            targets.add(k)
                    if targets != set(w.right_descents()):
                        failures += 1
                        bad.append((name, node, word, "targets"))
    return {"reduced_words": words, "curves": curves, "failures": failures,
            "examples": [list(map(str, b)) for b in bad[:5]]}


def sweep_peak_orderings(types=PEAK_TYPES) -> dict:
    """Every peak ordering of every minuscule element: all statements checked."""
    counts = {k: 0 for k in CHECK_NAMES}
    elements = instances = failures = 0
    bad = []
    for name, nodes in types:
        R = build_root_system(name)
        for node in _minuscule_nodes(R, nodes):
            for w in minuscule_elements(R, node):
                elements += 1
                q = build_quiver(w.reduced_word, R)
                for order in all_peak_orderings(q):
                    instances += 1
                    d = construction1(q, order)
                    rep = section5_checks(d)
                    for k in CHECK_NAMES:
                        if rep[k]["ok"]:
                            counts[k] += 1
                        else:
                            failures += 1
                            bad.append((name, node, w.reduced_word, order, k))
    return {"elements": elements, "instances": instances, "passes": counts,
            "failures": failures, "examples": [list(map(str, b)) for b in bad[:5]]}


def subword_products(w) -> set:
    """All products of subwords of the reduced word of ``w``."""
    R = w.system
    out = {identity(R)}
    for i in w.reduced_word:
        out |= {u.times_simple(i) for u in out}
    return out


def sweep_oracles() -> dict:
    out = {}
    checked = failures = 0
    for name in ("A3", "D4"):
        R = build_root_system(name)
        group = enumerate_group(R)
        for w in group:
            below = subword_products(w)
            for u in group:
                checked += 1
                failures += bruhat_leq(u, w) != (u in below)
    out["bruhat"] = {"pairs": checked, "failures": failures}

    checked = failures = 0
    for name, node in (("A4", 2), ("D5", 1)):
        R = build_root_system(name)
        space = maximal_flag_space(R, node)
        for w in minuscule_elements(R, node):
            X = SchubertVariety(space, w)
            checked += 1
            failures += is_smooth_minuscule(X) != (curves_at_base_point(X) == w.length)
    out["smoothness"] = {"elements": checked, "failures": failures}

    checked = failures = 0
    R = build_root_system("A4")
    for node in sorted(R.simple_indices):
        space = maximal_flag_space(R, node)
        for w in enumerate_coset_reps(R, space.levi):
            for C in t_curves_through_flag(space, w):
                checked += 1
                failures += anticanonical_degree(C, space) != \
                    anticanonical_degree_via_canonical_class(C, space)
    out["degrees"] = {"curves": checked, "failures": failures}
    out["failures"] = sum(v["failures"] for v in out.values())
    return out


SWEEPS = {"5": sweep_bott_exchange, "6": sweep_peak_orderings, "7": sweep_oracles}


def run_sweep(which="5,6,7") -> dict:
    names = [s.strip() for s in str(which).split(",") if s.strip()]
    unknown = [s for s in names if s not in SWEEPS]
    if unknown:
        raise ValueError(f"unknown sweep(s): {', '.join(unknown)}")
    return {s: SWEEPS[s]() for s in names}
