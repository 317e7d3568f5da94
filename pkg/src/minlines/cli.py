"""
Command-line front end.

    minlines curves --type A3 --levi 1,3 --word "1 3 2"
    minlines decompose --type A4 --node 2 --word "2 1 4 3 2" --peak-order standard
    minlines families --type A3 --node 2 --word "1 3 2" --blocks "1|3 2"
    minlines corpus --filter SL9

Output is JSON on stdout (``--table`` for a plain listing).  Exit status is
0 on success, 1 on an internal error, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from importlib import resources

from .bottsam import BSVariety
from .perrin import (
    GeneralizedDecomposition, build_quiver, construction1, goodness_check,
    minimal_families_generalized, peak_ordering_from_colors, section5_checks,
)
from .rootsys import RootSystem, RootSystemError, build_root_system
from .schubert import (
    FlagSpace, PreconditionError, SchubertVariety, anticanonical_degree,
    curve_degree, curves_at_base_point, is_smooth_minuscule,
    line_families_on_schubert, lines_through_point_space,
    t_curves_through_schubert,
)
from .sweeps import run_sweep
from .weyl import (
    EnumerationCapError, WeylError, enumerate_coset_reps, from_word,
    is_minuscule_element, min_coset_rep, parabolic_invariants, parse_word,
)

__all__ = ["run", "main", "execute", "run_corpus", "load_corpus", "InputError"]


class InputError(ValueError):
    """Malformed command-line input."""


INPUT_ERRORS = (InputError, RootSystemError, WeylError, PreconditionError, EnumerationCapError)


# -- parsing helpers --------------------------------------------------------

def _index_list(text: str) -> list[int]:
    if text is None or not text.strip():
        return []
    try:
        return [int(t) for t in re.split(r"[,\s]+", text.strip()) if t]
    except ValueError:
        raise InputError(f"expected a comma list of node indices, got {text!r}") from None


def _root_name(tok: str) -> int:
    m = re.fullmatch(r"(?:alpha|a|α|s)?_?(\d+)", tok.strip(), flags=re.IGNORECASE)
    if not m:
        raise InputError(f"cannot read simple root {tok!r}")
    return int(m.group(1))


def _system(args) -> RootSystem:
    if not args.type:
        raise InputError("--type is required")
    return build_root_system(args.type)


def _word(args, R: RootSystem, required=True) -> tuple[int, ...]:
    if args.word is None:
        if required:
            raise InputError("--word is required")
        return ()
    word = parse_word(args.word)
    for i in word:
        if not 1 <= i <= R.rank:
            raise InputError(f"letter {i} out of range for {R.name}")
    return word


def _levi(args, R: RootSystem, w=None) -> frozenset[int]:
    """Levi set from --levi or --node; otherwise the largest one ``w`` allows."""
    if getattr(args, "levi", None) is not None and getattr(args, "node", None) is not None:
        raise InputError("give --levi or --node, not both")
    if getattr(args, "node", None) is not None:
        if not 1 <= args.node <= R.rank:
            raise InputError(f"node {args.node} out of range for {R.name}")
        return R.simple_indices - {args.node}
    if getattr(args, "levi", None) is not None:
        levi = frozenset(_index_list(args.levi))
        if not levi <= R.simple_indices:
            raise InputError(f"Levi set {sorted(levi)} not inside 1..{R.rank}")
        return levi
    if w is not None:
        return R.simple_indices - w.right_descents()
    raise InputError("--levi or --node is required")


def _roots(R: RootSystem, roots) -> list[list[int]]:
    return [list(r) for r in roots]


def _word_str(word) -> str:
    return " ".join(map(str, word))


# -- subcommands ------------------------------------------------------------

def cmd_root_system(args):
    R = _system(args)
    out = {
        "type": R.name, "rank": R.rank, "cartan": [list(r) for r in R.cartan],
        "positive_roots": len(R.positive_roots), "simply_laced": R.simply_laced,
        "minuscule_nodes": [i for i in sorted(R.simple_indices)
                            if R.irreducible and R.is_minuscule_node(i)],
    }
    if R.irreducible:
        hr = R.highest_root()
        out["highest_root"] = list(hr)
        out["highest_root_height"] = sum(hr)
    if args.roots:
        out["roots"] = _roots(R, R.positive_roots)
    return out


def cmd_weyl(args):
    R = _system(args)
    w = from_word(_word(args, R), R)
    upper, lower, perp = parabolic_invariants(w)
    out = {
        "input_word_reduced": w.is_reduced_word, "word": _word_str(w.reduced_word),
        "length": w.length, "inverse": _word_str(w.inverse().reduced_word),
        "left_descents": sorted(w.left_descents()),
        "right_descents": sorted(w.right_descents()),
        "support": sorted(w.support()),
        "I_upper": sorted(upper), "I_lower": sorted(lower), "perp": sorted(perp),
    }
    if R.irreducible and R.simply_laced:
        out["minuscule"] = is_minuscule_element(w)
    if args.levi is not None or args.node is not None:
        out["min_coset_rep"] = _word_str(min_coset_rep(w, _levi(args, R)).reduced_word)
    return out


def _schubert(args):
    R = _system(args)
    w = from_word(_word(args, R), R)
    if not w.is_reduced_word:
        raise InputError(f"word {args.word!r} is not reduced")
    space = FlagSpace(R, _levi(args, R, w))
    return R, space, SchubertVariety(space, w)


def cmd_curves(args):
    R, space, X = _schubert(args)
    rows = []
    for C in t_curves_through_schubert(X):
        degs = {str(i): curve_degree(C, R.fundamental_weight(i), space)
                for i in sorted(space.marked)}
        rows.append({"beta": list(C.beta), "degrees": degs,
                     "antican": anticanonical_degree(C, space),
                     "line": sum(degs.values()) == 1})
    return {"space": space.describe(), "word": _word_str(X.w.reduced_word),
            "count": len(rows), "curves": rows}


def cmd_lines(args):
    R = _system(args)
    if args.word is None:
        if args.node is None:
            raise InputError("--node is required")
        return lines_through_point_space(R, args.node).to_json()
    _, space, X = _schubert(args)
    fams = line_families_on_schubert(X, maximal_only=not args.all)
    return {"space": space.describe(), "word": _word_str(X.w.reduced_word),
            "families": [f.to_json() for f in fams]}


def cmd_smooth(args):
    R, space, X = _schubert(args)
    return {"space": space.describe(), "word": _word_str(X.w.reduced_word),
            "dim": X.dim, "smooth": is_smooth_minuscule(X),
            "curves_at_base_point": curves_at_base_point(X)}


def cmd_bs(args):
    R, space, X = _schubert(args)
    bs = BSVariety(space, _word(args, R))
    return {"space": space.describe(), "word": _word_str(bs.word), "curves": bs.rows(),
            "minimal": [c.j for c in bs.minimal_curves()]}


def _quiver(args):
    R = _system(args)
    word = _word(args, R)
    w = from_word(word, R)
    if args.node is not None or args.levi is not None:
        levi = _levi(args, R)
        if min_coset_rep(w, levi) != w:
            raise InputError(f"word {args.word!r} is not a minimal coset representative")
    return R, build_quiver(word, R)


def cmd_quiver(args):
    _, q = _quiver(args)
    return q.to_json()


def _decomposition(args):
    R, q = _quiver(args)
    text = (args.peak_order or "standard").strip()
    if text.lower() == "standard":
        order = "standard"
    else:
        order = peak_ordering_from_colors(q, [_root_name(t) for t in text.split(",") if t.strip()])
    return R, construction1(q, order)


def cmd_decompose(args):
    _, d = _decomposition(args)
    out = d.to_json()
    out["goodness"] = goodness_check(d)
    return out


def cmd_check5(args):
    _, d = _decomposition(args)
    out = {"decomposition": d.to_json()}
    out.update(section5_checks(d))
    return out


def cmd_families(args):
    R = _system(args)
    if args.blocks:
        blocks = [parse_word(b) for b in args.blocks.split("|")]
        d = GeneralizedDecomposition.from_blocks(R, blocks)
        if args.word is not None and d.w != from_word(_word(args, R), R):
            raise InputError("blocks do not multiply to --word")
    else:
        _, d = _decomposition(args)
    return {"decomposition": d.to_json(),
            "families": [r.to_json() for r in minimal_families_generalized(d)]}


def cmd_elements(args):
    R = _system(args)
    if args.node is None:
        raise InputError("--node is required")
    levi = R.simple_indices - {args.node}
    reps = enumerate_coset_reps(R, levi)
    return {"space": FlagSpace(R, levi).describe(), "count": len(reps),
            "words": [_word_str(w.reduced_word) for w in reps]}


def cmd_sweep(args):
    rep = run_sweep(args.which)
    rep["failures"] = sum(v["failures"] for v in rep.values())
    return rep


def cmd_corpus(args):
    return run_corpus(args.filter, path=args.file)


# -- corpus -----------------------------------------------------------------

def load_corpus(path=None) -> list[dict]:
    if path:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = resources.files("minlines").joinpath("data/corpus.jsonl").read_text("utf-8")
    cases = []
    for n, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        case = json.loads(line)
        missing = {"id", "argv", "expect", "provenance"} - case.keys()
        if missing:
            raise InputError(f"corpus line {n}: missing {sorted(missing)}")
        if case["provenance"] not in ("PAPER", "DERIVED", "TRIVIAL"):
            raise InputError(f"corpus line {n}: bad provenance {case['provenance']!r}")
        if case["provenance"] == "PAPER" and not case.get("cite"):
            raise InputError(f"corpus line {n}: PAPER case without a citation")
        cases.append(case)
    return cases


def _matches(case, flt) -> bool:
    if not flt:
        return True
    cites = case.get("cite") or []
    if isinstance(cites, str):
        cites = [cites]
    return flt in cites or case["id"] == flt or case["id"].startswith(flt + "/")


def _diff(expected, actual, path="$") -> list[str]:
    """Mismatches of ``expected`` against ``actual``; dicts compare as subsets."""
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            return [f"{path}: expected an object, got {actual!r}"]
        out = []
        for k, v in expected.items():
            if k not in actual:
                out.append(f"{path}.{k}: missing")
            else:
                out += _diff(v, actual[k], f"{path}.{k}")
        return out
    if isinstance(expected, list) and isinstance(actual, list) and \
            len(expected) == len(actual) and any(isinstance(e, dict) for e in expected):
        return [m for i, (e, a) in enumerate(zip(expected, actual))
                for m in _diff(e, a, f"{path}[{i}]")]
    return [] if expected == actual else [f"{path}: expected {expected!r}, got {actual!r}"]


def run_corpus(flt=None, path=None) -> dict:
    cases = [c for c in load_corpus(path) if _matches(c, flt)]
    if not cases:
        raise InputError(f"no corpus case matches {flt!r}")
    results = []
    for case in cases:
        code, payload, err = execute(case["argv"])
        want_code = case.get("exit", 0)
        problems = [] if code == want_code else [f"exit {code}, expected {want_code}: {err}"]
        if code == 0 and want_code == 0:
            problems += _diff(case["expect"], payload)
        results.append({"id": case["id"], "provenance": case["provenance"],
                        "cite": case.get("cite"), "ok": not problems, "diff": problems})
    failed = [r for r in results if not r["ok"]]
    return {"cases": len(results), "passed": len(results) - len(failed),
            "failed": len(failed), "results": results, "_exit": 1 if failed else 0}


# -- argument parser --------------------------------------------------------

COMMANDS = {
    "root-system": cmd_root_system, "weyl": cmd_weyl, "curves": cmd_curves,
    "lines": cmd_lines, "smooth": cmd_smooth, "bs": cmd_bs, "quiver": cmd_quiver,
    "decompose": cmd_decompose, "check5": cmd_check5, "families": cmd_families,
    "elements": cmd_elements, "corpus": cmd_corpus, "sweep": cmd_sweep,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--type", help="Dynkin type, e.g. A4, E6, A1xA2")
    common.add_argument("--levi", help="Levi set I as a comma list of nodes")
    common.add_argument("--node", type=int, help="single node; Levi set is the rest")
    common.add_argument("--word", help='reduced word, e.g. "2 1 4 3 2" or s2s1s4')
    common.add_argument("--peak-order", dest="peak_order",
                        help="'standard' or a comma list of peak colours, e.g. 4,2")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", default="json")
    fmt.add_argument("--table", dest="fmt", action="store_const", const="table")

    p = _Parser(prog="minlines", description="Lines and minimal curves on Schubert varieties.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    helps = {
        "root-system": "Cartan data and roots", "weyl": "element data for a word",
        "curves": "T-stable curves of X(w) through wx", "lines": "lines through a point",
        "smooth": "smoothness of a minuscule X(w)", "bs": "Bott-Samelson curve data",
        "quiver": "quiver and peaks of a word", "decompose": "peak-ordered blocks",
        "check5": "block decomposition statements", "families": "minimal families by block",
        "elements": "minimal coset representatives", "corpus": "run the example corpus",
        "sweep": "run property sweeps",
    }
    subs = {name: sub.add_parser(name, parents=[common], help=h) for name, h in helps.items()}
    subs["root-system"].add_argument("--roots", action="store_true", help="list positive roots")
    subs["lines"].add_argument("--all", action="store_true", help="include non-maximal families")
    subs["families"].add_argument("--blocks", help='blocks separated by "|", e.g. "1|3 2"')
    subs["corpus"].add_argument("--filter", help="case id, id prefix or citation key")
    subs["corpus"].add_argument("--file", help="corpus file (default: bundled)")
    subs["sweep"].add_argument("--which", default="5,6,7", help="comma list of 5, 6, 7")
    return p


def execute(argv) -> tuple[int, object, str]:
    """Run a command and return ``(exit code, payload, error text)``."""
    try:
        args = build_parser().parse_args(list(argv))
        if not args.command:
            raise InputError("a subcommand is required")
        payload = COMMANDS[args.command](args)
    except INPUT_ERRORS as exc:
        return 2, None, f"{type(exc).__name__}: {exc}"
    except Exception as exc:  # noqa: BLE001
        return 1, None, f"internal error: {type(exc).__name__}: {exc}"
    code = 0
    if isinstance(payload, dict) and "_exit" in payload:
        code = payload.pop("_exit")
    elif isinstance(payload, dict) and args.command == "sweep" and payload.get("failures"):
        code = 1
    return code, payload, ""


def _table(payload, indent=0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                         (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(payload, list):
        for x in payload:
            if isinstance(x, dict):
                lines.append(pad + "  ".join(f"{k}={json.dumps(v)}" for k, v in x.items()))
            else:
                lines.append(pad + json.dumps(x))
    else:
        lines.append(pad + json.dumps(payload))
    return "\n".join(lines)


def run(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    code, payload, err = execute(argv)
    if err:
        print(f"minlines: {err}", file=sys.stderr)
    if payload is not None:
        if "--table" in argv:
            print(_table(payload))
        else:
            print(json.dumps(payload, indent=2))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
