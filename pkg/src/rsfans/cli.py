"""Command-line entry point: ``rsfans <command> ...``.

Structure arguments take either a path to a structure file or the name of a
built-in example (three, f1, f1-idem, f2, f3, f4).  Output is deterministic;
``--seed`` fixes every randomized search and ``--json`` switches to
machine-readable reports.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import examples as ex
from . import textformat
from .characters import enumerate_characters, labels, specialization_poset
from .charfan import check_characterization
from .fan import FanPreconditionError, fan_equivalence, make_fan
from .order import fan_lattice, hasse_dot, repr_order
from .pring import (LEX, NONNEG_CONSTANT, PREORDERS, X, ZERO, dual_sample, support, ts_char_subset_conditions,
                    verify_total_preorder)
from .quotient import ideal_quotient, quotient_fan
from .represent import check_rs_axioms, find_rs3_counterexample, induce_D
from .ts import FiniteTS, StructureError, TSAxiomError, check_ts_axioms, is_ideal


class CliError(Exception):
    """A user-facing failure; printed without a traceback."""


# ---------------------------------------------------------------- helpers

def _is_example(arg: str) -> bool:
    return arg.lower().replace("_", "-") in ex.NAMES


def load_structure(arg: str, validate: bool = True) -> FiniteTS:
    path = Path(arg)
    if path.is_file():
        G = textformat.load(path)
    elif _is_example(arg):
        G = ex.by_name(arg)
    else:
        raise CliError(f"{arg!r} is neither a file nor an example ({', '.join(ex.NAMES)})")
    return G.validate() if validate else G


def _label_start(arg: str) -> int:
    return ex.LABEL_START.get(arg.lower().replace("_", "-"), 1) if _is_example(arg) else 1


def _char_labels(arg: str, X) -> list[str]:
    return labels(X, _label_start(arg))


def select_characters(arg: str, G: FiniteTS, spec: str | None):
    """Full character space, or the comma-separated labels in ``spec``."""
    full = enumerate_characters(G)
    if not spec:
        return full, full
    names = _char_labels(arg, full)
    out = []
    for tok in spec.replace(" ", "").split(","):
        if tok not in names:
            raise CliError(f"unknown character {tok!r}; known: {', '.join(names)}")
        out.append(full[names.index(tok)])
    return tuple(out), full


def element_indices(G: FiniteTS, spec: str) -> list[int]:
    out = []
    for tok in spec.replace(" ", "").split(","):
        if not tok:
            continue
        try:
            out.append(G.index(tok))
        except (KeyError, ValueError) as e:
            raise CliError(f"unknown element {tok!r} in {G.name}") from e
    return out


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _write(dest: str, text: str) -> None:
    if dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def _char_rows(G: FiniteTS, X, names) -> list[str]:
    width = max(len(n) for n in G.names)
    head = "     " + " ".join(n.rjust(width) for n in G.names)
    sym = {1: "1", 0: "0", -1: "-1"}
    rows = [head] + [f"{lab.ljust(4)} " + " ".join(sym[int(v)].rjust(width) for v in h)
                     for lab, h in zip(names, X)]
    return rows


# ---------------------------------------------------------------- commands

def cmd_check_ts(args) -> int:
    G = load_structure(args.structure, validate=False)
    rep = check_ts_axioms(G.names, G.table, G.one, G.zero, G.minus_one)
    _emit(args, {"structure": G.name, "elements": len(G.names), **rep.to_json()},
          f"{G.name}: {len(G.names)} elements\n" + rep.format())
    return 0 if rep.ok else 1


def cmd_chars(args) -> int:
    G = load_structure(args.structure)
    X = enumerate_characters(G)
    names = _char_labels(args.structure, X)
    if args.dot:
        _write("-", hasse_dot(specialization_poset(X, names), f"{G.name}-characters"))
        return 0
    data = {"structure": G.name, "elements": list(G.names),
            "characters": {n: [int(v) for v in h] for n, h in zip(names, X)}}
    _emit(args, data, f"{G.name}: {len(X)} characters\n" + "\n".join(_char_rows(G, X, names)))
    return 0


def cmd_make_fan(args) -> int:
    G = load_structure(args.structure)
    F = make_fan(G)
    pairs = {}
    lines = [f"{G.name}: fan on {G.n} elements"]
    for b in range(G.n):
        for c in range(b, G.n):
            rep = F.rep_names(b, c)
            key = f"{G.names[b]},{G.names[c]}"
            pairs[key] = rep
            lines.append(f"  D({G.names[b]}, {G.names[c]}) = {{{', '.join(rep)}}}")
    _emit(args, {"structure": G.name, "D": pairs}, "\n".join(lines))
    return 0


def cmd_is_fan(args) -> int:
    G = load_structure(args.structure)
    X, full = select_characters(args.structure, G, args.chars)
    r = fan_equivalence(G, X, full)
    rows = [("fan (all characters)", r.is_fan1), ("fan (induced relation)", r.is_fan2),
            ("q-fan", r.is_qfan), ("3-closed", r.three_closed), ("verdicts agree", r.agree)]
    _emit(args, {"structure": G.name, "characters": len(X), **r.to_json()},
          f"{G.name} with {len(X)} characters\n" + "\n".join(f"  {k.ljust(24)} {'yes' if v else 'no'}"
                                                             for k, v in rows))
    return 0 if r.is_fan1 else 1


def cmd_verify_rs(args) -> int:
    G = load_structure(args.structure)
    X, _ = select_characters(args.structure, G, args.chars)
    rep = check_rs_axioms(induce_D(G, X))
    _emit(args, {"structure": G.name, "characters": len(X), **rep.to_json()}, rep.format())
    return 0 if rep.ok else 1


def cmd_order(args) -> int:
    G = load_structure(args.structure)
    if args.spec:
        X = enumerate_characters(G)
        P = specialization_poset(X, _char_labels(args.structure, X))
        title = f"{G.name}-characters"
    else:
        P = repr_order(make_fan(G))
        title = f"{G.name}-order"
    if args.dot:
        _write(args.dot, hasse_dot(P, title))
        if args.dot == "-":
            return 0
    edges = P.hasse_names()
    data = {"structure": G.name, "poset": title, "nodes": list(P.labels),
            "hasse": [list(e) for e in edges]}
    lines = [f"{title}: {P.n} nodes, {len(edges)} covering pairs"] + [f"  {a} < {b}" for a, b in edges]
    if not args.spec:
        lat = fan_lattice(make_fan(G))
        data.update(modular=lat.modular, distributive=lat.distributive,
                    pentagon=None if lat.pentagon is None else list(lat.pentagon))
        lines.append(f"  modular: {'yes' if lat.modular else 'no'}; distributive: "
                     f"{'yes' if lat.distributive else 'no'}")
        if lat.pentagon is not None:
            lines.append("  pentagon (bottom, a, b, c, top): " + ", ".join(lat.pentagon))
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_quotient(args) -> int:
    G = load_structure(args.structure)
    F = make_fan(G)
    if (args.ideal is None) == (args.chars is None):
        raise CliError("give exactly one of --ideal or --chars")
    if args.ideal is not None:
        I = element_indices(G, args.ideal)
        if not is_ideal(G, I):
            raise CliError(f"{{{', '.join(G.names_of(I))}}} is not an ideal of {G.name}")
        q = ideal_quotient(F, I)
        Q, pi, rep = q.quotient, q.pi, q.report
    else:
        X, _ = select_characters(args.structure, G, args.chars)
        try:
            qf = quotient_fan(F, X)
        except ValueError as e:
            raise CliError(str(e)) from e
        Q, pi, rep = qf.model.ts, qf.pi, qf.report
    classes = {}
    for a in range(G.n):
        classes.setdefault(Q.names[pi[a]], []).append(G.names[a])
    lines = [rep.format(), f"  quotient has {Q.n} elements"]
    lines += [f"    [{k}] = {{{', '.join(v)}}}" for k, v in classes.items()]
    _emit(args, {**rep.to_json(), "classes": classes}, "\n".join(lines))
    return 0 if rep.ok else 1


def cmd_characterize(args) -> int:
    G = load_structure(args.structure)
    X, full = select_characters(args.structure, G, args.chars)
    r = check_characterization(induce_D(G, X), full)
    _emit(args, {"structure": G.name, **r.to_json()}, f"{G.name} with {len(X)} characters\n" + r.format())
    return 0 if r.equivalence_holds else 1


def cmd_examples(args) -> int:
    if args.name is None:
        for n in ex.NAMES:
            G = ex.by_name(n)
            print(f"{n.ljust(8)} {G.n:>3} elements  {len(ex.characters_of(n)):>3} characters")
        return 0
    if not _is_example(args.name):
        raise CliError(f"unknown example {args.name!r}; choose from {', '.join(ex.NAMES)}")
    name = args.name.lower().replace("_", "-")
    G = ex.by_name(name)
    if args.dot:
        P = ex.spec_poset(name) if args.spec else repr_order(make_fan(G))
        _write("-", hasse_dot(P, f"{name}-characters" if args.spec else f"{name}-order"))
        return 0
    _emit(args, {"name": name, "elements": list(G.names), "characters": len(ex.characters_of(name))},
          textformat.dump(G).rstrip())
    return 0


def cmd_rs3_search(args) -> int:
    G = load_structure(args.structure)
    full = enumerate_characters(G)
    size = args.max_size if args.max_size is not None else len(full)
    r = find_rs3_counterexample(G, size, args.budget)
    if r.found is None:
        text = (f"no separating subset of size <= {size} breaks RS3 "
                f"({r.examined} examined{'' if r.exhausted else ', budget reached'})")
    else:
        names = _char_labels(args.structure, full)
        text = (f"RS3 fails for {{{', '.join(names[full.index(h)] for h in r.found)}}} "
                f"after {r.examined} subsets; witness (a, b, c, d, e) = ({', '.join(r.witness)})")
    _emit(args, {"structure": G.name, "examined": r.examined, "exhausted": r.exhausted,
                 "found": None if r.found is None else [list(h) for h in r.found],
                 "witness": None if r.witness is None else list(r.witness)}, text)
    return 0


def cmd_pring(args) -> int:
    T = PREORDERS[args.preorder]
    sample = dual_sample(args.range)
    rep = verify_total_preorder(T, sample)
    sup = support(T, sample, [(X, ZERO)])
    cond = ts_char_subset_conditions(T, T, sample)
    lines = [rep.format(), f"support on sample: {{{', '.join(str(v) for v in sup.support)}}}",
             "  T-radical " + ("holds on sample" if sup.radical_witness is None
                               else "refuted by witness (" + ", ".join(map(str, sup.radical_witness)) + ")"),
             "  T-convex " + ("holds on sample" if sup.convex_witness is None
                              else "refuted by witness (" + ", ".join(map(str, sup.convex_witness)) + ")"),
             cond.format()]
    if T is LEX:
        lines.append(ts_char_subset_conditions(NONNEG_CONSTANT, T, sample).format())
    data = {"preorder": T.name, "range": args.range, "total_preorder": rep.to_json(),
            "support": [str(v) for v in sup.support],
            "radical_witness": None if sup.radical_witness is None else [str(v) for v in sup.radical_witness],
            "convex_witness": None if sup.convex_witness is None else [str(v) for v in sup.convex_witness],
            "conditions": cond.to_json()}
    _emit(args, data, "\n".join(lines))
    return 0 if rep.ok else 1


def cmd_reproduce(args) -> int:
    rows = []
    timings = []
    for r in _timed_rows(args.seed, timings):
        rows.append(r)
        if not args.json:
            print(r.line(), flush=True)
    data = {"seed": args.seed, "ok": all(r.passed for r in rows),
            "rows": [{"number": r.number, "label": r.label, "passed": r.passed, "detail": r.detail,
                      "log": r.log} for r in rows]}
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(f"{sum(r.passed for r in rows)}/{len(rows)} rows pass")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "acceptance.json").write_text(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
                                            + "\n", encoding="utf-8")
        (out / "acceptance.txt").write_text("\n".join(r.line() for r in rows) + "\n", encoding="utf-8")
        for r in rows:
            if r.log:
                (out / f"row{r.number:02d}.log").write_text("\n".join(r.log) + "\n", encoding="utf-8")
        for name, kind in [(n, k) for k in ("spec", "order") for n in ex.GOLDEN[k]]:
            P = ex.spec_poset(name) if kind == "spec" else repr_order(make_fan(ex.by_name(name)))
            (out / f"{kind}_{name.replace('-', '_')}.dot").write_text(hasse_dot(P, f"{name}-{kind}"),
                                                                     encoding="utf-8")
    if args.verbose:
        for (label, secs) in timings:
            print(f"  {label}: {secs:.1f}s", file=sys.stderr)
    return 0 if data["ok"] else 1


def _timed_rows(seed: int, timings: list):
    from .acceptance import ROWS

    for f in ROWS:
        t = time.perf_counter()
        r = f(seed=seed)
        timings.append((r.label, time.perf_counter() - t))
        yield r


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized searches")

    p = argparse.ArgumentParser(prog="rsfans", description="Finite ternary semigroups, real semigroups and fans.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        sp.set_defaults(func=func)
        return sp

    s = add("check-ts", cmd_check_ts, "check the ternary semigroup axioms")
    s.add_argument("structure")
    s = add("chars", cmd_chars, "list characters in canonical order")
    s.add_argument("structure")
    s.add_argument("--dot", action="store_true", help="print the specialization poset as DOT")
    s = add("make-fan", cmd_make_fan, "print the closed-form representation relation")
    s.add_argument("structure")
    s = add("is-fan", cmd_is_fan, "decide whether a character set makes a fan")
    s.add_argument("structure")
    s.add_argument("--chars", help="comma-separated character labels (default: all)")
    s = add("verify-rs", cmd_verify_rs, "check RS0-RS8 for the relation induced by characters")
    s.add_argument("structure")
    s.add_argument("--chars", help="comma-separated character labels (default: all)")
    s = add("order", cmd_order, "representation order of the fan (or the specialization poset)")
    s.add_argument("structure")
    s.add_argument("--dot", metavar="OUT", help="write DOT to OUT ('-' for stdout)")
    s.add_argument("--spec", action="store_true", help="use the specialization poset of characters")
    s = add("quotient", cmd_quotient, "quotient of a fan by an ideal or a 3-closed character set")
    s.add_argument("structure")
    s.add_argument("--ideal", help="comma-separated ideal members")
    s.add_argument("--chars", help="comma-separated character labels")
    s = add("characterize", cmd_characterize, "test the fan characterization conditions")
    s.add_argument("structure")
    s.add_argument("--chars", help="comma-separated character labels (default: all)")
    s = add("examples", cmd_examples, "list or show the worked examples")
    s.add_argument("name", nargs="?")
    s.add_argument("--dot", action="store_true", help="print the Hasse diagram as DOT")
    s.add_argument("--spec", action="store_true", help="with --dot: the specialization poset")
    s = add("rs3-search", cmd_rs3_search, "look for a separating subset whose relation breaks RS3")
    s.add_argument("structure")
    s.add_argument("--max-size", type=int, default=None, help="largest subset size (default: all)")
    s.add_argument("--budget", type=int, default=None)
    s = add("pring", cmd_pring, "preorders on the dual numbers, checked on samples")
    s.add_argument("action", choices=["check"])
    s.add_argument("--preorder", choices=sorted(PREORDERS), default="lex")
    s.add_argument("--range", type=int, default=5, metavar="N", help="sample aX+b with |a|, |b| <= N")
    s = add("reproduce", cmd_reproduce, "run the acceptance suite")
    s.add_argument("--out", metavar="DIR", help="write reports and DOT files into DIR")
    s.add_argument("-v", "--verbose", action="store_true", help="row timings on stderr")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.seed = getattr(args, "seed", 0)
    try:
        return args.func(args)
    except textformat.ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
    except FanPreconditionError as e:
        print(f"precondition failed: {e}", file=sys.stderr)
    except TSAxiomError as e:
        print(f"{e}\n{e.report.format()}", file=sys.stderr)
    except (CliError, StructureError) as e:
        print(f"error: {e}", file=sys.stderr)
    return 2


def run(argv: Sequence[str] | None = None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
