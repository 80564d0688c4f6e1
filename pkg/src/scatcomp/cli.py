"""Command line interface.

Words are given positionally in letters a-z; sets of words come from files
with one word per line (optional first line `#alphabet:<letters>`).  Every
subcommand honors --json, which wraps the result in an envelope with timing
and size counters.  Exit codes: 0 success or true, 1 no solution or false,
2 usage or validation error, 3 enumeration budget exceeded.  The environment
variable SCATCOMP_BUDGET overrides each function's enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import verify as verify_mod
from .arch import arch_factorize
from .complement import complement_set, complement_set_with_multiplicity, complement_table
from .disjoint_embed import exists_word, find_w, reconstruct_word
from .embeddings import count_embeddings, enumerate_embeddings, group_equal_complements
from .errors import BudgetExceeded, ScatcompError
from .inverse_u import find_u, find_u_all
from .shuffle import is_self_shuffle_complement, perfect_shuffle, shuffle_set
from .words import Alphabet, read_word_lines, text, word


def _budget_kwargs() -> dict:
    """Budget override from the environment, else each callee's default."""
    raw = os.environ.get("SCATCOMP_BUDGET")
    if raw is None:
        return {}
    try:
        value = int(raw)
        if value <= 0:
            raise ValueError
    except ValueError:
        raise ScatcompError(f"SCATCOMP_BUDGET must be a positive integer, got {raw!r}")
    return {"budget": value}


class _Emit:
    """Collects one subcommand's inputs/result and prints either form."""

    def __init__(self, command: str, as_json: bool, inputs: dict):
        self.command = command
        self.as_json = as_json
        self.inputs = inputs
        self.lines: list[str] = []
        self.result = None
        self.stats: dict = {"embeddings": None, "set_size": None}
        self.t0 = time.perf_counter()

    def say(self, line: str) -> None:
        self.lines.append(line)

    def close(self, status: int) -> int:
        if self.as_json:
            self.stats["elapsed_ms"] = round((time.perf_counter() - self.t0) * 1000, 3)
            envelope = {
                "command": self.command,
                "inputs": self.inputs,
                "result": self.result,
                "stats": self.stats,
            }
            print(json.dumps(envelope, indent=2, sort_keys=True))
        else:
            for line in self.lines:
                print(line)
        return status


def _cmd_complement(args, out: _Emit) -> int:
    w, u = word(args.w), word(args.u)
    bk = _budget_kwargs()
    if args.table:
        table = complement_table(w, u, **bk)
        rows = []
        for i in range(1, len(u) + 2):
            cells = ["{" + ",".join(sorted(text(v) for v in table.cell(i, j))) + "}"
                     for j in range(1, len(w) + 1)]
            rows.append(" ".join(cells))
            out.say(f"P[{i}] {rows[-1]}")
        out.result = {"rows": rows}
        return 0
    cs = complement_set_with_multiplicity(w, u, **bk) if args.counts else complement_set(w, u, **bk)
    ordered = cs.sorted_words()
    out.stats["set_size"] = len(cs)
    out.stats["embeddings"] = count_embeddings(w, u)
    if args.counts:
        out.result = {text(v): cs.multiplicities[v] for v in ordered}
        for v in ordered:
            out.say(f"{text(v)}\t{cs.multiplicities[v]}")
    else:
        out.result = [text(v) for v in ordered]
        for v in ordered:
            out.say(text(v))
    return 0


def _cmd_embed(args, out: _Emit) -> int:
    w, u = word(args.w), word(args.u)
    n = count_embeddings(w, u)
    out.stats["embeddings"] = n
    if args.count:
        out.result = n
        out.say(str(n))
    elif args.group:
        groups = group_equal_complements(w, u, **_budget_kwargs())
        out.stats["set_size"] = len(groups)
        out.result = {text(v): len(es) for v, es in groups.items()}
        for v, es in groups.items():
            out.say(f"{text(v)}\t{len(es)}")
    else:
        embs = enumerate_embeddings(w, u, **_budget_kwargs())
        out.result = [list(e) for e in embs]
        for e in embs:
            out.say(",".join(map(str, e)))
    return 0 if n else 1


def _cmd_archfac(args, out: _Emit) -> int:
    if args.alphabet:
        alpha = Alphabet(args.alphabet)
        w = alpha.encode(args.w)
        fact = arch_factorize(w, alpha)
        dec = alpha.decode
    else:
        w = word(args.w)
        fact = arch_factorize(w)
        dec = text
    out.result = {
        "arches": [dec(a) for a in fact.arches],
        "rest": dec(fact.rest),
        "modus": dec(fact.modus),
        "iota": fact.universality_index,
    }
    out.say("|".join(dec(a) for a in fact.arches))
    out.say(f"rest={dec(fact.rest)}")
    out.say(f"modus={dec(fact.modus)}")
    out.say(f"iota={fact.universality_index}")
    return 0


def _infer(texts: list[str]) -> Alphabet:
    return Alphabet.inferred(texts) if any(texts) else Alphabet("a")


def _load_set(path, *extra_texts: str) -> tuple[list, Alphabet]:
    """Words of a set file plus any positional words, in one shared codec."""
    lines, alpha = read_word_lines(path)
    if alpha is None:
        alpha = _infer([*lines, *extra_texts])
    return [alpha.encode(ln) for ln in lines], alpha


def _cmd_find_u(args, out: _Emit) -> int:
    S, alpha = _load_set(args.set_file, args.w)
    w = alpha.encode(args.w)
    out.stats["set_size"] = len(S)
    bk = _budget_kwargs()
    if args.all:
        found = find_u_all(w, S, **bk)
        out.result = [alpha.decode(u) for u in found]
        for u in found:
            out.say(alpha.decode(u))
        if not found:
            out.say("no solution")
        return 0 if found else 1
    u = find_u(w, S, **bk)
    out.result = None if u is None else alpha.decode(u)
    out.say("no solution" if u is None else alpha.decode(u))
    return 1 if u is None else 0


def _read_pairs(path: str) -> tuple[list[tuple], Alphabet]:
    """Tab-separated (v, u) pairs, one per line, under one shared codec."""
    with open(path, encoding="ascii") as fh:
        lines = fh.read().splitlines()
    alpha = None
    if lines and lines[0].startswith("#alphabet:"):
        alpha = Alphabet(lines[0][len("#alphabet:") :].strip())
        lines = lines[1:]
    rows = []
    for lineno, line in enumerate(lines, 1 if alpha is None else 2):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2 or any(p != p.strip() for p in parts):
            raise ScatcompError(f"{path}:{lineno}: expected 'v<TAB>u', got {line!r}")
        rows.append(parts)
    if not rows:
        raise ScatcompError(f"{path}: no pairs")
    if alpha is None:
        alpha = _infer([p for row in rows for p in row])
    return [(alpha.encode(v), alpha.encode(u)) for v, u in rows], alpha


def _cmd_exists_w(args, out: _Emit) -> int:
    pairs, alpha = _read_pairs(args.pairs)
    out.stats["set_size"] = len(pairs)
    if not exists_word(pairs):
        out.result = None
        out.say("no solution")
        return 1
    w = reconstruct_word(pairs)
    out.result = alpha.decode(w)
    out.say(alpha.decode(w))
    return 0


def _cmd_find_w(args, out: _Emit) -> int:
    S, alpha = _load_set(args.set_file, args.u)
    u = alpha.encode(args.u)
    out.stats["set_size"] = len(S)
    w = find_w(u, S, **_budget_kwargs())
    out.result = None if w is None else alpha.decode(w)
    out.say("no solution" if w is None else alpha.decode(w))
    return 1 if w is None else 0


def _cmd_shuffle(args, out: _Emit) -> int:
    u, v = word(args.u), word(args.v)
    S = sorted(shuffle_set(u, v, **_budget_kwargs()))
    out.stats["set_size"] = len(S)
    out.result = [text(w) for w in S]
    if args.size_only:
        out.say(str(len(S)))
    else:
        for w in S:
            out.say(text(w))
    return 0


def _cmd_perfect_shuffle(args, out: _Emit) -> int:
    w = perfect_shuffle(word(args.u), word(args.v))
    out.result = text(w)
    out.say(text(w))
    return 0


def _cmd_self_shuffle(args, out: _Emit) -> int:
    w, u = word(args.w), word(args.u)
    ok = is_self_shuffle_complement(w, u)
    out.result = ok
    out.say("true" if ok else "false")
    return 0 if ok else 1


def _cmd_verify(args, out: _Emit) -> int:
    if args.suite != "all" and args.suite not in verify_mod.available_suites():
        raise ScatcompError(
            f"unknown suite {args.suite!r}; available: all, "
            + ", ".join(verify_mod.available_suites())
        )
    names = verify_mod.available_suites() if args.suite == "all" else [args.suite]
    reports = [
        verify_mod.run_suite(nm, max_len=args.max_len, sigma=args.sigma, seed=args.seed)
        for nm in names
    ]
    out.result = [
        {
            "name": r.name,
            "ok": r.ok,
            "checked": r.checked,
            "violations": len(r.violations) + r.overflow,
            "first_violation": r.violations[0] if r.violations else None,
            "elapsed_s": round(r.elapsed, 3),
        }
        for r in reports
    ]
    for r in reports:
        out.say(r.line())
    passed = sum(r.ok for r in reports)
    out.say(f"{passed}/{len(reports)} suites passed")
    return 0 if passed == len(reports) else 1


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subparser from clobbering --json given before the subcommand
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="emit a JSON envelope instead of plain text",
    )
    p = argparse.ArgumentParser(
        prog="scatcomp",
        parents=[common],
        description="Complement scattered factors: computation, inversion, verification.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("complement", parents=[common],
                        help="complement scattered factors of u in w")
    sp.add_argument("w")
    sp.add_argument("u")
    sp.add_argument("--counts", action="store_true", help="append embedding multiplicities")
    sp.add_argument("--table", action="store_true", help="print the full prefix table")
    sp.set_defaults(fn=_cmd_complement)

    sp = sub.add_parser("embed", parents=[common], help="embeddings of u in w, one per line")
    sp.add_argument("w")
    sp.add_argument("u")
    sp.add_argument("--count", action="store_true", help="print only the embedding count")
    sp.add_argument("--group", action="store_true",
                    help="group embeddings by complement word, print word<TAB>multiplicity")
    sp.set_defaults(fn=_cmd_embed)

    sp = sub.add_parser("archfac", parents=[common],
                        help="arch factorization, modus and universality index")
    sp.add_argument("w")
    sp.add_argument("--alphabet", help="letters to treat as the alphabet, e.g. abc")
    sp.set_defaults(fn=_cmd_archfac)

    sp = sub.add_parser("find-u", parents=[common],
                        help="recover u from w and the complement set")
    sp.add_argument("w")
    sp.add_argument("--set-file", required=True)
    sp.add_argument("--all", action="store_true", help="list every u whose complement set matches")
    sp.set_defaults(fn=_cmd_find_u)

    sp = sub.add_parser("exists-w", parents=[common],
                        help="word admitting disjoint embeddings for every pair")
    sp.add_argument("--pairs", required=True,
                    help="file of tab-separated lines 'v<TAB>u'")
    sp.set_defaults(fn=_cmd_exists_w)

    sp = sub.add_parser("find-w", parents=[common],
                        help="word whose complement set of u equals the given set")
    sp.add_argument("u")
    sp.add_argument("--set-file", required=True)
    sp.set_defaults(fn=_cmd_find_w)

    sp = sub.add_parser("shuffle", parents=[common], help="all interleavings of u and v")
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("--size-only", action="store_true")
    sp.set_defaults(fn=_cmd_shuffle)

    sp = sub.add_parser("perfect-shuffle", parents=[common],
                        help="letterwise alternation of two equal-length words")
    sp.add_argument("u")
    sp.add_argument("v")
    sp.set_defaults(fn=_cmd_perfect_shuffle)

    sp = sub.add_parser("self-shuffle", parents=[common],
                        help="is w an interleaving of u with itself")
    sp.add_argument("w")
    sp.add_argument("u")
    sp.set_defaults(fn=_cmd_self_shuffle)

    sp = sub.add_parser("verify", parents=[common], help="run a verification suite (or 'all')")
    sp.add_argument("suite")
    sp.add_argument("--max-len", type=int)
    sp.add_argument("--sigma", type=int)
    sp.add_argument("--seed", type=int)
    sp.set_defaults(fn=_cmd_verify)
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    inputs = {
        k: v
        for k, v in vars(args).items()
        if k not in ("fn", "json", "command") and v is not None
    }
    out = _Emit(args.command, as_json, inputs)
    try:
        return out.close(args.fn(args, out))
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ScatcompError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
