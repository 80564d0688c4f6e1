"""Pairwise disjoint exhaustive embeddings: decide whether some word w
interleaves every given pair (v_i, u_i), and rebuild such a w letter by
letter.

Writing w left to right, each pair independently tracks how much of v_i and
u_i is still unwritten; a state is the vector of per-pair suffix splits, and
all pairs share the same number of remaining letters.  A letter x can be
written only if every pair can consume it from one of its two suffixes, and
a pair whose suffixes both start with x may consume from either, so the
search branches over those choices.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import product

from .complement import complement_set
from .errors import BudgetExceeded, LengthMismatch
from .words import Word

# find_w verifies each reconstructed witness with a full complement-set
# computation, so its default exploration cap is far below DEFAULT_BUDGET.
WITNESS_BUDGET = 10**4


def shared_first_letters(
    pairs: Iterable[tuple[Sequence[int], Sequence[int]]]
) -> set[int]:
    """Letters usable as the next written letter: for each pair the first
    letters of its nonempty suffixes, intersected across pairs."""
    out: set[int] | None = None
    for z, y in pairs:
        s = set()
        if len(z):
            s.add(z[0])
        if len(y):
            s.add(y[0])
        out = s if out is None else out & s
    if out is None:
        raise ValueError("need at least one pair")
    return out


class _Instance:
    """Suffix-split state space for one pair list, with a lazy truth memo."""

    def __init__(self, pairs):
        self.vs = [tuple(v) for v, _ in pairs]
        self.us = [tuple(u) for _, u in pairs]
        if not self.vs:
            raise ValueError("need at least one pair")
        lengths = {len(v) + len(u) for v, u in zip(self.vs, self.us)}
        if len(lengths) != 1:
            raise LengthMismatch(f"pairs disagree on total length: {sorted(lengths)}")
        self.n = lengths.pop()
        self.root = (self.n, tuple(len(v) for v in self.vs))
        self._memo: dict[tuple[int, tuple[int, ...]], bool] = {}

    def moves(self, state):
        """Yield (letter, successor states) for each writable letter, letters
        ascending; successors enumerate the per-pair consumption choices."""
        ell, splits = state
        options: list[dict[int, list[int]]] = []
        shared: set[int] | None = None
        for i, a in enumerate(splits):
            v, u = self.vs[i], self.us[i]
            opts: dict[int, list[int]] = {}
            if a > 0:
                opts.setdefault(v[len(v) - a], []).append(a - 1)
            if ell - a > 0:
                opts.setdefault(u[len(u) - (ell - a)], []).append(a)
            options.append(opts)
            shared = set(opts) if shared is None else shared & set(opts)
            if not shared:
                return
        for x in sorted(shared):
            succs = [
                (ell - 1, s) for s in product(*(opts[x] for opts in options))
            ]
            yield x, succs

    def truth(self, state) -> bool:
        memo = self._memo
        got = memo.get(state)
        if got is not None:
            return got
        if state[0] == 0:
            memo[state] = True
            return True
        res = any(
            self.truth(s) for _, succs in self.moves(state) for s in succs
        )
        memo[state] = res
        return res


def exists_word(pairs: Iterable[tuple[Sequence[int], Sequence[int]]]) -> bool:
    """True iff some word interleaves every pair (v_i, u_i)."""
    inst = _Instance(list(pairs))
    return inst.truth(inst.root)


def reconstruct_word(
    pairs: Iterable[tuple[Sequence[int], Sequence[int]]]
) -> Word | None:
    """Lexicographically least word interleaving every pair, or None.

    Walks the state space keeping the whole frontier of viable states, so a
    letter is committed exactly when some viable state can still finish.
    """
    inst = _Instance(list(pairs))
    if not inst.truth(inst.root):
        return None
    out = []
    frontier = {inst.root}
    for _ in range(inst.n):
        for x in sorted({a for st in frontier for a, _ in inst.moves(st)}):
            nxt = {
                s
                for st in frontier
                for a, succs in inst.moves(st)
                if a == x
                for s in succs
                if inst.truth(s)
            }
            if nxt:
                out.append(x)
                frontier = nxt
                break
    return Word(out)


def find_w(
    u: Sequence[int],
    S: Iterable[Sequence[int]],
    budget: int = WITNESS_BUDGET,
) -> Word | None:
    """A word w with C(w, u) exactly S, or None.

    Witnesses interleaving every (v, u) pair are enumerated in lexicographic
    order and each is verified by recomputing its complement set; matching S
    as a subset does not guarantee equality, so verification can reject every
    witness even when witnesses exist.
    """
    ut = tuple(u)
    vs = sorted({tuple(v) for v in S})
    if not vs:
        raise ValueError("S must contain at least one word")
    lengths = {len(v) for v in vs}
    if len(lengths) != 1:
        raise LengthMismatch(f"words in S have different lengths: {sorted(lengths)}")
    inst = _Instance([(v, ut) for v in vs])
    if not inst.truth(inst.root):
        return None
    target = frozenset(Word(v) for v in vs)
    explored = 0
    prefix: list[int] = []

    # DFS over (prefix, viable-state frontier), letters ascending, so full
    # witnesses come out in lexicographic order.
    def dfs(frontier, depth: int) -> Word | None:
        nonlocal explored
        if depth == inst.n:
            explored += 1
            if explored > budget:
                raise BudgetExceeded(f"witness exploration exceeded budget {budget}")
            w = Word(prefix)
            return w if complement_set(w, ut).words == target else None
        for x in sorted({a for st in frontier for a, _ in inst.moves(st)}):
            nxt = frozenset(
                s
                for st in frontier
                for a, succs in inst.moves(st)
                if a == x
                for s in succs
                if inst.truth(s)
            )
            if nxt:
                prefix.append(x)
                found = dfs(nxt, depth + 1)
                prefix.pop()
                if found is not None:
                    return found
        return None

    return dfs(frozenset([inst.root]), 0)
