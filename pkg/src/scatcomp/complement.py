"""Complement scattered-factor sets.

C(w, u) is the set of words v of length |w| - |u| such that w is an
interleaving of u and v; equivalently, the words obtained by deleting an
embedding of u from w.  Two dynamic programs compute it: a prefix-table
recurrence over growing prefixes of u (sets), and a suffix-matching
recurrence over growing suffixes of u (sets with multiplicities that count
embeddings per complement word).
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass

from .errors import BudgetExceeded, DEFAULT_BUDGET, NotAScatteredFactor
from .words import Word, is_scattered_factor


@dataclass(frozen=True)
class ComplementSet:
    """A complement set, optionally with per-word embedding multiplicities."""

    words: frozenset[Word]
    multiplicities: Mapping[Word, int] | None = None

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.sorted_words())

    def __contains__(self, v) -> bool:
        return v in self.words

    def sorted_words(self) -> list[Word]:
        return sorted(self.words)

    @property
    def total_embeddings(self) -> int | None:
        if self.multiplicities is None:
            return None
        return sum(self.multiplicities.values())


# --- prefix-table recurrence ------------------------------------------------
#
# Rows are indexed by prefixes of u, columns by prefixes of w, with a virtual
# empty-prefix column at index 0.  Cell (p, j) holds C(w[1..j], p).  Extending
# the row prefix by a letter x: every cell appends w[j] to its left neighbour,
# and where w[j] = x it also absorbs the parent row's cell (p consumed up to
# j-1, so the shorter prefix's complements carry over unchanged).

def _first_row(wt: tuple[int, ...]) -> list[set[tuple[int, ...]]]:
    row: list[set[tuple[int, ...]]] = [{()}]
    pref: tuple[int, ...] = ()
    for a in wt:
        pref += (a,)
        row.append({pref})
    return row


def _extend_row(
    wt: tuple[int, ...],
    prev: list[set[tuple[int, ...]]],
    letter: int,
    tracker: list[int],
    budget: int,
) -> list[set[tuple[int, ...]]]:
    row: list[set[tuple[int, ...]]] = [set()]
    cur: set[tuple[int, ...]] = row[0]
    size = 0
    for j, a in enumerate(wt, 1):
        nxt = {v + (a,) for v in cur}
        if a == letter:
            nxt |= prev[j - 1]
        row.append(nxt)
        size += len(nxt)
        cur = nxt
    tracker[0] += size
    if tracker[0] > budget:
        raise BudgetExceeded(f"prefix table exceeds budget {budget}")
    return row


def complement_set(
    w: Sequence[int], u: Sequence[int], budget: int = DEFAULT_BUDGET
) -> ComplementSet:
    """C(w, u) as a plain set of words; u must be a scattered factor of w."""
    wt, ut = tuple(w), tuple(u)
    if not is_scattered_factor(ut, wt):
        raise NotAScatteredFactor(f"{Word(ut)!r} is not a scattered factor of {Word(wt)!r}")
    tracker = [0]
    row = _first_row(wt)
    for x in ut:
        row = _extend_row(wt, row, x, tracker, budget)
    return ComplementSet(frozenset(Word(t) for t in row[len(wt)]))


class PrefixTable:
    """Full prefix table P with P[i][j] = C(w[1..j], u[1..i-1]), 1-based."""

    def __init__(self, w: Word, u: Word, cells: list[list[frozenset[Word]]]):
        self.w = w
        self.u = u
        self._cells = cells

    def cell(self, i: int, j: int) -> frozenset[Word]:
        """Row i in 1..|u|+1, column j in 1..|w|."""
        if not (1 <= i <= len(self.u) + 1 and 1 <= j <= len(self.w)):
            raise IndexError(f"cell ({i}, {j}) outside table")
        return self._cells[i - 1][j]

    @property
    def final(self) -> frozenset[Word]:
        return self._cells[len(self.u)][len(self.w)]

    def rows(self) -> list[list[frozenset[Word]]]:
        """All rows, each with the virtual empty-prefix column dropped."""
        return [r[1:] for r in self._cells]


def complement_table(
    w: Sequence[int], u: Sequence[int], budget: int = DEFAULT_BUDGET
) -> PrefixTable:
    """The whole prefix table, for inspection; no scattered-factor precondition."""
    wt, ut = tuple(w), tuple(u)
    tracker = [0]
    raw = [_first_row(wt)]
    for x in ut:
        raw.append(_extend_row(wt, raw[-1], x, tracker, budget))
    cells = [[frozenset(Word(t) for t in c) for c in row] for row in raw]
    return PrefixTable(Word(wt), Word(ut), cells)


# --- suffix-matching recurrence with multiplicities -------------------------
#
# Rows are indexed by suffixes of u, columns by suffixes of w, with a virtual
# empty-suffix column at index |w|+1.  Cell (s, j) maps each word of
# C(w[j..|w|], s) to its number of embeddings.  Extending the row suffix by a
# letter x on the left: every cell prepends w[j] to its right neighbour, and
# where w[j] = x it also absorbs the parent row's right neighbour, adding
# counts when the same complement word arises both ways.

def _last_row(wt: tuple[int, ...]) -> list[dict[tuple[int, ...], int]]:
    n = len(wt)
    row: list[dict[tuple[int, ...], int]] = [{} for _ in range(n + 2)]
    row[n + 1] = {(): 1}
    for j in range(n, 0, -1):
        row[j] = {wt[j - 1 :]: 1}
    return row


def _extend_suffix_row(
    wt: tuple[int, ...],
    prev: list[dict[tuple[int, ...], int]],
    letter: int,
    tracker: list[int],
    budget: int,
) -> list[dict[tuple[int, ...], int]]:
    n = len(wt)
    row: list[dict[tuple[int, ...], int]] = [{} for _ in range(n + 2)]
    size = 0
    for j in range(n, 0, -1):
        a = wt[j - 1]
        cell = {(a,) + v: c for v, c in row[j + 1].items()}
        if a == letter:
            for v, c in prev[j + 1].items():
                cell[v] = cell.get(v, 0) + c
        row[j] = cell
        size += len(cell)
    tracker[0] += size
    if tracker[0] > budget:
        raise BudgetExceeded(f"suffix table exceeds budget {budget}")
    return row


def complement_set_with_multiplicity(
    w: Sequence[int], u: Sequence[int], budget: int = DEFAULT_BUDGET
) -> ComplementSet:
    """C(w, u) with the number of embeddings producing each complement word."""
    wt, ut = tuple(w), tuple(u)
    if not is_scattered_factor(ut, wt):
        raise NotAScatteredFactor(f"{Word(ut)!r} is not a scattered factor of {Word(wt)!r}")
    tracker = [0]
    row = _last_row(wt)
    for x in reversed(ut):
        row = _extend_suffix_row(wt, row, x, tracker, budget)
    mult = {Word(t): c for t, c in row[1].items()}
    return ComplementSet(frozenset(mult), mult)
