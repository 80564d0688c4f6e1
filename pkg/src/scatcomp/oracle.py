"""Brute-force reference implementations.

Everything here recomputes results from first principles, by enumerating
position subsets or candidate words outright, so the solver modules can be
checked against an independent route.  Budgets keep the blowups explicit.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations, product
from math import comb

from .complement import ComplementSet
from .errors import BudgetExceeded
from .shuffle import in_shuffle
from .words import Word

# Subset enumeration is 2^|w| or binom(|w|,k); keep the brute force honest
# about what it is willing to chew through.
BRUTE_MAX_SUBSETS = 10**7
BRUTE_MAX_LEN = 8
BRUTE_MAX_SIGMA = 4


def brute_complement_set(w: Sequence[int], u: Sequence[int]) -> ComplementSet:
    """C(w, u) with multiplicities, by trying every position subset of size |u|."""
    wt, ut = tuple(w), tuple(u)
    n, m = len(wt), len(ut)
    if m > n:
        return ComplementSet(frozenset(), {})
    if comb(n, m) > BRUTE_MAX_SUBSETS:
        raise BudgetExceeded(f"binom({n},{m}) subsets exceed the brute-force cap")
    counts: dict[Word, int] = {}
    for positions in combinations(range(n), m):
        if all(wt[p] == ut[i] for i, p in enumerate(positions)):
            chosen = set(positions)
            v = Word(a for j, a in enumerate(wt) if j not in chosen)
            counts[v] = counts.get(v, 0) + 1
    return ComplementSet(frozenset(counts), counts)


def brute_all_scattered_factors(w: Sequence[int], k: int) -> frozenset[Word]:
    """All distinct length-k scattered factors of w, by position subsets."""
    wt = tuple(w)
    n = len(wt)
    if k < 0 or k > n:
        return frozenset()
    if comb(n, k) > BRUTE_MAX_SUBSETS:
        raise BudgetExceeded(f"binom({n},{k}) subsets exceed the brute-force cap")
    return frozenset(Word(wt[p] for p in positions) for positions in combinations(range(n), k))


def brute_exists_word(
    pairs: Iterable[tuple[Sequence[int], Sequence[int]]],
    alphabet: Iterable[int],
) -> Word | None:
    """First w (by code order) interleaving every pair (v_i, u_i), or None.

    All pairs must have the same total length n; the scan tries every word in
    alphabet^n, so n and the alphabet are capped.
    """
    plist = [(tuple(v), tuple(u)) for v, u in pairs]
    if not plist:
        raise ValueError("need at least one pair")
    lengths = {len(v) + len(u) for v, u in plist}
    if len(lengths) != 1:
        raise ValueError(f"pairs disagree on total length: {sorted(lengths)}")
    n = lengths.pop()
    codes = sorted(set(alphabet))
    if n > BRUTE_MAX_LEN or len(codes) > BRUTE_MAX_SIGMA:
        raise BudgetExceeded(
            f"scan of {len(codes)}^{n} words exceeds the brute-force cap "
            f"(n <= {BRUTE_MAX_LEN}, sigma <= {BRUTE_MAX_SIGMA})"
        )
    for cand in product(codes, repeat=n):
        if all(in_shuffle(cand, v, u) for v, u in plist):
            return Word(cand)
    return None


def _complement_census(wt: tuple[int, ...]) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
    """For every scattered factor u of wt: complement word -> embedding count.

    One pass over all 2^|wt| position subsets; internal helper on raw tuples
    for the exhaustive verification sweeps.
    """
    splits: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), ())]
    for a in wt:
        splits = [p for u, v in splits for p in ((u + (a,), v), (u, v + (a,)))]
    census: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for u, v in splits:
        per_u = census.get(u)
        if per_u is None:
            per_u = census[u] = {}
        per_u[v] = per_u.get(v, 0) + 1
    return census
