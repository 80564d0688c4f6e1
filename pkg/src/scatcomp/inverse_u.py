"""Recovering the deleted word: given w and a set S of complement words, find
u with S inside (or equal to) C(w, u).

Any u whose complement set contains S must itself lie in the complement set
of every member of S, so intersecting C(w, v) over v in S yields the full
candidate set; each candidate is then confirmed or rejected by recomputing
its complement set.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .complement import complement_set
from .errors import DEFAULT_BUDGET, LengthMismatch, NotAScatteredFactor
from .words import Word, is_scattered_factor


def _checked_set(w, S) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    wt = tuple(w)
    vs = [tuple(v) for v in S]
    if not vs:
        raise ValueError("S must contain at least one word")
    lengths = {len(v) for v in vs}
    if len(lengths) != 1:
        raise LengthMismatch(f"words in S have different lengths: {sorted(lengths)}")
    for v in vs:
        if not is_scattered_factor(v, wt):
            raise NotAScatteredFactor(f"{Word(v)!r} is not a scattered factor of {Word(wt)!r}")
    return wt, vs


def candidate_set(
    w: Sequence[int], S: Iterable[Sequence[int]], budget: int = DEFAULT_BUDGET
) -> frozenset[Word]:
    """All u with S a subset of C(w, u): the intersection of C(w, v) over v in S."""
    wt, vs = _checked_set(w, S)
    comps = sorted((complement_set(wt, v, budget).words for v in set(vs)), key=len)
    out = comps[0]
    for c in comps[1:]:
        out &= c
        if not out:
            break
    return frozenset(out)


def find_u(
    w: Sequence[int],
    S: Iterable[Sequence[int]],
    budget: int = DEFAULT_BUDGET,
) -> Word | None:
    """Lexicographically least u with C(w, u) exactly S, or None."""
    for u in _verified_candidates(w, S, budget):
        return u
    return None


def find_u_all(
    w: Sequence[int],
    S: Iterable[Sequence[int]],
    budget: int = DEFAULT_BUDGET,
) -> list[Word]:
    """All u with C(w, u) exactly S, in lexicographic order."""
    return list(_verified_candidates(w, S, budget))


def _verified_candidates(w, S, budget):
    target = frozenset(Word(v) for v in S)
    for u in sorted(candidate_set(w, S, budget)):
        if complement_set(w, u, budget).words == target:
            yield u
