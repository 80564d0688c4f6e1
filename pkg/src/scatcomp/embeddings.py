"""Embeddings of u into w: enumeration, counting, and complement extraction.

An embedding is a strictly increasing tuple of 1-based positions of w that
spell out u.  Deleting the embedded positions from w leaves the complement
word of that embedding.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Sequence

from .errors import BudgetExceeded, DEFAULT_BUDGET
from .words import Word

Embedding = tuple[int, ...]


def count_embeddings(w: Sequence[int], u: Sequence[int]) -> int:
    """Number of embeddings of u into w (0 when u is not a scattered factor)."""
    w, u = tuple(w), tuple(u)
    m = len(u)
    # dp[i] = number of embeddings of u[:i] into the prefix scanned so far
    dp = [0] * (m + 1)
    dp[0] = 1
    for a in w:
        for i in range(m, 0, -1):
            if u[i - 1] == a:
                dp[i] += dp[i - 1]
    return dp[m]


def enumerate_embeddings(
    w: Sequence[int], u: Sequence[int], budget: int = DEFAULT_BUDGET
) -> list[Embedding]:
    """All embeddings of u into w in lexicographic position order.

    Refuses inputs whose embedding count exceeds the budget.
    """
    w, u = tuple(w), tuple(u)
    total = count_embeddings(w, u)
    if total > budget:
        raise BudgetExceeded(f"{total} embeddings exceed budget {budget}")
    if not u:
        return [()]
    n, m = len(w), len(u)
    occ: dict[int, list[int]] = {}
    for j, a in enumerate(w):
        occ.setdefault(a, []).append(j)
    for a in u:
        if a not in occ:
            return []
    out: list[Embedding] = []
    stack = [0] * m  # 0-based chosen positions
    i = 0
    nxt = 0  # smallest candidate position for u[i]
    while i >= 0:
        positions = occ[u[i]]
        k = bisect_left(positions, nxt)
        # too few letters left for the remaining suffix of u: backtrack
        while k < len(positions) and positions[k] + (m - i) <= n:
            stack[i] = positions[k]
            if i == m - 1:
                out.append(tuple(p + 1 for p in stack))
                k += 1
            else:
                i += 1
                nxt = stack[i - 1] + 1
                break
        else:
            i -= 1
            if i >= 0:
                nxt = stack[i] + 1
    return out


def complement_of_embedding(w: Sequence[int], e: Sequence[int]) -> Word:
    """Word left over after deleting the embedded positions (1-based) from w."""
    w = tuple(w)
    n = len(w)
    prev = 0
    for p in e:
        if not (isinstance(p, int) and prev < p <= n):
            raise ValueError(f"invalid embedding {tuple(e)} for a word of length {n}")
        prev = p
    chosen = set(e)
    return Word(a for j, a in enumerate(w, 1) if j not in chosen)


def group_equal_complements(
    w: Sequence[int], u: Sequence[int], budget: int = DEFAULT_BUDGET
) -> dict[Word, list[Embedding]]:
    """Embeddings of u into w grouped by their complement word, keys sorted."""
    groups: dict[Word, list[Embedding]] = {}
    for e in enumerate_embeddings(w, u, budget):
        groups.setdefault(complement_of_embedding(w, e), []).append(e)
    return {v: groups[v] for v in sorted(groups)}
