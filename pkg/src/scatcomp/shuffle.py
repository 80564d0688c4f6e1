"""Shuffle products and self-shuffle complement tests.

The shuffle of u and v is every interleaving of the two; the perfect shuffle
alternates their letters one by one.  A word u is its own complement inside a
superword w of double length exactly when w lies in the shuffle of u with
itself, which a single left-to-right scan with two cursors can decide.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence

from .errors import BudgetExceeded, DEFAULT_BUDGET, LengthMismatch
from .embeddings import Embedding, enumerate_embeddings
from .words import Word


def shuffle_set(u: Sequence[int], v: Sequence[int], budget: int = DEFAULT_BUDGET) -> set[Word]:
    """All interleavings of u and v."""
    u, v = tuple(u), tuple(v)
    memo: dict[tuple[int, int], set[tuple[int, ...]]] = {}
    stored = 0

    def rec(i: int, j: int) -> set[tuple[int, ...]]:
        nonlocal stored
        key = (i, j)
        got = memo.get(key)
        if got is not None:
            return got
        if i == len(u):
            r = {v[j:]}
        elif j == len(v):
            r = {u[i:]}
        else:
            r = {(u[i],) + s for s in rec(i + 1, j)}
            r |= {(v[j],) + s for s in rec(i, j + 1)}
        stored += len(r)
        if stored > budget:
            raise BudgetExceeded(f"shuffle set storage exceeds budget {budget}")
        memo[key] = r
        return r

    return {Word(t) for t in rec(0, 0)}


def perfect_shuffle(u: Sequence[int], v: Sequence[int]) -> Word:
    """u[1] v[1] u[2] v[2] ...; requires |u| = |v|."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise LengthMismatch(f"perfect shuffle needs equal lengths, got {len(u)} and {len(v)}")
    out = []
    for a, b in zip(u, v):
        out.append(a)
        out.append(b)
    return Word(out)


def in_shuffle(w: Sequence[int], u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff w is an interleaving of u and v (quadratic table)."""
    w, u, v = tuple(w), tuple(u), tuple(v)
    m, k = len(u), len(v)
    if len(w) != m + k or Counter(w) != Counter(u) + Counter(v):
        return False
    # row[j] = can w[:i+j] be split into u[:i] and v[:j]
    row = [True] * (k + 1)
    for j in range(1, k + 1):
        row[j] = row[j - 1] and v[j - 1] == w[j - 1]
    for i in range(1, m + 1):
        row[0] = row[0] and u[i - 1] == w[i - 1]
        for j in range(1, k + 1):
            c = w[i + j - 1]
            row[j] = (row[j] and u[i - 1] == c) or (row[j - 1] and v[j - 1] == c)
    return row[k]


def is_self_shuffle_complement(w: Sequence[int], u: Sequence[int]) -> bool:
    """True iff u embeds into w with complement u, i.e. w is in the shuffle
    of u with itself.

    A single cursor pair cannot decide this in one pass whichever cursor has
    priority on a shared letter: in w = aabaab with u = aab the copy taking
    position 2 is only known to be wrong in hindsight.  So the scan carries
    all viable splits at once: after i letters, the set of prefix lengths one
    copy may have consumed, the other copy holding the remaining i letters.
    """
    w, u = tuple(w), tuple(u)
    m = len(u)
    if len(w) != 2 * m:
        return False
    reach = {0}
    for i, a in enumerate(w):
        step = set()
        for c1 in reach:
            if c1 < m and u[c1] == a:
                step.add(c1 + 1)
            c2 = i - c1
            if c2 < m and u[c2] == a:
                step.add(c1)
        if not step:
            return False
        reach = step
    return m in reach


def self_shuffle_by_second_occurrence(w: Sequence[int], u: Sequence[int]) -> bool:
    """Self-shuffle test by greedily embedding the second copy of u.

    Builds the leftmost embedding of u into w that starts no earlier than
    position 2, then checks that the deleted positions spell u again.  This
    realizes the claim that such a greedy second occurrence always witnesses
    self-shuffle membership; the claim is false (w = aabaab, u = aab is a
    member, yet greedy picks positions 2,4,6 leaving aba) and the function is
    kept as stated so the verification suite can report where it breaks.
    """
    w, u = tuple(w), tuple(u)
    m = len(u)
    if len(w) != 2 * m:
        return False
    taken = []
    j = 1  # 0-based scan start; position 1 is the earliest second occurrence
    for a in u:
        while j < len(w) and w[j] != a:
            j += 1
        if j == len(w):
            return False
        taken.append(j)
        j += 1
    rest = set(taken)
    left = tuple(a for p, a in enumerate(w) if p not in rest)
    return left == u


def has_superword_complement(w: Sequence[int], u: Sequence[int]) -> bool:
    """True iff some complement of u in w contains u as a scattered factor.

    Equivalent to w containing two disjoint embeddings of u, since the second
    copy lives inside the complement of the first.  Any disjoint pair can be
    sorted into a pointwise-ordered one, so a single scan suffices if it
    tracks, for each prefix length the leading copy may have reached, the
    longest prefix a disjoint trailing copy can have reached at the same
    time.  A one-pair greedy is not enough whichever cursor gets priority:
    with w = aabaab, u = aab the trailer must not steal position 2, while
    with w = ababaa, u = aba the leader must not take position 3.
    """
    w, u = tuple(w), tuple(u)
    m = len(u)
    if m == 0:
        return True
    if len(w) < 2 * m:
        return False
    best = {0: 0}  # leading cursor -> farthest trailing cursor, both 0-based
    for a in w:
        step = dict(best)
        for c1, c2 in best.items():
            if c1 < m and u[c1] == a and step.get(c1 + 1, -1) < c2:
                step[c1 + 1] = c2
            if c2 < c1 and u[c2] == a and step[c1] < c2 + 1:
                step[c1] = c2 + 1
        if step.get(m) == m:
            return True
        best = step
    return False


def first_second_occurrence(
    w: Sequence[int], v: Sequence[int], budget: int = DEFAULT_BUDGET
) -> tuple[Embedding, Embedding] | None:
    """Earliest pair of embeddings (e1, e2) of v partitioning w with e1 < e2
    pointwise, or None; |w| must be 2|v| for any pair to exist.

    e1 is the lexicographically least embedding admitting such a partner.
    """
    w, v = tuple(w), tuple(v)
    n, m = len(w), len(v)
    if n != 2 * m:
        return None
    if m == 0:
        return ((), ())
    for e1 in enumerate_embeddings(w, v, budget):
        used = set(e1)
        e2 = tuple(p for p in range(1, n + 1) if p not in used)
        if all(w[p - 1] == v[i] for i, p in enumerate(e2)) and all(
            p < q for p, q in zip(e1, e2)
        ):
            return (e1, e2)
    return None
