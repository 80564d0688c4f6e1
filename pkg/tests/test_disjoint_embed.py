"""Pairwise disjoint exhaustive embeddings: existence and reconstruction."""

import pytest

from scatcomp.complement import complement_set
from scatcomp.disjoint_embed import (
    exists_word,
    find_w,
    reconstruct_word,
    shared_first_letters,
)
from scatcomp.errors import LengthMismatch
from scatcomp.oracle import brute_exists_word
from scatcomp.shuffle import in_shuffle
from scatcomp.words import word


def test_single_pair_builds_an_interleaving():
    pairs = [(word("ba"), word("ab"))]
    assert exists_word(pairs)
    w = reconstruct_word(pairs)
    assert in_shuffle(w, word("ba"), word("ab"))
    assert w == word("abab")  # lexicographically least


def test_pair_order_does_not_matter_for_truth():
    a = [(word("ab"), word("ba")), (word("ab"), word("ab"))]
    b = [(word("ab"), word("ab")), (word("ab"), word("ba"))]
    assert exists_word(a) == exists_word(b) is True
    assert reconstruct_word(a) == reconstruct_word(b) == word("abab")


def test_branching_pair_needs_both_consumption_choices():
    # with w = abab, the pair (ab, ab) must split as positions (1,4)/(2,3)
    # for one ordering and (1,2)/(3,4) for the other; committing to a single
    # choice per letter loses one of the two pairs
    pairs = [(word("ab"), word("ba")), (word("ab"), word("ab"))]
    w = reconstruct_word(pairs)
    assert w == word("abab")
    assert in_shuffle(w, word("ab"), word("ba"))
    assert in_shuffle(w, word("ab"), word("ab"))


def test_unsatisfiable_pairs():
    pairs = [(word("aa"), word("aa")), (word("bb"), word("bb"))]
    assert not exists_word(pairs)
    assert reconstruct_word(pairs) is None


def test_reconstruction_matches_brute_force_witness():
    pairs = [(word("ba"), word("ab")), (word("ab"), word("ab"))]
    got = reconstruct_word(pairs)
    brute = brute_exists_word(pairs, alphabet=[1, 2])
    assert got == brute == word("abab")


def test_total_lengths_must_agree():
    with pytest.raises(LengthMismatch):
        exists_word([(word("a"), word("b")), (word("ab"), word("ba"))])


def test_empty_pair_list_is_rejected():
    with pytest.raises(ValueError):
        exists_word([])
    with pytest.raises(ValueError):
        shared_first_letters([])


def test_shared_first_letters():
    pairs = [(word("ba"), word("ab")), (word("ab"), word("ba"))]
    assert shared_first_letters(pairs) == {1, 2}
    pairs = [(word("ab"), word("ba")), (word("ab"), word("aa"))]
    assert shared_first_letters(pairs) == {1}
    pairs = [(word("b"), word("")), (word("a"), word(""))]
    assert shared_first_letters(pairs) == set()


def test_empty_pair_of_empties():
    assert exists_word([(word(""), word(""))])
    assert reconstruct_word([(word(""), word(""))]) == word("")


def test_find_w_verifies_the_full_complement_set():
    # abba is the least interleaving of (ba, ab) whose complement set of ab
    # is exactly {ba}; abab interleaves too but its complement set is larger
    got = find_w(word("ab"), [word("ba")])
    assert got == word("abba")
    assert complement_set(got, word("ab")).words == {word("ba")}


def test_find_w_none_when_every_witness_overshoots():
    assert find_w(word("ab"), [word("a"), word("b")]) is None


def test_find_w_respects_budget():
    from scatcomp.errors import BudgetExceeded

    # the first witness abab is rejected, so a second verification is needed
    with pytest.raises(BudgetExceeded):
        find_w(word("ab"), [word("ba")], budget=1)
