import pytest

from scatcomp.errors import WordSyntaxError
from scatcomp.words import (
    Alphabet,
    Word,
    condensed,
    contains_letter_square,
    is_scattered_factor,
    is_square_free,
    read_word_file,
    read_word_lines,
    text,
    word,
)


def test_word_text_roundtrip():
    assert word("banana") == Word((2, 1, 14, 1, 14, 1))
    assert text(word("banana")) == "banana"
    assert word("") == Word()
    assert text(()) == ""


def test_word_rejects_non_letters():
    with pytest.raises(WordSyntaxError):
        word("ab1")
    with pytest.raises(WordSyntaxError):
        word("aB")


def test_positions_are_one_based():
    w = word("abc")
    assert w.at(1) == 1
    assert w.at(3) == 3
    with pytest.raises(IndexError):
        w.at(0)
    with pytest.raises(IndexError):
        w.at(4)
    assert w.sub(2, 3) == word("bc")
    assert w.sub(2, 1) == word("")


def test_word_concat_and_power():
    assert word("ab") + word("ba") == word("abba")
    assert word("ab") * 3 == word("ababab")


def test_words_order_lexicographically():
    assert sorted([word("ba"), word("ab"), word("aab")]) == [
        word("aab"),
        word("ab"),
        word("ba"),
    ]


def test_alphabet_codec():
    alpha = Alphabet("nab")
    assert alpha.encode("ban") == Word((3, 2, 1))
    assert alpha.decode((3, 2, 1)) == "ban"
    assert alpha.size == 3
    assert "n" in alpha and "z" not in alpha
    with pytest.raises(WordSyntaxError):
        alpha.encode("banz")
    with pytest.raises(WordSyntaxError):
        alpha.decode((4,))


def test_alphabet_rejects_duplicates_and_empties():
    with pytest.raises(WordSyntaxError):
        Alphabet("aa")
    with pytest.raises(WordSyntaxError):
        Alphabet("")
    with pytest.raises(WordSyntaxError):
        Alphabet(["ab"])


def test_alphabet_inferred_sorts_letters():
    alpha = Alphabet.inferred(["ban", "nab"])
    assert alpha.letters == ("a", "b", "n")


def test_is_scattered_factor():
    assert is_scattered_factor(word("as"), word("ananas"))
    assert is_scattered_factor(word(""), word("ab"))
    assert not is_scattered_factor(word("sa"), word("ananas"))
    assert not is_scattered_factor(word("ab"), word(""))


def test_condensed():
    assert condensed(word("aabba")) == word("aba")
    assert condensed(word("")) == word("")
    assert condensed(condensed(word("aabbccbb"))) == condensed(word("aabbccbb"))


def test_letter_square_and_square_free():
    assert contains_letter_square(word("abba"))
    assert not contains_letter_square(word("abab"))
    assert is_square_free(word("abcacb"))
    assert not is_square_free(word("abab"))
    assert not is_square_free(word("aa"))


def test_read_word_file_plain(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("ba\nab\n")
    words, alpha = read_word_file(p)
    assert words == [word("ba"), word("ab")]
    assert alpha.letters == ("a", "b")


def test_read_word_file_header_codec(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("#alphabet:ban\nnab\n")
    words, alpha = read_word_file(p)
    assert alpha.letters == ("b", "a", "n")
    assert words == [Word((3, 2, 1))]


def test_read_word_lines_reports_line_numbers(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("#alphabet:ab\nab\nb a\n")
    with pytest.raises(WordSyntaxError, match=r":3:"):
        read_word_lines(p)


def test_read_word_lines_empty_line_is_empty_word(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("ab\n\nba\n")
    lines, alpha = read_word_lines(p)
    assert lines == ["ab", "", "ba"]
    assert alpha is None
