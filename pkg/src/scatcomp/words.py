"""Words over integer letter codes, alphabets for text I/O, and basic predicates.

A word is a tuple of positive letter codes.  All public position arguments are
1-based (``w.at(3)`` is the third letter); raw tuple indexing stays 0-based and
is used internally.  Ordering and hashing come from ``tuple``, so words compare
lexicographically by code.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import groupby

from .errors import WordSyntaxError


class Word(tuple):
    """Immutable word: a tuple of positive int letter codes."""

    __slots__ = ()

    def __new__(cls, codes: Iterable[int] = ()) -> "Word":
        return super().__new__(cls, codes)

    def at(self, i: int) -> int:
        """Letter code at 1-based position i."""
        if not 1 <= i <= len(self):
            raise IndexError(f"position {i} out of range 1..{len(self)}")
        return self[i - 1]

    def sub(self, i: int, j: int) -> "Word":
        """Factor spanning 1-based positions i..j; empty when i > j."""
        if i < 1:
            raise IndexError(f"position {i} out of range")
        return Word(self[i - 1 : j])

    def __add__(self, other) -> "Word":  # concatenation
        return Word(tuple.__add__(self, tuple(other)))

    def __mul__(self, k: int) -> "Word":  # repetition w**k spelled w * k
        return Word(tuple.__mul__(self, k))

    def __repr__(self) -> str:
        if self and all(1 <= a <= 26 for a in self):
            return f"word({text(self)!r})"
        return f"Word({list(self)!r})"


EMPTY = Word()

_ORD_A = ord("a")


def word(s: str) -> Word:
    """Convenience constructor mapping 'a'..'z' to codes 1..26."""
    codes = []
    for ch in s:
        c = ord(ch) - _ORD_A + 1
        if not 1 <= c <= 26:
            raise WordSyntaxError(f"letter {ch!r} outside a..z; use an Alphabet")
        codes.append(c)
    return Word(codes)


def text(w: Sequence[int]) -> str:
    """Inverse of word(): render codes 1..26 as 'a'..'z'."""
    try:
        return "".join(chr(_ORD_A + a - 1) for a in w)
    except (TypeError, ValueError):
        raise WordSyntaxError(f"word {w!r} has codes outside 1..26")


class Alphabet:
    """Bijection between display letters and codes 1..sigma.

    The letter order given at construction defines the codes, so a sorted
    letter list makes code order agree with character order.  All text
    encoding and decoding goes through an Alphabet; the algorithms themselves
    only ever see codes.
    """

    __slots__ = ("_letters", "_code_of")

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise WordSyntaxError("alphabet must contain at least one letter")
        if any(len(ch) != 1 for ch in letters):
            raise WordSyntaxError("alphabet entries must be single characters")
        if len(set(letters)) != len(letters):
            raise WordSyntaxError(f"duplicate letters in alphabet {''.join(letters)!r}")
        self._letters = letters
        self._code_of = {ch: i + 1 for i, ch in enumerate(letters)}

    @classmethod
    def inferred(cls, texts: Iterable[str]) -> "Alphabet":
        """Alphabet of the sorted distinct characters occurring in texts."""
        chars = sorted(set().union(*map(set, list(texts))))
        if not chars:
            raise WordSyntaxError("cannot infer an alphabet from empty input")
        return cls(chars)

    @property
    def size(self) -> int:
        return len(self._letters)

    @property
    def letters(self) -> tuple[str, ...]:
        return self._letters

    def codes(self) -> frozenset[int]:
        return frozenset(range(1, len(self._letters) + 1))

    def __contains__(self, ch: str) -> bool:
        return ch in self._code_of

    def encode(self, s: str) -> Word:
        try:
            return Word(self._code_of[ch] for ch in s)
        except KeyError as exc:
            raise WordSyntaxError(
                f"letter {exc.args[0]!r} not in alphabet {''.join(self._letters)!r}"
            ) from None

    def decode(self, w: Sequence[int]) -> str:
        out = []
        for a in w:
            if not 1 <= a <= len(self._letters):
                raise WordSyntaxError(f"code {a} outside alphabet of size {len(self._letters)}")
            out.append(self._letters[a - 1])
        return "".join(out)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self._letters)!r})"


def letters(w: Sequence[int]) -> frozenset[int]:
    """Set of letter codes occurring in w."""
    return frozenset(w)


def is_scattered_factor(u: Sequence[int], w: Sequence[int]) -> bool:
    """True iff u can be obtained from w by deleting letters (greedy scan)."""
    it = iter(w)
    return all(a in it for a in u)


def condensed(w: Sequence[int]) -> Word:
    """w with every maximal run of equal letters collapsed to one letter."""
    return Word(a for a, _ in groupby(w))


def contains_letter_square(w: Sequence[int]) -> bool:
    """True iff some letter occurs twice in a row."""
    return any(w[i] == w[i + 1] for i in range(len(w) - 1))


def is_square_free(w: Sequence[int]) -> bool:
    """True iff no factor of the form xx (x nonempty) occurs in w."""
    w = tuple(w)
    n = len(w)
    for length in range(1, n // 2 + 1):
        for i in range(n - 2 * length + 1):
            if w[i : i + length] == w[i + length : i + 2 * length]:
                return False
    return True


def read_word_lines(path) -> tuple[list[str], Alphabet | None]:
    """Raw lines of a word file plus its '#alphabet:<letters>' header, if any.

    One word per line; an interior empty line denotes the empty word.  Lines
    with stray whitespace are rejected with their line number.
    """
    with open(path, encoding="ascii") as fh:
        lines = fh.read().splitlines()
    alphabet = None
    if lines and lines[0].startswith("#alphabet:"):
        alphabet = Alphabet(lines[0][len("#alphabet:") :].strip())
        lines = lines[1:]
    for lineno, line in enumerate(lines, 1 if alphabet is None else 2):
        if any(ch.isspace() for ch in line):
            raise WordSyntaxError(f"{path}:{lineno}: stray whitespace in {line!r}")
    return lines, alphabet


def read_word_file(path) -> tuple[list[Word], Alphabet]:
    """Read a word file, inferring the alphabet from its letters if no header."""
    lines, alphabet = read_word_lines(path)
    if alphabet is None:
        alphabet = Alphabet.inferred(lines)
    return [alphabet.encode(ln) for ln in lines], alphabet
