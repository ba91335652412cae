"""Freely reduced words in a free group of finite rank.

A letter is a nonzero integer: ``i + 1`` stands for generator ``i`` and
``-(i + 1)`` for its inverse.  Generators are displayed as ``a``, ``b``, ...
"""
from __future__ import annotations

import re
from functools import total_ordering
from typing import Iterable, Iterator

from .errors import IdentityWord, ParseError, UnknownGenerator

MAX_RANK = 26
DEFAULT_RANK = 2
_NAMES = "abcdefghijklmnopqrstuvwxyz"


def letter_key(letter: int) -> int:
    # a < a^-1 < b < b^-1 < ...
    return 2 * (abs(letter) - 1) + (letter < 0)


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a letter")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@total_ordering
class Word:
    """An element of the free group, stored as its reduced word.

    Reduction happens on construction, so two equal group elements always
    have identical ``letters``.  Words are ordered shortlex.
    """

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[int] = ()):
        letters = _reduce(letters)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_hash", hash(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def _trusted(cls, letters: tuple[int, ...]) -> "Word":
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        object.__setattr__(w, "_hash", hash(letters))
        return w

    @classmethod
    def gen(cls, index: int, power: int = 1) -> "Word":
        letter = index + 1 if power > 0 else -(index + 1)
        return cls._trusted((letter,) * abs(power))

    # -- group structure ------------------------------------------------
    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        x, y = self.letters, other.letters
        k = 0
        n = min(len(x), len(y))
        while k < n and x[-1 - k] == -y[k]:
            k += 1
        return Word._trusted(x[: len(x) - k] + y[k:])

    def inverse(self) -> "Word":
        return Word._trusted(tuple(-x for x in reversed(self.letters)))

    __invert__ = inverse

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(n)):
            result = result * base
        return result

    # -- sequence structure ---------------------------------------------
    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def prefix(self, k: int) -> "Word":
        return Word._trusted(self.letters[:k])

    def suffix(self, k: int) -> "Word":
        return Word._trusted(self.letters[len(self.letters) - k:])

    def prefixes(self) -> list["Word"]:
        """All prefixes from ``1`` up to the word itself, shortest first."""
        return [self.prefix(k) for k in range(len(self) + 1)]

    def suffixes(self) -> list["Word"]:
        return [self.suffix(k) for k in range(len(self) + 1)]

    def is_prefix_of(self, other: "Word") -> bool:
        return other.letters[: len(self.letters)] == self.letters

    def is_suffix_of(self, other: "Word") -> bool:
        n = len(self.letters)
        return n == 0 or other.letters[-n:] == self.letters

    def is_cyclically_reduced(self) -> bool:
        return len(self.letters) < 2 or self.letters[0] != -self.letters[-1]

    def max_generator(self) -> int:
        """Number of generators needed to write this word."""
        return max((abs(x) for x in self.letters), default=0)

    def exponent_vector(self, rank: int) -> list[int]:
        """Image in the abelianization ``Z^rank``."""
        vec = [0] * rank
        for x in self.letters:
            vec[abs(x) - 1] += 1 if x > 0 else -1
        return vec

    # -- comparison -----------------------------------------------------
    def sort_key(self) -> tuple:
        return (len(self.letters), tuple(letter_key(x) for x in self.letters))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __lt__(self, other: "Word") -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)


ONE = Word()


def mul(w1: Word, w2: Word) -> Word:
    return w1 * w2


def inverse(w: Word) -> Word:
    return w.inverse()


def prefix_test(z: Word, w: Word) -> bool:
    return z.is_prefix_of(w)


def suffix_test(z: Word, w: Word) -> bool:
    return z.is_suffix_of(w)


def cyclic_decomposition(w: Word) -> tuple[Word, Word]:
    """Split ``w`` as the reduced product ``p^-1 * s * p`` with ``s`` cyclically reduced.

    ``p`` is the longest such conjugator.

    >>> cyclic_decomposition(parse_word("b^-1ab"))
    (Word('b'), Word('a'))
    """
    if w.is_identity():
        raise IdentityWord("the identity has no cyclic decomposition")
    x = w.letters
    k = 0
    while len(x) - 2 * k >= 2 and x[k] == -x[len(x) - 1 - k]:
        k += 1
    p = Word._trusted(x[len(x) - k:])
    s = Word._trusted(x[k: len(x) - k])
    return p, s


def primitive_root(w: Word) -> tuple[Word, int]:
    """Return ``(r, m)`` with ``w == r**m``, ``m > 0`` maximal."""
    p, s = cyclic_decomposition(w)
    core = s.letters
    n = len(core)
    for d in range(1, n + 1):
        if n % d == 0 and core == core[:d] * (n // d):
            block = Word._trusted(core[:d])
            return p.inverse() * block * p, n // d
    raise AssertionError("unreachable")


def all_words(rank: int, max_len: int) -> list[Word]:
    """Every reduced word of length at most ``max_len``, in shortlex order."""
    alphabet = sorted(
        [i + 1 for i in range(rank)] + [-(i + 1) for i in range(rank)], key=letter_key
    )
    out = [ONE]
    layer = [()]
    for _ in range(max_len):
        nxt = []
        for letters in layer:
            for x in alphabet:
                if letters and letters[-1] == -x:
                    continue
                nxt.append(letters + (x,))
        out.extend(Word._trusted(t) for t in nxt)
        layer = nxt
    return out


# -- text form ----------------------------------------------------------

def generator_name(index: int) -> str:
    return _NAMES[index]


def format_word(w: Word) -> str:
    """Canonical text: runs collapsed to ``x^n``, inverses as ``^-1``."""
    if w.is_identity():
        return "1"
    parts = []
    x = w.letters
    i = 0
    while i < len(x):
        j = i
        while j < len(x) and x[j] == x[i]:
            j += 1
        run = j - i
        exp = run if x[i] > 0 else -run
        name = _NAMES[abs(x[i]) - 1]
        parts.append(name if exp == 1 else f"{name}^{exp}")
        i = j
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:([a-zA-Z])(?:\s*\^\s*([+-]?\d+))?|(1))")


def parse_word(text: str, rank: int = MAX_RANK) -> Word:
    """Parse the compact word syntax, e.g. ``aB^2`` for ``a b^-2``.

    Uppercase letters denote inverses; ``1`` is the identity.
    """
    letters: list[int] = []
    pos = 0
    stripped = text.rstrip()
    if not stripped.strip():
        raise ParseError("empty word", 0)
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m:
            raise ParseError(f"unexpected character {stripped[pos]!r}", pos)
        if m.group(3):
            pos = m.end()
            continue
        ch = m.group(1)
        index = ord(ch.lower()) - ord("a")
        if index >= rank:
            raise UnknownGenerator(f"generator {ch!r} outside rank {rank}")
        sign = -1 if ch.isupper() else 1
        exp = int(m.group(2)) if m.group(2) is not None else 1
        letter = sign * (index + 1)
        if exp < 0:
            letter, exp = -letter, -exp
        letters.extend([letter] * exp)
        pos = m.end()
    return Word(letters)
