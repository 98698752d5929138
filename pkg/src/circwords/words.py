"""Circular words over a d-letter alphabet and their occurrence combinatorics.

A circular word is a non-empty letter sequence indexed modulo its length,
equivalently a periodic infinite word.  Factors are read with indices
reduced mod n, so counting stays total even when the factor is longer
than the word itself.

Plain (non-circular) words are represented as bare tuples of ints; only
the circular object carries the alphabet.  Everything here is an
immutable value and safe to share between workers.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from random import Random
from typing import Iterator, Mapping, Union

from .errors import BadLetterError, EmptyFactorError, EmptyWordError

Letters = tuple[int, ...]

#: Anything the parsing helpers accept as a word.
WordLike = Union["Letters", str]


@dataclass(frozen=True)
class Alphabet:
    """The alphabet 0..d-1."""

    d: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise BadLetterError(f"alphabet needs at least 2 letters, got d={self.d}")

    def validate(self, letters: Letters) -> None:
        for a in letters:
            if not 0 <= a < self.d:
                raise BadLetterError(f"letter {a} outside alphabet 0..{self.d - 1}")

    def words(self, l: int) -> Iterator[Letters]:
        """All d^l words of length l, lexicographically."""
        return itertools.product(range(self.d), repeat=l)


BINARY = Alphabet(2)


@dataclass(frozen=True)
class CircularWord:
    """Non-empty letter sequence indexed modulo its length."""

    letters: Letters
    d: int = 2

    def __post_init__(self) -> None:
        if len(self.letters) == 0:
            raise EmptyWordError("circular word must have length >= 1")
        Alphabet(self.d).validate(self.letters)

    @property
    def n(self) -> int:
        return len(self.letters)

    def letter(self, i: int) -> int:
        return self.letters[i % self.n]

    def factor(self, i: int, l: int) -> Letters:
        """The length-l factor starting at position i, read periodically."""
        n = self.n
        i %= n
        if i + l <= n:
            return self.letters[i : i + l]
        reps = (i + l + n - 1) // n
        return (self.letters * reps)[i : i + l]

    def factors(self, l: int) -> list[Letters]:
        """All n factors of length l in position order (one per position)."""
        n = self.n
        reps = (n + l - 1 + n - 1) // n  # enough copies to cover i + l - 1
        ext = self.letters * reps
        return [ext[i : i + l] for i in range(n)]

    def rotate(self, s: int) -> "CircularWord":
        """Shift indices by s: position i of the result reads position i+s."""
        s %= self.n
        return CircularWord(self.letters[s:] + self.letters[:s], self.d)

    def reverse(self) -> "CircularWord":
        return CircularWord(self.letters[::-1], self.d)

    def complement(self) -> "CircularWord":
        """Exchange 0 and 1 (binary words only)."""
        if self.d != 2:
            raise ValueError("complement is defined for binary words")
        return CircularWord(tuple(1 - a for a in self.letters), 2)

    def __str__(self) -> str:
        return word_string(self.letters)

    def __repr__(self) -> str:
        return f"CircularWord({self}, d={self.d})"


def make_circular(letters, alphabet: Alphabet = BINARY) -> CircularWord:
    """Build a circular word, validating letters against the alphabet."""
    return CircularWord(tuple(letters), alphabet.d)


def parse_word(text: str, d: int | None = None) -> Letters:
    """Parse a digit string into a letter tuple.

    The alphabet size is max digit + 1 (at least 2) unless d is given.
    """
    letters = []
    for ch in text:
        if not ch.isdigit():
            raise BadLetterError(f"letter {ch!r} is not a digit")
        letters.append(int(ch))
    if d is not None:
        Alphabet(d).validate(tuple(letters))
    return tuple(letters)


def parse_circular(text: str, d: int | None = None) -> CircularWord:
    """Parse a digit string into a circular word (see parse_word)."""
    letters = parse_word(text, d)
    if d is None:
        d = max(2, max(letters, default=0) + 1)
    return CircularWord(letters, d)


def word_string(u: Letters) -> str:
    return "".join(str(a) for a in u)


def _as_letters(u: WordLike) -> Letters:
    return parse_word(u) if isinstance(u, str) else tuple(u)


def count_occurrences(w: CircularWord, u: Letters) -> int:
    """Number of positions i in 0..n-1 at which u occurs in w (mod n)."""
    u = tuple(u)
    if len(u) == 0:
        raise EmptyFactorError("occurrence counting needs a non-empty factor")
    Alphabet(w.d).validate(u)
    return sum(1 for f in w.factors(len(u)) if f == u)


def occurrence_positions(w: CircularWord, u: Letters) -> tuple[int, ...]:
    """The positions counted by count_occurrences, in increasing order."""
    u = tuple(u)
    if len(u) == 0:
        raise EmptyFactorError("occurrence counting needs a non-empty factor")
    Alphabet(w.d).validate(u)
    return tuple(i for i, f in enumerate(w.factors(len(u))) if f == u)


@dataclass(frozen=True)
class OccurrenceVector:
    """Counts of every length-l factor in a circular word.

    Only factors that actually occur are stored; lookups of absent words
    return 0.  The counts always sum to the word length, since each of
    the n positions starts exactly one factor.
    """

    l: int
    d: int
    total: int
    counts: Mapping[Letters, int]

    def __getitem__(self, u: WordLike) -> int:
        u = _as_letters(u)
        if len(u) != self.l:
            raise ValueError(f"expected a factor of length {self.l}, got {u}")
        return self.counts.get(u, 0)

    def nonzero(self) -> dict[Letters, int]:
        return dict(self.counts)

    def dense_items(self) -> Iterator[tuple[Letters, int]]:
        """(factor, count) for all d^l factors, lexicographically."""
        for u in Alphabet(self.d).words(self.l):
            yield u, self.counts.get(u, 0)


def occurrence_vector(w: CircularWord, l: int) -> OccurrenceVector:
    """Count every length-l factor of w in one scan."""
    if l < 1:
        raise ValueError(f"factor length must be >= 1, got {l}")
    counts = Counter(w.factors(l))
    return OccurrenceVector(l=l, d=w.d, total=w.n, counts=dict(counts))


def mirror(u: Letters) -> Letters:
    """The reversal of u."""
    return tuple(u)[::-1]


def is_palindrome(u: Letters) -> bool:
    u = tuple(u)
    return u == u[::-1]


def is_palindromic_pair(u: Letters, v: Letters) -> bool:
    """Same length, mirror images of each other, and neither a palindrome."""
    u, v = tuple(u), tuple(v)
    return len(u) == len(v) and v == u[::-1] and not is_palindrome(u)


@dataclass(frozen=True)
class Run:
    """A circularly maximal block of one repeated letter."""

    letter: int
    start: int
    length: int


def runs(w: CircularWord) -> tuple[Run, ...]:
    """Maximal-run decomposition in order of start position.

    A constant word yields the single run covering the whole word.
    """
    n = w.n
    letters = w.letters
    starts = [i for i in range(n) if letters[i] != letters[i - 1]]
    if not starts:
        return (Run(letters[0], 0, n),)
    out = []
    for j, s in enumerate(starts):
        nxt = starts[(j + 1) % len(starts)]
        out.append(Run(letters[s], s, (nxt - s) % n or n))
    return tuple(out)


@dataclass(frozen=True)
class IsolatedBlock:
    """A maximal circular arc of length-1 runs (...abab... letters).

    `start` is the position of the first isolated letter after the
    preceding long-run block; it is None only in the degenerate case
    where the whole word alternates and no anchor exists.
    """

    letters: Letters
    start: int | None

    @property
    def start_letter(self) -> int:
        return self.letters[0]

    @property
    def length(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class LongRunBlock:
    """A maximal circular arc of runs of length >= 2."""

    runs: tuple[Run, ...]

    @property
    def start(self) -> int:
        return self.runs[0].start

    @property
    def length(self) -> int:
        return sum(r.length for r in self.runs)


Block = Union[IsolatedBlock, LongRunBlock]


@dataclass(frozen=True)
class BlockDecomposition:
    """Circular split into alternating isolated and long-run blocks."""

    n: int
    blocks: tuple[Block, ...]
    whole_word_alternating: bool

    def isolated_blocks(self) -> list[IsolatedBlock]:
        return [b for b in self.blocks if isinstance(b, IsolatedBlock)]

    def reconstruct(self) -> CircularWord:
        """Reassemble the word from the blocks (inverse of decompose_blocks)."""
        out: list[int | None] = [None] * self.n
        for b in self.blocks:
            start = 0 if b.start is None else b.start
            if isinstance(b, IsolatedBlock):
                for j, a in enumerate(b.letters):
                    out[(start + j) % self.n] = a
            else:
                for r in b.runs:
                    for j in range(r.length):
                        out[(r.start + j) % self.n] = r.letter
        if any(a is None for a in out):
            raise ValueError("blocks do not cover the word")
        return CircularWord(tuple(out), 2)


def decompose_blocks(w: CircularWord) -> BlockDecomposition:
    """Split a binary circular word into isolated-letter and long-run blocks.

    Runs of length 1 group into IsolatedBlocks, runs of length >= 2 into
    LongRunBlocks, alternating around the circle.  When no run reaches
    length 2 there is no anchor for the grouping and the whole word is a
    single unanchored IsolatedBlock with the alternating flag set.
    """
    if w.d != 2:
        raise ValueError("block decomposition is defined for binary words")
    rs = runs(w)
    kinds = [r.length == 1 for r in rs]  # True = isolated
    if all(kinds):
        return BlockDecomposition(
            n=w.n,
            blocks=(IsolatedBlock(letters=w.letters, start=None),),
            whole_word_alternating=True,
        )
    if not any(kinds):
        return BlockDecomposition(
            n=w.n, blocks=(LongRunBlock(rs),), whole_word_alternating=False
        )
    m = len(rs)
    first = next(i for i in range(m) if kinds[i] != kinds[i - 1])
    order = [(first + j) % m for j in range(m)]
    blocks: list[Block] = []
    group: list[Run] = []

    def flush() -> None:
        if not group:
            return
        if group[0].length == 1:
            blocks.append(
                IsolatedBlock(
                    letters=tuple(r.letter for r in group), start=group[0].start
                )
            )
        else:
            blocks.append(LongRunBlock(tuple(group)))
        group.clear()

    for i in order:
        if group and (group[0].length == 1) != kinds[i]:
            flush()
        group.append(rs[i])
    flush()
    return BlockDecomposition(n=w.n, blocks=tuple(blocks), whole_word_alternating=False)


def rotate(w: CircularWord, s: int) -> CircularWord:
    return w.rotate(s)


def reverse(w: CircularWord) -> CircularWord:
    return w.reverse()


def complement(w: CircularWord) -> CircularWord:
    return w.complement()


def canonical_rotation(w: CircularWord) -> CircularWord:
    """The lexicographically least rotation (conjugacy-class representative)."""
    best = min(w.rotate(s).letters for s in range(w.n))
    return CircularWord(best, w.d)


def enumerate_words(d: int, n: int) -> Iterator[CircularWord]:
    """All d^n circular words of length n, lexicographically."""
    if n < 1:
        raise ValueError(f"word length must be >= 1, got {n}")
    for letters in Alphabet(d).words(n):
        yield CircularWord(letters, d)


def random_word(rng: Random, n: int, d: int = 2) -> CircularWord:
    """A uniformly random circular word of length n (for seeded sweeps)."""
    return CircularWord(tuple(rng.randrange(d) for _ in range(n)), d)
