"""Exact linear algebra over occurrence-count functionals W -> |W|_U.

Sampling the functionals on all circular words up to a length builds an
integer matrix whose rational rank is the dimension of the space they
span.  For factors of length at most l over d letters that dimension is
(d-1)d^(l-1)+1, the cyclomatic number of B(d,l-1); this module verifies
the formula, the independent spanning set {0^l} union {1V}, and the
basis of factors whose first and last letters are nonzero.

All arithmetic is exact: fraction-free integer elimination for ranks,
rationals only in the final back-substitution of express_in_span.
"""

from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import debruijn
from .errors import AlphabetMismatchError, NotInSpanError, SizeLimitError
from .words import (
    Alphabet,
    CircularWord,
    Letters,
    enumerate_words,
    occurrence_vector,
    word_string,
)

#: Default cap on d^max_len, the number of sample words of the top length.
DEFAULT_WORD_LIMIT = 1 << 20


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable matrix of exact (arbitrary-precision) integers."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged rows")

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)


@dataclass(frozen=True)
class FunctionalFamily:
    """An ordered family of occurrence functionals, one per column.

    When include_length is set, a leading column holds the plain length
    |W| (the count of the empty factor); the factor columns follow in
    the listed order.
    """

    d: int
    factors: tuple[Letters, ...]
    include_length: bool = False

    def __post_init__(self) -> None:
        if len(set(self.factors)) != len(self.factors):
            raise ValueError("duplicate factors in family")
        alphabet = Alphabet(self.d)
        for u in self.factors:
            if len(u) == 0:
                raise ValueError("use include_length for the empty factor")
            alphabet.validate(u)

    @property
    def ncols(self) -> int:
        return len(self.factors) + (1 if self.include_length else 0)

    def column_labels(self) -> tuple[str, ...]:
        head = ("length",) if self.include_length else ()
        return head + tuple(word_string(u) for u in self.factors)

    def extended(self, extra: Iterable[Letters]) -> "FunctionalFamily":
        """The family with extra factor columns appended (duplicates dropped)."""
        seen = set(self.factors)
        added = []
        for u in extra:
            u = tuple(u)
            if u not in seen:
                seen.add(u)
                added.append(u)
        return FunctionalFamily(
            d=self.d,
            factors=self.factors + tuple(added),
            include_length=self.include_length,
        )


def all_factors_family(d: int, l: int) -> FunctionalFamily:
    """All d^l factors of length l, lexicographically."""
    return FunctionalFamily(d=d, factors=tuple(Alphabet(d).words(l)))


def spanning_set_family(l: int = 4) -> FunctionalFamily:
    """The binary spanning set {0^l} union {1V : |V| = l-1}."""
    ones = tuple((1,) + v for v in Alphabet(2).words(l - 1))
    return FunctionalFamily(d=2, factors=((0,) * l,) + ones)


def cks_family(d: int, l: int) -> FunctionalFamily:
    """Length functional plus every factor of length <= l with nonzero ends."""
    factors = [
        u
        for m in range(1, l + 1)
        for u in Alphabet(d).words(m)
        if u[0] != 0 and u[-1] != 0
    ]
    return FunctionalFamily(d=d, factors=tuple(factors), include_length=True)


def occurrence_matrix(
    words: Sequence[CircularWord], family: FunctionalFamily
) -> IntegerMatrix:
    """Row per word, column per functional, exact counts as entries."""
    for w in words:
        if w.d != family.d:
            raise AlphabetMismatchError(f"word {w} has d={w.d}, family has d={family.d}")
    by_length: dict[int, list[Letters]] = {}
    for u in family.factors:
        by_length.setdefault(len(u), []).append(u)
    rows = []
    for w in words:
        vectors = {m: occurrence_vector(w, m).counts for m in by_length}
        row = [w.n] if family.include_length else []
        row += [vectors[len(u)].get(u, 0) for u in family.factors]
        rows.append(tuple(row))
    return IntegerMatrix(tuple(rows))


def matrix_csv(words: Sequence[CircularWord], family: FunctionalFamily) -> str:
    """CSV dump: word digit-string first, then the counts."""
    m = occurrence_matrix(words, family)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("word",) + family.column_labels())
    for w, row in zip(words, m.entries):
        writer.writerow((str(w),) + row)
    return buf.getvalue()


def exact_rank(m: IntegerMatrix) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    Every division below is exact: after k pivot steps each entry is a
    (k+1)x(k+1) minor of the original matrix, and Sylvester's identity
    makes the previous pivot a divisor of the cross-multiplied update.
    """
    return _bareiss_rank([list(r) for r in m.entries], m.ncols)


def _bareiss_rank(rows: list[list[int]], ncols: int) -> int:
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next(
            (i for i in range(rank, len(rows)) if rows[i][col]), None
        )
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            r = rows[i]
            f = r[col]
            for j in range(col, ncols):
                r[j] = (r[j] * pivot - f * p[j]) // prev
        prev = pivot
        rank += 1
        if rank == min(len(rows), ncols):
            break
    return rank


def predicted_dimension(d: int, l: int) -> int:
    """(d-1) d^(l-1) + 1, the cyclomatic number of B(d,l-1)."""
    return (d - 1) * d ** (l - 1) + 1


def sample_words(d: int, max_len: int, word_limit: int = DEFAULT_WORD_LIMIT) -> list[CircularWord]:
    """All circular words of each length 1..max_len (raw, not deduplicated)."""
    if d**max_len > word_limit:
        raise SizeLimitError(
            f"{d}^{max_len} = {d ** max_len} sample words exceed the cap of {word_limit}"
        )
    out: list[CircularWord] = []
    for m in range(1, max_len + 1):
        out.extend(enumerate_words(d, m))
    return out


@dataclass(frozen=True)
class SpanReport:
    """Measured rank of the length-l occurrence functionals.

    rank_by_length traces the cumulative rank as words of each length
    join the sample; saturated means the last two lengths added nothing.
    """

    d: int
    l: int
    lengths: tuple[int, ...]
    rank: int
    predicted: int
    relations: int
    rank_by_length: tuple[tuple[int, int], ...]
    saturated: bool

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "l": self.l,
            "lengths": list(self.lengths),
            "rank": self.rank,
            "predicted": self.predicted,
            "relations": self.relations,
            "rank_by_length": [list(t) for t in self.rank_by_length],
            "saturated": self.saturated,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def span_dimension(
    d: int,
    l: int,
    max_len: int | None = None,
    word_limit: int = DEFAULT_WORD_LIMIT,
) -> SpanReport:
    """Rank of the matrix of all length-l counts over words up to max_len.

    max_len defaults to 2l+2, which saturates the rank for every tested
    alphabet; an unsaturated result triggers a warning since the rank is
    then only a lower bound on the dimension.
    """
    if max_len is None:
        max_len = 2 * l + 2
    if max_len < l:
        raise ValueError(f"need max_len >= l, got max_len={max_len} < l={l}")
    if d**max_len > word_limit:
        raise SizeLimitError(
            f"{d}^{max_len} = {d ** max_len} sample words exceed the cap of {word_limit}"
        )
    columns = tuple(Alphabet(d).words(l))
    # Duplicate rows never change the rank, so only distinct count
    # vectors are kept; this also keeps the elimination small.
    distinct: set[tuple[int, ...]] = set()
    rank_by_length: list[tuple[int, int]] = []
    rank = 0
    for m in range(1, max_len + 1):
        for w in enumerate_words(d, m):
            counts = occurrence_vector(w, l).counts
            distinct.add(tuple(counts.get(u, 0) for u in columns))
        rank = _bareiss_rank([list(r) for r in distinct], len(columns))
        rank_by_length.append((m, rank))
    saturated = (
        len(rank_by_length) >= 3
        and rank_by_length[-1][1] == rank_by_length[-2][1] == rank_by_length[-3][1]
    )
    if not saturated:
        warnings.warn(
            f"rank of ({d},{l}) functionals still growing at max_len={max_len}; "
            "the reported rank is a lower bound",
            stacklevel=2,
        )
    return SpanReport(
        d=d,
        l=l,
        lengths=tuple(range(1, max_len + 1)),
        rank=rank,
        predicted=predicted_dimension(d, l),
        relations=len(columns) - rank,
        rank_by_length=tuple(rank_by_length),
        saturated=saturated,
    )


def verify_spanning_set(
    max_len: int,
    l: int = 4,
    d: int = 2,
    word_limit: int = DEFAULT_WORD_LIMIT,
) -> bool:
    """Check that {0^l} union {1V} is independent and spans all length-l counts.

    Requires rank equal to 2^(l-1)+1 on the set alone, no rank growth
    when the remaining length-l columns join, and (as a structural
    cross-check) that the 1V words minus the loop 1^l form a spanning
    tree of B(2,l-1).
    """
    if d != 2:
        raise ValueError("the 1V spanning set is defined for binary words")
    words = sample_words(d, max_len, word_limit)
    family = spanning_set_family(l)
    expected = predicted_dimension(d, l)
    rank = exact_rank(occurrence_matrix(words, family))
    if rank != expected:
        return False
    full = family.extended(Alphabet(d).words(l))
    if exact_rank(occurrence_matrix(words, full)) != expected:
        return False
    tree_edges = [u for u in family.factors if u[0] == 1 and u != (1,) * l]
    return debruijn.is_spanning_tree(debruijn.build_graph(2, l - 1), tree_edges)


def verify_cks_basis(
    d: int,
    l: int,
    max_len: int,
    word_limit: int = DEFAULT_WORD_LIMIT,
) -> bool:
    """Check the nonzero-first-and-last-letter basis of all counts up to l.

    The candidate basis is the length functional plus every factor of
    length 1..l whose first and last letters are nonzero; it must have
    rank (d-1)d^(l-1)+1 and absorb every factor of length <= l without
    rank growth.
    """
    words = sample_words(d, max_len, word_limit)
    basis = cks_family(d, l)
    expected = predicted_dimension(d, l)
    if exact_rank(occurrence_matrix(words, basis)) != expected:
        return False
    everything = basis.extended(
        u for m in range(1, l + 1) for u in Alphabet(d).words(m)
    )
    return exact_rank(occurrence_matrix(words, everything)) == expected


def express_in_span(
    target: Letters,
    basis: FunctionalFamily,
    max_len: int,
    word_limit: int = DEFAULT_WORD_LIMIT,
) -> tuple[Fraction, ...]:
    """Exact rational coefficients writing |W|_target over the basis columns.

    Solves the linear system sampled on all words of length 1..max_len;
    free variables (present only when the basis columns are dependent)
    are pinned to zero.  Raises NotInSpanError when no exact combination
    exists on the sample.
    """
    target = tuple(target)
    Alphabet(basis.d).validate(target)
    if len(target) == 0:
        raise ValueError("express the length functional via include_length instead")
    words = sample_words(basis.d, max_len, word_limit)
    m = occurrence_matrix(words, basis)
    t = [count_for(w, target) for w in words]
    rows = sorted({r + (b,) for r, b in zip(m.entries, t)})
    return _solve_exact(rows, m.ncols)


def count_for(w: CircularWord, u: Letters) -> int:
    """|w|_u via the shared single-scan counter."""
    return occurrence_vector(w, len(u)).counts.get(tuple(u), 0)


def _solve_exact(
    rows: Sequence[tuple[int, ...]], ncols: int
) -> tuple[Fraction, ...]:
    """Gauss-Jordan over Fractions on [A | b]; free variables become 0."""
    mat = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(mat)):
        if mat[i][ncols]:
            raise NotInSpanError("target functional is outside the basis span")
    solution = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        solution[col] = mat[i][ncols]
    return tuple(solution)


def format_coefficients(
    coefficients: Sequence[Fraction], family: FunctionalFamily
) -> str:
    """One 'label: p/q' line per nonzero coefficient."""
    lines = [
        f"{label}: {c}"
        for label, c in zip(family.column_labels(), coefficients)
        if c
    ]
    return "\n".join(lines)


def marginalization_check(w: CircularWord, l: int) -> bool:
    """Every shorter count is the sum of its length-l prefix extensions.

    For each factor U with 1 <= |U| < l, |W|_U must equal the sum of
    |W|_V over the length-l words V having U as a prefix.
    """
    if l < 2:
        raise ValueError(f"marginalization needs l >= 2, got {l}")
    alphabet = Alphabet(w.d)
    long_counts = occurrence_vector(w, l).counts
    for m in range(1, l):
        short_counts = occurrence_vector(w, m).counts
        for u in alphabet.words(m):
            total = sum(
                long_counts.get(u + suffix, 0) for suffix in alphabet.words(l - m)
            )
            if short_counts.get(u, 0) != total:
                return False
    return True
