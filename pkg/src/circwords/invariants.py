"""The four equal occurrence differences of a binary circular word.

For any binary circular word W the differences

    |W|_0011 - |W|_1100,  |W|_1101 - |W|_1011,
    |W|_1010 - |W|_0101,  |W|_0100 - |W|_0010

all take one common value k, the winding number of W: erasing from W's
closed De Bruijn path every length-4 factor outside these four mirror
pairs leaves a closed walk on a four-vertex cycle graph, and k is the
net number of oriented turns that walk makes.  The same k also falls
out of the run structure of W, via its blocks of isolated letters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import debruijn
from .errors import BrokenProjectionError
from .words import (
    BINARY,
    CircularWord,
    Letters,
    WordLike,
    decompose_blocks,
    is_palindrome,
    mirror,
    parse_word,
    word_string,
)

#: Orientation convention for the square graph: these four edges are the
#: quarter turns in the positive direction; their mirrors run backwards.
POSITIVE_EDGES: tuple[Letters, ...] = (
    (0, 0, 1, 1),
    (1, 1, 0, 1),
    (1, 0, 1, 0),
    (0, 1, 0, 0),
)
NEGATIVE_EDGES: tuple[Letters, ...] = tuple(mirror(e) for e in POSITIVE_EDGES)

#: The eight edges retained by the projection, and their four sources.
SQUARE_EDGES: frozenset[Letters] = frozenset(POSITIVE_EDGES + NEGATIVE_EDGES)
SQUARE_VERTICES: frozenset[Letters] = frozenset(e[:3] for e in SQUARE_EDGES)

_EPSILON: dict[Letters, int] = {
    **{e: +1 for e in POSITIVE_EDGES},
    **{e: -1 for e in NEGATIVE_EDGES},
}


def _next_square_vertex(v: Letters) -> Letters:
    """The unique square vertex every walk from v reaches first.

    Walks explore both out-neighbours of each non-square vertex but stop
    on square vertices; B(2,3) funnels all of them to a single one.
    """
    seen: set[Letters] = set()
    frontier = {v}
    found: set[Letters] = set()
    while frontier:
        nxt: set[Letters] = set()
        for u in frontier:
            if u in SQUARE_VERTICES:
                found.add(u)
                continue
            seen.add(u)
            for a in (0, 1):
                t = u[1:] + (a,)
                if t not in seen:
                    nxt.add(t)
        frontier = nxt
    if len(found) != 1:
        raise BrokenProjectionError(f"no unique square vertex beyond {v}: {found}")
    return found.pop()


SQUARE_SOURCE: dict[Letters, Letters] = {e: e[:3] for e in SQUARE_EDGES}
SQUARE_TARGET: dict[Letters, Letters] = {
    e: _next_square_vertex(e[1:]) for e in SQUARE_EDGES
}

#: The order-four rotation of the square: each positive edge advances it.
ROTATION: dict[Letters, Letters] = {
    SQUARE_SOURCE[e]: SQUARE_TARGET[e] for e in POSITIVE_EDGES
}


@dataclass(frozen=True)
class Length4Classification:
    """The 16 binary words of length 4, split three ways."""

    palindromes: tuple[Letters, ...]
    run_pairs: tuple[tuple[Letters, Letters], ...]
    grandsart_pairs: tuple[tuple[Letters, Letters], ...]


def classify_length4() -> Length4Classification:
    """Partition the length-4 binary words from first principles.

    Palindromes drop out first; of the six remaining mirror pairs, the
    two containing a run of three equal letters have trivially equal
    counts, and the last four pairs carry the invariant.  Pairs are
    listed (positive edge, mirror) in the difference order.
    """
    all4 = list(BINARY.words(4))
    palindromes = tuple(u for u in all4 if is_palindrome(u))
    rest = [u for u in all4 if not is_palindrome(u)]
    run3 = {u for u in rest if _max_linear_run(u) == 3}
    run_pairs = tuple((u, mirror(u)) for u in sorted(run3) if u[0] == 1)
    grandsart = {u for u in rest if u not in run3}
    if grandsart != SQUARE_EDGES:
        raise AssertionError("length-4 classification drifted from the square edges")
    pairs = tuple((p, mirror(p)) for p in POSITIVE_EDGES)
    return Length4Classification(
        palindromes=palindromes, run_pairs=run_pairs, grandsart_pairs=pairs
    )


def _max_linear_run(u: Letters) -> int:
    best = cur = 1
    for i in range(1, len(u)):
        cur = cur + 1 if u[i] == u[i - 1] else 1
        best = max(best, cur)
    return best


def _require_binary(w: CircularWord) -> None:
    if w.d != 2:
        raise ValueError("the occurrence-difference invariant is binary-only")


def _diffs(counts: Counter) -> tuple[int, int, int, int]:
    return tuple(counts[p] - counts[mirror(p)] for p in POSITIVE_EDGES)  # type: ignore[return-value]


def grandsart_differences(w: CircularWord) -> tuple[int, int, int, int]:
    """The four pair differences of length-4 occurrence counts."""
    _require_binary(w)
    return _diffs(Counter(w.factors(4)))


@dataclass(frozen=True)
class SquareProjection:
    """A word's closed De Bruijn path with non-square edges erased.

    The retained edges, in position order, walk the square graph; each
    carries epsilon +1 (positive quarter turn) or -1.  Their sum is a
    multiple of 4, four times the winding number.
    """

    start_vertex: Letters | None
    retained_edges: tuple[Letters, ...]
    epsilons: tuple[int, ...]

    @property
    def epsilon_sum(self) -> int:
        return sum(self.epsilons)


def _project(edges: Sequence[Letters]) -> SquareProjection:
    retained = tuple(e for e in edges if e in SQUARE_EDGES)
    for i, e in enumerate(retained):
        nxt = retained[(i + 1) % len(retained)]
        if SQUARE_TARGET[e] != SQUARE_SOURCE[nxt]:
            raise BrokenProjectionError(
                f"square path breaks between {word_string(e)} and {word_string(nxt)}"
            )
    return SquareProjection(
        start_vertex=SQUARE_SOURCE[retained[0]] if retained else None,
        retained_edges=retained,
        epsilons=tuple(_EPSILON[e] for e in retained),
    )


def project_to_square(w: CircularWord) -> SquareProjection:
    """Erase all non-square edges from w's closed path and orient the rest."""
    _require_binary(w)
    return _project(w.factors(4))


def winding_number_graph(w: CircularWord) -> int:
    """Net turns of the projected path: the epsilon sum divided by 4."""
    s = project_to_square(w).epsilon_sum
    if s % 4:
        raise BrokenProjectionError(f"epsilon sum {s} of {w} is not a multiple of 4")
    return s // 4


def winding_number_decomposition(w: CircularWord) -> int:
    """The winding number read off the isolated-letter blocks.

    Counts even-length isolated blocks starting with 0 minus those
    starting with 1.  A fully alternating word has no anchored blocks
    and winds zero times.
    """
    _require_binary(w)
    dec = decompose_blocks(w)
    if dec.whole_word_alternating:
        return 0
    k = 0
    for b in dec.isolated_blocks():
        if b.length % 2 == 0:
            k += 1 if b.start_letter == 0 else -1
    return k


@dataclass(frozen=True)
class GrandsartReport:
    """The four differences and both winding computations for one word."""

    word: CircularWord
    diffs: tuple[int, int, int, int]
    k_graph: int
    k_decomposition: int

    @property
    def consistent(self) -> bool:
        return all(d == self.k_graph for d in self.diffs) and (
            self.k_decomposition == self.k_graph
        )

    def to_dict(self) -> dict:
        d1, d2, d3, d4 = self.diffs
        return {
            "word": str(self.word),
            "d1": d1,
            "d2": d2,
            "d3": d3,
            "d4": d4,
            "k_graph": self.k_graph,
            "k_decomp": self.k_decomposition,
            "consistent": self.consistent,
        }


def grandsart_report(w: CircularWord) -> GrandsartReport:
    """Assemble diffs and both winding numbers, sharing one factor scan."""
    _require_binary(w)
    edges = w.factors(4)
    proj = _project(edges)
    s = proj.epsilon_sum
    if s % 4:
        raise BrokenProjectionError(f"epsilon sum {s} of {w} is not a multiple of 4")
    return GrandsartReport(
        word=w,
        diffs=_diffs(Counter(edges)),
        k_graph=s // 4,
        k_decomposition=winding_number_decomposition(w),
    )


def square_graph_dot(highlight: Iterable[WordLike] | None = None) -> str:
    """DOT text of the four-vertex square graph with its eight edges."""
    if highlight is None:
        marked = set()
    else:
        marked = {word_string(_as_square_edge(e)) for e in highlight}
    nodes = sorted(word_string(v) for v in SQUARE_VERTICES)
    edges = sorted(
        (
            (word_string(SQUARE_SOURCE[e]), word_string(SQUARE_TARGET[e]), word_string(e))
            for e in SQUARE_EDGES
        ),
        key=lambda triple: triple[2],
    )
    return debruijn.render_dot(
        "square", nodes, edges, highlighted=marked, doubled=set(nodes)
    )


def _as_square_edge(e: WordLike) -> Letters:
    e = parse_word(e) if isinstance(e, str) else tuple(e)
    if e not in SQUARE_EDGES:
        raise ValueError(f"{word_string(e)} is not a square-graph edge")
    return e
