"""De Bruijn graphs B(d,n) and the closed path traced by a circular word.

Vertices are the d^n words of length n, edges the d^(n+1) words of
length n+1; an edge runs from its length-n prefix to its length-n
suffix.  The occurrence counts of a circular word satisfy a flow
conservation law at every vertex: each occurrence of a length-n factor
extends uniquely one letter to the left and one to the right, so the
vertex count equals the sum of its out-edge counts and the sum of its
in-edge counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .errors import AlphabetMismatchError, SizeLimitError
from .words import (
    Alphabet,
    CircularWord,
    Letters,
    WordLike,
    occurrence_vector,
    parse_word,
    word_string,
)

#: Default cap on d^(n+1), the number of edges of a constructed graph.
DEFAULT_EDGE_LIMIT = 1 << 20


@dataclass(frozen=True)
class DeBruijnGraph:
    """The graph B(d,n): word-vertices of length n, word-edges of length n+1."""

    d: int
    n: int
    vertices: tuple[Letters, ...]
    edges: tuple[Letters, ...]

    @staticmethod
    def source(edge: Letters) -> Letters:
        return edge[:-1]

    @staticmethod
    def target(edge: Letters) -> Letters:
        return edge[1:]

    def out_edges(self, v: Letters) -> list[Letters]:
        return [v + (a,) for a in range(self.d)]

    def in_edges(self, v: Letters) -> list[Letters]:
        return [(a,) + v for a in range(self.d)]


def build_graph(d: int, n: int, edge_limit: int = DEFAULT_EDGE_LIMIT) -> DeBruijnGraph:
    """Construct B(d,n), refusing sizes whose edge count exceeds the cap."""
    if d < 2:
        raise ValueError(f"alphabet needs at least 2 letters, got d={d}")
    if n < 1:
        raise ValueError(f"vertex word length must be >= 1, got n={n}")
    if d ** (n + 1) > edge_limit:
        raise SizeLimitError(
            f"B({d},{n}) has {d ** (n + 1)} edges, above the cap of {edge_limit}"
        )
    alphabet = Alphabet(d)
    return DeBruijnGraph(
        d=d,
        n=n,
        vertices=tuple(alphabet.words(n)),
        edges=tuple(alphabet.words(n + 1)),
    )


@dataclass(frozen=True)
class ClosedPath:
    """The closed walk a circular word traces on B(d,n).

    vertices[i] is the length-n factor at position i, edges[i] the
    length-(n+1) factor at position i; edges[i] runs from vertices[i]
    to vertices[(i+1) mod n].
    """

    n: int
    vertices: tuple[Letters, ...]
    edges: tuple[Letters, ...]


def path_of_word(g: DeBruijnGraph, w: CircularWord) -> ClosedPath:
    """The closed path of w on g: one vertex and one edge per position."""
    if w.d != g.d:
        raise AlphabetMismatchError(f"word has d={w.d}, graph has d={g.d}")
    return ClosedPath(n=g.n, vertices=tuple(w.factors(g.n)), edges=tuple(w.factors(g.n + 1)))


@dataclass(frozen=True)
class KirchhoffReport:
    """Per-vertex flow residuals of the occurrence counts of one word.

    out_residual(U) = |W|_U - sum_a |W|_{Ua}
    in_residual(U)  = |W|_U - sum_a |W|_{aU}

    Both vanish identically for every circular word; nonzero entries are
    kept so a violation pinpoints the offending vertex.
    """

    n: int
    out_residuals: Mapping[Letters, int]
    in_residuals: Mapping[Letters, int]

    @property
    def ok(self) -> bool:
        return not any(self.out_residuals.values()) and not any(
            self.in_residuals.values()
        )

    def violations(self) -> list[tuple[str, Letters, int]]:
        out = [("out", u, r) for u, r in self.out_residuals.items() if r]
        out += [("in", u, r) for u, r in self.in_residuals.items() if r]
        return out


def verify_kirchhoff(w: CircularWord, n: int) -> KirchhoffReport:
    """Flow residuals of w at every length-n vertex."""
    if n < 1:
        raise ValueError(f"vertex word length must be >= 1, got n={n}")
    short = occurrence_vector(w, n).counts
    long = occurrence_vector(w, n + 1).counts
    out_res: dict[Letters, int] = {}
    in_res: dict[Letters, int] = {}
    for u in Alphabet(w.d).words(n):
        c = short.get(u, 0)
        out_res[u] = c - sum(long.get(u + (a,), 0) for a in range(w.d))
        in_res[u] = c - sum(long.get((a,) + u, 0) for a in range(w.d))
    return KirchhoffReport(n=n, out_residuals=out_res, in_residuals=in_res)


def _undirected_components(
    vertices: Sequence[Letters], edges: Iterable[Letters]
) -> int:
    index = {v: i for i, v in enumerate(vertices)}
    parent = list(range(len(vertices)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for e in edges:
        a, b = find(index[e[:-1]]), find(index[e[1:]])
        if a != b:
            parent[a] = b
    return len({find(i) for i in range(len(vertices))})


def connected_components(g: DeBruijnGraph) -> int:
    """Number of weakly connected components (1 for every B(d,n))."""
    return _undirected_components(g.vertices, g.edges)


def cyclomatic_number(g: DeBruijnGraph) -> int:
    """edges - vertices + components: the dimension of the cycle space."""
    return len(g.edges) - len(g.vertices) + connected_components(g)


def is_spanning_tree(g: DeBruijnGraph, edge_labels: Iterable[WordLike]) -> bool:
    """Whether the labelled edges form a spanning tree of the undirected graph.

    Checks |subset| = |vertices| - 1, acyclicity, and full connectivity;
    loops and repeated edges fail the acyclicity test.
    """
    labels = [_as_edge(g, e) for e in edge_labels]
    if len(labels) != len(g.vertices) - 1:
        return False
    index = {v: i for i, v in enumerate(g.vertices)}
    parent = list(range(len(g.vertices)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for e in labels:
        a, b = find(index[e[:-1]]), find(index[e[1:]])
        if a == b:
            return False
        parent[a] = b
    return len({find(i) for i in range(len(g.vertices))}) == 1


def _as_edge(g: DeBruijnGraph, e: WordLike) -> Letters:
    e = parse_word(e) if isinstance(e, str) else tuple(e)
    if len(e) != g.n + 1 or any(not 0 <= a < g.d for a in e):
        raise ValueError(f"{word_string(e)} is not an edge of B({g.d},{g.n})")
    return e


def render_dot(
    name: str,
    nodes: Sequence[str],
    edges: Sequence[tuple[str, str, str]],
    highlighted: frozenset[str] | set[str] = frozenset(),
    doubled: frozenset[str] | set[str] = frozenset(),
) -> str:
    """Serialize a labelled digraph to DOT text, byte-deterministically.

    edges are (source, target, label) triples, emitted in the given
    order; highlighted labels get a bold red style, doubled node names a
    double circle.
    """
    lines = [f'digraph "{name}" {{', "  node [shape=circle];"]
    for v in nodes:
        shape = " [shape=doublecircle]" if v in doubled else ""
        lines.append(f'  "{v}"{shape};')
    for src, dst, label in edges:
        attrs = f'label="{label}"'
        if label in highlighted:
            attrs += ", style=bold, color=red"
        lines.append(f'  "{src}" -> "{dst}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


Highlight = Union[ClosedPath, Iterable[WordLike], None]


def export_dot(
    g: DeBruijnGraph,
    highlight: Highlight = None,
    doubled_vertices: Iterable[WordLike] = (),
) -> str:
    """DOT text for g, vertices and edges in lexicographic label order."""
    if isinstance(highlight, ClosedPath):
        marked = {word_string(e) for e in highlight.edges}
    elif highlight is None:
        marked = set()
    else:
        marked = {word_string(_as_edge(g, e)) for e in highlight}
    doubled = {word_string(_as_edge_or_vertex(g, v)) for v in doubled_vertices}
    nodes = [word_string(v) for v in g.vertices]
    edges = [
        (word_string(e[:-1]), word_string(e[1:]), word_string(e)) for e in g.edges
    ]
    return render_dot(f"B({g.d},{g.n})", nodes, edges, highlighted=marked, doubled=doubled)


def _as_edge_or_vertex(g: DeBruijnGraph, v: WordLike) -> Letters:
    v = parse_word(v) if isinstance(v, str) else tuple(v)
    if len(v) != g.n or any(not 0 <= a < g.d for a in v):
        raise ValueError(f"{word_string(v)} is not a vertex of B({g.d},{g.n})")
    return v
