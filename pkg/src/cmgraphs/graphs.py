"""Finite simple graphs with exact enumeration of covers, independent sets
and perfect matchings.

Vertex names are opaque strings.  Every enumeration returns a fixed
deterministic order (lexicographic on sorted vertex names) so reports and
golden files are byte-stable.  All values are immutable after construction
and every operation is a pure function.
"""

from dataclasses import dataclass

from .errors import InputFormatError
from .verdicts import Verdict


def edge_key(a: str, b: str) -> frozenset[str]:
    """Normalize an unordered edge; loops are rejected."""
    if a == b:
        raise InputFormatError(f"loop edge {a!r}-{a!r} is not allowed")
    return frozenset((a, b))


def edge_pair(e: frozenset[str]) -> tuple[str, str]:
    a, b = sorted(e)
    return a, b


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    @staticmethod
    def build(vertices=(), edges=()) -> "Graph":
        """Construct a graph; edge endpoints are declared implicitly.

        >>> g = Graph.build(edges=[("a", "b"), ("b", "c")])
        >>> g.vertices
        ('a', 'b', 'c')
        """
        vs = set(vertices)
        es = set()
        for e in edges:
            a, b = e
            es.add(edge_key(a, b))
            vs.add(a)
            vs.add(b)
        return Graph(tuple(sorted(vs)), frozenset(es))

    def edge_list(self) -> list[tuple[str, str]]:
        """Edges as sorted (a, b) pairs, a < b, in lexicographic order."""
        return sorted(edge_pair(e) for e in self.edges)

    def has_edge(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.edges


def adjacency(g: Graph) -> dict[str, frozenset[str]]:
    adj: dict[str, set[str]] = {v: set() for v in g.vertices}
    for e in g.edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    return {v: frozenset(nb) for v, nb in adj.items()}


def degrees(g: Graph) -> dict[str, int]:
    return {v: len(nb) for v, nb in adjacency(g).items()}


def isolated_vertices(g: Graph) -> tuple[str, ...]:
    deg = degrees(g)
    return tuple(v for v in g.vertices if deg[v] == 0)


def is_cover(g: Graph, s) -> bool:
    s = set(s)
    return all(e & s for e in g.edges)


def is_independent(g: Graph, s) -> bool:
    s = set(s)
    return all(not e <= s for e in g.edges)


def pairs_graph(n: int) -> Graph:
    """The graph x1..xn, y1..yn with only the matching edges x_i y_i."""
    if n < 1:
        raise InputFormatError("pairs count must be positive")
    return Graph.build(edges=[(f"x{i}", f"y{i}") for i in range(1, n + 1)])


def induced_subgraph(g: Graph, w) -> Graph:
    """Restriction to a vertex subset: keeps exactly the edges inside it."""
    w = set(w)
    unknown = w - set(g.vertices)
    if unknown:
        raise InputFormatError(f"unknown vertices: {sorted(unknown)}")
    return Graph(tuple(sorted(w)), frozenset(e for e in g.edges if e <= w))


def remove_vertices(g: Graph, w) -> Graph:
    return induced_subgraph(g, set(g.vertices) - set(w))


def remove_edges(g: Graph, f) -> Graph:
    """Drop a family of edges; the vertex set is unchanged."""
    gone = {edge_key(a, b) for a, b in f}
    return Graph(g.vertices, g.edges - gone)


def add_edges(g: Graph, f) -> Graph:
    """Add a family of edges between already declared vertices."""
    extra = set()
    known = set(g.vertices)
    for a, b in f:
        if a not in known or b not in known:
            raise InputFormatError(f"edge {a!r}-{b!r} uses an undeclared vertex")
        extra.add(edge_key(a, b))
    return Graph(g.vertices, g.edges | extra)


def _sorted_sets(sets) -> tuple[frozenset[str], ...]:
    return tuple(sorted(sets, key=lambda s: tuple(sorted(s))))


def maximal_independent_sets(g: Graph) -> tuple[frozenset[str], ...]:
    """All inclusion-maximal independent sets, lexicographically ordered.

    Bron-Kerbosch with pivoting over the non-adjacency relation: an
    independent set of g is a clique of the complement graph.
    """
    adj = adjacency(g)
    verts = frozenset(g.vertices)
    nonadj = {v: verts - adj[v] - {v} for v in verts}
    out: list[frozenset[str]] = []

    def extend(r: frozenset, p: frozenset, x: frozenset) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(sorted(p | x), key=lambda u: len(p & nonadj[u]))
        for v in sorted(p - nonadj[pivot]):
            extend(r | {v}, p & nonadj[v], x & nonadj[v])
            p = p - {v}
            x = x | {v}

    extend(frozenset(), verts, frozenset())
    return _sorted_sets(out)


def minimal_vertex_covers(g: Graph) -> tuple[frozenset[str], ...]:
    """All inclusion-minimal vertex covers.

    These are exactly the complements of the maximal independent sets,
    which is also how they are computed.
    """
    verts = frozenset(g.vertices)
    return _sorted_sets(verts - m for m in maximal_independent_sets(g))


def height(g: Graph) -> int:
    """Minimum cardinality of a vertex cover (0 for edgeless graphs)."""
    return min(len(c) for c in minimal_vertex_covers(g))


@dataclass(frozen=True)
class ClassMembership:
    vertex_count: int
    height: int
    has_isolated: bool
    in_class: bool

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "height": self.height,
            "has_isolated": self.has_isolated,
            "in_class": self.in_class,
        }


def classify(g: Graph) -> ClassMembership:
    """Decide membership in the supported class: nonempty, no isolated
    vertex, and minimum cover size equal to half the vertex count.

    Membership does not require unmixedness; that is checked separately.
    """
    n_vertices = len(g.vertices)
    h = height(g)
    isolated = bool(isolated_vertices(g))
    in_class = n_vertices > 0 and n_vertices == 2 * h and not isolated
    return ClassMembership(n_vertices, h, isolated, in_class)


def is_unmixed_bruteforce(g: Graph) -> Verdict:
    """True iff all minimal vertex covers share one cardinality.

    The certificate always carries the multiset of cover sizes; a false
    verdict adds one cover of the smallest and one of the largest size.
    """
    covers = minimal_vertex_covers(g)
    sizes = sorted(len(c) for c in covers)
    if len(set(sizes)) <= 1:
        return Verdict(True, "cover-sizes", {"cover_sizes": sizes})
    small = min(covers, key=lambda c: (len(c), tuple(sorted(c))))
    large = max(covers, key=lambda c: (len(c), tuple(sorted(c))))
    return Verdict(
        False,
        "cover-sizes",
        {
            "cover_sizes": sizes,
            "witness_small": sorted(small),
            "witness_large": sorted(large),
        },
    )


def iter_perfect_matchings(g: Graph):
    """Yield all perfect matchings by backtracking on the smallest
    uncovered vertex; each matching is a sorted tuple of sorted pairs."""
    adj = adjacency(g)

    def rec(uncovered: frozenset[str], acc: list[tuple[str, str]]):
        if not uncovered:
            yield tuple(sorted(acc))
            return
        v = min(uncovered)
        for w in sorted(adj[v]):
            if w in uncovered:
                acc.append((min(v, w), max(v, w)))
                yield from rec(uncovered - {v, w}, acc)
                acc.pop()

    yield from rec(frozenset(g.vertices), [])


def perfect_matchings(g: Graph) -> tuple[tuple[tuple[str, str], ...], ...]:
    """All matchings covering every vertex; empty when none exist."""
    return tuple(iter_perfect_matchings(g))
