"""Simplicial complexes as facet lists: the independence complex of a
graph, purity, strong connectedness, shellability, and exact reduced
homology backing a Cohen-Macaulayness oracle.

Dimension conventions: dim F = |F| - 1, so the empty face has dimension
-1 and the complex whose only facet is the empty face has dimension -1.
"""

import itertools
from collections import deque
from dataclasses import dataclass

from .errors import CapacityError, InputFormatError, PreconditionError
from .graphs import Graph, maximal_independent_sets
from .linalg import rank_mod_p, rank_rational
from .verdicts import Verdict

SHELLING_FACET_CAP = 20
HOMOLOGY_FACE_CAP = 4096


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[str, ...]
    facets: tuple[frozenset[str], ...]  # inclusion-incomparable, sorted

    @staticmethod
    def from_facets(faces, vertices=None) -> "SimplicialComplex":
        """Keep only the inclusion-maximal faces; vertices default to
        their union.  Declared vertices must all appear in some facet."""
        fs = {frozenset(f) for f in faces}
        facets = [f for f in fs if not any(f < g for g in fs)]
        facets.sort(key=lambda f: tuple(sorted(f)))
        covered: set[str] = set()
        for f in facets:
            covered |= f
        if vertices is None:
            vertices = sorted(covered)
        else:
            missing = set(vertices) - covered
            if missing:
                raise InputFormatError(
                    f"declared vertices lie in no facet: {sorted(missing)}"
                )
        return SimplicialComplex(tuple(sorted(vertices)), tuple(facets))

    @property
    def dim(self) -> int:
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    def facet_lists(self) -> list[list[str]]:
        return [sorted(f) for f in self.facets]


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology ranks of one face's link, dimension -1 upward."""

    face: tuple[str, ...]
    link_dim: int
    reduced_betti: tuple[int, ...]
    field: str

    def to_dict(self) -> dict:
        return {
            "face": list(self.face),
            "link_dim": self.link_dim,
            "reduced_betti": list(self.reduced_betti),
            "field": self.field,
        }


def complementary_complex(g: Graph) -> SimplicialComplex:
    """The complex whose faces are the independent sets of the graph;
    its facets are the maximal independent sets."""
    return SimplicialComplex.from_facets(
        maximal_independent_sets(g), vertices=g.vertices
    )


def is_pure(c: SimplicialComplex) -> Verdict:
    sizes = sorted(len(f) for f in c.facets)
    value = len(set(sizes)) <= 1
    return Verdict(value, "facet-sizes", {"facet_sizes": sizes})


def _require_pure(c: SimplicialComplex, op: str) -> None:
    if not is_pure(c).value:
        raise PreconditionError(
            f"{op} is defined for pure complexes only",
            witness={"facet_sizes": sorted(len(f) for f in c.facets)},
        )


def _facet_adjacency(c: SimplicialComplex) -> dict[int, list[int]]:
    k = len(c.facets[0]) if c.facets else 0
    adj: dict[int, list[int]] = {i: [] for i in range(len(c.facets))}
    for i, j in itertools.combinations(range(len(c.facets)), 2):
        if len(c.facets[i] & c.facets[j]) == k - 1:
            adj[i].append(j)
            adj[j].append(i)
    return adj


def is_strongly_connected(c: SimplicialComplex) -> Verdict:
    """Facets pairwise joined by chains whose consecutive intersections
    have codimension one.  The certificate is a chain between the
    lexicographically first and last facets, or the component partition."""
    _require_pure(c, "strong connectedness")
    m = len(c.facets)
    if m <= 1:
        chain = [sorted(f) for f in c.facets]
        return Verdict(True, "facet-chain", {"chain": chain})
    adj = _facet_adjacency(c)
    parent: dict[int, int | None] = {0: None}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if j not in parent:
                parent[j] = i
                queue.append(j)
    if len(parent) < m:
        seen = set(parent)
        components = [sorted(seen)]
        rest = [i for i in range(m) if i not in seen]
        while rest:
            comp = {rest[0]}
            queue = deque([rest[0]])
            while queue:
                i = queue.popleft()
                for j in adj[i]:
                    if j not in comp:
                        comp.add(j)
                        queue.append(j)
            components.append(sorted(comp))
            rest = [i for i in rest if i not in comp]
        return Verdict(
            False,
            "facet-chain",
            {
                "components": [
                    [sorted(c.facets[i]) for i in comp] for comp in components
                ]
            },
        )
    path = [m - 1]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return Verdict(
        True, "facet-chain", {"chain": [sorted(c.facets[i]) for i in path]}
    )


def find_shelling(
    c: SimplicialComplex, max_facets: int = SHELLING_FACET_CAP
) -> list[frozenset[str]] | None:
    """Backtracking search for a shelling order of a pure complex.

    Returns the first order found (deterministic) or None once the search
    space is exhausted, which proves there is none.  Subsets of already
    placed facets are memoized as dead states, so exhaustion does not
    revisit permutations.  More facets than the cap is a capacity error.
    """
    _require_pure(c, "shelling")
    facets = list(c.facets)
    m = len(facets)
    if m > max_facets:
        raise CapacityError(
            f"{m} facets exceed the shelling search bound {max_facets}"
        )
    if m <= 1:
        return facets
    diff = [[fi - fj for fj in facets] for fi in facets]
    single = [
        [next(iter(d)) if len(d) == 1 else None for d in row] for row in diff
    ]
    dead: set[frozenset[int]] = set()

    def attachable(i: int, placed: list[int]) -> bool:
        glue = {single[i][k] for k in placed if single[i][k] is not None}
        if not glue:
            return False
        return all(glue & diff[i][j] for j in placed)

    order: list[int] = []

    def search(placed_set: frozenset[int]) -> bool:
        if len(order) == m:
            return True
        if placed_set in dead:
            return False
        for i in range(m):
            if i in placed_set:
                continue
            if order and not attachable(i, order):
                continue
            order.append(i)
            if search(placed_set | {i}):
                return True
            order.pop()
        dead.add(placed_set)
        return False

    if search(frozenset()):
        return [facets[i] for i in order]
    return None


def check_shelling(c: SimplicialComplex, order) -> bool:
    """Independent validation of a shelling order, straight from the
    definition (no incremental bookkeeping shared with the search)."""
    facets = [frozenset(f) for f in order]
    if sorted(facets, key=lambda f: tuple(sorted(f))) != list(c.facets):
        return False
    for i in range(1, len(facets)):
        for j in range(i):
            ok = any(
                any(facets[i] - facets[k] == {v} for k in range(i))
                for v in facets[i] - facets[j]
            )
            if not ok:
                return False
    return True


def field_label(field) -> str:
    if field in ("Q", "q", "rational", 0):
        return "Q"
    return f"F{int(field)}"


def _rank(rows, field) -> int:
    if field_label(field) == "Q":
        return rank_rational(rows)
    return rank_mod_p(rows, int(field))


def all_faces(
    c: SimplicialComplex, max_faces: int = HOMOLOGY_FACE_CAP
) -> list[frozenset[str]]:
    """Every face, from the empty set up, deduplicated across facets and
    sorted by (dimension, vertex names)."""
    faces: set[frozenset[str]] = set()
    for facet in c.facets:
        elems = sorted(facet)
        for r in range(len(elems) + 1):
            for combo in itertools.combinations(elems, r):
                faces.add(frozenset(combo))
        if len(faces) > max_faces:
            raise CapacityError(
                f"face count exceeds the homology bound {max_faces}"
            )
    return sorted(faces, key=lambda f: (len(f), tuple(sorted(f))))


def _ranks_from_faces(faces: list[frozenset[str]], field) -> list[int]:
    """Reduced homology ranks from a downward-closed nonempty face set,
    dimensions -1 through the maximum face dimension."""
    top = max(len(f) for f in faces) - 1
    by_dim: dict[int, list[tuple[str, ...]]] = {d: [] for d in range(-1, top + 1)}
    for f in faces:
        by_dim[len(f) - 1].append(tuple(sorted(f)))
    for d in by_dim:
        by_dim[d].sort()
    index = {
        d: {f: i for i, f in enumerate(by_dim[d])} for d in range(-1, top + 1)
    }

    boundary_rank = {}
    for d in range(0, top + 1):
        rows_faces, cols_faces = by_dim[d - 1], by_dim[d]
        rows = [[0] * len(cols_faces) for _ in rows_faces]
        for col, f in enumerate(cols_faces):
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1:]
                rows[index[d - 1][sub]][col] += (-1) ** pos
        boundary_rank[d] = _rank(rows, field)
    boundary_rank[top + 1] = 0

    betti = []
    for d in range(-1, top + 1):
        kernel = len(by_dim[d]) - (boundary_rank[d] if d >= 0 else 0)
        betti.append(kernel - boundary_rank[d + 1])
    return betti


def reduced_homology_ranks(
    c: SimplicialComplex, field=2, max_faces: int = HOMOLOGY_FACE_CAP
) -> list[int]:
    """Reduced homology ranks of the whole complex, dimensions -1..dim,
    over F_p (exact modular arithmetic) or the rationals (fractions)."""
    return _ranks_from_faces(all_faces(c, max_faces), field)


def _link_faces(faces: set[frozenset[str]], f: frozenset[str]):
    return [h for h in faces if not (h & f) and (h | f) in faces]


def reisner_cm(
    c: SimplicialComplex, field=2, max_faces: int = HOMOLOGY_FACE_CAP
) -> Verdict:
    """Cohen-Macaulayness oracle: every face's link must have vanishing
    reduced homology strictly below the link's own dimension.

    A false verdict carries the offending face's full homology profile.
    """
    label = field_label(field)
    face_list = all_faces(c, max_faces)
    face_set = set(face_list)
    for f in face_list:
        link = _link_faces(face_set, f)
        betti = _ranks_from_faces(link, field)
        link_dim = max(len(h) for h in link) - 1
        if any(b != 0 for b in betti[:-1]):
            profile = HomologyProfile(
                tuple(sorted(f)), link_dim, tuple(betti), label
            )
            return Verdict(
                False,
                "homology",
                {
                    "profile": profile.to_dict(),
                    "offending_dim": next(
                        d for d, b in enumerate(betti, start=-1) if b != 0
                    ),
                },
            )
    return Verdict(
        True, "homology", {"faces_checked": len(face_list), "field": label}
    )


def format_complex(c: SimplicialComplex) -> str:
    """Facet export: one facet per line, space-separated vertex names."""
    return "\n".join(" ".join(f) for f in c.facet_lists()) + "\n"
