import pytest

from cmgraphs.complexes import (
    SimplicialComplex,
    all_faces,
    check_shelling,
    complementary_complex,
    find_shelling,
    format_complex,
    is_pure,
    is_strongly_connected,
    reduced_homology_ranks,
    reisner_cm,
)
from cmgraphs.errors import CapacityError, InputFormatError, PreconditionError
from cmgraphs.graphs import Graph, minimal_vertex_covers, pairs_graph
from oracles import brute_maximal_independents


def test_from_facets_keeps_maximal_only():
    c = SimplicialComplex.from_facets([{"a"}, {"a", "b"}, {"b", "c"}])
    assert c.facet_lists() == [["a", "b"], ["b", "c"]]
    with pytest.raises(InputFormatError):
        SimplicialComplex.from_facets([{"a"}], vertices=["a", "b"])


def test_complementary_complex_examples(c4, ex31):
    assert complementary_complex(c4).facet_lists() == [
        ["x1", "x2"],
        ["y1", "y2"],
    ]
    assert complementary_complex(ex31).facet_lists() == [
        ["x1", "x2", "x3"],
        ["x2", "x3", "y1"],
        ["x3", "y1", "y2"],
        ["y1", "y2", "y3"],
    ]
    edgeless = Graph.build(vertices=["a", "b"])
    assert complementary_complex(edgeless).facet_lists() == [["a", "b"]]


def test_facets_complement_minimal_covers_small_sweep(ex31, c4):
    import itertools

    graphs = [ex31, c4, pairs_graph(2)]
    vertices = [f"v{i}" for i in range(4)]
    candidates = list(itertools.combinations(vertices, 2))
    for mask in range(1 << len(candidates)):
        edges = [candidates[b] for b in range(len(candidates)) if mask >> b & 1]
        graphs.append(Graph.build(vertices=vertices, edges=edges))
    for g in graphs:
        facets = set(complementary_complex(g).facets)
        verts = frozenset(g.vertices)
        assert facets == {verts - c for c in minimal_vertex_covers(g)}
        assert facets == set(
            brute_maximal_independents(g.vertices, g.edge_list())
        )


def test_is_pure(c4, ex31, graft_spec):
    from cmgraphs.transform import b_graft

    assert is_pure(complementary_complex(c4)).value
    path = Graph.build(edges=[("a", "b"), ("b", "c")])
    verdict = is_pure(complementary_complex(path))
    assert verdict.value is False
    assert verdict.certificate["facet_sizes"] == [1, 2]
    g, _ = b_graft(graft_spec)
    verdict = is_pure(complementary_complex(g))
    assert verdict.value and verdict.certificate["facet_sizes"] == [4, 4, 4, 4, 4]


def test_strong_connectivity(c4, ex31):
    verdict = is_strongly_connected(complementary_complex(c4))
    assert verdict.value is False
    assert verdict.certificate["components"] == [
        [["x1", "x2"]],
        [["y1", "y2"]],
    ]

    verdict = is_strongly_connected(complementary_complex(ex31))
    assert verdict.value is True
    chain = verdict.certificate["chain"]
    assert chain == [
        ["x1", "x2", "x3"],
        ["x2", "x3", "y1"],
        ["x3", "y1", "y2"],
        ["y1", "y2", "y3"],
    ]
    for a, b in zip(chain, chain[1:]):
        assert len(set(a) & set(b)) == len(a) - 1

    single = SimplicialComplex.from_facets([{"a", "b"}])
    assert is_strongly_connected(single).value is True

    path = Graph.build(edges=[("a", "b"), ("b", "c")])
    with pytest.raises(PreconditionError):
        is_strongly_connected(complementary_complex(path))


def test_find_shelling(ex31, c4):
    complex_ = complementary_complex(ex31)
    order = find_shelling(complex_)
    assert order is not None
    assert check_shelling(complex_, order)

    assert find_shelling(complementary_complex(c4)) is None

    single = SimplicialComplex.from_facets([{"a", "b"}])
    assert find_shelling(single) == list(single.facets)

    with pytest.raises(PreconditionError):
        find_shelling(
            complementary_complex(Graph.build(edges=[("a", "b"), ("b", "c")]))
        )


def test_find_shelling_capacity():
    big = complementary_complex(pairs_graph(5))  # 32 facets
    with pytest.raises(CapacityError):
        find_shelling(big)


def test_check_shelling_rejects_bad_orders(c4, ex31):
    c = complementary_complex(c4)
    for order in (list(c.facets), list(reversed(c.facets))):
        assert not check_shelling(c, order)
    good = complementary_complex(ex31)
    order = find_shelling(good)
    assert not check_shelling(good, order[:2])  # wrong facet set


def test_shellable_implies_strongly_connected():
    from cmgraphs.census import enumerate_class

    for n in (2, 3):
        for pl in enumerate_class(n):
            complex_ = complementary_complex(pl.graph)
            if not is_pure(complex_).value:
                continue
            order = find_shelling(complex_)
            if order is not None:
                assert is_strongly_connected(complex_).value


def test_shelling_search_matches_permutation_bruteforce():
    # random small pure complexes: the memoized search must agree with
    # trying every facet order through the independent checker, and any
    # shellable complex must pass the homology oracle over both fields
    import itertools
    import random

    rng = random.Random(123)
    verts = ["a", "b", "c", "d", "e", "f"]
    checked = 0
    for _ in range(120):
        size = rng.choice([2, 3])
        facets = set()
        while len(facets) < rng.randint(1, 5):
            facets.add(frozenset(rng.sample(verts, size)))
        c = SimplicialComplex.from_facets(facets)
        if not is_pure(c).value:
            continue
        checked += 1
        found = find_shelling(c)
        brute = any(
            check_shelling(c, list(p))
            for p in itertools.permutations(c.facets)
        )
        assert (found is not None) == brute
        if found is not None:
            assert check_shelling(c, found)
            assert reisner_cm(c, 2).value is True
            assert reisner_cm(c, "Q").value is True
            assert is_strongly_connected(c).value is True
    assert checked > 60


def test_homology_known_complexes():
    circle = SimplicialComplex.from_facets([{"a", "b"}, {"b", "c"}, {"a", "c"}])
    assert reduced_homology_ranks(circle, 2) == [0, 0, 1]
    assert reduced_homology_ranks(circle, "Q") == [0, 0, 1]

    two_edges = SimplicialComplex.from_facets([{"a", "b"}, {"c", "d"}])
    assert reduced_homology_ranks(two_edges, 2) == [0, 1, 0]

    simplex = SimplicialComplex.from_facets([{"a", "b", "c"}])
    assert reduced_homology_ranks(simplex, 2) == [0, 0, 0, 0]

    point_pair = SimplicialComplex.from_facets([{"a"}, {"b"}])
    assert reduced_homology_ranks(point_pair, 2) == [0, 1]

    empty_facet = SimplicialComplex.from_facets([set()])
    assert reduced_homology_ranks(empty_facet, 2) == [1]


def test_homology_of_matching_complex_is_a_sphere():
    # the independence complex of n matched pairs is the boundary of the
    # n-dimensional cross-polytope: one sphere class on top, nothing else
    for n, field in ((2, 2), (3, 2), (3, "Q")):
        c = complementary_complex(pairs_graph(n))
        ranks = reduced_homology_ranks(c, field)
        assert ranks == [0] * n + [1]


def test_homology_detects_field_dependence():
    # minimal 6-vertex triangulation of the real projective plane: torsion
    # makes characteristic 2 differ from characteristic 0
    rp2 = SimplicialComplex.from_facets(
        [
            {"v0", "v1", "v4"},
            {"v0", "v1", "v5"},
            {"v0", "v2", "v3"},
            {"v0", "v2", "v4"},
            {"v0", "v3", "v5"},
            {"v1", "v2", "v3"},
            {"v1", "v2", "v5"},
            {"v1", "v3", "v4"},
            {"v2", "v4", "v5"},
            {"v3", "v4", "v5"},
        ]
    )
    assert reduced_homology_ranks(rp2, 2) == [0, 0, 1, 1]
    assert reduced_homology_ranks(rp2, "Q") == [0, 0, 0, 0]
    assert reduced_homology_ranks(rp2, 3) == [0, 0, 0, 0]


def test_boundary_composition_vanishes():
    # rank argument: d(d(x)) = 0 forces rank B_d + rank B_{d+1} <= dim C_d
    from cmgraphs.complexes import _ranks_from_faces

    c = complementary_complex(pairs_graph(3))
    faces = all_faces(c)
    betti = _ranks_from_faces(faces, 2)
    euler = sum((-1) ** (len(f) + 1) for f in faces)  # (-1)^dim, dim = |f|-1
    assert euler == sum(
        (-1) ** (d + 2) * b for d, b in enumerate(betti, start=-1)
    )


def test_reisner_examples(ex31, c4):
    assert reisner_cm(complementary_complex(ex31), 2).value is True
    assert reisner_cm(complementary_complex(ex31), "Q").value is True

    verdict = reisner_cm(complementary_complex(c4), 2)
    assert verdict.value is False
    profile = verdict.certificate["profile"]
    assert profile["face"] == []
    assert profile["reduced_betti"][1] == 1  # two components
    assert verdict.certificate["offending_dim"] == 0

    for n in (1, 2, 3):
        assert reisner_cm(complementary_complex(pairs_graph(n)), 2).value


def test_reisner_rejects_nonpure_complexes():
    path = Graph.build(edges=[("a", "b"), ("b", "c")])
    assert reisner_cm(complementary_complex(path), 2).value is False


def test_all_faces_capacity():
    c = complementary_complex(pairs_graph(3))
    assert len(all_faces(c)) == 27  # one of x, y or neither per pair
    with pytest.raises(CapacityError):
        all_faces(c, max_faces=10)


def test_format_complex(ex31):
    text = format_complex(complementary_complex(ex31))
    assert text == "x1 x2 x3\nx2 x3 y1\nx3 y1 y2\ny1 y2 y3\n"
