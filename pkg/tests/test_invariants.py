import pytest

from cmgraphs.errors import PreconditionError
from cmgraphs.graphs import add_edges, pairs_graph
from cmgraphs.invariants import (
    cm_type,
    invariant_report,
    is_gorenstein,
    is_level,
    socle_generators,
)
from cmgraphs.pairing import make_labeling
from cmgraphs.transform import b_graft, restricted_o_full
from oracles import brute_maximal_independents, brute_minimal_covers


def std_pairs(n):
    return [(f"x{i}", f"y{i}") for i in range(1, n + 1)]


def level_false_fixture():
    g = add_edges(pairs_graph(3), [("x1", "y3"), ("x2", "y3")])
    return make_labeling(g, std_pairs(3))


def test_socle_generators(ex31_pl):
    assert socle_generators(ex31_pl) == [("x1",), ("x2",), ("x3",)]
    pl = make_labeling(pairs_graph(3), std_pairs(3))
    assert socle_generators(pl) == [("x1", "x2", "x3")]
    pl = make_labeling(
        add_edges(pairs_graph(2), [("x1", "y2")]), std_pairs(2)
    )
    assert socle_generators(pl) == [("x1",), ("x2",)]


def test_cm_type_examples(ex31_pl):
    assert cm_type(ex31_pl) == 3
    for n in range(1, 7):
        pl = make_labeling(pairs_graph(n), std_pairs(n))
        assert cm_type(pl) == 1
    pl = make_labeling(
        add_edges(pairs_graph(2), [("x1", "y2")]), std_pairs(2)
    )
    assert cm_type(pl) == 2


def test_cm_type_matches_restricted_oracle(ex31_pl):
    restricted = restricted_o_full(ex31_pl)
    oracle_covers = brute_minimal_covers(
        restricted.vertices, restricted.edge_list()
    )
    assert cm_type(ex31_pl) == len(oracle_covers) == 3
    oracle_independents = brute_maximal_independents(
        restricted.vertices, restricted.edge_list()
    )
    assert socle_generators(ex31_pl) == [
        tuple(sorted(s)) for s in oracle_independents
    ]


def test_is_level(ex31_pl):
    assert is_level(ex31_pl).value is True
    pl = make_labeling(pairs_graph(4), std_pairs(4))
    assert is_level(pl).value is True

    pl = level_false_fixture()
    restricted = restricted_o_full(pl)
    assert restricted.edge_list() == [("x1", "x3"), ("x2", "x3")]
    verdict = is_level(pl)
    assert verdict.value is False
    assert verdict.certificate["cover_sizes"] == [1, 2]


def test_is_gorenstein(ex31_pl, graft_spec):
    for n in range(1, 7):
        pl = make_labeling(pairs_graph(n), std_pairs(n))
        assert is_gorenstein(pl).value is True
    assert is_gorenstein(ex31_pl).value is False
    _, pl = b_graft(graft_spec)
    verdict = is_gorenstein(pl)
    assert verdict.value is False
    assert ["x1", "x2"] in verdict.certificate["extra_edges"]


def test_invariant_report(ex31_pl):
    report = invariant_report(ex31_pl)
    assert report.cm_type == 3
    assert report.socle_monomials == (("x1",), ("x2",), ("x3",))
    assert report.level is True
    assert report.gorenstein is False
    assert report.complete_intersection is False

    report = invariant_report(level_false_fixture())
    assert report.cm_type == 2 and report.level is False


def test_invariants_refuse_non_cm_inputs(c4_pl):
    with pytest.raises(PreconditionError):
        cm_type(c4_pl)
    with pytest.raises(PreconditionError):
        socle_generators(c4_pl)
    with pytest.raises(PreconditionError):
        is_level(c4_pl)
    with pytest.raises(PreconditionError):
        is_gorenstein(c4_pl)
    # mixed input fails the unmixedness part of the same gate
    mixed = make_labeling(
        add_edges(pairs_graph(2), [("x1", "y2"), ("x1", "x2")]), std_pairs(2)
    )
    with pytest.raises(PreconditionError):
        cm_type(mixed)


def test_socle_count_equals_type_across_small_census():
    from cmgraphs.census import enumerate_class
    from cmgraphs.pairing import find_cycle

    for n in (1, 2, 3):
        for pl in enumerate_class(n):
            from cmgraphs.graphs import is_unmixed_bruteforce

            if not is_unmixed_bruteforce(pl.graph).value:
                continue
            if find_cycle(pl, max_r=2) is not None:
                continue
            t = cm_type(pl)
            assert t >= 1
            assert len(socle_generators(pl)) == t
            assert (t == 1) == (is_gorenstein(pl).value is True)
            assert (t == 1) == (len(pl.graph.edges) == pl.n)
