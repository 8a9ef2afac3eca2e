import pytest

import rsplit

NINE_VERTEX_EDGES = [(1, 6), (1, 7), (2, 6), (2, 8), (3, 7), (3, 8), (1, 2), (2, 4), (3, 5), (2, 5), (7, 9)]


def test_gf2_rank():
    assert rsplit.gf2_rank(["100", "010", "001"]) == 3
    assert rsplit.gf2_rank(["1100", "1010", "0110", "0000", "0000"]) == 2


def test_cut_rank():
    g = rsplit.Graph(9, NINE_VERTEX_EDGES)
    assert rsplit.cut_rank(g, [1, 2, 3, 4, 5]) == 2
    assert rsplit.is_r_split(g, [1, 2, 3, 4, 5], 2)
    assert not rsplit.is_r_split(g, [1, 2, 3, 4, 5], 1)


def test_graph_parse_errors():
    with pytest.raises(rsplit.ParseError):
        rsplit.Graph.parse("3 1\n1 1\n")
    with pytest.raises(ValueError):
        rsplit.cut_rank(rsplit.Graph(3), [4])


def test_closure():
    full = rsplit.close_full(8, [[1, 2, 3], [2, 3, 4, 5]], 2)
    assert len(full) == 6
    assert [1, 2, 3, 4, 5] in full
    assert [1, 2] in full
    assert [1, 2, 4] not in full
    assert len(rsplit.close_degenerate(8, [[1, 2, 3], [2, 3, 4, 5]], 2)) == 4


def test_splits_and_essential():
    c4 = rsplit.Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    h = rsplit.enumerate_r_splits(c4, 1)
    assert h.middles == [[1, 3], [2, 4]]
    ess = rsplit.essential_representation(h)
    assert rsplit.close_full(4, ess, 1) == h
    assert rsplit.phi(h, [1, 2]) is None
    assert rsplit.verify_theorem_one(c4, 1)["pass"]


def test_theorem_one_refuses():
    k33 = rsplit.Graph(6, [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)])
    assert not rsplit.is_r_rank_connected(k33, 2)
    with pytest.raises(rsplit.PreconditionError):
        rsplit.verify_theorem_one(k33, 2)


def test_orthogonality():
    assert rsplit.is_orthogonal(12, [1, 2, 3], [2, 3, 4, 5, 6], 3)
    assert rsplit.is_orthogonal_oracle(12, [1, 2, 3], [2, 3, 4, 5, 6], 3)
    assert not rsplit.is_orthogonal(6, [1, 2, 3], [3, 4, 5], 1)
    assert rsplit.crossing_pair(6, [[1, 2, 3], [3, 4, 5]], 1) == ([1, 2, 3], [3, 4, 5])


def test_family_and_bounds():
    fam = rsplit.build_family(2, 3)
    assert len(fam) == 9
    assert fam[0] == [1, 4, 7]
    assert rsplit.is_cross_free(9, fam, 2)
    b = rsplit.crossfree_size_bounds(9, fam, 2)
    assert (b["nontrivial_edges"], b["closure_middles"]) == (9, 18)
    assert rsplit.verify_lower_bound(1, 4)["pass"]


def test_suite_is_deterministic():
    a = rsplit.run_verification_suite(7)
    assert a == rsplit.run_verification_suite(7)
    assert all(line.startswith("PASS ") for line in a.splitlines())
