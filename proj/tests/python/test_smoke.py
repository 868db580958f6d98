import orbit_atlas as oa


def test_counts_match_published_triangle():
    assert [oa.count_orbits(6, i) for i in range(1, 7)] == [720, 1080, 1560, 2190, 3006, 4051]
    assert oa.count_pil(6) == 4051
    assert oa.total_orbit_counts(6)[1:] == [1, 5, 28, 185, 1426, 12607]
    assert oa.egf_si_coeff(0, 6) == 4051


def test_big_counts_are_python_ints():
    value = oa.count_orbits(40, 30)
    assert isinstance(value, int)
    assert value > 2**64


def test_permutation_basics():
    s = oa.Permutation([2, 1, 3])
    t = oa.Permutation([1, 3, 2])
    assert (s * t).images == [2, 3, 1]
    assert oa.length(oa.Permutation([3, 2, 1])) == 3
    assert oa.bruhat_leq(s, oa.Permutation([3, 2, 1]))
    assert not oa.bruhat_leq(s, t)
    assert oa.monoid_right(s, 2).images == [2, 3, 1]
    assert oa.sigma_cycle(3, 3).images == [3, 1, 2]


def test_enumeration_records():
    orbits = oa.enumerate_orbits(3, 2)
    assert len(orbits) == 9
    first = orbits[0]
    assert set(first) == {"decorated", "flag", "pair", "standardized_pair", "pil", "partial"}
    assert first["standardized_pair"]["standardized"] is True
    assert len(oa.enumerate_pil_with_list(3, 1)) == 9


def test_actions_and_graph():
    assert oa.act([1, 2, 3], [2, 1, 3], 2, "right", 2) == ([1, 3, 2], [2, 3, 1])
    assert oa.act([1, 3, 2], [2, 3, 1], 2, "exotic_first") == ([2, 3, 1], [2, 3, 1])
    assert oa.root_type([1, 2, 3], [2, 1, 3], 2, "right", 1) == "noncompact"
    assert oa.closure_leq([2, 1, 3], [2, 1, 3], [3, 2, 1], [3, 1, 2], 2)
    graph = oa.orbit_graph(3, 2)
    assert len(graph["nodes"]) == 9
    assert len(graph["closure_only_edges"]) == 2
    assert "color=green" in oa.orbit_graph_dot(3, 2)


def test_errors_surface_as_python_exceptions():
    import pytest

    with pytest.raises(ValueError):
        oa.Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        oa.act([1, 2, 3], [2, 1, 3], 2, "left", 1)
    with pytest.raises(IndexError):
        oa.count_orbits(3, 5)


def test_verification_runs():
    results = oa.run_verification(3, 6)
    assert all(r["passed"] for r in results)
