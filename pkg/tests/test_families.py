import itertools

import pytest

from oracles import brute_isomorphic
from wienerecc.checks import conjecture2_bound
from wienerecc.enumeration import all_graphs
from wienerecc.families import (
    FAMILY_NAMES,
    FamilySpec,
    build,
    caterpillar,
    complete_bipartite,
    cycle,
    is_kn_minus_matching,
    kn_minus_matching,
    path,
    spider,
    star,
)
from wienerecc.graph import graph_from_edges
from wienerecc.graph6 import encode
from wienerecc.invariants import summarize


def test_kn_minus_perfect_matching_on_4_is_c4():
    assert brute_isomorphic(build(FamilySpec("kn_minus_matching", (4, 2))), cycle(4))


def test_t7_values():
    s = summarize(build(FamilySpec("t7")))
    assert (s.wiener, s.total_ecc, s.radius) == (52, 29, 3)


def test_t8_values():
    s = summarize(build(FamilySpec("t8")))
    assert (s.wiener, s.total_ecc, s.radius) == (79, 39, 3)


def test_paw_values():
    s = summarize(build(FamilySpec("paw")))
    assert (s.wiener, s.total_ecc) == (8, 7)


def test_canonical_labellings():
    assert encode(path(4)) == "Ch"
    assert build(FamilySpec("star", (5,))).adj[0] == (1, 2, 3, 4)
    assert kn_minus_matching(6, 2).edges == [
        e for e in itertools.combinations(range(6), 2) if e not in {(0, 1), (2, 3)}
    ]
    assert caterpillar([1, 0, 2]).edges == [(0, 1), (0, 3), (1, 2), (2, 4), (2, 5)]
    assert spider([2, 1]).edges == [(0, 1), (0, 3), (1, 2)]
    assert complete_bipartite(2, 3).m == 6


@pytest.mark.parametrize(
    "fam",
    [
        FamilySpec("kn_minus_matching", (5, 3)),
        FamilySpec("cycle", (2,)),
        FamilySpec("path", (0,)),
        FamilySpec("caterpillar", ()),
        FamilySpec("caterpillar", (1, -1)),
        FamilySpec("spider", (0, 2)),
        FamilySpec("complete_bipartite", (0, 3)),
        FamilySpec("nope", ()),
        FamilySpec("path", (1, 2)),
    ],
)
def test_invalid_params(fam):
    with pytest.raises(ValueError):
        build(fam)


def test_every_family_builds():
    params = {
        "path": (5,), "cycle": (5,), "star": (5,), "complete": (5,),
        "complete_bipartite": (2, 3), "kn_minus_matching": (5, 2),
        "caterpillar": (1, 2), "spider": (2, 2, 1),
    }
    for name in FAMILY_NAMES:
        g = build(FamilySpec(name, params.get(name, ())))
        assert g.n >= 1


def test_is_kn_minus_matching_examples():
    assert is_kn_minus_matching(cycle(4))
    assert is_kn_minus_matching(build(FamilySpec("complete", (5,))))
    assert not is_kn_minus_matching(path(4))


def test_is_kn_minus_matching_brute_force():
    for n in range(1, 7):
        pairs = list(itertools.combinations(range(n), 2))
        for g in all_graphs(n):
            missing = [p for p in pairs if p not in set(g.edges)]
            # non-edges form a matching iff no two share a vertex
            brute = all(not set(a) & set(b) for a, b in itertools.combinations(missing, 2))
            assert is_kn_minus_matching(g) == brute


def test_path_closed_forms():
    for n in range(1, 201):
        s = summarize(path(n))
        assert s.wiener == (n**3 - n) // 6
        if n >= 2:
            assert s.wiener - s.total_ecc == conjecture2_bound(n)


def test_star_closed_forms():
    for n in range(3, 201):
        s = summarize(star(n))
        assert s.wiener == (n - 1) ** 2
        assert s.total_ecc == 2 * n - 1
        assert 4 * s.wiener == (2 * n - 3) * s.total_ecc + 1


def test_kn_minus_matching_attains_lower_bound():
    for n in range(2, 21):
        for t in range(n // 2 + 1):
            if (n, t) == (2, 1):
                continue  # K_2 minus its edge is disconnected
            g = kn_minus_matching(n, t)
            s = summarize(g)
            assert s.wiener == s.total_ecc + g.m - g.n


def test_odd_cycles_attain_self_centered_bound():
    for n in range(3, 100, 2):
        s = summarize(cycle(n))
        assert 8 * (s.wiener - s.total_ecc) == n * ((n - 2) ** 2 - 1)


def test_complete_bipartite_distances():
    s = summarize(complete_bipartite(2, 3))
    # 6 cross pairs at 1, 1 + 3 same-side pairs at 2
    assert s.wiener == 6 + 2 * 4
    assert graph_from_edges(5, complete_bipartite(2, 3).edges) == complete_bipartite(2, 3)
