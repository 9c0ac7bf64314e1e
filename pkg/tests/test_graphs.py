import itertools
import random

import pytest

from ramsey.graphs import (
    Graph,
    GraphError,
    canonical_form,
    components,
    degree_profile,
    delete_vertex,
    disjoint_union,
    embeds,
    from_edges,
    graph6_decode,
    graph6_encode,
    isomorphic,
    lex_edges,
)

from brute import brute_embeds

K3 = from_edges(3, [(0, 1), (0, 2), (1, 2)])
K4 = from_edges(4, list(itertools.combinations(range(4), 2)))
P3 = from_edges(3, [(0, 1), (1, 2)])
P4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
C4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
PAW = from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
M2 = from_edges(4, [(0, 1), (2, 3)])
STAR4 = from_edges(5, [(0, i) for i in range(1, 5)])


def random_graph(rng, n, p=0.4):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def relabeled(g, perm):
    return from_edges(g.n, [(perm[a], perm[b]) for a, b in g.edges()])


class TestConstruction:
    def test_k3(self):
        assert K3.q == 3
        assert K3.degrees() == (2, 2, 2)

    def test_empty_two_vertices(self):
        g = from_edges(2, [])
        assert g.q == 0
        assert g.n == 2

    def test_matching(self):
        assert M2.q == 2
        assert M2.degrees() == (1, 1, 1, 1)

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphError):
            from_edges(3, [(0, 1), (1, 0)])

    def test_loop_rejected(self):
        with pytest.raises(GraphError):
            from_edges(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError):
            from_edges(3, [(0, 3)])

    def test_vertex_cap(self):
        with pytest.raises(GraphError):
            Graph(33, [0] * 33)

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(GraphError):
            Graph(2, [2, 0])

    def test_edges_lexicographic(self):
        assert C4.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]


class TestDegreeProfile:
    @pytest.mark.parametrize("g,expected", [
        (K3, (2, 2, False, True)),
        (M2, (1, 1, False, False)),
        (STAR4, (4, 1, False, True)),
        (from_edges(3, []), (0, 0, True, False)),
        (from_edges(0, []), (0, 0, False, True)),
    ])
    def test_fixtures(self, g, expected):
        assert degree_profile(g) == expected


class TestDeleteVertex:
    def test_k3_drops_to_edge(self):
        h = delete_vertex(K3, 0)
        assert (h.n, h.q) == (2, 1)

    def test_star_center_isolates_leaves(self):
        star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
        h = delete_vertex(star, 0)
        assert (h.n, h.q) == (3, 0)

    def test_path_interior(self):
        h = delete_vertex(P4, 1)
        assert (h.n, h.q) == (3, 1)
        assert sorted(h.degrees()) == [0, 1, 1]

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            delete_vertex(K3, 3)

    def test_q_drops_by_degree(self):
        rng = random.Random(11)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 9))
            v = rng.randrange(g.n)
            assert delete_vertex(g, v).q == g.q - g.degree(v)


class TestDisjointUnion:
    def test_two_edges(self):
        u = disjoint_union(from_edges(2, [(0, 1)]), from_edges(2, [(0, 1)]))
        assert isomorphic(u, M2)

    def test_k2_with_triangle(self):
        u = disjoint_union(from_edges(2, [(0, 1)]), K3)
        assert (u.n, u.q) == (5, 4)

    def test_identity_with_empty(self):
        assert disjoint_union(K3, from_edges(0, [])) == K3

    def test_cap_enforced(self):
        big = from_edges(20, [])
        with pytest.raises(GraphError):
            disjoint_union(big, from_edges(13, []))


class TestCanonicalForm:
    def test_all_relabelings_of_paw_agree(self):
        forms = {canonical_form(relabeled(PAW, perm))
                 for perm in itertools.permutations(range(4))}
        assert len(forms) == 1

    def test_p3_labelings(self):
        a = from_edges(3, [(0, 1), (1, 2)])
        b = from_edges(3, [(1, 0), (0, 2)])
        assert canonical_form(a) == canonical_form(b)

    def test_different_graphs_differ(self):
        assert canonical_form(K3) != canonical_form(P3)

    def test_invariance_random(self):
        rng = random.Random(23)
        for _ in range(200):
            g = random_graph(rng, rng.randint(0, 8))
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(relabeled(g, perm)) == canonical_form(g)

    def test_output_isomorphic_to_input(self):
        rng = random.Random(5)
        for _ in range(100):
            g = random_graph(rng, rng.randint(0, 7))
            assert isomorphic(canonical_form(g), g)


class TestEmbeds:
    def test_p3_in_k3(self):
        assert embeds(P3, K3)

    def test_c4_not_in_k3(self):
        assert not embeds(C4, K3)

    def test_matching_in_c4(self):
        assert embeds(M2, C4)

    def test_reflexive(self):
        for g in (K3, C4, PAW, M2):
            assert embeds(g, g)

    def test_size_guards(self):
        assert not embeds(K4, K3)
        assert not embeds(K3, P4)  # more edges than the path has

    def test_not_induced(self):
        # a blue K4 contains a blue C4
        assert embeds(C4, K4)

    def test_agrees_with_brute_force(self):
        rng = random.Random(97)
        pool = [random_graph(rng, rng.randint(0, 6)) for _ in range(12)]
        pool += [K3, C4, P4, M2, PAW]
        for h in pool:
            for g in pool:
                assert embeds(h, g) == brute_embeds(h, g), (h, g)


class TestGraph6:
    def test_known_strings(self):
        # cross-checked against networkx's codec (see test_matches_networkx)
        assert isomorphic(graph6_decode("Bw"), K3)
        assert isomorphic(graph6_decode("C~"), K4)

    def test_encode_k3(self):
        assert graph6_encode(K3) == "Bw"

    def test_round_trip_small(self):
        rng = random.Random(3)
        for _ in range(200):
            g = random_graph(rng, rng.randint(0, 10))
            assert graph6_decode(graph6_encode(g)) == g

    def test_matches_networkx(self):
        nx = pytest.importorskip("networkx")
        rng = random.Random(8)
        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 12))
            ref = nx.Graph()
            ref.add_nodes_from(range(g.n))
            ref.add_edges_from(g.edges())
            assert nx.to_graph6_bytes(ref, header=False).decode().strip() == graph6_encode(g)
            back = nx.from_graph6_bytes(graph6_encode(g).encode())
            assert sorted(back.edges()) == sorted(g.edges())

    @pytest.mark.parametrize("bad", ["", "B", "Bww", "C", "B\x1f", "~~"])
    def test_malformed_rejected(self, bad):
        with pytest.raises(GraphError):
            graph6_decode(bad)

    def test_nonzero_padding_rejected(self):
        # K3's final group has three padding bits; force one on
        s = "B" + chr(ord("w") + 1)
        with pytest.raises(GraphError):
            graph6_decode(s)


class TestComponents:
    def test_split(self):
        comps = components(disjoint_union(K3, M2))
        assert sorted((c.n, c.q) for c in comps) == [(2, 1), (2, 1), (3, 3)]

    def test_connected_single(self):
        assert len(components(C4)) == 1
