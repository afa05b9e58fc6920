import networkx as nx
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from ..core import Graph
from ..stats import LARGE_GRAPH_NODES, GraphStats, clustering_coefficient, connected_components, stats, triangles_through
from .factories import GraphFactory, ToyGraphFactory, complete_graph, path_graph, star_graph


def to_networkx(g):
    graph = nx.Graph()
    graph.add_nodes_from(range(g.node_count))
    graph.add_edges_from(g.edges())
    return graph


def brute_force_triangles(g, z):
    neighbours = g.neighbors(z)
    return sum(
        1 for i, x in enumerate(neighbours) for y in neighbours[i + 1:] if g.has_edge(x, y)
    )


class TestTriangles(SimpleTestCase):
    def test_star_center(self):
        self.assertEqual(triangles_through(star_graph(5), 0), 0)

    def test_triangle(self):
        g = complete_graph(3)
        self.assertEqual([triangles_through(g, z) for z in range(3)], [1, 1, 1])

    def test_toy(self):
        g = ToyGraphFactory.build()
        self.assertEqual(triangles_through(g, g.node_of('c')), 2)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 30), st.floats(0.05, 0.9), st.integers(0, 1000))
    def test_matches_brute_force(self, n, p, seed):
        g = GraphFactory.build(n=n, p=p, seed=seed)
        for z in range(g.node_count):
            self.assertEqual(triangles_through(g, z), brute_force_triangles(g, z))


class TestClustering(SimpleTestCase):
    def test_triangle(self):
        self.assertEqual(clustering_coefficient(complete_graph(3), 0), 1.0)

    def test_star_center(self):
        self.assertEqual(clustering_coefficient(star_graph(4), 0), 0.0)

    def test_low_degree(self):
        self.assertEqual(clustering_coefficient(path_graph(3), 0), 0.0)

    def test_toy(self):
        g = ToyGraphFactory.build()
        self.assertAlmostEqual(clustering_coefficient(g, g.node_of('c')), 1.0 / 3)
        self.assertAlmostEqual(clustering_coefficient(g, g.node_of('d')), 2.0 / 3)

    def test_matches_networkx(self):
        g = GraphFactory.build(n=40, p=0.15, seed=11)
        expected = nx.clustering(to_networkx(g))
        for z in range(g.node_count):
            self.assertAlmostEqual(clustering_coefficient(g, z), expected[z], places=12)

    def test_bounds_and_cliques(self):
        g = GraphFactory.build(n=25, p=0.4, seed=2)
        for z in range(g.node_count):
            value = clustering_coefficient(g, z)
            self.assertTrue(0.0 <= value <= 1.0)
            neighbours = g.neighbors(z)
            is_clique = all(g.has_edge(x, y) for i, x in enumerate(neighbours) for y in neighbours[i + 1:])
            if len(neighbours) >= 2:
                self.assertEqual(value == 1.0, is_clique)


class TestStats(SimpleTestCase):
    def test_single_edge(self):
        summary = stats(Graph([(0, 1)]))
        self.assertEqual((summary.nodes, summary.links, summary.avg_degree, summary.triangles), (2, 1, 1.0, 0))
        self.assertIsNone(summary.apl)

    def test_toy(self):
        summary = stats(ToyGraphFactory.build(), with_paths=True)
        self.assertEqual(summary.triangles, 2)
        self.assertAlmostEqual(summary.avg_degree, 12.0 / 5)
        self.assertEqual(summary.diameter, 2)

    def test_matches_networkx(self):
        g = GraphFactory.build(n=60, p=0.08, seed=5)
        graph = to_networkx(g)
        summary = stats(g, with_paths=True)
        self.assertEqual(summary.triangles, sum(nx.triangles(graph).values()) // 3)
        self.assertAlmostEqual(summary.avg_clustering, nx.average_clustering(graph), places=12)
        largest = graph.subgraph(max(nx.connected_components(graph), key=len))
        self.assertAlmostEqual(summary.apl, nx.average_shortest_path_length(largest), places=10)
        self.assertEqual(summary.diameter, nx.diameter(largest))

    def test_components_match_networkx(self):
        g = GraphFactory.build(n=50, p=0.03, seed=9)
        count, _ = connected_components(g)
        self.assertEqual(count, nx.number_connected_components(to_networkx(g)))

    def test_size_class(self):
        small = GraphStats(nodes=LARGE_GRAPH_NODES, links=1, avg_degree=0.0, triangles=0, avg_clustering=0.0)
        large = GraphStats(nodes=LARGE_GRAPH_NODES + 1, links=1, avg_degree=0.0, triangles=0, avg_clustering=0.0)
        self.assertEqual(small.size_class, 'small/medium')
        self.assertEqual(large.size_class, 'large')
