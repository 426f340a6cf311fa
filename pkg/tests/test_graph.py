# -*- coding: utf-8 -*-
import collections
import unittest

import networkx
from hypothesis import given, settings, strategies as st

from .context import cliquevectors
from .tools import clique_vector_networkx, graphs, octahedron
from cliquevectors import util
from cliquevectors.graph import (Graph, add_isolated, clique_vector_bruteforce, complete_graph,
                                 component_count, cone, count_components, cycle_graph, edge_pairs,
                                 empty_graph, enumerate_graphs, from_networkx, graph_count,
                                 graph_from_edge_mask, induced_subgraph, induced_subgraph_mask,
                                 is_connected, iter_cliques, path_graph, star_graph, to_networkx)


class TestGraph(unittest.TestCase):

  def test_from_edges(self):
    g = Graph.from_edges(3, [(1, 2), (0, 1)])
    self.assertEqual(g, path_graph(3))
    self.assertEqual(g.edges(), [(0, 1), (1, 2)])
    self.assertEqual(g.num_edges, 2)
    self.assertEqual(g.degree(1), 2)
    self.assertTrue(g.has_edge(2, 1))
    self.assertFalse(g.has_edge(0, 2))
    self.assertEqual(str(g), 'Graph(n=3, edges=[(0, 1), (1, 2)])')

  def test_from_edges_errors(self):
    with self.assertRaisesRegex(ValueError, 'out of range'):
      Graph.from_edges(2, [(0, 2)])
    with self.assertRaisesRegex(ValueError, 'Self-loop'):
      Graph.from_edges(2, [(1, 1)])
    with self.assertRaisesRegex(ValueError, 'Duplicate edge 0-1'):
      Graph.from_edges(2, [(0, 1), (1, 0)])
    with self.assertRaises(ValueError):
      empty_graph(65)

  def test_constructors(self):
    self.assertEqual(complete_graph(4).num_edges, 6)
    self.assertTrue(complete_graph(4).is_complete())
    self.assertTrue(empty_graph(1).is_complete())
    self.assertTrue(empty_graph(0).is_complete())
    self.assertFalse(path_graph(3).is_complete())
    self.assertEqual(cycle_graph(4).edges(), [(0, 1), (0, 3), (1, 2), (2, 3)])
    self.assertEqual(star_graph(3).edges(), [(0, 1), (0, 2), (0, 3)])
    with self.assertRaises(ValueError):
      cycle_graph(2)

  def test_edge_mask(self):
    self.assertEqual(edge_pairs(4), [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)])
    self.assertEqual(Graph.from_edges(3, [(0, 1)]).edge_mask(), 1)
    self.assertEqual(graph_from_edge_mask(3, 0b100).edges(), [(1, 2)])
    self.assertEqual(complete_graph(4).edge_mask(), 63)
    with self.assertRaises(ValueError):
      graph_from_edge_mask(3, 8)

  def test_induced_subgraph(self):
    self.assertEqual(induced_subgraph(cycle_graph(4), [0, 1, 2]), path_graph(3))
    self.assertEqual(induced_subgraph(cycle_graph(4), [0, 2]), empty_graph(2))
    self.assertEqual(induced_subgraph_mask(complete_graph(5), 0b10101), complete_graph(3))
    self.assertEqual(induced_subgraph(path_graph(3), []), empty_graph(0))
    with self.assertRaisesRegex(ValueError, 'Vertex 5 out of range'):
      induced_subgraph(path_graph(3), [0, 5])

  def test_components(self):
    self.assertEqual(count_components(empty_graph(3)), 3)
    self.assertEqual(component_count(empty_graph(0)), 0)
    self.assertEqual(count_components(path_graph(3), 0b101), 2)
    self.assertTrue(is_connected(path_graph(4)))
    self.assertFalse(is_connected(cycle_graph(4), 0b0101))
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    self.assertEqual(component_count(two_triangles), 2)

  def test_cone_and_isolated(self):
    self.assertEqual(cone(path_graph(2)), complete_graph(3))
    self.assertEqual(cone(empty_graph(0)), empty_graph(1))
    g = add_isolated(complete_graph(2))
    self.assertEqual(g.n, 3)
    self.assertEqual(g.edges(), [(0, 1)])


class TestCliques(unittest.TestCase):

  def test_iter_cliques(self):
    self.assertEqual(sorted(iter_cliques(complete_graph(3))), [1, 2, 3, 4, 5, 6, 7])
    self.assertEqual(sorted(iter_cliques(path_graph(3))), [1, 2, 3, 4, 6])
    self.assertEqual(list(iter_cliques(empty_graph(0))), [])

  def test_clique_vector(self):
    self.assertEqual(clique_vector_bruteforce(complete_graph(4)), (4, 6, 4, 1))
    self.assertEqual(clique_vector_bruteforce(cycle_graph(4)), (4, 4))
    self.assertEqual(clique_vector_bruteforce(empty_graph(3)), (3,))
    self.assertEqual(clique_vector_bruteforce(star_graph(3)), (4, 3))
    self.assertEqual(clique_vector_bruteforce(octahedron()), (6, 12, 8))
    with self.assertRaises(ValueError):
      clique_vector_bruteforce(empty_graph(0))

  def test_clique_vector_of_large_complete_graph(self):
    c = clique_vector_bruteforce(complete_graph(16))
    self.assertEqual(c[7], 12870)
    self.assertEqual(sum(c), 2 ** 16 - 1)


class TestEnumeration(unittest.TestCase):

  def test_enumerate_graphs(self):
    graphs3 = list(enumerate_graphs(3))
    self.assertEqual(len(graphs3), 8)
    self.assertEqual([g.edge_mask() for g in graphs3], list(range(8)))
    self.assertEqual(graph_count(4), 64)
    self.assertEqual(len(list(enumerate_graphs(4, 10, 20))), 10)
    self.assertEqual(len(list(enumerate_graphs(4, 60, 100))), 4)
    self.assertEqual(list(enumerate_graphs(1)), [empty_graph(1)])

  def test_enumerate_graphs_range(self):
    with self.assertRaises(ValueError):
      list(enumerate_graphs(0))
    with self.assertRaises(ValueError):
      list(enumerate_graphs(9))

  def test_partitions_cover_all_graphs(self):
    parts = [list(enumerate_graphs(5, start, start + 300)) for start in range(0, 1024, 300)]
    self.assertEqual(sum(parts, []), list(enumerate_graphs(5)))


class TestNetworkx(unittest.TestCase):

  def test_round_trip(self):
    g = cycle_graph(5)
    nx_graph = to_networkx(g)
    self.assertEqual(nx_graph.number_of_nodes(), 5)
    self.assertEqual(nx_graph.number_of_edges(), 5)
    self.assertEqual(from_networkx(nx_graph), g)

  def test_relabels_sorted(self):
    self.assertEqual(from_networkx(networkx.Graph([('b', 'c'), ('a', 'b')])), path_graph(3))

  def test_self_loop_rejected(self):
    with self.assertRaises(ValueError):
      from_networkx(networkx.Graph([(0, 0)]))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_clique_vector_matches_networkx(g):
  assert clique_vector_bruteforce(g) == clique_vector_networkx(g)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7), st.data())
def test_induced_subgraph_counts_only_cliques_inside(g, data):
  w = data.draw(st.integers(1, util.full_mask(g.n)))
  sizes = collections.Counter(util.popcount(clique) for clique in iter_cliques(g) if clique & ~w == 0)
  expected = tuple(sizes[i] for i in range(1, max(sizes) + 1))
  assert clique_vector_bruteforce(induced_subgraph_mask(g, w)) == expected
