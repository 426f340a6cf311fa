# -*- coding: utf-8 -*-
import unittest

from hypothesis import given, settings

from .context import cliquevectors
from .tools import all_graphs, graphs
from cliquevectors.graph import Graph, complete_graph, empty_graph, path_graph
from cliquevectors.graph_io import (GraphFormatError, detect_format, format_graph, format_graph6,
                                    parse_graph, parse_graph6)


class TestEdgelist(unittest.TestCase):

  def test_parse(self):
    self.assertEqual(parse_graph("3\n0 1\n1 2\n"), path_graph(3))
    self.assertEqual(parse_graph("3\n1 2\n0 1"), path_graph(3))
    self.assertEqual(parse_graph("# word: DS\n\n2\n"), empty_graph(2))
    self.assertEqual(parse_graph("0\n"), empty_graph(0))

  def test_format(self):
    self.assertEqual(format_graph(path_graph(3)), "3\n0 1\n1 2\n")
    self.assertEqual(format_graph(empty_graph(2)), "2\n")
    g = Graph.from_edges(5, [(3, 4), (0, 4), (1, 2)])
    self.assertEqual(parse_graph(format_graph(g)), g)

  def test_errors(self):
    cases = [
      ("", "Empty input"),
      ("x\n", "Line 1: malformed header"),
      ("65\n", "out of range"),
      ("3\n0 3\n", "Line 2: vertex 3 out of range"),
      ("3\n1 1\n", "Line 2: self-loop at vertex 1"),
      ("3\n0 1\n# note\n1 0\n", "Line 4: duplicate edge 0-1"),
      ("3\n0 1 2\n", "Line 2: expected 'u v'"),
      ("3\n0 b\n", "Line 2: expected integer vertices"),
    ]
    for text, message in cases:
      with self.assertRaises(GraphFormatError) as cm:
        parse_graph(text)
      self.assertIn(message, str(cm.exception))

  def test_unknown_format(self):
    with self.assertRaises(ValueError):
      parse_graph("3\n", "xml")
    with self.assertRaises(ValueError):
      format_graph(path_graph(3), "xml")


class TestGraph6(unittest.TestCase):

  def test_decode(self):
    # One edge: x_{0,1} is the first bit of the first data byte.
    self.assertEqual(parse_graph6("B_").edges(), [(0, 1)])
    self.assertEqual(parse_graph6("BG").edges(), [(1, 2)])
    self.assertEqual(parse_graph6("Bw"), complete_graph(3))
    self.assertEqual(parse_graph6("?"), empty_graph(0))
    self.assertEqual(parse_graph6(">>graph6<<Bw\n"), complete_graph(3))

  def test_encode(self):
    self.assertEqual(format_graph6(complete_graph(3)), "Bw")
    self.assertEqual(format_graph6(path_graph(3)), "Bg")
    self.assertEqual(format_graph6(empty_graph(0)), "?")
    self.assertEqual(format_graph(complete_graph(3), "graph6"), "Bw\n")

  def test_large_sizes(self):
    g = empty_graph(63)
    self.assertTrue(format_graph6(g).startswith("~??~"))
    self.assertEqual(parse_graph6(format_graph6(g)), g)
    g = path_graph(64)
    self.assertEqual(parse_graph6(format_graph6(g)), g)

  def test_errors(self):
    cases = [
      ("B", "length mismatch"),
      ("B__", "length mismatch"),
      ("Bz!", "invalid graph6 byte"),
      ("~?@@" + "?" * 347, "exceeds 64"),
      ("Bw\nBw\n", "exactly one graph6 line"),
      ("~", "malformed graph6 size prefix"),
    ]
    for text, message in cases:
      with self.assertRaises(GraphFormatError) as cm:
        parse_graph6(text)
      self.assertIn(message, str(cm.exception))

  def test_round_trip_all_small_graphs(self):
    for g in all_graphs(5):
      self.assertEqual(parse_graph(format_graph(g, "graph6"), "graph6"), g)
      self.assertEqual(parse_graph(format_graph(g)), g)


def test_detect_format():
  assert detect_format("3\n0 1\n") == "edgelist"
  assert detect_format("# word: SS\n2\n0 1\n") == "edgelist"
  assert detect_format("Bw\n") == "graph6"
  assert detect_format(">>graph6<<Bw") == "graph6"


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=7))
def test_round_trip_sampled_graphs(g):
  assert parse_graph6(format_graph6(g)) == g
  text = format_graph(g, "graph6")
  assert detect_format(text) == "graph6"
  assert parse_graph(text, "graph6") == g
  assert parse_graph(format_graph(g)) == g
