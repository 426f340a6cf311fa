# Copyright 2026 The cliquevectors Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Labeled simple graphs on vertices ``0..n-1``, stored as one neighbor bitset per vertex, together
with the operators and enumerations the rest of the package is built on.
"""

import collections
from typing import Any, Iterable, Iterator, List, Optional, Tuple

import networkx

from . import util
from .transform import CliqueVector

MAX_VERTICES = 64
MAX_ENUMERATION_VERTICES = 8


class Graph(collections.namedtuple('Graph', 'n adj')):
  """
  Graph is a 2-tuple of immutable values:

  - [0] .n    Number of vertices, at most 64.
  - [1] .adj  Tuple of ``n`` ints; bit ``u`` of ``adj[v]`` is set iff ``u`` and ``v`` are adjacent.

  Adjacency is symmetric with no self-loops. Graphs are hashable, so they can key caches, and
  picklable, so they can be shipped to worker processes. The clique complex of a graph is never
  built explicitly: its faces are the cliques of the graph.
  """
  __slots__ = ()

  @classmethod
  def from_edges(cls, n, edges):
    # type: (int, Iterable[Tuple[int, int]]) -> Graph
    """
    Builds a graph on ``n`` vertices from ``(u, v)`` pairs. Raises ValueError for an index out of
    range, a self-loop or a repeated edge.
    """
    _check_vertex_count(n)
    adj = [0] * n
    for u, v in edges:
      for x in (u, v):
        if not 0 <= x < n:
          raise ValueError("Vertex %s out of range for a graph on %s vertices" % (x, n))
      if u == v:
        raise ValueError("Self-loop at vertex %s" % u)
      if adj[u] >> v & 1:
        raise ValueError("Duplicate edge %s-%s" % (min(u, v), max(u, v)))
      adj[u] |= 1 << v
      adj[v] |= 1 << u
    return cls(n, tuple(adj))

  @property
  def vertex_mask(self):
    # type: () -> int
    return util.full_mask(self.n)

  def has_edge(self, u, v):
    # type: (int, int) -> bool
    return bool(self.adj[u] >> v & 1)

  def degree(self, v):
    # type: (int) -> int
    return util.popcount(self.adj[v])

  def edges(self):
    # type: () -> List[Tuple[int, int]]
    """Returns the sorted list of edges as ``(u, v)`` pairs with ``u < v``."""
    return [(u, v) for u in range(self.n) for v in util.iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

  @property
  def num_edges(self):
    # type: () -> int
    return sum(util.popcount(a) for a in self.adj) // 2

  def is_complete(self):
    # type: () -> bool
    full = self.vertex_mask
    return all(a | (1 << v) == full for v, a in enumerate(self.adj))

  def edge_mask(self):
    # type: () -> int
    """
    Returns the edges as one int, with one bit per vertex pair in the column-wise upper-triangle
    order used by graph6 and by ``enumerate_graphs()``.
    """
    mask = 0
    k = 0
    for j in range(1, self.n):
      aj = self.adj[j]
      for i in range(j):
        if aj >> i & 1:
          mask |= 1 << k
        k += 1
    return mask

  def __str__(self):
    # type: () -> str
    return 'Graph(n=%s, edges=%s)' % (self.n, self.edges())


def _check_vertex_count(n):
  # type: (int) -> None
  if not 0 <= n <= MAX_VERTICES:
    raise ValueError("Vertex count must be between 0 and %s, got %s" % (MAX_VERTICES, n))


def empty_graph(n):
  # type: (int) -> Graph
  """The graph on ``n`` vertices with no edges."""
  _check_vertex_count(n)
  return Graph(n, (0,) * n)


def complete_graph(n):
  # type: (int) -> Graph
  _check_vertex_count(n)
  full = util.full_mask(n)
  return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n):
  # type: (int) -> Graph
  return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n):
  # type: (int) -> Graph
  if n < 3:
    raise ValueError("A cycle needs at least 3 vertices, got %s" % n)
  return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def star_graph(leaves):
  # type: (int) -> Graph
  """The star ``K_{1,leaves}`` with center 0."""
  return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def edge_pairs(n):
  # type: (int) -> List[Tuple[int, int]]
  """Vertex pairs in column-wise upper-triangle order: (0,1), (0,2), (1,2), (0,3), ..."""
  return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_edge_mask(n, mask):
  # type: (int, int) -> Graph
  """Inverse of ``Graph.edge_mask()``."""
  _check_vertex_count(n)
  if mask >> (n * (n - 1) // 2):
    raise ValueError("Edge mask %s has bits beyond the %s vertex pairs of n=%s" % (
      mask, n * (n - 1) // 2, n))
  adj = [0] * n
  pairs = edge_pairs(n)
  for k in util.iter_bits(mask):
    i, j = pairs[k]
    adj[i] |= 1 << j
    adj[j] |= 1 << i
  return Graph(n, tuple(adj))


def _check_mask(g, w):
  # type: (Graph, int) -> None
  if w >> g.n:
    extra = next(util.iter_bits(w >> g.n)) + g.n
    raise ValueError("Vertex %s out of range for a graph on %s vertices" % (extra, g.n))


def induced_subgraph(g, w):
  # type: (Graph, Iterable[int]) -> Graph
  """
  Returns the subgraph induced by the vertex set ``w``, with its vertices relabeled ``0..|w|-1``
  in increasing order of their original index.
  """
  return induced_subgraph_mask(g, util.mask_of(w))


def induced_subgraph_mask(g, w):
  # type: (Graph, int) -> Graph
  """Same as ``induced_subgraph()``, with the vertex set given as a bitset."""
  _check_mask(g, w)
  members = list(util.iter_bits(w))
  adj = []
  for v in members:
    a = g.adj[v] & w
    new = 0
    for i, u in enumerate(members):
      if a >> u & 1:
        new |= 1 << i
    adj.append(new)
  return Graph(len(members), tuple(adj))


def count_components(g, mask=None):
  # type: (Graph, Optional[int]) -> int
  """
  Returns the number of connected components of the subgraph induced by ``mask`` (all vertices by
  default), without relabeling it.
  """
  remaining = g.vertex_mask if mask is None else mask
  count = 0
  while remaining:
    frontier = remaining & -remaining
    comp = frontier
    while frontier:
      reach = 0
      for v in util.iter_bits(frontier):
        reach |= g.adj[v]
      frontier = reach & remaining & ~comp
      comp |= frontier
    remaining &= ~comp
    count += 1
  return count


def component_count(g):
  # type: (Graph) -> int
  """Number of connected components; 0 for the graph with no vertices."""
  return count_components(g)


def is_connected(g, mask=None):
  # type: (Graph, Optional[int]) -> bool
  """True if the induced subgraph on ``mask`` has exactly one component."""
  return count_components(g, mask) == 1


def cone(g):
  # type: (Graph) -> Graph
  """Adds a new vertex ``n`` adjacent to every existing vertex."""
  _check_vertex_count(g.n + 1)
  top = 1 << g.n
  return Graph(g.n + 1, tuple(a | top for a in g.adj) + (util.full_mask(g.n),))


def add_isolated(g):
  # type: (Graph) -> Graph
  """Adds a new isolated vertex ``n``."""
  _check_vertex_count(g.n + 1)
  return Graph(g.n + 1, g.adj + (0,))


def iter_cliques(g):
  # type: (Graph) -> Iterator[int]
  """
  Yields every nonempty clique of ``g`` once, as a bitset. Cliques are grown from their smallest
  vertex by adding larger common neighbors, using an explicit stack rather than recursion.
  """
  stack = [(1 << v, g.adj[v] >> (v + 1) << (v + 1)) for v in reversed(range(g.n))]
  while stack:
    clique, candidates = stack.pop()
    yield clique
    ins = len(stack)
    while candidates:
      low = candidates & -candidates
      candidates ^= low
      u = low.bit_length() - 1
      stack.insert(ins, (clique | low, candidates & g.adj[u]))


def clique_vector_bruteforce(g):
  # type: (Graph) -> CliqueVector
  """
  Counts the cliques of each size by enumerating them all. Raises ValueError for the empty graph,
  which has no clique vector.
  """
  if g.n == 0:
    raise ValueError("Clique vector of the empty graph is undefined")
  counts = [0] * (g.n + 1)
  for clique in iter_cliques(g):
    counts[util.popcount(clique)] += 1
  d = max(i for i, c in enumerate(counts) if c)
  return CliqueVector(counts[1:d + 1])


def enumerate_graphs(n, start=0, stop=None):
  # type: (int, int, Optional[int]) -> Iterator[Graph]
  """
  Yields all ``2**(n*(n-1)/2)`` labeled graphs on ``n`` vertices, in order of their edge mask.
  ``start`` and ``stop`` select a range of edge masks, so a sweep can be split into independent
  partitions.
  """
  if not 1 <= n <= MAX_ENUMERATION_VERTICES:
    raise ValueError("Graph enumeration supports 1 <= n <= %s, got %s" % (
      MAX_ENUMERATION_VERTICES, n))
  total = 1 << (n * (n - 1) // 2)
  stop = total if stop is None else min(stop, total)
  pairs = [(1 << i, 1 << j, i, j) for i, j in edge_pairs(n)]
  for mask in range(start, stop):
    adj = [0] * n
    m = mask
    k = 0
    while m:
      if m & 1:
        bi, bj, i, j = pairs[k]
        adj[i] |= bj
        adj[j] |= bi
      m >>= 1
      k += 1
    yield Graph(n, tuple(adj))


def graph_count(n):
  # type: (int) -> int
  """Number of labeled graphs on ``n`` vertices."""
  return 1 << (n * (n - 1) // 2)


def to_networkx(g):
  # type: (Graph) -> Any
  """Returns a ``networkx.Graph`` with nodes ``0..n-1``."""
  result = networkx.Graph()
  result.add_nodes_from(range(g.n))
  result.add_edges_from(g.edges())
  return result


def from_networkx(nx_graph):
  # type: (Any) -> Graph
  """
  Converts a ``networkx.Graph``, relabeling its nodes ``0..n-1`` in sorted order. Self-loops are
  rejected.
  """
  nodes = sorted(nx_graph.nodes())
  index = {node: i for i, node in enumerate(nodes)}
  return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in nx_graph.edges()])
