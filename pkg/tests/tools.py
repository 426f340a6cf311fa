import itertools

from hypothesis import strategies as st

from .context import cliquevectors
from cliquevectors.graph import Graph, enumerate_graphs, graph_count, graph_from_edge_mask

# A threshold graph with b-vector (4, 1, 2, 3) and clique vector (10, 14, 11, 3).
EXAMPLE_WORD = 'DDDSSDSDDS'
EXAMPLE_B = (4, 1, 2, 3)
EXAMPLE_C = (10, 14, 11, 3)


@st.composite
def graphs(draw, min_n=1, max_n=6):
  """Hypothesis strategy for labeled graphs, drawn by vertex count and edge mask."""
  n = draw(st.integers(min_n, max_n))
  mask = draw(st.integers(0, graph_count(n) - 1))
  return graph_from_edge_mask(n, mask)


@st.composite
def bvectors_with_k(draw, max_d=6, max_entry=5):
  """Hypothesis strategy for ``(b, k)`` with ``b`` positive and starting with ``k`` ones."""
  d = draw(st.integers(1, max_d))
  k = draw(st.integers(0, d))
  rest = draw(st.lists(st.integers(1, max_entry), min_size=d - k, max_size=d - k))
  return tuple([1] * k + rest), k


def all_graphs(n_max, n_min=1):
  """Yields every labeled graph with ``n_min <= n <= n_max`` vertices."""
  return itertools.chain.from_iterable(enumerate_graphs(n) for n in range(n_min, n_max + 1))


def complete_bipartite(a, b):
  return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def octahedron():
  """K_{2,2,2}, whose clique complex is a 2-sphere."""
  return Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if v != u + 3])


def clique_vector_networkx(g):
  """Clique counts by size from networkx, as an independent oracle."""
  import networkx
  from cliquevectors.graph import to_networkx
  counts = {}
  for clique in networkx.enumerate_all_cliques(to_networkx(g)):
    counts[len(clique)] = counts.get(len(clique), 0) + 1
  return tuple(counts[i] for i in range(1, max(counts) + 1))
