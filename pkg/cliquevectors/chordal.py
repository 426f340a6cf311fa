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
Chordality via maximum cardinality search, clique counting along a perfect elimination order, and
vertex connectivity.

Connectivity follows the convention that a graph is k-connected if it has at least k vertices and
stays connected after removing any fewer than k of them. Under it the complete graph ``K_n`` is
n-connected; pass ``classical=True`` to get the textbook value ``n - 1`` instead. The two agree on
every graph that is not complete.
"""

import collections
from collections import deque
from typing import Dict, List, Optional, Sequence

from . import util
from .graph import Graph, count_components
from .transform import CliqueVector, binomial


class EliminationOrder(collections.namedtuple('EliminationOrder', 'order later')):
  """
  EliminationOrder is a 2-tuple:

  - [0] .order  Tuple holding a permutation of the vertices; ``order[0]`` is eliminated first.
  - [1] .later  Tuple indexed by vertex: the bitset of its neighbors that come after it in
                ``order``.
  """
  __slots__ = ()

  @classmethod
  def from_order(cls, g, order):
    # type: (Graph, Sequence[int]) -> EliminationOrder
    """Builds the order for ``g``, raising ValueError unless ``order`` is a permutation."""
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
      raise ValueError("Elimination order %s is not a permutation of 0..%s" % (list(order), g.n - 1))
    later = [0] * g.n
    remaining = g.vertex_mask
    for v in order:
      remaining &= ~(1 << v)
      later[v] = g.adj[v] & remaining
    return cls(order, tuple(later))

  def positions(self):
    # type: () -> List[int]
    """Returns the inverse permutation: ``positions()[v]`` is the index of ``v`` in ``order``."""
    pos = [0] * len(self.order)
    for i, v in enumerate(self.order):
      pos[v] = i
    return pos


def _check_nonempty(g):
  # type: (Graph) -> None
  if g.n == 0:
    raise ValueError("Operation is undefined for the graph with no vertices")


def mcs_order(g):
  # type: (Graph) -> EliminationOrder
  """
  Runs maximum cardinality search, breaking ties by the smallest vertex index, and returns the
  reverse of the visiting order. For a chordal graph this is a perfect elimination order.
  """
  _check_nonempty(g)
  weight = [0] * g.n
  visited = 0
  visit = []  # type: List[int]
  for _ in range(g.n):
    best = -1
    chosen = -1
    for v in range(g.n):
      if not visited >> v & 1 and weight[v] > best:
        best = weight[v]
        chosen = v
    visit.append(chosen)
    visited |= 1 << chosen
    for u in util.iter_bits(g.adj[chosen] & ~visited):
      weight[u] += 1
  return EliminationOrder.from_order(g, reversed(visit))


def _as_elimination_order(g, e):
  # type: (Graph, EliminationOrder) -> EliminationOrder
  # Recompute the later-neighbor sets, which also validates the permutation.
  return EliminationOrder.from_order(g, e.order)


def check_peo(g, e):
  # type: (Graph, EliminationOrder) -> bool
  """
  Returns whether ``e`` is a perfect elimination order of ``g``. Uses the single-representative
  test: for each vertex, its later neighbors other than the earliest one must all be adjacent to
  that earliest one.
  """
  e = _as_elimination_order(g, e)
  pos = e.positions()
  for v in e.order:
    later = e.later[v]
    if not later:
      continue
    first = min(util.iter_bits(later), key=lambda u: pos[u])
    if later & ~(1 << first) & ~g.adj[first]:
      return False
  return True


def check_peo_bruteforce(g, e):
  # type: (Graph, EliminationOrder) -> bool
  """Same as ``check_peo()``, testing every pair of later neighbors."""
  e = _as_elimination_order(g, e)
  for v in e.order:
    members = list(util.iter_bits(e.later[v]))
    for i, a in enumerate(members):
      for b in members[i + 1:]:
        if not g.adj[a] >> b & 1:
          return False
  return True


def is_chordal(g):
  # type: (Graph) -> Optional[EliminationOrder]
  """Returns a perfect elimination order if ``g`` is chordal, or None."""
  e = mcs_order(g)
  return e if check_peo(g, e) else None


def is_chordal_bruteforce(g):
  # type: (Graph) -> bool
  """
  Returns whether ``g`` is chordal by looking for an induced cycle on 4 or more vertices: a vertex
  set whose induced subgraph is connected and 2-regular. Exponential; meant for small graphs.
  """
  _check_nonempty(g)
  for w in util.iter_subsets(g.n, min_size=4):
    if all(util.popcount(g.adj[v] & w) == 2 for v in util.iter_bits(w)) \
        and count_components(g, w) == 1:
      return False
  return True


def clique_vector_chordal(g, e):
  # type: (Graph, EliminationOrder) -> CliqueVector
  """
  Counts cliques along a perfect elimination order: each clique is counted once at its earliest
  vertex ``v``, which gives ``c_j = sum over v of C(m_v, j-1)`` with ``m_v`` the number of later
  neighbors of ``v``. Raises ValueError if ``e`` is not a perfect elimination order of ``g``.
  """
  _check_nonempty(g)
  if not check_peo(g, e):
    raise ValueError("Order %s is not a perfect elimination order" % list(e.order))
  e = _as_elimination_order(g, e)
  sizes = [util.popcount(later) for later in e.later]
  d = max(sizes) + 1
  return CliqueVector(sum(binomial(m, j) for m in sizes) for j in range(d))


def local_connectivity(g, s, t):
  # type: (Graph, int, int) -> int
  """
  Returns the maximum number of internally vertex-disjoint paths between the non-adjacent vertices
  ``s`` and ``t``. By Menger's theorem this is also the size of a smallest vertex set separating
  them. Computed as a unit-capacity max flow on the split-vertex network, where vertex ``v``
  becomes an arc ``2v -> 2v+1`` of capacity 1.
  """
  if s == t or g.has_edge(s, t):
    raise ValueError("local_connectivity() needs distinct non-adjacent vertices, got %s, %s" % (s, t))
  big = g.n
  capacity = {}  # type: Dict[tuple, int]
  arcs = [[] for _ in range(2 * g.n)]  # type: List[List[int]]

  def add_arc(a, b, cap):
    # type: (int, int, int) -> None
    if (a, b) not in capacity:
      arcs[a].append(b)
      arcs[b].append(a)
      capacity[(a, b)] = 0
      capacity.setdefault((b, a), 0)
    capacity[(a, b)] += cap

  for v in range(g.n):
    add_arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u in util.iter_bits(g.adj[v]):
      add_arc(2 * v + 1, 2 * u, big)

  source, sink = 2 * s + 1, 2 * t
  flow = 0
  while True:
    parent = {source: source}
    queue = deque([source])
    while queue and sink not in parent:
      a = queue.popleft()
      for b in arcs[a]:
        if b not in parent and capacity[(a, b)] > 0:
          parent[b] = a
          queue.append(b)
    if sink not in parent:
      return flow
    b = sink
    while b != source:
      a = parent[b]
      capacity[(a, b)] -= 1
      capacity[(b, a)] += 1
      b = a
    flow += 1


def connectivity(g, classical=False):
  # type: (Graph, bool) -> int
  """
  Returns the connectivity number of ``g``: the largest k such that ``g`` has at least k vertices
  and removing fewer than k vertices leaves it connected. ``K_n`` gives n, or ``n - 1`` with
  ``classical=True``. Other graphs give the minimum local connectivity over non-adjacent pairs,
  which is 0 for a disconnected graph.

  Only pairs whose first vertex is among the first ``k + 1`` vertices need checking, where ``k`` is
  the best bound so far: some vertex among them lies outside a minimum separator.
  """
  _check_nonempty(g)
  if g.is_complete():
    return g.n - 1 if classical else g.n
  best = g.n - 1
  i = 0
  while i <= best and i < g.n:
    for j in range(i + 1, g.n):
      if not g.adj[i] >> j & 1:
        best = min(best, local_connectivity(g, i, j))
    i += 1
  return best


MAX_BRUTEFORCE_VERTICES = 10


def connectivity_bruteforce(g, classical=False):
  # type: (Graph, bool) -> int
  """
  Same as ``connectivity()``, computed from the definition by removing every vertex set in order
  of increasing size until the rest is disconnected.
  """
  if not 1 <= g.n <= MAX_BRUTEFORCE_VERTICES:
    raise ValueError("connectivity_bruteforce() supports 1 <= n <= %s, got %s" % (
      MAX_BRUTEFORCE_VERTICES, g.n))
  full = g.vertex_mask
  for removed in util.iter_subsets(g.n, min_size=0, max_size=g.n - 1):
    if count_components(g, full & ~removed) != 1:
      return util.popcount(removed)
  return g.n - 1 if classical else g.n
