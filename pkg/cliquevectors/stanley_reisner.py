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
Graded Betti numbers of the face ring of a clique complex, computed combinatorially.

Hochster's formula gives ``beta_{i,j} = sum over vertex sets W with |W| = j of
dim H_{j-i-1}(clique complex of G_W)``, with reduced homology over the rationals. The face ring
itself is never built. On the linear strand ``j = i + 1`` only ``H_0`` contributes, so
``beta_{i,i+1}`` just counts the extra components of the induced subgraphs on ``i + 1`` vertices.
"""

import functools
from typing import Any, Dict, Iterable, List, Optional, Tuple

from . import util
from .graph import Graph, count_components, induced_subgraph_mask, iter_cliques

MAX_HOMOLOGY_VERTICES = 10
MAX_STRAND_VERTICES = 24
MAX_TABLE_VERTICES = 8


class HomologyProfile(tuple):
  """
  Ranks of the reduced homology groups of a clique complex over the rationals: entry ``q`` is
  ``dim H_q`` for ``q`` from 0 up to the dimension of the complex.
  """
  __slots__ = ()

  def rank(self, q):
    # type: (int) -> int
    """Returns ``dim H_q``, which is 0 above the dimension of the complex."""
    return self[q] if 0 <= q < len(self) else 0

  def reduced_euler_characteristic(self):
    # type: () -> int
    return sum((-1) ** q * h for q, h in enumerate(self))

  def __repr__(self):
    # type: () -> str
    return 'HomologyProfile(%s)' % list(self)


def _faces_by_dimension(g):
  # type: (Graph) -> List[List[int]]
  """Returns the cliques of ``g`` as bitsets, grouped by dimension (size - 1) and sorted."""
  faces = []  # type: List[List[int]]
  for clique in iter_cliques(g):
    q = util.popcount(clique) - 1
    while len(faces) <= q:
      faces.append([])
    faces[q].append(clique)
  for group in faces:
    group.sort()
  return faces


def _boundary_rank(faces, facets_below):
  # type: (List[int], List[int]) -> int
  """Rank of the simplicial boundary map from ``faces`` to the faces one dimension lower."""
  row_of = {face: i for i, face in enumerate(facets_below)}
  rows = [[0] * len(faces) for _ in facets_below]
  for col, face in enumerate(faces):
    for i, v in enumerate(util.iter_bits(face)):
      rows[row_of[face ^ (1 << v)]][col] = -1 if i % 2 else 1
  return util.exact_rank(rows, len(faces))


@functools.lru_cache(maxsize=1 << 16)
def reduced_homology_ranks(g):
  # type: (Graph) -> HomologyProfile
  """
  Returns the reduced homology ranks of the clique complex of ``g``, for ``1 <= n <= 10``.

  The boundary map on vertices (to the empty face) has rank 1, and on edges it has rank
  ``n - components``, so only maps from triangles upwards need matrices. Every result is checked
  against the reduced Euler characteristic and the component count before it is returned.
  Results are cached per graph.
  """
  if not 1 <= g.n <= MAX_HOMOLOGY_VERTICES:
    raise ValueError("reduced_homology_ranks() supports 1 <= n <= %s, got %s" % (
      MAX_HOMOLOGY_VERTICES, g.n))
  faces = _faces_by_dimension(g)
  top = len(faces) - 1
  components = count_components(g)

  ranks = [0] * (top + 2)
  ranks[0] = 1
  if top >= 1:
    ranks[1] = g.n - components
  for q in range(2, top + 1):
    ranks[q] = _boundary_rank(faces[q], faces[q - 1])

  profile = HomologyProfile(len(faces[q]) - ranks[q] - ranks[q + 1] for q in range(top + 1))
  _check_homology(g, faces, components, profile)
  return profile


def _check_homology(g, faces, components, profile):
  # type: (Graph, List[List[int]], int, HomologyProfile) -> None
  euler = sum((-1) ** q * len(group) for q, group in enumerate(faces)) - 1
  if euler != profile.reduced_euler_characteristic():
    raise AssertionError("Euler-Poincare mismatch for %s: faces give %s, homology gives %s" % (
      g, euler, profile.reduced_euler_characteristic()))
  if any(h < 0 for h in profile):
    raise AssertionError("Negative homology rank for %s: %r" % (g, profile))
  if profile.rank(0) != components - 1:
    raise AssertionError("H_0 of %s has rank %s but the graph has %s components" % (
      g, profile.rank(0), components))


class BettiTable:
  """
  Sparse table of graded Betti numbers ``beta_{i,j}`` of the face ring of a complex on ``n``
  vertices. Only positive entries are stored, and ``beta_{0,0} = 1`` is always present.

  ``str()`` renders it the way Macaulay2 does: column ``i`` is the homological degree and row
  ``j - i`` the shift, with zeros shown as ``.``.
  """
  def __init__(self, n, entries=None):
    # type: (int, Optional[Iterable[Tuple[Tuple[int, int], int]]]) -> None
    self._n = n
    self._entries = {(0, 0): 1}  # type: Dict[Tuple[int, int], int]
    for (i, j), value in (entries or ()):
      if (i, j) != (0, 0):
        self.add(i, j, value)

  @property
  def n(self):
    # type: () -> int
    """Number of vertices of the complex."""
    return self._n

  def add(self, i, j, value):
    # type: (int, int, int) -> None
    """Adds ``value`` to ``beta_{i,j}``."""
    if value < 0:
      raise ValueError("Betti numbers are nonnegative, got %s at (%s, %s)" % (value, i, j))
    if value == 0:
      return
    if i < 0 or j < i or j > self._n or i >= self._n:
      raise ValueError("No Betti number at (%s, %s) for n=%s" % (i, j, self._n))
    self._entries[(i, j)] = self._entries.get((i, j), 0) + value

  def __getitem__(self, key):
    # type: (Tuple[int, int]) -> int
    return self._entries.get(key, 0)

  def items(self):
    # type: () -> List[Tuple[Tuple[int, int], int]]
    """Nonzero entries as ``((i, j), value)`` pairs sorted by ``(i, j)``."""
    return sorted(self._entries.items())

  def __eq__(self, other):
    # type: (object) -> bool
    return isinstance(other, BettiTable) and (self._n, self._entries) == (other._n, other._entries)

  def __ne__(self, other):
    # type: (object) -> bool
    return not self == other

  __hash__ = None  # type: ignore

  def __repr__(self):
    # type: () -> str
    return 'BettiTable(%s, %s)' % (self._n, dict(self.items()))

  def projective_dimension(self):
    # type: () -> int
    """The largest homological degree with a nonzero entry."""
    return max(i for i, j in self._entries)

  def depth(self, n=None):
    # type: (Optional[int]) -> int
    """``n - pd`` by the Auslander-Buchsbaum formula; ``n`` defaults to the table's own."""
    return (self._n if n is None else n) - self.projective_dimension()

  def regularity(self):
    # type: () -> int
    return max(j - i for i, j in self._entries)

  def linear_strand(self):
    # type: () -> Dict[int, int]
    """``{i: beta_{i,i+1}}`` for ``i = 1..n-1``, zeros included."""
    return {i: self[(i, i + 1)] for i in range(1, self._n)}

  def has_two_linear_resolution(self):
    # type: () -> bool
    """True if every nonzero entry other than ``beta_{0,0}`` has ``j - i = 1``."""
    return all(j - i == 1 for (i, j) in self._entries if (i, j) != (0, 0))

  def to_json(self):
    # type: () -> Dict[str, Any]
    return {"n": self._n, "entries": [[i, j, value] for (i, j), value in self.items()]}

  @classmethod
  def from_json(cls, data):
    # type: (Dict[str, Any]) -> BettiTable
    return cls(data["n"], (((i, j), value) for i, j, value in data["entries"]))

  def __str__(self):
    # type: () -> str
    pd = self.projective_dimension()
    reg = self.regularity()
    columns = range(pd + 1)
    totals = [sum(v for (i, j), v in self._entries.items() if i == col) for col in columns]
    cells = [[str(self[(col, col + row)]) if self[(col, col + row)] else '.' for col in columns]
             for row in range(reg + 1)]
    width = max(len(str(x)) for x in list(columns) + totals)
    label_width = max(6, len(str(reg)) + 1)

    def line(label, values):
      # type: (str, Iterable[Any]) -> str
      return ' '.join([label.rjust(label_width)] + [str(v).rjust(width) for v in values])

    lines = [line('', columns), line('total:', totals)]
    lines.extend(line('%s:' % row, cells[row]) for row in range(reg + 1))
    return '\n'.join(lines)


def _check_strand_size(g):
  # type: (Graph) -> None
  if not 1 <= g.n <= MAX_STRAND_VERTICES:
    raise ValueError("Linear strand supports 1 <= n <= %s, got %s" % (MAX_STRAND_VERTICES, g.n))


def _strand_entry(g, i):
  # type: (Graph, int) -> int
  return sum(count_components(g, w) - 1 for w in util.masks_of_size(g.n, i + 1))


def betti_linear_strand(g):
  # type: (Graph) -> Dict[int, int]
  """
  Returns ``{i: beta_{i,i+1}}`` for ``i = 1..n-1``: the number of extra components summed over all
  induced subgraphs on ``i + 1`` vertices. Uses component counting only, so it handles up to 24
  vertices.
  """
  _check_strand_size(g)
  return {i: _strand_entry(g, i) for i in range(1, g.n)}


def connectivity_from_betti(g):
  # type: (Graph) -> int
  """
  Returns the largest ``k <= n`` with ``beta_{i,i+1} = 0`` for all ``i >= n - k``. Scans the strand
  from the top and stops at the first nonzero entry.
  """
  _check_strand_size(g)
  for i in range(g.n - 1, 0, -1):
    if _strand_entry(g, i):
      return g.n - i - 1
  return g.n


def betti_table_full(g):
  # type: (Graph) -> BettiTable
  """
  Returns every graded Betti number of the face ring of the clique complex of ``g`` (for
  ``1 <= n <= 8``), summing reduced homology over all nonempty induced subgraphs.
  """
  if not 1 <= g.n <= MAX_TABLE_VERTICES:
    raise ValueError("betti_table_full() supports 1 <= n <= %s, got %s" % (MAX_TABLE_VERTICES, g.n))
  table = BettiTable(g.n)
  for w in util.iter_subsets(g.n, min_size=2):
    j = util.popcount(w)
    for q, h in enumerate(reduced_homology_ranks(induced_subgraph_mask(g, w))):
      if h:
        table.add(j - q - 1, j, h)
  return table


def projective_dimension(t):
  # type: (BettiTable) -> int
  return t.projective_dimension()


def depth(t, n=None):
  # type: (BettiTable, Optional[int]) -> int
  return t.depth(n)


def has_two_linear_resolution(t):
  # type: (BettiTable) -> bool
  return t.has_two_linear_resolution()
