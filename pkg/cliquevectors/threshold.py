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
Threshold graphs and their words over ``{S, D}``.

A threshold graph is built from the graph with no vertices by repeatedly adding a dominating
vertex (``S``) or an isolated vertex (``D``). Its word lists the operations with the last one
applied on the left, so the rightmost letter is the first operation and is always ``S``. Vertex
``i`` of the built graph is the one added by the ``i``-th letter counted from the right.

Cutting a word after every ``S`` gives the b-vector: ``DDDSSDSDDS`` splits as
``DDDS/S/DS/DDS`` and has b-vector ``(4, 1, 2, 3)``. That b-vector determines the clique vector,
which is how ``realize()`` turns a valid clique vector back into a graph.
"""

from typing import Iterator, List, Optional, Sequence, Tuple

from . import util
from .chordal import clique_vector_chordal, connectivity, is_chordal
from .graph import MAX_VERTICES, Graph, clique_vector_bruteforce
from .transform import BVector, CliqueVector, binomial, validate

BRUTEFORCE_CHECK_VERTICES = 16


class SDWord(str):
  """
  A nonempty string over ``S`` and ``D`` ending in ``S``. Raises ValueError on construction
  otherwise.
  """
  __slots__ = ()

  def __new__(cls, letters):
    # type: (str) -> SDWord
    letters = str(letters)
    if not letters:
      raise ValueError("SD-word must be nonempty")
    bad = set(letters) - {'S', 'D'}
    if bad:
      raise ValueError("SD-word %r has letters other than S and D: %s" % (letters, ''.join(sorted(bad))))
    if letters[-1] != 'S':
      raise ValueError("SD-word %r must end in S" % letters)
    return super(SDWord, cls).__new__(cls, letters)

  @property
  def clique_number(self):
    # type: () -> int
    """The number of ``S`` letters, which is the clique number of the word's graph."""
    return self.count('S')

  def subwords(self):
    # type: () -> List[str]
    """Splits the word after every ``S``."""
    return [part + 'S' for part in self[:-1].split('S')]

  def __repr__(self):
    # type: () -> str
    return 'SDWord(%s)' % str.__repr__(self)


class RealizationError(ValueError):
  """Raised by ``realize()`` for a clique vector that fails ``validate()``; carries its reason."""
  def __init__(self, reason):
    # type: (str) -> None
    super(RealizationError, self).__init__(reason)
    self.reason = reason


def word_to_graph(w):
  # type: (str) -> Graph
  """
  Builds the threshold graph of ``w`` by applying its letters from right to left, starting with
  the graph with no vertices. Words longer than 64 letters raise ValueError.
  """
  w = SDWord(w)
  if len(w) > MAX_VERTICES:
    raise ValueError("Word of length %s exceeds the %s-vertex limit" % (len(w), MAX_VERTICES))
  adj = []  # type: List[int]
  for letter in reversed(w):
    v = len(adj)
    if letter == 'S':
      adj = [a | (1 << v) for a in adj]
      adj.append(util.full_mask(v))
    else:
      adj.append(0)
  return Graph(len(adj), tuple(adj))


def graph_to_word(g):
  # type: (Graph) -> Optional[SDWord]
  """
  Returns the word of ``g`` if it is a threshold graph, or None. Peels off an isolated or a
  dominating vertex at each step, taking the highest-index candidate, so that
  ``graph_to_word(word_to_graph(w)) == w`` exactly.
  """
  if g.n == 0:
    raise ValueError("The graph with no vertices has no SD-word")
  remaining = g.vertex_mask
  letters = []
  while remaining:
    if remaining & (remaining - 1) == 0:
      letters.append('S')
      break
    chosen = None
    letter = ''
    for v in reversed(list(util.iter_bits(remaining))):
      neighbors = g.adj[v] & remaining
      if neighbors == 0:
        chosen, letter = v, 'D'
        break
      if neighbors == remaining & ~(1 << v):
        chosen, letter = v, 'S'
        break
    if chosen is None:
      return None
    letters.append(letter)
    remaining &= ~(1 << chosen)
  return SDWord(''.join(letters))


def word_to_bvector(w):
  # type: (str) -> BVector
  """Lengths of the pieces of ``w`` after cutting it after every ``S``."""
  return BVector(len(part) for part in SDWord(w).subwords())


def bvector_to_word(b):
  # type: (Sequence[int]) -> SDWord
  """Inverse of ``word_to_bvector()``: each entry ``b_i`` becomes ``b_i - 1`` D's and one S."""
  b = BVector(b)
  for i, value in enumerate(b, 1):
    if value <= 0:
      raise ValueError("b_%s = %s not positive; no SD-word has this b-vector" % (i, value))
  return SDWord(''.join('D' * (value - 1) + 'S' for value in b))


def word_is_k_connected(w, k):
  # type: (str, int) -> bool
  """A threshold graph is k-connected iff its word has at least k letters, the first k being S."""
  w = SDWord(w)
  if k < 0:
    raise ValueError("k must be nonnegative, got %s" % k)
  return k <= len(w) and 'D' not in w[:k]


def enumerate_bvectors(n, d, k):
  # type: (int, int, int) -> Iterator[BVector]
  """
  Yields, in lexicographic order, the positive vectors ``(b_1, ..., b_d)`` with sum ``n`` and
  ``b_1 = ... = b_k = 1``. Infeasible parameters give nothing.
  """
  if not (1 <= d <= n and 0 <= k <= d):
    return
  prefix = (1,) * k
  if k == d:
    if n == d:
      yield BVector(prefix)
    return
  for parts in _compositions(n - k, d - k):
    yield BVector(prefix + parts)


def _compositions(total, parts):
  # type: (int, int) -> Iterator[Tuple[int, ...]]
  """Compositions of ``total`` into ``parts`` positive parts, in lexicographic order."""
  if parts == 1:
    if total >= 1:
      yield (total,)
    return
  for first in range(1, total - parts + 2):
    for rest in _compositions(total - first, parts - 1):
      yield (first,) + rest


def count_threshold(n, d, k):
  # type: (int, int, int) -> int
  """
  Returns the number of k-connected threshold graphs on ``n`` vertices with clique number ``d``,
  which is ``C(n-k-1, d-k-1)``; when ``k == d`` only the complete graph qualifies.
  """
  if not (1 <= d <= n and 0 <= k <= d):
    return 0
  if k == d:
    return 1 if n == d else 0
  return binomial(n - k - 1, d - k - 1)


def enumerate_words(n):
  # type: (int) -> Iterator[SDWord]
  """Yields all ``2**(n-1)`` words of length ``n``, in lexicographic order (D before S)."""
  if n < 1:
    raise ValueError("Words have at least one letter, got n=%s" % n)
  for mask in range(1 << (n - 1)):
    prefix = ''.join('S' if mask >> (n - 2 - i) & 1 else 'D' for i in range(n - 1))
    yield SDWord(prefix + 'S')


def realize_word(c, k):
  # type: (Sequence[int], int) -> SDWord
  """
  Returns the word of the k-connected threshold graph with clique vector ``c``. Raises
  RealizationError with the validator's reason when ``c`` fails ``validate(c, k)``.
  """
  verdict = validate(c, k)
  if not verdict.valid:
    raise RealizationError(verdict.reason)
  return bvector_to_word(verdict.b)


def realize(c, k):
  # type: (Sequence[int], int) -> Graph
  """
  Returns a k-connected chordal graph with clique vector ``c``, namely the threshold graph of
  ``realize_word(c, k)``. The result is checked to be chordal, to have clique vector ``c`` and to
  be k-connected before it is returned. Raises ValueError when ``c_1`` exceeds 64.
  """
  c = CliqueVector(c)
  w = realize_word(c, k)
  if len(w) > MAX_VERTICES:
    raise ValueError("Realization of %s needs %s vertices, more than %s"
                     % (c.format(), len(w), MAX_VERTICES))
  g = word_to_graph(w)

  peo = is_chordal(g)
  if peo is None:
    raise AssertionError("Realization of %s is not chordal" % c.format())
  if g.n <= BRUTEFORCE_CHECK_VERTICES:
    got = clique_vector_bruteforce(g)
  else:
    got = clique_vector_chordal(g, peo)
  if got != c:
    raise AssertionError("Realization of %s has clique vector %s" % (c.format(), got.format()))
  kappa = connectivity(g)
  if kappa < k:
    raise AssertionError("Realization of %s is only %s-connected, wanted %s" % (c.format(), kappa, k))
  return g
