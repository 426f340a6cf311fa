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
Exact basis changes between clique vectors and b-vectors.

The b-vector of a clique vector ``(c_1, ..., c_d)`` is defined by the polynomial identity::

    sum(b_i * x**(i-1)) == sum(c_i * (x-1)**(i-1))

and a vector is the clique vector of a k-connected chordal graph exactly when its b-vector is
positive and starts with k ones. All arithmetic is done with Python ints, so it is exact for any
magnitude.
"""

import collections
import math
from typing import Iterable, Optional, Sequence


def binomial(n, k):
  # type: (int, int) -> int
  """Returns the binomial coefficient ``C(n, k)``, which is 0 when ``k > n``."""
  if n < 0 or k < 0:
    raise ValueError("binomial() needs nonnegative arguments, got (%s, %s)" % (n, k))
  return math.comb(n, k)


def _parse_entries(text):
  # type: (str) -> Sequence[int]
  parts = [p.strip() for p in text.strip().split(',')]
  if not parts or any(p == '' for p in parts):
    raise ValueError("Expected comma-separated integers, got %r" % text)
  try:
    return [int(p) for p in parts]
  except ValueError:
    raise ValueError("Expected comma-separated integers, got %r" % text)


class _IntVector(tuple):
  __slots__ = ()

  def __new__(cls, entries):
    # type: (Iterable[int]) -> _IntVector
    values = tuple(entries)
    if not values:
      raise ValueError("%s must have at least one entry" % cls.__name__)
    for x in values:
      if isinstance(x, bool) or not isinstance(x, int):
        raise ValueError("%s entries must be integers, got %r" % (cls.__name__, x))
    return super(_IntVector, cls).__new__(cls, values)

  @classmethod
  def parse(cls, text):
    # type: (str) -> _IntVector
    """Parses a comma-separated list of integers such as ``"10,14,11,3"``."""
    return cls(_parse_entries(text))

  @property
  def d(self):
    # type: () -> int
    """The length of the vector."""
    return len(self)

  def format(self):
    # type: () -> str
    return ','.join(str(x) for x in self)

  def is_positive(self):
    # type: () -> bool
    return all(x >= 1 for x in self)

  def __repr__(self):
    # type: () -> str
    return '%s(%s)' % (type(self).__name__, self.format())


class CliqueVector(_IntVector):
  """
  The sequence ``(c_1, ..., c_d)`` where ``c_i`` counts the cliques with ``i`` vertices and ``d``
  is the clique number. Entries are stored 0-based: ``c[0]`` is ``c_1``, the vertex count.
  """
  __slots__ = ()

  @property
  def n(self):
    # type: () -> int
    """The number of vertices, ``c_1``."""
    return self[0]


class BVector(_IntVector):
  """
  The image of a clique vector under the basis change above. Entries may be zero or negative when
  the input is not the clique vector of a chordal graph.
  """
  __slots__ = ()


def c_to_b(c):
  # type: (Sequence[int]) -> BVector
  """
  Returns the b-vector of ``c``: ``b_j = sum over i >= j of (-1)**(i-j) * C(i-1, j-1) * c_i``.
  """
  c = CliqueVector(c)
  d = len(c)
  return BVector(
    sum((-1) ** (i - j) * binomial(i, j) * c[i] for i in range(j, d))
    for j in range(d)
  )


def b_to_c(b):
  # type: (Sequence[int]) -> CliqueVector
  """
  Inverse of ``c_to_b()``: ``c_j = sum over i >= j of C(i-1, j-1) * b_i``.
  """
  b = BVector(b)
  d = len(b)
  return CliqueVector(sum(binomial(i, j) * b[i] for i in range(j, d)) for j in range(d))


class Verdict(collections.namedtuple('Verdict', 'valid reason b')):
  """
  Result of ``validate()``:

  - [0] .valid   True if the clique vector passes the criterion for the given k.
  - [1] .reason  None when valid, otherwise a message naming the first violated condition.
  - [2] .b       The b-vector that was checked.
  """
  __slots__ = ()

  def __bool__(self):
    # type: () -> bool
    return bool(self.valid)

  def __str__(self):
    # type: () -> str
    if self.valid:
      return "valid (b = %s)" % self.b.format()
    return "invalid: %s" % self.reason


def validate(c, k):
  # type: (Sequence[int], int) -> Verdict
  """
  Checks whether ``c`` is the clique vector of a k-connected chordal graph: its b-vector must be
  positive with ``b_1 = ... = b_k = 1``, and ``k`` can't exceed the length ``d``. On failure the
  verdict reports the first violated condition.
  """
  if k < 0:
    raise ValueError("k must be nonnegative, got %s" % k)
  b = c_to_b(c)
  reason = None  # type: Optional[str]
  if k > len(b):
    reason = "k = %s exceeds d = %s" % (k, len(b))
  else:
    for i, value in enumerate(b, 1):
      if value <= 0:
        reason = "b_%s = %s not positive" % (i, value)
        break
      if i <= k and value != 1:
        reason = "b_%s = %s ≠ 1" % (i, value)
        break
  return Verdict(reason is None, reason, b)
