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
Small helpers shared by the graph and algebra modules: vertex sets as int bitsets, streams of
subsets, and exact matrix rank.
"""

from typing import Iterable, Iterator, List, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def mask_of(vertices):
  # type: (Iterable[int]) -> int
  """Returns the bitset of the given vertex indices."""
  mask = 0
  for v in vertices:
    if v < 0:
      raise ValueError("Vertex index must be nonnegative, got %s" % v)
    mask |= 1 << v
  return mask


def full_mask(n):
  # type: (int) -> int
  """Returns the bitset of all vertices ``0..n-1``."""
  return (1 << n) - 1


def popcount(mask):
  # type: (int) -> int
  return bin(mask).count('1')


def iter_bits(mask):
  # type: (int) -> Iterator[int]
  """
  Yields the indices of the set bits of ``mask`` in increasing order, e.g. ``iter_bits(0b1010)``
  yields 1 and 3.
  """
  while mask:
    low = mask & -mask
    yield low.bit_length() - 1
    mask ^= low


def masks_of_size(n, size):
  # type: (int, int) -> Iterator[int]
  """
  Yields every subset of ``0..n-1`` with exactly ``size`` elements, as bitsets in increasing
  numeric order (Gosper's hack).
  """
  if size == 0:
    yield 0
    return
  if size > n:
    return
  m = (1 << size) - 1
  limit = 1 << n
  while m < limit:
    yield m
    c = m & -m
    r = m + c
    m = (((r ^ m) >> 2) // c) | r


def iter_subsets(n, min_size=1, max_size=None):
  # type: (int, int, Optional[int]) -> Iterator[int]
  """
  Yields subsets of ``0..n-1`` as bitsets ordered by increasing size, then numerically. By default
  the empty set is skipped.
  """
  top = n if max_size is None else min(n, max_size)
  for size in range(min_size, top + 1):
    for m in masks_of_size(n, size):
      yield m


def exact_rank(rows, ncols):
  # type: (Sequence[Sequence[int]], int) -> int
  """
  Returns the rank over the rationals of an integer matrix given as a list of rows. The matrix is
  converted to a sympy ``DomainMatrix`` over QQ, so the result is exact.
  """
  if not rows or not ncols:
    return 0
  elements = [[QQ(x) for x in row] for row in rows]  # type: List[List]
  return DomainMatrix(elements, (len(rows), ncols), QQ).rank()
