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
Text formats for graphs.

``edgelist``: a first line holding ``n``, then one ``u v`` pair per line, 0-indexed. For example,
the path on three vertices is ``"3\\n0 1\\n1 2\\n"``.

``graph6``: the bit-packed upper-triangle encoding of nauty, read and written through networkx.

Both parsers skip blank lines and lines starting with ``#``.
"""

from typing import List, Tuple

import networkx

from .graph import MAX_VERTICES, Graph, from_networkx, to_networkx

FORMATS = ('edgelist', 'graph6')

_GRAPH6_HEADER = '>>graph6<<'


class GraphFormatError(ValueError):
  """Raised when text can't be parsed as a graph in the requested format."""


def _content_lines(text):
  # type: (str) -> List[Tuple[int, str]]
  """Returns (1-based line number, stripped line) for the lines that carry data."""
  result = []
  for lineno, line in enumerate(text.splitlines(), 1):
    line = line.strip()
    if line and not line.startswith('#'):
      result.append((lineno, line))
  return result


def parse_graph(text, fmt='edgelist'):
  # type: (str, str) -> Graph
  """
  Parses ``text`` in the given format (``'edgelist'`` or ``'graph6'``). Raises GraphFormatError
  with the offending line for malformed input.
  """
  if fmt == 'edgelist':
    return parse_edgelist(text)
  if fmt == 'graph6':
    return parse_graph6(text)
  raise ValueError("Unknown graph format %r; expected one of %s" % (fmt, ', '.join(FORMATS)))


def format_graph(g, fmt='edgelist'):
  # type: (Graph, str) -> str
  """Inverse of ``parse_graph()``. The edge list is sorted and ends with a newline."""
  if fmt == 'edgelist':
    return format_edgelist(g)
  if fmt == 'graph6':
    return format_graph6(g) + '\n'
  raise ValueError("Unknown graph format %r; expected one of %s" % (fmt, ', '.join(FORMATS)))


def detect_format(text):
  # type: (str) -> str
  """
  Guesses the format of ``text``: an edge list starts with a line holding a single integer, which
  can't be the start of a graph6 string.
  """
  lines = _content_lines(text)
  if lines and lines[0][1].isdigit():
    return 'edgelist'
  return 'graph6'


def parse_edgelist(text):
  # type: (str) -> Graph
  lines = _content_lines(text)
  if not lines:
    raise GraphFormatError("Empty input: expected a vertex count on the first line")
  lineno, header = lines[0]
  try:
    n = int(header)
  except ValueError:
    raise GraphFormatError("Line %s: malformed header %r, expected a vertex count" % (lineno, header))
  if not 0 <= n <= MAX_VERTICES:
    raise GraphFormatError("Line %s: vertex count %s out of range 0..%s" % (lineno, n, MAX_VERTICES))

  adj = [0] * n
  for lineno, line in lines[1:]:
    fields = line.split()
    if len(fields) != 2:
      raise GraphFormatError("Line %s: expected 'u v', got %r" % (lineno, line))
    try:
      u, v = int(fields[0]), int(fields[1])
    except ValueError:
      raise GraphFormatError("Line %s: expected integer vertices, got %r" % (lineno, line))
    for x in (u, v):
      if not 0 <= x < n:
        raise GraphFormatError("Line %s: vertex %s out of range for n=%s" % (lineno, x, n))
    if u == v:
      raise GraphFormatError("Line %s: self-loop at vertex %s" % (lineno, u))
    if adj[u] >> v & 1:
      raise GraphFormatError("Line %s: duplicate edge %s-%s" % (lineno, min(u, v), max(u, v)))
    adj[u] |= 1 << v
    adj[v] |= 1 << u
  return Graph(n, tuple(adj))


def format_edgelist(g):
  # type: (Graph) -> str
  return ''.join(['%s\n' % g.n] + ['%s %s\n' % e for e in g.edges()])


def format_graph6(g):
  # type: (Graph) -> str
  """Returns the graph6 string for ``g``, without a header or trailing newline."""
  return networkx.to_graph6_bytes(to_networkx(g), header=False).decode('ascii').rstrip('\n')


def parse_graph6(text):
  # type: (str) -> Graph
  lines = _content_lines(text)
  if len(lines) != 1:
    raise GraphFormatError("Expected exactly one graph6 line, got %s" % len(lines))
  lineno, line = lines[0]
  if line.startswith(_GRAPH6_HEADER):
    line = line[len(_GRAPH6_HEADER):]
  # networkx only rejects bytes above 126.
  for ch in line:
    if not 63 <= ord(ch) <= 126:
      raise GraphFormatError("Line %s: invalid graph6 byte %r" % (lineno, ch))
  if not line:
    raise GraphFormatError("Line %s: missing graph6 vertex count" % lineno)

  try:
    nx_graph = networkx.from_graph6_bytes(line.encode('ascii'))
  except networkx.NetworkXError as e:
    raise GraphFormatError("Line %s: graph6 length mismatch: %s" % (lineno, e))
  except (IndexError, ValueError):
    raise GraphFormatError("Line %s: malformed graph6 size prefix %r" % (lineno, line[:8]))
  n = nx_graph.number_of_nodes()
  if n > MAX_VERTICES:
    raise GraphFormatError("Line %s: vertex count %s exceeds %s" % (lineno, n, MAX_VERTICES))
  return from_networkx(nx_graph)
