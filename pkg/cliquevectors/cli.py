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
Command-line entry point. Each subcommand wraps one library operation; ``--json`` switches any of
them to a machine-readable rendering of the same data.

Exit codes: 0 on success, 1 when a vector is rejected or a verification finds a counterexample,
2 for usage errors and malformed input.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from .chordal import clique_vector_chordal, connectivity, is_chordal
from .graph import Graph, clique_vector_bruteforce
from .graph_io import FORMATS, detect_format, format_graph, format_graph6, parse_graph, parse_graph6
from .stanley_reisner import betti_linear_strand, betti_table_full, connectivity_from_betti
from .threshold import (RealizationError, SDWord, bvector_to_word, count_threshold,
                        enumerate_bvectors, graph_to_word, realize, realize_word, word_to_bvector,
                        word_to_graph)
from .transform import BVector, CliqueVector, b_to_c, c_to_b, validate
from .verify import THEOREMS, verify

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2

# Graph sweeps grow as 2^(n(n-1)/2).
DEFAULT_NMAX = 6


def vector(text):
  # type: (str) -> List[int]
  """Argument type for comma-separated integer vectors such as ``10,14,11,3``."""
  return list(CliqueVector.parse(text))


def _emit(args, data, human):
  # type: (argparse.Namespace, Dict[str, Any], Callable[[], str]) -> None
  if args.json:
    print(json.dumps(data, indent=2, sort_keys=True))
  else:
    print(human())


def _read_graph(args):
  # type: (argparse.Namespace) -> Graph
  if args.g6 is not None:
    return parse_graph6(args.g6)
  if args.graph is None:
    raise ValueError("No graph given: pass a file path, '-' for stdin, or --g6 STRING")
  if args.graph == '-':
    text = sys.stdin.read()
  else:
    with open(args.graph, encoding='utf-8') as f:
      text = f.read()
  fmt = detect_format(text) if args.format == 'auto' else args.format
  return parse_graph(text, fmt)


def _add_graph_input(p, positional=True):
  # type: (argparse.ArgumentParser, bool) -> None
  if positional:
    p.add_argument('graph', nargs='?', metavar='GRAPH',
                   help="File holding the graph, or '-' for stdin")
  else:
    p.add_argument('--graph', metavar='GRAPH', help="File holding the graph, or '-' for stdin")
  p.add_argument('--g6', metavar='STRING', help="Graph given inline as a graph6 string")
  p.add_argument('--format', choices=('auto',) + FORMATS, default='auto',
                 help="Format of the graph file (default: detect)")


def cmd_chordal(args):
  # type: (argparse.Namespace) -> int
  g = _read_graph(args)
  peo = is_chordal(g)
  order = list(peo.order) if peo is not None else None
  _emit(args, {"chordal": peo is not None, "peo": order},
        lambda: "chordal; perfect elimination order: %s" % ' '.join(map(str, order))
        if order is not None else "not chordal")
  return EXIT_OK


def cmd_cliques(args):
  # type: (argparse.Namespace) -> int
  g = _read_graph(args)
  peo = is_chordal(g)
  if peo is not None:
    c, method = clique_vector_chordal(g, peo), 'peo'
  else:
    c, method = clique_vector_bruteforce(g), 'enumeration'
  log.info("Counted cliques of a graph on %s vertices by %s", g.n, method)
  _emit(args, {"clique_vector": list(c), "method": method}, c.format)
  return EXIT_OK


def cmd_connectivity(args):
  # type: (argparse.Namespace) -> int
  kappa = connectivity(_read_graph(args), classical=args.classical)
  _emit(args, {"connectivity": kappa, "convention": "classical" if args.classical else "removal"},
        lambda: str(kappa))
  return EXIT_OK


def cmd_c2b(args):
  # type: (argparse.Namespace) -> int
  b = c_to_b(args.vector)
  _emit(args, {"b": list(b)}, b.format)
  return EXIT_OK


def cmd_b2c(args):
  # type: (argparse.Namespace) -> int
  c = b_to_c(args.vector)
  _emit(args, {"c": list(c)}, c.format)
  return EXIT_OK


def cmd_validate(args):
  # type: (argparse.Namespace) -> int
  verdict = validate(args.vector, args.k)
  _emit(args, {"valid": verdict.valid, "reason": verdict.reason, "b": list(verdict.b)},
        lambda: str(verdict))
  return EXIT_OK if verdict.valid else EXIT_REJECTED


def cmd_realize(args):
  # type: (argparse.Namespace) -> int
  try:
    word = realize_word(args.vector, args.k)
  except RealizationError as e:
    _emit(args, {"valid": False, "reason": e.reason}, lambda: "invalid: %s" % e.reason)
    return EXIT_REJECTED
  g = realize(args.vector, args.k)
  _emit(args, {"word": str(word), "n": g.n, "edges": [list(e) for e in g.edges()],
               "graph6": format_graph6(g)},
        lambda: "# word: %s\n%s" % (word, format_graph(g, args.output_format).rstrip('\n')))
  return EXIT_OK


def _word_from_args(args):
  # type: (argparse.Namespace) -> Optional[SDWord]
  if args.value is not None:
    if args.g6 is not None or args.graph is not None:
      raise ValueError("Give either a word or b-vector, or a graph, not both")
    if set(args.value) <= {'S', 'D'}:
      return SDWord(args.value)
    return bvector_to_word(BVector.parse(args.value))
  return graph_to_word(_read_graph(args))


def cmd_word(args):
  # type: (argparse.Namespace) -> int
  word = _word_from_args(args)
  if word is None:
    _emit(args, {"threshold": False}, lambda: "not a threshold graph")
    return EXIT_REJECTED
  g = word_to_graph(word)
  b = word_to_bvector(word)
  c = b_to_c(b)
  _emit(args, {"threshold": True, "word": str(word), "b": list(b), "c": list(c),
               "graph6": format_graph6(g)},
        lambda: "word: %s\nb: %s\nc: %s\ngraph6: %s" % (word, b.format(), c.format(),
                                                        format_graph6(g)))
  return EXIT_OK


def cmd_enumerate(args):
  # type: (argparse.Namespace) -> int
  bvectors = list(enumerate_bvectors(args.n, args.d, args.k))
  if len(bvectors) != count_threshold(args.n, args.d, args.k):
    raise AssertionError("Enumerated %s b-vectors, formula gives %s" % (
      len(bvectors), count_threshold(args.n, args.d, args.k)))
  _emit(args, {"n": args.n, "d": args.d, "k": args.k, "bvectors": [list(b) for b in bvectors],
               "count": len(bvectors)},
        lambda: '\n'.join([b.format() for b in bvectors] + ["# count: %s" % len(bvectors)]))
  return EXIT_OK


def cmd_betti(args):
  # type: (argparse.Namespace) -> int
  g = _read_graph(args)
  if args.full:
    table = betti_table_full(g)
    data = table.to_json()
    data.update(projective_dimension=table.projective_dimension(), depth=table.depth(),
                two_linear=table.has_two_linear_resolution())
    _emit(args, data, lambda: "%s\n\npd: %s\ndepth: %s" % (
      table, table.projective_dimension(), table.depth()))
    return EXIT_OK

  strand = betti_linear_strand(g)
  kappa = connectivity_from_betti(g)
  _emit(args, {"n": g.n, "linear_strand": {str(i): v for i, v in strand.items()},
               "connectivity": kappa},
        lambda: '\n'.join(["beta_%s,%s = %s" % (i, i + 1, v) for i, v in strand.items()] +
                          ["connectivity: %s" % kappa]))
  return EXIT_OK


def cmd_verify(args):
  # type: (argparse.Namespace) -> int
  n_max = args.nmax if args.nmax is not None else min(DEFAULT_NMAX, THEOREMS[args.theorem])
  report = verify(args.theorem, n_max, jobs=args.jobs)
  data = report.to_json()
  if args.output:
    with open(args.output, 'w', encoding='utf-8') as f:
      json.dump(data, f, indent=2, sort_keys=True)
      f.write('\n')

  def human():
    # type: () -> str
    lines = ["%s n<=%s: %s" % (report.theorem, report.n_max, 'pass' if report.passed else 'FAIL'),
             "scanned: %s" % report.scanned]
    lines.extend("%s: %s" % item for item in sorted(report.details.items()))
    lines.extend("counterexample %s: %s" % c for c in report.counterexamples)
    lines.extend("note: %s" % note for note in report.notes)
    lines.append("elapsed: %.2fs" % report.elapsed)
    return '\n'.join(lines)

  _emit(args, data, human)
  return EXIT_OK if report.passed else EXIT_REJECTED


def build_parser():
  # type: () -> argparse.ArgumentParser
  common = argparse.ArgumentParser(add_help=False)
  common.add_argument('--json', action='store_true', help="Print JSON instead of text")
  common.add_argument('-v', '--verbose', action='count', default=0,
                      help="Log progress to stderr; repeat for debug output")

  parser = argparse.ArgumentParser(
    prog='cliquevectors',
    description="Clique vectors of k-connected chordal graphs.")
  subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
  subparsers.required = True

  def add(name, func, help_text):
    # type: (str, Callable[[argparse.Namespace], int], str) -> argparse.ArgumentParser
    p = subparsers.add_parser(name, parents=[common], help=help_text, description=help_text)
    p.set_defaults(func=func)
    return p

  p = add('chordal', cmd_chordal, "Test chordality and print a perfect elimination order")
  _add_graph_input(p)

  p = add('cliques', cmd_cliques, "Print the clique vector of a graph")
  _add_graph_input(p)

  p = add('connectivity', cmd_connectivity, "Print the vertex connectivity of a graph")
  _add_graph_input(p)
  p.add_argument('--classical', action='store_true',
                 help="Report n-1 rather than n for the complete graph K_n")

  p = add('c2b', cmd_c2b, "Transform a clique vector to its b-vector")
  p.add_argument('vector', type=vector, metavar='C')

  p = add('b2c', cmd_b2c, "Transform a b-vector to its clique vector")
  p.add_argument('vector', type=vector, metavar='B')

  p = add('validate', cmd_validate,
          "Check whether C is the clique vector of a k-connected chordal graph")
  p.add_argument('vector', type=vector, metavar='C')
  p.add_argument('k', type=int)

  p = add('realize', cmd_realize, "Build a k-connected chordal graph with clique vector C")
  p.add_argument('vector', type=vector, metavar='C')
  p.add_argument('k', type=int)
  p.add_argument('--output-format', choices=FORMATS, default='edgelist',
                 help="Format of the printed graph (default: edgelist)")

  p = add('word', cmd_word, "Convert between SD-words, b-vectors and threshold graphs")
  p.add_argument('value', nargs='?', metavar='WORD_OR_B',
                 help="An SD-word such as DSS, or a b-vector such as 2,1")
  _add_graph_input(p, positional=False)

  p = add('enumerate', cmd_enumerate, "List the b-vectors in B(n, d, k) and count them")
  p.add_argument('n', type=int)
  p.add_argument('d', type=int)
  p.add_argument('k', type=int)

  p = add('betti', cmd_betti, "Print the linear strand of the Betti table of the clique complex")
  _add_graph_input(p)
  p.add_argument('--full', action='store_true', help="Print the whole Betti table (n <= 8)")

  p = add('verify', cmd_verify, "Check a theorem over all small graphs")
  p.add_argument('theorem', choices=list(THEOREMS))
  p.add_argument('--nmax', type=int, help="Largest vertex count (default: %s)" % DEFAULT_NMAX)
  p.add_argument('--jobs', type=int, default=1, help="Worker processes (default: 1)")
  p.add_argument('--output', metavar='FILE', help="Also write the JSON report to FILE")

  return parser


def main(argv=None):
  # type: (Optional[List[str]]) -> int
  args = build_parser().parse_args(argv)
  level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
  logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
  try:
    return args.func(args)
  except (ValueError, OSError) as e:
    print("error: %s" % e, file=sys.stderr)
    return EXIT_USAGE
