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
Exhaustive checks of the clique vector characterization and the homological facts behind it,
over every labeled graph (or every word, or every parameter triple) up to a size bound.

Each theorem has a per-item check that returns None or a diagnostic string. A sweep runs the check
over all items, optionally split by edge-mask range across worker processes, and collects a
``VerificationReport``. Every counterexample records a subject (a graph6 string, an SD-word, or
a parameter string such as ``b=1,3;k=1``) that ``replay()`` re-checks on its own.
"""

import collections
import logging
import multiprocessing
import time
from typing import Any, Callable, Counter, Dict, Iterable, Iterator, List, Optional, Tuple

from .chordal import (clique_vector_chordal, connectivity, connectivity_bruteforce, is_chordal,
                      is_chordal_bruteforce)
from .graph import (Graph, add_isolated, clique_vector_bruteforce, cone, enumerate_graphs,
                    graph_count)
from .graph_io import format_graph6, parse_graph6
from .stanley_reisner import betti_table_full, connectivity_from_betti
from .threshold import (SDWord, count_threshold, enumerate_bvectors, enumerate_words,
                        graph_to_word, realize, word_is_k_connected, word_to_bvector,
                        word_to_graph)
from .transform import BVector, b_to_c, validate

log = logging.getLogger(__name__)

# Theorem id -> largest supported n_max.
THEOREMS = collections.OrderedDict([
  ('main', 8),
  ('froberg', 6),
  ('betti', 6),
  ('counting', 9),
  ('threshold', 8),
  ('cone', 6),
])

MAX_STORED_COUNTEREXAMPLES = 100

REMOVAL_CONVENTION_NOTE = (
  "Connectivity uses the removal convention: a graph is k-connected if it has at least k "
  "vertices and stays connected after removing fewer than k of them, so K_n is n-connected.")
CLASSICAL_DEPTH_NOTE = (
  "For complete graphs the depth identity depth = kappa + 1 holds only with the classical "
  "value kappa(K_n) = n - 1, and is checked that way; the formula from Betti numbers gives n.")


class Counterexample(collections.namedtuple('Counterexample', 'subject diagnostic')):
  """
  - [0] .subject     graph6 string, SD-word, or parameter string identifying the failing item.
  - [1] .diagnostic  What went wrong.
  """
  __slots__ = ()

  def to_json(self):
    # type: () -> Dict[str, str]
    return {"subject": self.subject, "diagnostic": self.diagnostic}


class VerificationReport:
  """
  Outcome of one sweep. It passes iff no counterexample was found. Reports from partitions of a
  sweep combine with ``merge()``, which is associative and, apart from the order of stored
  counterexamples, order-independent.
  """
  def __init__(self, theorem, n_max, n_min=1, scanned=0, details=None, counterexamples=None,
               notes=None, elapsed=0.0):
    # type: (str, int, int, int, Optional[Dict[str, int]], Optional[List[Counterexample]], Optional[List[str]], float) -> None
    self.theorem = theorem
    self.n_min = n_min
    self.n_max = n_max
    self.scanned = scanned
    self.details = collections.Counter(details or {})  # type: Counter[str]
    self.counterexamples = list(counterexamples or [])
    self.notes = list(notes or [])
    self.elapsed = elapsed

  @property
  def failures(self):
    # type: () -> int
    """Number of failing items, including any beyond the stored counterexamples."""
    return self.details.get('failures', len(self.counterexamples))

  @property
  def passed(self):
    # type: () -> bool
    return not self.counterexamples

  def merge(self, other):
    # type: (VerificationReport) -> VerificationReport
    details = self.details + other.details
    counterexamples = (self.counterexamples + other.counterexamples)[:MAX_STORED_COUNTEREXAMPLES]
    notes = self.notes + [note for note in other.notes if note not in self.notes]
    return VerificationReport(self.theorem, max(self.n_max, other.n_max),
                              min(self.n_min, other.n_min), self.scanned + other.scanned,
                              dict(details), counterexamples, notes, self.elapsed + other.elapsed)

  def to_json(self):
    # type: () -> Dict[str, Any]
    return {
      "theorem": self.theorem,
      "n_min": self.n_min,
      "n_max": self.n_max,
      "passed": self.passed,
      "scanned": self.scanned,
      "details": dict(sorted(self.details.items())),
      "counterexamples": [c.to_json() for c in self.counterexamples],
      "notes": self.notes,
      "elapsed": round(self.elapsed, 3),
    }

  def __repr__(self):
    # type: () -> str
    return 'VerificationReport(%s, n<=%s, scanned=%s, %s)' % (
      self.theorem, self.n_max, self.scanned, 'pass' if self.passed else 'FAIL')


def _run_check(check, item, details):
  # type: (Callable[..., Optional[str]], Any, Counter[str]) -> Optional[str]
  try:
    return check(item, details)
  except Exception as e:
    return "%s: %s" % (type(e).__name__, e)


# Per-graph checks. Each returns None on success or a diagnostic, and may count things in details.

def check_main_graph(g, details):
  # type: (Graph, Counter[str]) -> Optional[str]
  """The only-if direction: a chordal graph's clique vector validates exactly for k <= kappa."""
  peo = is_chordal(g)
  if peo is None:
    return None
  details['chordal'] += 1
  c = clique_vector_chordal(g, peo)
  kappa = connectivity(g)
  for k in range(kappa + 1):
    verdict = validate(c, k)
    if not verdict.valid:
      return "chordal with kappa=%s but validate(%s, %s) fails: %s" % (kappa, c.format(), k, verdict.reason)
  if validate(c, kappa + 1).valid:
    return "chordal with kappa=%s but validate(%s, %s) holds" % (kappa, c.format(), kappa + 1)
  return None


def check_realization(item, details):
  # type: (Tuple[BVector, int], Counter[str]) -> Optional[str]
  """The if direction: each b in B(n, d, k) gives a k-connected chordal graph with its c-vector."""
  b, k = item
  c = b_to_c(b)
  g = realize(c, k)
  if clique_vector_bruteforce(g) != c:
    return "realization of %s has clique vector %s" % (c.format(), clique_vector_bruteforce(g).format())
  if not is_chordal_bruteforce(g):
    return "realization of %s has an induced long cycle" % c.format()
  kappa = connectivity_bruteforce(g)
  if kappa < k:
    return "realization of %s is %s-connected, wanted %s" % (c.format(), kappa, k)
  return None


def check_froberg_graph(g, details):
  # type: (Graph, Counter[str]) -> Optional[str]
  chordal = is_chordal(g) is not None
  if chordal:
    details['chordal'] += 1
  table = betti_table_full(g)
  if chordal != table.has_two_linear_resolution():
    return "chordal=%s but 2-linear resolution=%s; table %s" % (
      chordal, table.has_two_linear_resolution(), table.to_json()["entries"])
  return None


def check_betti_graph(g, details):
  # type: (Graph, Counter[str]) -> Optional[str]
  kappa = connectivity_bruteforce(g)
  from_betti = connectivity_from_betti(g)
  if from_betti != kappa:
    return "connectivity from Betti numbers is %s, by removal %s" % (from_betti, kappa)
  if connectivity(g) != kappa:
    return "connectivity by max flow is %s, by removal %s" % (connectivity(g), kappa)

  depth = betti_table_full(g).depth()
  if g.is_complete():
    details['complete'] += 1
    classical = connectivity_bruteforce(g, classical=True)
    if depth != classical + 1:
      return "complete graph has depth %s, classical kappa %s" % (depth, classical)
    return None
  if depth > kappa + 1:
    return "depth %s exceeds kappa + 1 = %s" % (depth, kappa + 1)
  if is_chordal(g) is not None:
    details['chordal'] += 1
    if depth != kappa + 1:
      return "chordal with depth %s but kappa + 1 = %s" % (depth, kappa + 1)
  return None


def check_cone_graph(g, details):
  # type: (Graph, Counter[str]) -> Optional[str]
  """Clique polynomial of the cone is (1 + x) times that of g; an isolated vertex only bumps c_1."""
  c = clique_vector_bruteforce(g)
  poly = [1] + list(c)
  expected = [poly[i] if i < len(poly) else 0 for i in range(len(poly) + 1)]
  for i in range(1, len(expected)):
    expected[i] += poly[i - 1]
  got = [1] + list(clique_vector_bruteforce(cone(g)))
  if got != expected:
    return "cone has clique polynomial %s, expected %s" % (got, expected)
  plus = list(clique_vector_bruteforce(add_isolated(g)))
  if plus != [c[0] + 1] + list(c[1:]):
    return "adding an isolated vertex gives %s from %s" % (plus, c.format())
  return None


def check_counting(item, details):
  # type: (Tuple[int, int, int], Counter[str]) -> Optional[str]
  """|B(n, d, k)| = |T(n, d, k)| = C(n-k-1, d-k-1), and word -> b-vector is a bijection."""
  n, d, k = item
  expected = count_threshold(n, d, k)
  bvectors = list(enumerate_bvectors(n, d, k))
  words = [w for w in enumerate_words(n) if w.clique_number == d and word_is_k_connected(w, k)]
  if len(bvectors) != expected or len(words) != expected:
    return "|B| = %s, |T| = %s, formula %s" % (len(bvectors), len(words), expected)
  if sorted(word_to_bvector(w) for w in words) != bvectors:
    return "b-vectors of the threshold words differ from B(n, d, k)"
  return None


def check_threshold_word(w, details):
  # type: (SDWord, Counter[str]) -> Optional[str]
  """The word lemma, the b-to-c formula and the threshold case of the characterization."""
  g = word_to_graph(w)
  c = clique_vector_bruteforce(g)
  if len(c) != w.clique_number:
    return "clique number %s but %s S letters" % (len(c), w.clique_number)
  if b_to_c(word_to_bvector(w)) != c:
    return "b-vector %s gives %s, clique vector is %s" % (
      word_to_bvector(w).format(), b_to_c(word_to_bvector(w)).format(), c.format())
  if is_chordal(g) is None:
    return "threshold graph is not chordal"
  if graph_to_word(g) != w:
    return "graph_to_word gives %r" % graph_to_word(g)
  kappa = connectivity_bruteforce(g)
  for k in range(g.n + 2):
    if word_is_k_connected(w, k) != (kappa >= k):
      return "word_is_k_connected(%s) = %s but kappa = %s" % (k, word_is_k_connected(w, k), kappa)
  for k in range(len(c) + 2):
    if validate(c, k).valid != (k <= kappa):
      return "validate(%s, %s) = %s but kappa = %s" % (c.format(), k, validate(c, k).valid, kappa)
  return None


_GRAPH_CHECKS = {
  'main': check_main_graph,
  'froberg': check_froberg_graph,
  'betti': check_betti_graph,
  'cone': check_cone_graph,
}  # type: Dict[str, Callable[[Graph, Counter[str]], Optional[str]]]


def _sweep(theorem, items, check):
  # type: (str, Iterable[Tuple[str, Any]], Callable[..., Optional[str]]) -> VerificationReport
  """Runs ``check`` over ``(subject, item)`` pairs; subjects are only formatted for failures."""
  details = collections.Counter()  # type: Counter[str]
  found = []  # type: List[Counterexample]
  scanned = 0
  for subject, item in items:
    scanned += 1
    diagnostic = _run_check(check, item, details)
    if diagnostic is not None:
      details['failures'] += 1
      if len(found) < MAX_STORED_COUNTEREXAMPLES:
        found.append(Counterexample(subject if isinstance(subject, str) else subject(), diagnostic))
  return VerificationReport(theorem, 0, scanned=scanned, details=dict(details), counterexamples=found)


def _graph_items(n, start, stop):
  # type: (int, int, Optional[int]) -> Iterator[Tuple[Callable[[], str], Graph]]
  for g in enumerate_graphs(n, start, stop):
    yield (lambda g=g: format_graph6(g)), g


def _run_partition(task):
  # type: (Tuple[str, int, int, int]) -> VerificationReport
  theorem, n, start, stop = task
  report = _sweep(theorem, _graph_items(n, start, stop), _GRAPH_CHECKS[theorem])
  report.details['graphs'] = report.scanned
  report.details['graphs_n%s' % n] = report.scanned
  report.n_min = report.n_max = n
  log.debug("%s: n=%s masks [%s, %s) done, %s failures", theorem, n, start, stop, report.failures)
  return report


def _partitions(theorem, n_max, jobs):
  # type: (str, int, int) -> List[Tuple[str, int, int, int]]
  tasks = []
  for n in range(1, n_max + 1):
    total = graph_count(n)
    pieces = max(1, min(total // 4096, 4 * jobs))
    step = -(-total // pieces)
    tasks.extend((theorem, n, start, min(start + step, total)) for start in range(0, total, step))
  return tasks


def _graph_sweep(theorem, n_max, jobs):
  # type: (str, int, int) -> VerificationReport
  tasks = _partitions(theorem, n_max, jobs)
  if jobs > 1:
    with multiprocessing.Pool(jobs) as pool:
      parts = list(pool.imap(_run_partition, tasks))
  else:
    parts = [_run_partition(task) for task in tasks]
  report = VerificationReport(theorem, n_max)
  for part in parts:
    report = report.merge(part)
  return report


def _check_range(theorem, n_max):
  # type: (str, int) -> None
  if theorem not in THEOREMS:
    raise ValueError("Unknown theorem %r; expected one of %s" % (theorem, ', '.join(THEOREMS)))
  if not 1 <= n_max <= THEOREMS[theorem]:
    raise ValueError("Theorem %r supports 1 <= n_max <= %s, got %s" % (
      theorem, THEOREMS[theorem], n_max))


def _finish(report, theorem, n_max, started, notes=()):
  # type: (VerificationReport, str, int, float, Iterable[str]) -> VerificationReport
  report.theorem = theorem
  report.n_min, report.n_max = 1, n_max
  report.notes = list(notes)
  report.elapsed = time.perf_counter() - started
  log.info("%s n<=%s: %s, scanned %s items, %s failures in %.2fs", theorem, n_max,
           'pass' if report.passed else 'FAIL', report.scanned, report.failures, report.elapsed)
  return report


def _realization_items(n_max):
  # type: (int) -> Iterator[Tuple[str, Tuple[BVector, int]]]
  for n in range(1, n_max + 1):
    for d in range(1, n + 1):
      for k in range(d + 1):
        for b in enumerate_bvectors(n, d, k):
          yield "b=%s;k=%s" % (b.format(), k), (b, k)


def verify_main_theorem(n_max, jobs=1):
  # type: (int, int) -> VerificationReport
  """
  Checks both directions of the characterization for ``n <= n_max``: every chordal graph's
  clique vector validates for exactly the k up to its connectivity, and every vector in every
  ``B(n, d, k)`` is realized by a k-connected chordal graph.
  """
  _check_range('main', n_max)
  started = time.perf_counter()
  log.info("main: sweeping labeled graphs with n <= %s using %s job(s)", n_max, jobs)
  report = _graph_sweep('main', n_max, jobs)
  realized = _sweep('main', _realization_items(n_max), check_realization)
  realized.details['bvectors'] = realized.scanned
  return _finish(report.merge(realized), 'main', n_max, started, [REMOVAL_CONVENTION_NOTE])


def verify_froberg(n_max, jobs=1):
  # type: (int, int) -> VerificationReport
  """Chordal iff the face ring of the clique complex has a 2-linear resolution."""
  _check_range('froberg', n_max)
  started = time.perf_counter()
  return _finish(_graph_sweep('froberg', n_max, jobs), 'froberg', n_max, started)


def verify_betti_connectivity(n_max, jobs=1):
  # type: (int, int) -> VerificationReport
  """
  Connectivity read off the linear strand equals connectivity by removal; depth is at most
  ``kappa + 1``, with equality for chordal graphs.
  """
  _check_range('betti', n_max)
  started = time.perf_counter()
  return _finish(_graph_sweep('betti', n_max, jobs), 'betti', n_max, started,
                 [REMOVAL_CONVENTION_NOTE, CLASSICAL_DEPTH_NOTE])


def verify_cone(n_max, jobs=1):
  # type: (int, int) -> VerificationReport
  _check_range('cone', n_max)
  started = time.perf_counter()
  return _finish(_graph_sweep('cone', n_max, jobs), 'cone', n_max, started)


def _counting_items(n_max):
  # type: (int) -> Iterator[Tuple[str, Tuple[int, int, int]]]
  for n in range(1, n_max + 1):
    for d in range(1, n + 1):
      for k in range(d + 1):
        yield "n=%s;d=%s;k=%s" % (n, d, k), (n, d, k)


def verify_counting(n_max, jobs=1):
  # type: (int, int) -> VerificationReport
  """``|B(n, d, k)|`` and the number of k-connected threshold words both equal the binomial."""
  _check_range('counting', n_max)
  started = time.perf_counter()
  report = _sweep('counting', _counting_items(n_max), check_counting)
  report.details['triples'] = report.scanned
  return _finish(report, 'counting', n_max, started)


def _word_items(n_max):
  # type: (int) -> Iterator[Tuple[str, SDWord]]
  for n in range(1, n_max + 1):
    for w in enumerate_words(n):
      yield str(w), w


def verify_threshold(n_max, jobs=1):
  # type: (int, int) -> VerificationReport
  """Checks every threshold word up to length ``n_max`` against its graph."""
  _check_range('threshold', n_max)
  started = time.perf_counter()
  report = _sweep('threshold', _word_items(n_max), check_threshold_word)
  report.details['words'] = report.scanned
  return _finish(report, 'threshold', n_max, started, [REMOVAL_CONVENTION_NOTE])


_VERIFIERS = {
  'main': verify_main_theorem,
  'froberg': verify_froberg,
  'betti': verify_betti_connectivity,
  'counting': verify_counting,
  'threshold': verify_threshold,
  'cone': verify_cone,
}


def verify(theorem, n_max, jobs=1):
  # type: (str, int, int) -> VerificationReport
  """Runs the sweep for ``theorem`` (one of ``THEOREMS``)."""
  _check_range(theorem, n_max)
  if jobs < 1:
    raise ValueError("jobs must be at least 1, got %s" % jobs)
  return _VERIFIERS[theorem](n_max, jobs=jobs)


def _parse_params(subject):
  # type: (str) -> Dict[str, str]
  try:
    return dict(part.split('=', 1) for part in subject.split(';'))
  except ValueError:
    raise ValueError("Malformed subject %r" % subject)


def replay(theorem, subject):
  # type: (str, str) -> Optional[str]
  """
  Re-runs the check behind one counterexample and returns its diagnostic, or None if the subject
  passes.
  """
  if theorem not in THEOREMS:
    raise ValueError("Unknown theorem %r; expected one of %s" % (theorem, ', '.join(THEOREMS)))
  details = collections.Counter()  # type: Counter[str]
  if theorem == 'counting':
    params = _parse_params(subject)
    return _run_check(check_counting, (int(params['n']), int(params['d']), int(params['k'])), details)
  if theorem == 'threshold':
    return _run_check(check_threshold_word, SDWord(subject), details)
  if theorem == 'main' and subject.startswith('b='):
    params = _parse_params(subject)
    return _run_check(check_realization, (BVector.parse(params['b']), int(params['k'])), details)
  return _run_check(_GRAPH_CHECKS[theorem], parse_graph6(subject), details)
