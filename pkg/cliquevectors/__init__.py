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
This package decides which integer vectors are clique vectors of k-connected chordal graphs, builds
a threshold graph realizing each one that is, and checks the characterization and the facts about
Betti numbers behind it over all small graphs.
"""

from .graph import (Graph, clique_vector_bruteforce, complete_graph, cone, add_isolated,
                    cycle_graph, empty_graph, enumerate_graphs, path_graph, star_graph)
from .graph_io import GraphFormatError, format_graph, parse_graph
from .chordal import (EliminationOrder, check_peo, check_peo_bruteforce, clique_vector_chordal,
                      connectivity, connectivity_bruteforce, is_chordal, is_chordal_bruteforce,
                      local_connectivity, mcs_order)
from .transform import BVector, CliqueVector, Verdict, b_to_c, c_to_b, validate
from .threshold import (RealizationError, SDWord, bvector_to_word, count_threshold,
                        enumerate_bvectors, enumerate_words, graph_to_word, realize, realize_word,
                        word_is_k_connected, word_to_bvector, word_to_graph)
from .stanley_reisner import (BettiTable, HomologyProfile, betti_linear_strand, betti_table_full,
                              connectivity_from_betti, depth, has_two_linear_resolution,
                              projective_dimension, reduced_homology_ranks)
from .verify import (Counterexample, VerificationReport, replay, verify, verify_betti_connectivity,
                     verify_cone, verify_counting, verify_froberg, verify_main_theorem,
                     verify_threshold)

__all__ = [
  'BVector', 'BettiTable', 'CliqueVector', 'Counterexample', 'EliminationOrder', 'Graph',
  'GraphFormatError', 'HomologyProfile', 'RealizationError', 'SDWord', 'Verdict',
  'VerificationReport', 'add_isolated', 'b_to_c', 'betti_linear_strand', 'betti_table_full',
  'bvector_to_word', 'c_to_b', 'check_peo', 'check_peo_bruteforce', 'clique_vector_bruteforce',
  'clique_vector_chordal', 'complete_graph', 'cone', 'connectivity', 'connectivity_bruteforce',
  'connectivity_from_betti', 'count_threshold', 'cycle_graph', 'depth', 'empty_graph',
  'enumerate_bvectors', 'enumerate_graphs', 'enumerate_words', 'format_graph', 'graph_to_word',
  'has_two_linear_resolution', 'is_chordal', 'is_chordal_bruteforce', 'local_connectivity',
  'mcs_order', 'parse_graph', 'path_graph', 'projective_dimension', 'realize', 'realize_word',
  'reduced_homology_ranks', 'replay', 'star_graph', 'validate', 'verify',
  'verify_betti_connectivity', 'verify_cone', 'verify_counting', 'verify_froberg',
  'verify_main_theorem', 'verify_threshold', 'word_is_k_connected', 'word_to_bvector',
  'word_to_graph',
]
