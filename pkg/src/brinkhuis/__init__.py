"""Ternary squarefree words, Brinkhuis triples, and growth-rate lower bounds."""

from .words import (Word, SquareWitness, is_squarefree_oracle, find_square,
                    has_square_ending_at_last, tau, reverse, is_palindrome)
from .enumeration import (GrimmClass, ClassCensus, count_squarefree,
                          enumerate_squarefree, enumerate_grimm_class, census)
from .admissibility import (ReversalClass, AdmissibleCensus, is_admissible,
                            admissible_words, admissible_classes,
                            admissible_census)
from .compatibility import (PatternProduct, MorphismChoice,
                            CompatibilityHypergraph, pattern_product,
                            product_squarefree, word_set_is_brinkhuis,
                            class_pair_good, class_triple_good,
                            build_hypergraph, apply_morphism)
from .hyperclique import (CliqueInstance, CliqueResult, is_clique,
                          exact_max_clique, rhcs)
from .verify import (TripleCandidate, TripleVerifier, VerificationReport,
                     parse_word_file,
                     write_word_file, expand_with_reversals, verify_triple,
                     compute_bound, scan_triples_checkpointed,
                     triple_space_size, decode_triple_index)
from .pipeline import run_pipeline, PipelineSummary
from . import errors

__version__ = "0.1.0"
