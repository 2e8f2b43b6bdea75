__version__ = '1.0.0'
from .errors import (SchroederError, PathError, IllegalCharacter, NegativeHeight, NonzeroEnd,
                     BijectionError, LengthMismatch, DomainMismatch, NotHillFree, NotLittle,
                     ZeroHills, StarMember, TreeError, TreeSyntaxError, RightChainViolation,
                     LeftChildOccupied, RightChildOccupied, LabelClash, IndexOutOfRange,
                     NotRightBranching, EmptyTree, PermutationError,
                     InsufficientSequenceLength, VerificationFailure)
from .report import Report
from .structures.triangles import RiordanTriangle
from .structures.paths import (SchroderPath, PathStats, FeatureList, parse_path, render_path,
                               stats, find_features, enumerate_words, enumerate_paths,
                               hill_triangle, decompose_at_hills, schroder_sequence,
                               check_three_term, swap_h0_hills, little_to_hill_free,
                               hill_free_to_little)
from .structures.polynomials import BivarPoly
from .structures.riordan import (AZSequences, az_from_uv, az_hills, az_little_hills,
                                 triangle_from_az, uv_triangle, weighted_oracle,
                                 weighted_oracle_triangle, specialize, row_sums,
                                 specialization_suite, check_pascal)
from .structures.trees import (DiSkTree, PLUS, MINUS, parse_tree, render_tree,
                               label_sequence, first_minus_index, minus_positions,
                               class_index, attach_left, attach_right, sharp, tau,
                               enumerate_trees, class_counts, embed_star, is_star)
from .structures.permutations import (Permutation, StatRecord, parse_permutation,
                                      is_separable, iar, comp, comp_by_factorisation,
                                      descent_set, stat_record, enumerate_separable,
                                      iar_triangle, comp_vs_iar, comp_vs_paths,
                                      descent_sets_vs_trees)
from .bijections.paths import (phi, phi_inv, big_phi, big_phi_inv, psi, psi_inv, big_psi,
                               big_psi_inv)
from .bijections.trees import rho, rho_inv, path_to_tree, tree_to_path
from .verifications.verification import Verification
from .verifications.suites import SUITES, SUITE_ALIASES, get_suite

__all__ = ['SchroederError', 'PathError', 'IllegalCharacter', 'NegativeHeight', 'NonzeroEnd',
           'BijectionError', 'LengthMismatch', 'DomainMismatch', 'NotHillFree', 'NotLittle',
           'ZeroHills', 'StarMember', 'TreeError', 'TreeSyntaxError', 'RightChainViolation',
           'LeftChildOccupied', 'RightChildOccupied', 'LabelClash', 'IndexOutOfRange',
           'NotRightBranching', 'EmptyTree', 'PermutationError',
           'InsufficientSequenceLength', 'VerificationFailure', 'Report', 'RiordanTriangle',
           'SchroderPath', 'PathStats', 'FeatureList', 'parse_path', 'render_path', 'stats',
           'find_features', 'enumerate_words', 'enumerate_paths', 'hill_triangle',
           'decompose_at_hills', 'schroder_sequence', 'check_three_term', 'swap_h0_hills',
           'little_to_hill_free', 'hill_free_to_little', 'BivarPoly', 'AZSequences',
           'az_from_uv', 'az_hills', 'az_little_hills', 'triangle_from_az', 'uv_triangle',
           'weighted_oracle', 'weighted_oracle_triangle', 'specialize', 'row_sums',
           'specialization_suite', 'check_pascal', 'DiSkTree', 'PLUS', 'MINUS', 'parse_tree',
           'render_tree', 'label_sequence', 'first_minus_index', 'minus_positions',
           'class_index', 'attach_left', 'attach_right', 'sharp', 'tau', 'enumerate_trees',
           'class_counts', 'embed_star', 'is_star', 'Permutation', 'StatRecord',
           'parse_permutation', 'is_separable', 'iar', 'comp', 'comp_by_factorisation',
           'descent_set', 'stat_record', 'enumerate_separable', 'iar_triangle', 'comp_vs_iar',
           'comp_vs_paths', 'descent_sets_vs_trees', 'phi', 'phi_inv', 'big_phi',
           'big_phi_inv', 'psi', 'psi_inv', 'big_psi', 'big_psi_inv', 'rho', 'rho_inv',
           'path_to_tree', 'tree_to_path', 'Verification', 'SUITES', 'SUITE_ALIASES',
           'get_suite', '__version__']
