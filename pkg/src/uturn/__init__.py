"""Colored U-turn lattice models for Demazure atoms and characters of types B and C."""
from .algebra import LaurentPolynomial, evaluate, exact_divide, monomial, parse, to_text, variables
from .demazure import (CartanData, apply_atom, apply_demazure, atom_polynomial, character,
                       demazure_polynomial, rho_monomial)
from .model import (MarkedState, Model, State, build_model, enumerate_marked_states,
                    enumerate_states, inversion_statistics, partition_function, state_weight,
                    verify_functional_equation)
from .patterns import (ProctorPattern, Tableau, compute_key, enumerate_patterns,
                       pattern_to_state, pattern_to_tableau, pattern_weight, state_to_pattern,
                       tableau_to_pattern, validate_pattern)
from .weyl import SignedPermutation, from_word, length, longest_element, parse_weyl, reduced_word
from .ybe import (refute_gamma_delta_ybe, rq_limit_check, solve_rll_kernel,
                  verify_reflection_equation, verify_unitarity, verify_ybe)

__version__ = "0.1.0"
