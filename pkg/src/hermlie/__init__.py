"""hermlie: exact Hermitian geometry on six-dimensional almost abelian
Lie algebras.

Core computations run over exact rationals (stdlib Fraction) and complex
rationals; floats appear only in the explicitly tagged numeric paths (the
eigen fallback, the metric-flow integrator and the obstruction search).
"""

from .scalars import CScalar, Q, Rat, rat_sqrt
from .linalg import Matrix, solve_linear
from .spectra import char_poly_spectrum, normal_block_diagonalize, are_similar
from .liealg import (AlmostAbelianData, LieAlgebra, adapted_data,
                     algebra_from_structure_equations,
                     find_codim1_abelian_ideal, from_almost_abelian,
                     is_unimodular)
from .exterior import KForm, MixedForm, d, is_exact, twisted_d
from .hermitian import (HermitianStructure, SKTVerdict, bismut_torsion,
                        is_integrable, nijenhuis, skt_verdict)
from .dolbeault import (Bivector20, DolbeaultData, dolbeault_matrices,
                        holomorphic_poisson_space, schouten_bracket_check)
from .genkahler import (GKTriple, canonical_generators, commutator_poisson,
                        verify_gk)
from .obstruction import constraint_chain, search_compatible_jminus
from .flow import (FlowState, closed_form_v0, flow_rhs, integrate,
                   soliton_check)
from .catalog import build, known_structures, table3_complex_structure
from .recognition import recognize

__all__ = [
    "AlmostAbelianData", "Bivector20", "CScalar", "DolbeaultData",
    "FlowState", "GKTriple", "HermitianStructure", "KForm", "LieAlgebra",
    "Matrix", "MixedForm", "Q", "Rat", "SKTVerdict", "adapted_data",
    "algebra_from_structure_equations", "are_similar", "bismut_torsion",
    "build", "canonical_generators", "char_poly_spectrum", "closed_form_v0",
    "commutator_poisson", "constraint_chain", "d", "dolbeault_matrices",
    "find_codim1_abelian_ideal", "flow_rhs", "from_almost_abelian",
    "holomorphic_poisson_space", "integrate", "is_exact", "is_integrable",
    "is_unimodular", "known_structures", "nijenhuis",
    "normal_block_diagonalize", "rat_sqrt", "recognize",
    "schouten_bracket_check", "search_compatible_jminus", "skt_verdict",
    "solve_linear", "soliton_check", "table3_complex_structure",
    "twisted_d", "verify_gk",
]

__version__ = "0.1.0"
