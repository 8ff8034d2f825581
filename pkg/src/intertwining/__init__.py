"""Ladder operators, eigenstates and verification suites for the u(3) and u(2,1)
superintegrable systems on the sphere and the pseudo-sphere (hyperboloid)."""

from .classical import OrbitParams, h_classical, hj_orbit, invariants_classical, potential_minimum, rk4_orbit
from .diffop import DiffOp, SampleSpec, apply, compose, equal_numeric, residual
from .expr import Expr, diff, evaluate, from_prefix, jacobi_poly, to_prefix
from .ladders import H, HatPoly, Letter, casimir_poly, ladder_op, lambda_const, quadratic_algebra_relations
from .spectra import (IurDescriptor, LatticePoint, StateForm, eigen_residual, energy, excited_1d, ground_state,
                      lattice, raise_state)
from .systems import Ell, System, chart, quantum_hamiltonian, separated_hamiltonian
from .verify import Report, check_algebra, check_casimir, check_quadratic_algebra, run_full_suite

__version__ = "0.1.0"

__all__ = [
    "apply", "casimir_poly", "chart", "check_algebra", "check_casimir", "check_quadratic_algebra",
    "compose", "diff", "DiffOp", "eigen_residual", "Ell", "energy", "equal_numeric", "evaluate",
    "excited_1d", "Expr", "from_prefix", "ground_state", "H", "h_classical", "HatPoly", "hj_orbit",
    "invariants_classical", "IurDescriptor", "jacobi_poly", "ladder_op", "lambda_const", "lattice",
    "LatticePoint", "Letter", "OrbitParams", "potential_minimum", "quadratic_algebra_relations",
    "quantum_hamiltonian", "raise_state", "Report", "residual", "rk4_orbit", "run_full_suite",
    "SampleSpec", "separated_hamiltonian", "StateForm", "System", "to_prefix",
]
