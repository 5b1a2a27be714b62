"""vibham: normalized non-resonant vibrational Hamiltonians.

Exact polynomial algebra on C(z, z*) with its Poisson structure, counting
and enumeration of the independent invariant monomials up to a given even
order, and numeric vibrational term energies for molecule models such as
ClOH.  A FastAPI service and a thin CLI sit on top of the library.
"""

__version__ = "0.1.0"

from .algebra import (
    EC_I,
    EC_MINUS_I,
    EC_ONE,
    EC_ZERO,
    ExactComplex,
    Monomial,
    Polynomial,
    adjoint_apply,
    adjoint_eigencoefficient,
    evaluate,
    find_resonance,
    flow_apply,
    harmonic_hamiltonian,
    hilbert_basis,
    kernel_test,
    poisson_bracket,
    polynomial_to_text,
    time_reversal,
)
from .checks import CheckResult, run_property_suite
from .counting import (
    CountSpec,
    MonomialSignature,
    additional_operators_by_order,
    count_closed,
    count_closed_n2,
    count_closed_n3,
    count_compositions,
    enumerate_signatures,
    max_generator_power,
    signature_degree,
    signature_support,
)
from .parsing import PolynomialSyntaxError, parse_polynomial
from .spectrum import (
    EnergyLevel,
    Finding,
    FockState,
    ModelFormatError,
    MoleculeModel,
    builtin_cloh,
    builtin_model,
    default_search_box,
    enumerate_levels,
    levels_to_csv,
    load_model,
    parse_model,
    render_model,
    save_model,
    term_energy,
    validate_model,
)

__all__ = [
    "__version__",
    "EC_I",
    "EC_MINUS_I",
    "EC_ONE",
    "EC_ZERO",
    "ExactComplex",
    "Monomial",
    "Polynomial",
    "adjoint_apply",
    "adjoint_eigencoefficient",
    "evaluate",
    "find_resonance",
    "flow_apply",
    "harmonic_hamiltonian",
    "hilbert_basis",
    "kernel_test",
    "poisson_bracket",
    "polynomial_to_text",
    "time_reversal",
    "CheckResult",
    "run_property_suite",
    "CountSpec",
    "MonomialSignature",
    "additional_operators_by_order",
    "count_closed",
    "count_closed_n2",
    "count_closed_n3",
    "count_compositions",
    "enumerate_signatures",
    "max_generator_power",
    "signature_degree",
    "signature_support",
    "PolynomialSyntaxError",
    "parse_polynomial",
    "EnergyLevel",
    "Finding",
    "FockState",
    "ModelFormatError",
    "MoleculeModel",
    "builtin_cloh",
    "builtin_model",
    "default_search_box",
    "enumerate_levels",
    "levels_to_csv",
    "load_model",
    "parse_model",
    "render_model",
    "save_model",
    "term_energy",
    "validate_model",
]
