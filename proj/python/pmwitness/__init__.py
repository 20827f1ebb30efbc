"""Pseudo-mode dynamics of one or two qubits in a Lorentzian reservoir.

Thin re-export of the compiled ``_pmwitness`` extension. Density matrices are
NumPy complex arrays in the basis |g>=0, |e>=1 with the first qubit as the
most significant index.
"""

from ._pmwitness import (  # noqa: F401
    IntegrationUnstable,
    PmwError,
    classical_correlation,
    concurrence,
    discord,
    entropy,
    eof,
    evolve,
    initial_state,
    interaction_hamiltonian,
    mutual_information,
    purity,
    regime,
    report,
    reproduce_figure,
    selftest,
    simulate,
    spectral_density,
)

__version__ = "0.1.0"
