"""Exact spectra and energies of commuting conjugacy class graphs of G(p, m, n)."""

from .ccc import (
    CCCGraph,
    CliqueDecomposition,
    build_ccc,
    decompose,
    predicted_decomposition,
)
from .closed_forms import (
    EnergyOrdering,
    HyperClassification,
    OrderingCase,
    classify_from_definitions,
    closed_form_energies,
    closed_form_spectra,
    edge_count,
    energy_ordering,
    hyper_classification,
    ordering_from_triple,
    vertex_count,
)
from .group import (
    ConjugacyClass,
    GroupElement,
    GroupParams,
    center,
    conjugacy_classes,
    elements,
    inverse,
    make_params,
    multiply,
)
from .spectral import (
    EnergyTriple,
    IntegerRootResult,
    Spectrum,
    adjacency_spectrum,
    char_poly,
    energies_from_decomposition,
    energy,
    gershgorin_bound,
    integer_spectrum,
    laplacian_energy,
    laplacian_spectrum,
    matrices_from_graph,
    signless_energy,
    signless_spectrum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
