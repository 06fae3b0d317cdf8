"""Exact finite-scale computations for democratic systems of translates on
torsion lattices: groups and duality, autocorrelation vectors, their convex
hull, the democracy functional and small brute-force oracles."""

from .autocorr import (
    AutocorrVector,
    ClassEnumeration,
    GSpectrum,
    SubsetGamma,
    autocorr_vector,
    canonicalize,
    coset_from_zero_one_vector,
    enumerate_classes,
    folner_defect,
    g_spectrum,
    integral_over_perp,
    pair_count_in,
    spectral_integral_over_perp,
    subset,
)
from .democracy import (
    ChainAnnuli,
    CounterexampleReport,
    DemocracyReport,
    DualTable,
    build_counterexample,
    eval_functional,
    inf_over_family,
    sufficient_condition_check,
)
from .groups import (
    FiniteAbelianGroup,
    ResourceBoundError,
    Subgroup,
    enumerate_subgroups,
    exhausting_chain,
    generate_subgroup,
    make_group,
    orthogonal_complement,
    prufer_truncation,
)
from .hull import HullReport, PointCloud, classify_vertices, table3, verify_certificate
from .oracles import (
    PsiTable,
    coset_characterization_bruteforce,
    parseval_check,
    pi_ratio,
    qbinomial,
)
from .simplex import lp_convex_membership, phase_one, verify_membership

__version__ = "0.1.0"
