"""Exact homology calculator for the universal dga R//p over R.

The public surface re-exports the valuation layer, the window/density
layer, the exact linear algebra, and the homology engine.
"""

from .padic import PadicRational, Prime, a_val, b_val, factorial_vp, seq_a, seq_b, vp
from .gaps import (
    DensityReport,
    GapWindow,
    count_shifted,
    density_bounds,
    enumerate_z1,
    enumerate_z2,
    gap,
    gap_window,
    in_z1,
    in_z2,
)
from .linalg import IntMatrix, ModuleShape, SnfResult, TRIVIAL_SHAPE, cokernel_shape, snf, submodule_equal_mod
from .homology import (
    CoeffVector,
    HomologyResult,
    StaircasePresentation,
    a_minimality_probe,
    connes_length_check,
    cyclic_matrix,
    hc_closed_form,
    hc_neg_closed_form,
    hc_neg_truncation_probe,
    hc_oracle,
    hochschild,
    hp,
    hp_stabilization_check,
    negative_matrix,
    periodic_matrix,
    phi_coeffs,
    verify_kernel_generators,
    verify_presentation,
)

__all__ = [
    "CoeffVector",
    "DensityReport",
    "GapWindow",
    "HomologyResult",
    "IntMatrix",
    "ModuleShape",
    "PadicRational",
    "Prime",
    "SnfResult",
    "StaircasePresentation",
    "TRIVIAL_SHAPE",
    "a_minimality_probe",
    "a_val",
    "b_val",
    "cokernel_shape",
    "connes_length_check",
    "count_shifted",
    "cyclic_matrix",
    "density_bounds",
    "enumerate_z1",
    "enumerate_z2",
    "factorial_vp",
    "gap",
    "gap_window",
    "hc_closed_form",
    "hc_neg_closed_form",
    "hc_neg_truncation_probe",
    "hc_oracle",
    "hochschild",
    "hp",
    "hp_stabilization_check",
    "in_z1",
    "in_z2",
    "negative_matrix",
    "periodic_matrix",
    "phi_coeffs",
    "seq_a",
    "seq_b",
    "snf",
    "submodule_equal_mod",
    "verify_kernel_generators",
    "verify_presentation",
    "vp",
]

__version__ = "0.1.0"
