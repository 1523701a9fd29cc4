"""Exact walk counts, Hurwitz numbers and Gross-Taylor series on S^d.

Fast routes go through characters of the symmetric group; every one of them
has a brute-force counterpart in :mod:`hurwitz_cayley.oracle`.
"""

from .characters import (
    CentralElement, central_character, character_table, det_omega, eigenpacket,
    fourier_transform, level_eigenvalue, mn_character, monotone_eigenvalue,
)
from .hurwitz import (
    GEOMETRIES, ExpectationWord, coarse_double, connected, connection_coefficients,
    double_hurwitz, genus_label, half_coarse, mixed_expectation, plancherel, weingarten,
)
from .oracle import (
    ResourceLimitError, SingularMatrixError, WalkMode, exact_det, exact_inverse,
    geodesic_count, hurwitz_cayley_formula, jm_identity_check, monotone_geodesic_count,
    operator_matrix, transitive_tuple_count, walk_count,
)
from .partitions import (
    contents, dim_unitary, dimension, partitions, pochhammer, stirling_cycle,
)
from .perms import compose, cycle_type, distance, enumerate_class, inverse, word_norm
from .series import FormalSeries, Orders, schur_in_powersums, series_exp, series_log
from .ym2 import (
    Spacetime, area_zero, chiral_series, genus_free_energy, microchiral_direct,
    microchiral_expansion,
)

__version__ = "0.1.0"
