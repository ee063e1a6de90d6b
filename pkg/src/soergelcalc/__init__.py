"""Exact bimodule-map and Koszul-homology computations for two-block
symmetric polynomial rings.

The package is pure Python over exact rationals: sparse polynomials and
determinants (`polycore`), partitions (`partitions`), Schur polynomials
in elementary symmetric variables (`schur`), a Groebner kernel with
Hilbert series and q,t-series (`groebner`), the bimodule map and its
verification (`soergel`), quantum binomials and the homology formulas
(`qhomology`), and a batch CLI (`cli`).
"""

from .groebner import (
    GradedSeries,
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    colon_ideal,
    hilbert_series,
    ideal_equal,
    ideal_member,
    intersect,
    normal_form,
)
from .partitions import Partition, box_count, enumerate_box
from .polycore import (
    ExactDivisionError,
    Family,
    Grading,
    PolyMatrix,
    Polynomial,
    det_sum_expansion,
    determinant,
    exact_div,
    is_homogeneous,
    weighted_degree,
)
from .qhomology import (
    corollary_check,
    homology_series,
    qdim_Ij_formula,
    qdim_Rprime,
    quantum_binomial,
    quantum_int,
)
from .schur import (
    complete_h,
    elementary_in_z,
    schur_bialternant_oracle,
    schur_dual_giambelli,
    schur_giambelli,
)
from .soergel import (
    ResourceLimitError,
    SoergelContext,
    TensorExpr,
    delta_determinant,
    delta_formula,
    hochschild_direct,
    ideal_I_generators,
    koszul_step,
    matrix_M,
    matrix_Mprime,
    matrix_S,
    minor_ideal_Ij,
    verify_bimodule,
)

__version__ = "0.1.0"
