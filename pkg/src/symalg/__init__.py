"""Exact computation with super Yang-Mills algebras.

The package builds the quotient algebras attached to a presentation
(n, s, Gamma, metric) from scratch: weight-graded bases of the Lie and
associative quotients, Hilbert/dimension series, the superpotential
calculus, free resolutions of the trivial module, Chevalley-Eilenberg
homology, free-generator series of the distinguished ideals, and the
Kirillov-orbit pipeline producing Clifford-Weyl quotients of nilpotent
truncations.  All arithmetic is exact rational.
"""

from .assoc import AssocModel
from .cliffordweyl import CWAlgebra, CWElement, cw_multiply
from .engine import (
    LieModel,
    SubalgebraGenerators,
    free_lie_component,
    free_lie_dims,
    k1s_generators,
    tym_generators,
    tym_hat_generators,
)
from .homology import ce_check_d_squared, ce_differential, ce_homology
from .presentation import (
    GammaTensor,
    GammaTilde,
    PresentationError,
    SymPresentation,
    build_relations,
    check_equivariance_identity,
    check_nondegenerate,
    derive_gamma_tilde,
    dims_ym,
    free_gen_series_k1s,
    free_gen_series_tym,
    free_gen_series_tym_hat,
    hilbert_series_YM,
    preset,
    quartic_form,
    semidirect_maps,
    superpotential,
    susy_derivations,
    ym_denominator,
)
from .resolution import SidedResolution, verify_resolution
from .series import (
    DensePolynomial,
    PowerSeries,
    dims_from_series,
    enveloping_series,
    log_power_sums,
    mobius,
    newton_power_sums,
)
from .superlie import (
    FieldExtensionRequired,
    FinDimSuperLieAlgebra,
    IdealWeight,
    KirillovForm,
    even_functional,
    heis,
    kirillov_form,
    stabilizer_subspace,
    subordinate_check,
    vergne_polarization,
    weight_of,
)
from .surjection import build_cw_surjection, plan_assignment, weyl_surjection_note
from .tensor import (
    Alphabet,
    Poly,
    cyclic_derivative,
    extend_derivation,
    lie_expand,
    super_commutator,
    sym_alphabet,
)

__version__ = "0.1.0"
