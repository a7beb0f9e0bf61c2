"""Exact computations for theta-deformed twistor geometry and ADHM monads.

Scalars are Laurent polynomials in a formal unit ``lam = exp(i*theta)``, so every
identity checked here holds for all deformation parameters simultaneously.
"""

from .algebra import (
    Element,
    GeneratorTable,
    StarMap,
    apply_map,
    commutator_exponent,
    folded_word_phase,
    mul,
    spectral_decompose,
    star,
    untwist_phase_oracle,
)
from .gauge import (
    CrossedElement,
    WindingNumber,
    commutation_exponent_landstad,
    convolve,
    dual_gauge,
    gauge_monad_family,
    landstad_element,
    verify_theorem_final,
    winding_grading_degree,
)
from .monad import (
    GroupTriple,
    MonadData,
    MonadFamilyPresentation,
    bpst,
    check_monad_condition,
    check_nondegeneracy,
    check_self_conjugacy,
    conjugate_monad,
    deformed_family_relations,
    find_equivalence,
    group_act,
    torus_act,
)
from .numrep import MatrixRep, build_rep, evaluate_element
from .phase import Degree, GaussianRational, PhaseScalar, evaluate, lam, sigma, wedge
from .twistor import (
    TwistorContext,
    j_map,
    make_context,
    verify_j,
    verify_projection_relations,
    verify_sphere_relation,
)

__version__ = "0.1.0"
