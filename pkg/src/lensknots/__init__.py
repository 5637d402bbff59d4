"""Alexander polynomials of braid closures, periodic-link congruences and lens spaces."""

from .poly import (
    LaurentPoly,
    ModulusSpec,
    NonExactDivisionError,
    Residue,
    conway_from_alexander,
    div_exact,
    format_poly,
    parse_poly,
    reduce_mod,
    substitute_z,
)
from .braid import (
    BraidWord,
    PeriodicSpec,
    SeifertMatrix,
    SplitClosureError,
    alexander_of_closure,
    burau_alexander_upto_units,
    closure_components,
    crossing_change,
    delete_letter,
    full_twist,
    orbit_crossing_change,
    periodic_closure,
    seifert_matrix,
)
from .torus import TorusLinkError, TorusParams, lift_generator, torus_alexander_closed, torus_braid
from .lens import (
    LensSpace,
    QmodZ,
    homeomorphic,
    homotopy_equivalent,
    invariant_set,
    linking_form,
    mod_inverse,
    normal_form,
)
from .obstruction import (
    Branch,
    Conclusion,
    ObstructionReport,
    lemma4_verify,
    maximal_prime_powers,
    obstruction_report,
    theorem1_congruence,
    theorem1_predicate,
)

__version__ = "0.1.0"
