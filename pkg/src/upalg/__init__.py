"""Workbench for finite UP-algebras."""
from .core import (
    AXIOMS,
    ElementSet,
    Magma,
    PosetView,
    UpAlgebra,
    Violation,
    check_alt_axiomatization,
    check_axiom,
    derived_laws,
    make_algebra,
    up_ordering,
    validate,
)
from .congruence import (
    Partition,
    QuotientAlgebra,
    class_of_zero_checks,
    is_congruence,
    natural_projection,
    quotient,
    relation_mod_ideal,
)
from .modelgen import Census, builtin, enumerate_algebras, power_type1, power_type2
from .morphism import (
    CanonicalForm,
    Morphism,
    canonical_form,
    check_hom,
    compose,
    enumerate_homs,
    hom_properties,
    inverse,
    is_isomorphic,
)
from .substruct import (
    all_ideals,
    all_subalgebras,
    generated_ideal,
    generated_subalgebra,
    ideal_criterion_in_subalgebra,
    is_ideal,
    is_subalgebra,
)
from .theorems import (
    Certificate,
    first_iso,
    fourth_iso,
    fundamental,
    hk_set,
    second_iso,
    third_iso,
)

__version__ = "0.1.0"
