"""knotcert: exact certification of knot-surgery invariants.

The library certifies three computable facts and their interactions:
that nest-curve complement groups are cyclic of the expected order
(coset enumeration + Smith normal form), that torus surgery separates an
infinite knot family by formal Seiberg-Witten basic classes (exact
Laurent and lattice arithmetic), and that the perturbed four-branch
singularity model produces a strictly nested pair of ovals (grid
contour extraction with a stability contract).
"""

__version__ = "0.1.0"

from .fpgroups import (
    EnumerationResult,
    FiniteGroupTable,
    Presentation,
    Word,
    abelianization,
    builtin_groups,
    coset_enumeration,
    find_finite_quotient,
    is_cyclic_of_order,
    parse_presentation,
)
from .knots import (
    Knot,
    Seifert,
    SeifertMatrix,
    Sum,
    Torus,
    Twist,
    Unknot,
    alexander,
    alexander_from_seifert,
    knot_to_spec,
    parse_knot,
    torus_alexander,
    torus_family,
    twist_alexander,
)
from .laurent import LaurentPoly, NotSymmetrizable, ZeroPolynomial
from .lcurve import (
    GeneticNestModel,
    NestConfig,
    OvalReport,
    hemisphere_relation,
    nest_presentation,
    nori_abelian_guaranteed,
    oval_svg,
    x9_ovals,
)
from .swcalc import (
    DistinctnessCertificate,
    HClass,
    HomologyLattice,
    SwPolynomial,
    TorsionTorusClass,
    basic_classes,
    certify_family_distinct,
    fs_surgery,
    has_infinite_order,
    multi_torus_surgery,
)

__all__ = [
    "__version__",
    "EnumerationResult",
    "FiniteGroupTable",
    "Presentation",
    "Word",
    "abelianization",
    "builtin_groups",
    "coset_enumeration",
    "find_finite_quotient",
    "is_cyclic_of_order",
    "parse_presentation",
    "Knot",
    "Seifert",
    "SeifertMatrix",
    "Sum",
    "Torus",
    "Twist",
    "Unknot",
    "alexander",
    "alexander_from_seifert",
    "knot_to_spec",
    "parse_knot",
    "torus_alexander",
    "torus_family",
    "twist_alexander",
    "LaurentPoly",
    "NotSymmetrizable",
    "ZeroPolynomial",
    "GeneticNestModel",
    "NestConfig",
    "OvalReport",
    "hemisphere_relation",
    "nest_presentation",
    "nori_abelian_guaranteed",
    "oval_svg",
    "x9_ovals",
    "DistinctnessCertificate",
    "HClass",
    "HomologyLattice",
    "SwPolynomial",
    "TorsionTorusClass",
    "basic_classes",
    "certify_family_distinct",
    "fs_surgery",
    "has_infinite_order",
    "multi_torus_surgery",
]
