"""Spectra of derived Mackey functors for finite permutation groups.

Computes the points and specialization order of the spectrum, the comparison
map to the spectrum of the Burnside ring, admissible subsets classifying
thick tensor-ideals, and diagrams of all of these.
"""

from .burnside import BurnsidePoint, BurnsideSpace, build_burnside, fiber, rho, verify_quotient_characterization
from .groups import (
    PermGroup,
    QuotientPresentation,
    Subgroup,
    SubgroupClass,
    all_subgroups,
    build_group,
    conjugacy_classes_of_subgroups,
    is_conjugate_p_subnormal,
    is_p_subnormal,
    is_p_subnormal_by_towers,
    o_p_residual,
    quotient,
)
from .ideals import (
    AdmissibleSet,
    admissible_closure,
    count_admissible_local,
    enumerate_admissible_local,
    is_admissible,
    support_of_objects,
)
from .spectrum import (
    ChromaticPoint,
    GeneratorObject,
    PrimeSlot,
    SpecPoint,
    SpecSpace,
    build_spectrum,
    chromatic_image,
    closure,
    generator_support,
    irreducible_components,
    is_specialization_closed,
    quotient_maps,
    restriction_map,
    specializes,
)

__version__ = "0.1.0"
