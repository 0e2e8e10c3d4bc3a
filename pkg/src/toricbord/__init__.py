"""Characteristic numbers and bordism classes of quasitoric manifolds.

The main entry points are re-exported here; see the submodules for the rest.
"""
from toricbord.bordism import (
    FormalBordismClass,
    GeneratorCertificate,
    find_unitary,
    find_y_even,
    find_y_odd,
    milnor_generator_test,
    realize_certificate,
    s_of_class,
)
from toricbord.engines import (
    chern_number_cohomology,
    chern_number_localization,
    s_number_cohomology,
    s_number_localization,
)
from toricbord.families import L, cpn, proj_sum_line_bundles, product, tildeL, tildeN
from toricbord.quasitoric import (
    CharacteristicPair,
    SimplePolytope,
    conjugate_facet,
    connected_sum,
    refine,
    reverse_orientation,
    su_check,
    validate,
)

__version__ = "0.1.0"
