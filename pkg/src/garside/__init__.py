"""Garside-theory toolkit for irreducible spherical-type Artin-Tits groups.

Normal forms and group arithmetic over exact root-system models, standard
parabolic subgroups and ribbons, absorbable-element decompositions with
verifiable certificates, local balls of the additional length graph, and
growth-rate computations with free-product lower bounds.
"""

from .coxeter import ArtinSystem, CoxeterElement, CoxeterMatrix, classify, parse_system
from .garside import GroupElement, delta, is_left_weighted, is_right_weighted, lattice, normalize
from .parabolic import (
    factor_conjugator,
    member,
    minimal_conjugator,
    ribbon,
    sub_delta,
    support,
    tau_sub,
)
from .absorb import (
    AbsorbableDecomposition,
    AbsorptionCertificate,
    bounded_search,
    classify_absorbable_small,
    decompose_delta_power,
    decompose_normalizer,
    decompose_parabolic,
    decompose_positive_conjugator,
    decompose_sub_delta_power,
    verify_certificate,
)
from .calgraph import CalBall, CalVertex, act, ball, base_vertex, export_ball, vertex_of
from .growth import (
    GrowthReport,
    bfs_oracle,
    build_automaton,
    compare_parabolic,
    count_group_ball,
    count_monoid_ball,
    diverging_sequence,
    free_product_bound,
    growth_rate,
    growth_report,
)
from .freeprod import (
    CONSTANTS,
    delzant_check,
    elliptic_orbit_report,
    search_candidate,
    verify_free_product,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
