"""Interactions on S x S: conserved quantities, combinations, classification,
and bounded checks of irreducible quantification."""

from .algebra import MergeError, WedgeSpec, box, box_power, completion, merge, wedge, wedge_power
from .classify import ClassCatalog, ClassRecord, classify, classes_at_dim, identify
from .configspace import (
    BudgetError,
    ConfigSpaceAnalysis,
    IQReport,
    SiteGraph,
    analyze_config_space,
    check_iq_bounded,
    derived_checks,
    parse_family,
    shuffle,
)
from .consv import ConservedBasis, compute_consv, config_sum, is_conserved, pair_sum
from .core import (
    ComponentPartition,
    Interaction,
    InteractionError,
    StateSet,
    components,
    dumps,
    loads,
    make_interaction,
)
from .relations import (
    CanonicalForm,
    SizeGuardError,
    canonical_form,
    equivalence_map,
    equivalent,
    is_exchangeable,
    is_separable,
    isomorphic,
    weakly_equivalent,
)
from .report import AnalysisReport, analyze, to_dot

__version__ = "0.1.0"
