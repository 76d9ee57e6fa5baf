"""Correspondence analysis for symbolic multi-valued variables.

Interval contingency tables are built from multiple-selection data, the
table of interval centers is analysed by classic correspondence analysis,
and every modality's interval profile is projected as a rectangle on the
factorial plane.
"""

from .classic_ca import (
    CAResult,
    chi2_col_distance,
    chi2_row_distance,
    column_profiles,
    correspondence_analysis,
    row_profiles,
    supplementary_projection,
    total_inertia,
)
from .errors import AnalysisError, EnumerationTooLarge, SymCAError
from .interval_table import (
    CenterTable,
    IntervalTable,
    brute_force_interval_contingency,
    centers,
    interval_contingency,
    validate_for_analysis,
)
from .multivalued import (
    MultiValuedVariable,
    enumerate_completions,
    join_matrix,
    meet_matrix,
    parse_observations,
)
from .projection import (
    IntervalProfileMatrix,
    SymCAResult,
    column_rectangle,
    interval_profiles,
    row_rectangle,
    symca,
    vertex_projection_oracle,
)

__version__ = "0.1.0"
