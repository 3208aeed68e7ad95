"""Pack congruent circles into a circle ring by ring."""

from .errors import DomainError, ParseError, RingfillError, ValidationError
from .inverse import InverseResult, inverse_ratio
from .layout import (GEOM_EPS, LayoutOptions, PackingResult, PhasePolicy, Placement,
                     generate_layout, layout_for_ratio, packing_density)
from .metrics import GapReport, ReferenceRecord, compare, load_references, seed_references, sweep
from .render import SvgStyle, curve_csv, from_json, to_json, to_svg
from .ring_math import (CASE_EPS, FLOOR_EPS, CaseKind, CaseTag, CountBreakdown, PackingSpec, RingPlan,
                        classify_case, count_total, count_total_dimensional, count_total_iterative,
                        ring_count, sector_inscribed_radius)
from .verify import VerificationReport, Violation, max_verified_count, verify_layout

__version__ = "0.1.0"
