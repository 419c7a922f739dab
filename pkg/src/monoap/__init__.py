"""Exact counting and search for monochromatic arithmetic progressions in 2-colorings."""

from .apcount import (
    FRAME_PATTERNS, APFilter, CountMode, PatternSet, count_frame_patterns, count_mono_cyclic,
    count_mono_interval, kap_terms, pair_intersection, total_increasing_aps, u_vector,
)
from .bounds import lower_bound_for, m3_closed_form
from .constructions import (
    BlockTemplate, TowerSpec, builtin_coloring, builtin_template, check_template_star_property,
    ltimes, resolve_block, tower_coloring, tower_predicted_count,
)
from .core import (
    AFFINE, AFFINE_CONJUGATION, BLUE, MULTIPLICATIVE, RED, Coloring, GroupKind, SymmetryGroup,
    apply_unit_map, canonical_form, conjugate, parse_coloring, translate,
)
from .lattice import Polygon, lattice_points
from .periodic import (
    WrapClass, assemble_periodic, density_upper_bound, generalized_mono_count,
    region_area_table, wrap_class,
)
from .search import (
    Budget, exhaustive_min_cyclic, min_pattern_count_interval, pattern_free_max_interval,
    zero_mono_colorings,
)

__all__ = [name for name in dir() if not name.startswith("_")]
