from .depth import moment_curve_sharpness_check, pair_depth_disks, pair_depth_table_disks
from .points import GeneralPositionReport, PointSet, validate_general_position
from .ranges import RangeKind, enumerate_ranges, halfspace_ranges, shrink_range

__all__ = [
    "GeneralPositionReport",
    "PointSet",
    "RangeKind",
    "enumerate_ranges",
    "halfspace_ranges",
    "moment_curve_sharpness_check",
    "pair_depth_disks",
    "pair_depth_table_disks",
    "shrink_range",
    "validate_general_position",
]
