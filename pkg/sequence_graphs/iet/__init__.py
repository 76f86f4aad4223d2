from .odometer import DyadicOdometer, leading_ones, odometer_apply
from .orbit import (
    IntervalMap,
    OrbitReport,
    default_tolerance,
    iet_orbit,
    matching_convention,
    orbit_prefix,
    orbit_sequence,
    verify_evolution,
)
from .spec_file import (
    PRESETS,
    iet_from_table,
    iet_preset,
    load_iet_spec,
    parse_iet_spec,
    resolve_lengths,
)
from .transformation import (
    IETConvention,
    IETSpec,
    iet_apply,
    iet_new,
    kronecker_iet,
)

__all__ = [
    # odometer
    "DyadicOdometer",
    "leading_ones",
    "odometer_apply",
    # orbit
    "IntervalMap",
    "OrbitReport",
    "default_tolerance",
    "iet_orbit",
    "matching_convention",
    "orbit_prefix",
    "orbit_sequence",
    "verify_evolution",
    # spec_file
    "PRESETS",
    "iet_from_table",
    "iet_preset",
    "load_iet_spec",
    "parse_iet_spec",
    "resolve_lengths",
    # transformation
    "IETConvention",
    "IETSpec",
    "iet_apply",
    "iet_new",
    "kronecker_iet",
]
