"""Exact invariants and elliptic-fibration models of six-line configurations."""

try:
    from ._core import (
        classify_report,
        do_coordinates,
        fibration_report,
        invariants_report,
        isogeny_report,
        j_invariants,
        params_report,
        schema_tag,
        tangent_report,
        verify_all,
    )
except ImportError:  # build-tree layout: extension next to the package on sys.path
    from _core import (
        classify_report,
        do_coordinates,
        fibration_report,
        invariants_report,
        isogeny_report,
        j_invariants,
        params_report,
        schema_tag,
        tangent_report,
        verify_all,
    )

__all__ = [
    "classify_report",
    "do_coordinates",
    "fibration_report",
    "invariants_report",
    "isogeny_report",
    "j_invariants",
    "params_report",
    "schema_tag",
    "tangent_report",
    "verify_all",
]
