"""Covariant variational bicomplex engine."""

from _varcomplex import (  # noqa: F401
    Form,
    TraceForm,
    Scenario,
    StructuralError,
    UnsupportedError,
    ResourceError,
    load_scenario,
    parse_scenario,
    scenario_names,
    selftest,
)

__all__ = [
    "Form",
    "TraceForm",
    "Scenario",
    "StructuralError",
    "UnsupportedError",
    "ResourceError",
    "load_scenario",
    "parse_scenario",
    "scenario_names",
    "selftest",
]
