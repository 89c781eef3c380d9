"""Secrecy over chromatic simplicial models.

Models live in JSON documents; formulas use an ASCII syntax with `K{a}` and
`S{a}` modalities. See the project README for the grammar and file formats.
"""

from simpsec._core import (
    Formula,
    Model,
    ToolkitError,
    check_derivation_json,
    check_validity_bounded,
    default_pool,
    fixture_derivations,
    parse_formula,
    print_formula,
    propositional_tautology,
    random_model,
    share_expand,
)

__all__ = [
    "Formula",
    "Model",
    "ToolkitError",
    "check_derivation_json",
    "check_validity_bounded",
    "default_pool",
    "fixture_derivations",
    "parse_formula",
    "print_formula",
    "propositional_tautology",
    "random_model",
    "share_expand",
]
