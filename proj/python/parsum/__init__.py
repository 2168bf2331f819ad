"""Python access to the parsum verification suites."""

import json

from ._parsum import (
    ApRow,
    ParsumError,
    Perm,
    block_shuffle,
    compose,
    compose_perms,
    cyclic_generator_values,
    demo_names,
    fault_names,
    images_disjoint,
    run_demo,
    sigma_tilde,
    suite_ids,
    verify_json,
)


def verify(suites=("all",), seed=1, cases=200, window=200, instance="all", fault=""):
    """Run suites and return the report as a dict."""
    return json.loads(verify_json(list(suites), seed, cases, window, instance, fault))


__all__ = [
    "ApRow",
    "ParsumError",
    "Perm",
    "block_shuffle",
    "compose",
    "compose_perms",
    "cyclic_generator_values",
    "demo_names",
    "fault_names",
    "images_disjoint",
    "run_demo",
    "sigma_tilde",
    "suite_ids",
    "verify",
]
