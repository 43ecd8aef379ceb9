"""Galois orders and Gelfand-Tsetlin modules of gl_n.

Tableaux are dicts ``{"n": n, "rows": [top row, ..., row 1]}`` with entries
given as ints or ``"p/q"`` strings. Reports come back as plain dicts.
"""

import json

from . import _gtorders
from ._gtorders import (
    BoundaryLeak,
    DenominatorVanishes,
    NotDominant,
    StabilizerTooLarge,
    ZeroShift,
    eigenvalue_gamma,
    gt_pattern_count,
)

__all__ = [
    "BoundaryLeak",
    "DenominatorVanishes",
    "NotDominant",
    "StabilizerTooLarge",
    "ZeroShift",
    "act",
    "act_c",
    "block_graph",
    "calibrate",
    "default_profile",
    "eigenvalue_gamma",
    "evaluate_gamma",
    "generator_image",
    "gt_pattern_count",
    "gt_patterns",
    "mackey",
    "q_bound",
    "reachability",
    "s_set",
    "skew_orbit",
    "verify_center",
    "verify_relations",
    "weyl_dimension",
    "x_set",
]


def _dump(value):
    return value if isinstance(value, str) else json.dumps(value)


def _profile(profile):
    return None if profile is None else _dump(profile)


def calibrate(offset_min=-3, offset_max=3, jobs=1):
    return json.loads(_gtorders.calibrate(offset_min, offset_max, jobs))


def default_profile():
    return json.loads(_gtorders.default_profile())


def verify_relations(n, profile=None, jobs=1):
    return json.loads(_gtorders.verify_relations(n, _profile(profile), jobs))


def verify_center(n, profile=None):
    return json.loads(_gtorders.verify_center(n, _profile(profile)))


def evaluate_gamma(m, k, tableau):
    return _gtorders.evaluate_gamma(m, k, _dump(tableau))


def generator_image(generator, n, profile=None):
    return json.loads(_gtorders.generator_image(generator, n, _profile(profile)))


def act(generator, vector, top=None, profile=None):
    """Apply e_ij to a tableau or a list of {"tableau", "coeff"} terms."""
    return json.loads(_gtorders.act(generator, _dump(vector), top, _profile(profile)))


def act_c(m, k, tableau, profile=None):
    return json.loads(_gtorders.act_c(m, k, _dump(tableau), _profile(profile)))


def gt_patterns(top):
    return json.loads(_gtorders.gt_patterns(list(top)))


def weyl_dimension(top):
    return int(_gtorders.weyl_dimension(list(top)))


def reachability(tableau, radius, mode="lattice", profile=None):
    return json.loads(_gtorders.reachability(_dump(tableau), radius, mode, _profile(profile)))


def s_set(source, target=None):
    return json.loads(_gtorders.s_set(_dump(source), _dump(source if target is None else target)))


def x_set(generator, tableau, profile=None):
    return json.loads(_gtorders.x_set(generator, _dump(tableau), _profile(profile)))


def block_graph(seeds, radius, profile=None):
    return json.loads(_gtorders.block_graph([_dump(s) for s in seeds], radius, _profile(profile)))


def q_bound(n):
    return int(_gtorders.q_bound(n))


def mackey(spec):
    """spec: a SemidirectSpec dict, or "s3" / "a4"."""
    if spec in ("s3", "a4"):
        spec = _gtorders.example_spec(spec)
    return json.loads(_gtorders.mackey(_dump(spec)))


def skew_orbit(base, shift, steps):
    return json.loads(_gtorders.skew_orbit(str(base), str(shift), steps))
