"""Distinguishing colorings of Levi graphs and related families."""

import json as _json

from . import _core
from ._core import (
    DchromaError,
    Graph,
    chromatic_number,
    complete_graph,
    cycle_graph,
    distinguishing_chromatic_number,
    is_distinguishing,
    is_proper,
    kneser_complement,
    levi_graph,
    levi_order1,
    levi_tensor,
    random_proper_coloring,
    recipe_names,
    slope_graph,
    weak_power,
)


def automorphism_order(g, colors=()):
    return int(_core.automorphism_order(g, list(colors)))


def max_fixed_ksets(n, k):
    return int(_core.max_fixed_ksets(n, k))


def levi_expected_fixers(q, t, pgammal=False):
    return _json.loads(_core.levi_expected_fixers(q, t, pgammal))


def levi_bound(q, t):
    return _json.loads(_core.levi_bound(q, t))


def lg1_bound(n, k):
    return _json.loads(_core.lg1_bound(n, k))


def favorable_fraction(q, trials, seed=7):
    return _json.loads(_core.favorable_fraction(q, trials, seed))


def run_recipe(name, seed=7):
    return _json.loads(_core.run_recipe(name, seed))
