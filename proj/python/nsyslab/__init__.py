"""Piecewise-linear systems, exponent spectra, and a lattice minima lab.

The heavy lifting happens in the compiled extension ``nsyslab._core``; the
wrappers here accept and return plain dicts/lists so callers do not have to
shuttle JSON strings around. Rational values travel as strings like ``"5/6"``
to keep everything exact.
"""

import json as _json

from ._core import (
    approximate_json,
    block_json,
    discretize_json,
    estimate_exponents,
    eval_map,
    minima_trajectory,
    ramp_json,
    realize_json,
    render_svg,
    schedule_exponents_json,
    spectrum_json,
    validate,
    version,
)

__version__ = version()

__all__ = [
    "approximate",
    "block",
    "discretize",
    "estimate_exponents_dict",
    "evaluate",
    "minima_trajectory",
    "ramp",
    "realize",
    "render_svg",
    "schedule_exponents",
    "spectrum",
    "validate_map",
    "version",
]


def _loads(s):
    return _json.loads(s)


def validate_map(map_obj, kind="auto", all_violations=False):
    """Validate a map dict; returns the kinded map or {'valid': False, ...}."""
    return _loads(validate(_json.dumps(map_obj), kind, all_violations))


def ramp(n, a, b):
    return _loads(ramp_json(n, a, b))


def block(coords):
    return _loads(block_json([str(c) for c in coords]))


def evaluate(map_obj, q):
    return eval_map(_json.dumps(map_obj), q)


def realize(schedule_obj, Q):
    return _loads(realize_json(_json.dumps(schedule_obj), Q))


def schedule_exponents(schedule_obj, audit_Q="", tol="1/50"):
    return _loads(schedule_exponents_json(_json.dumps(schedule_obj), audit_Q, tol))


def spectrum(n, omega, audit_Q="59049", tol="1/50"):
    return _loads(spectrum_json(n, [str(w) for w in omega], audit_Q, tol))


def discretize(map_obj, points):
    return _loads(discretize_json(_json.dumps(map_obj), [str(p) for p in points]))


def approximate(map_obj, eps):
    return _loads(approximate_json(_json.dumps(map_obj), eps))


def estimate_exponents_dict(u, q_max, step=0.5, tail=0.5):
    return _loads(estimate_exponents([str(c) for c in u], q_max, step, tail))
