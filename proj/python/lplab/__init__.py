"""Exact distinct-distance experiments under l_p metrics."""

import json
from fractions import Fraction

try:
    from . import _lplab
except ImportError:
    import _lplab

LplabError = _lplab.LplabError
__version__ = _lplab.__version__

__all__ = [
    "LplabError",
    "grid",
    "row_construction",
    "random_points",
    "l1_to_linf",
    "census",
    "bisector",
    "circle_graph",
    "structure",
    "gap_fit",
    "energy",
    "render_svg",
    "run_cli",
]


def _raw(points):
    return [(str(Fraction(x)), str(Fraction(y))) for x, y in points]


def _points(raw):
    return [(Fraction(x), Fraction(y)) for x, y in raw]


def grid(k):
    return _points(_lplab.grid(k))


def row_construction(k):
    return _points(_lplab.row_construction(k))


def random_points(n, seed, box=(0, 100, 0, 100), denom=1):
    return _points(_lplab.random_points(n, seed, [str(Fraction(b)) for b in box], denom))


def l1_to_linf(points):
    return _points(_lplab.l1_to_linf(_raw(points)))


def census(points, metric="inf", threads=1):
    return json.loads(_lplab.census(_raw(points), metric, threads))


def bisector(u, v, p, inflections=False):
    (u,), (v,) = _raw([u]), _raw([v])
    return json.loads(_lplab.bisector(u, v, p, inflections))


def circle_graph(points, p=2):
    return json.loads(_lplab.circle_graph(_raw(points), p))


def structure(points, rho="1/4", theta="1/4", gamma="1/4", beta="1/4"):
    return json.loads(_lplab.structure(_raw(points), str(rho), str(theta), str(gamma), str(beta)))


def gap_fit(values, d_max=2, budget=None):
    values = [str(Fraction(v)) for v in values]
    if budget is None:
        budget = 2 * len(set(values))
    return json.loads(_lplab.gap_fit(values, d_max, budget))


def energy(values):
    return json.loads(_lplab.energy([str(Fraction(v)) for v in values]))


def render_svg(points, cover=False):
    return _lplab.render_svg(_raw(points), cover)


def run_cli(*args):
    """Runs the command line tool in process; returns (exit code, stdout, stderr)."""
    return _lplab.run_cli([str(a) for a in args])
