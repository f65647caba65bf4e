"""Degrees of points on hypersurfaces.

Every structured result is returned as a dict decoded from the same JSON the command-line
tool prints. Big integers and rationals stay as decimal strings; use fractions.Fraction on them.
"""

import json as _json

from . import _hypdeg
from ._hypdeg import HypdegError, factor, is_irreducible, thread_count

__all__ = [
    "HypdegError",
    "certify_index",
    "certify_no_odd",
    "coray",
    "degrees",
    "exp",
    "experiment",
    "factor",
    "hyper",
    "is_irreducible",
    "polytope",
    "probe_rih",
    "specialize",
    "springer",
    "thread_count",
]


def _ints(v):
    if isinstance(v, str):
        return v
    return ",".join(str(int(x)) for x in v)


def polytope(poly):
    return _json.loads(_hypdeg.polytope(poly))


def exp(poly, J=None, mode=None, seed=1):
    """Exp(H) exactly (mode "exact") or a certified lower bound for Exp_J(H); J is 1-based."""
    return _json.loads(_hypdeg.exp(poly, _ints(J or []), mode or "", seed))


def degrees(poly, bound=200, extras=None):
    return _json.loads(_hypdeg.degrees(poly, bound, _ints(extras or [])))


def specialize(poly, degrees, T=100, seed=1, modulus="", solution=""):
    return _json.loads(_hypdeg.specialize(poly, _ints(degrees), T, seed, modulus, solution))


def springer(poly, point="", from_point=None, k=1, seed=1):
    return _json.loads(_hypdeg.springer(poly, point, _ints(from_point or []), k, seed))


def coray(poly, point="", from_point=None, seed=1):
    return _json.loads(_hypdeg.coray(poly, point, _ints(from_point or []), seed))


def hyper(f, targets, point="", search=100, seed=1):
    return _json.loads(_hypdeg.hyper(f, _ints(targets), point, search, seed))


def certify_no_odd(f, d, probe=-1):
    return _json.loads(_hypdeg.certify_no_odd(f, str(d), probe))


def certify_index(F, p, m, probe=-1):
    return _json.loads(_hypdeg.certify_index(F, p, m, probe))


def experiment(config, csv=""):
    """Runs a field-count experiment; config is a dict with the same keys as the CLI's JSON file."""
    return _json.loads(_hypdeg.experiment(_json.dumps(config), csv))


def probe_rih(poly, deg, coeff):
    return _json.loads(_hypdeg.probe_rih(poly, deg, coeff))
