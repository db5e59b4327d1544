"""Exact torsion-order certificates on hyperelliptic Jacobians.

Thin convenience layer over the compiled ``_torsionforge`` extension: JSON
documents coming back from the core are parsed into plain Python structures,
while exact values stay decimal strings.
"""

import json

try:
    from . import _torsionforge as _core
except ImportError:  # build-tree layout: the extension sits next to the package
    import _torsionforge as _core

Error = _core.Error

__all__ = [
    "Error",
    "build_family",
    "certify_marked",
    "certify_point",
    "cross_check",
    "derived_companion_order",
    "expected_orders",
    "integralize",
    "l_certificate",
    "name",
    "order_of_point",
    "phi_decomposition",
    "relation_checks",
    "run_corpus",
    "select_good_primes",
    "version",
]

__version__ = _core.version()


def version():
    return _core.version()


def name():
    return _core.name()


def build_family(family, g, *, t=None, beta=None, integral=False):
    """Curve model for one family member, as a dict."""
    return json.loads(_core.build_family(family, g, t, beta, integral))


def expected_orders(family, g, *, t=None, beta=None):
    return _core.expected_orders(family, g, t, beta)


def phi_decomposition(family, g, *, t=None, beta=None):
    return _core.phi_decomposition(family, g, t, beta)


def certify_marked(family, g, order, *, t=None, beta=None, marked="d0",
                   relations=False, l_cert=False, modp=0):
    """Certificate dict for the exact order of a marked class."""
    return json.loads(
        _core.certify_marked(family, g, t, beta, marked, str(order), relations,
                             l_cert, modp))


def certify_point(f_int, genus, x, y, order):
    """Certificate dict for the exact order of [(x, y) - infinity]."""
    coeffs = [str(c) for c in f_int]
    return json.loads(_core.certify_point(coeffs, genus, str(x), str(y), str(order)))


def order_of_point(f_int, genus, x, y, multiple):
    """Exact order as an int, given an annihilating multiple."""
    coeffs = [str(c) for c in f_int]
    return int(_core.order_of_point(coeffs, genus, str(x), str(y), str(multiple)))


def relation_checks(family, g, *, t=None, beta=None):
    return _core.relation_checks(family, g, t, beta)


def l_certificate(family, g):
    return _core.l_certificate(family, g)


def derived_companion_order(family, g, order, *, t=None, beta=None, marked="d0"):
    (point, n) = _core.derived_companion_order(family, g, t, beta, marked, str(order))
    return point, int(n)


def select_good_primes(f_int, order, count):
    coeffs = [str(c) for c in f_int]
    return list(_core.select_good_primes(coeffs, str(order), count))


def cross_check(f_int, genus, x, y, order, primes):
    coeffs = [str(c) for c in f_int]
    return [(p, int(o), agree)
            for (p, o, agree) in _core.cross_check(coeffs, genus, str(x), str(y),
                                                   str(order), list(primes))]


def run_corpus(path, *, modp=0, jobs=1):
    """One result dict per corpus entry, in corpus order."""
    return [json.loads(line) for line in _core.run_corpus(str(path), modp, jobs)]


def integralize(f):
    """(c, integral coefficients) with c^2*f integral and primitive."""
    out = _core.integralize([str(c) for c in f])
    return out[0], out[1:]
