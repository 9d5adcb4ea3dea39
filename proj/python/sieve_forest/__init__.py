"""Cyclic sieving on plane trees and tree-rooted maps.

Trees are parenthesis words, tree-rooted maps are walk words over ENWS.
Families and parameters are plain dicts, e.g. {"family": "by_leaves", "n": 3, "k": 2}.
"""

import json

from . import _sieve_forest as _core
from ._sieve_forest import InfeasibleParams, SizeGuardExceeded, rotate, orbit, rotate_map, theorems

__all__ = [
    "InfeasibleParams",
    "SizeGuardExceeded",
    "count",
    "cubic_to_map",
    "dissection_to_tree",
    "enumerate",
    "kreweras",
    "map_to_cubic",
    "ncm_to_tree",
    "ncp_to_tree",
    "orbit",
    "polynomial",
    "rotate",
    "rotate_map",
    "run",
    "sum_identity",
    "theorems",
    "tree_to_dissection",
    "tree_to_ncm",
    "tree_to_ncp",
    "verify",
]


def enumerate(family):
    return _core.enumerate(json.dumps(family))


def count(family):
    return int(_core.count(json.dumps(family)))


def polynomial(theorem, **params):
    """Coefficient list (ascending powers) plus the product form and shape flags."""
    out = json.loads(_core.polynomial(theorem, json.dumps(params)))
    if "polynomial" in out:
        out["coeffs"] = [int(c) for c in out.pop("polynomial")["coeffs"]]
    return out


def verify(theorem, all_exponents=False, jobs=1, guard=0, **params):
    rep = json.loads(_core.verify(theorem, json.dumps(params), all_exponents, jobs, guard))
    for row in rep["rows"]:
        for key in ("brute", "closed", "poly"):
            row[key] = int(row[key])
    return rep


def sum_identity(which, n):
    return _core.sum_identity(which, n)


def tree_to_ncm(word):
    return [tuple(p) for p in json.loads(_core.tree_to_ncm(word))]


def ncm_to_tree(pairs):
    return _core.ncm_to_tree(json.dumps([list(p) for p in pairs]))


def tree_to_ncp(word):
    """Blocks numbered from 1."""
    return json.loads(_core.tree_to_ncp(word))


def ncp_to_tree(blocks):
    return _core.ncp_to_tree(json.dumps(blocks))


def kreweras(blocks):
    return json.loads(_core.kreweras(json.dumps(blocks)))


def tree_to_dissection(word):
    return json.loads(_core.tree_to_dissection(word))


def dissection_to_tree(dissection):
    return _core.dissection_to_tree(json.dumps(dissection))


def map_to_cubic(word):
    return json.loads(_core.map_to_cubic(word))


def cubic_to_map(cubic):
    return _core.cubic_to_map(json.dumps(cubic))


def run(*args):
    """Runs a CLI command; returns (exit code, stdout, stderr)."""
    return _core.run(list(args))
