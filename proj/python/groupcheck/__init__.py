"""Finite group computation engine and claim-checking harness.

The heavy lifting lives in the compiled ``_core`` module; this wrapper turns
its JSON-string reports into plain dictionaries.
"""

import json as _json

from ._core import (
    Group,
    GroupError,
    __version__,
    catalog,
    catalog_names,
    claim_ids,
    claim_summaries,
    emit_permutations,
    emit_table,
    group,
    load,
    parse,
)
from . import _core


def analyze(g):
    """Full structure report for one group, as a dict."""
    return _json.loads(_core.analyze_json(g))


def check_claim(g, claim_id):
    """Verdict dict for one claim on one group."""
    return _json.loads(_core.check_claim_json(g, claim_id))


def sweep(groups=None, claims=None, *, max_order=0, jobs=1, use_cache=True,
          cache_dir="", timing=False):
    """Run claims over catalog groups; returns the sweep report as a dict.

    ``groups``/``claims`` default to the full catalogs; pass explicit lists
    to restrict them.
    """
    return _json.loads(_core.sweep_json(groups, claims, max_order, jobs,
                                        use_cache, cache_dir, timing))


__all__ = [
    "Group",
    "GroupError",
    "__version__",
    "analyze",
    "catalog",
    "catalog_names",
    "check_claim",
    "claim_ids",
    "claim_summaries",
    "emit_permutations",
    "emit_table",
    "group",
    "load",
    "parse",
    "sweep",
]
