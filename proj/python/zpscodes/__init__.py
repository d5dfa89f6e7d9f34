"""Linear codes over Z_{p^s} under the extended Lee weight."""

import json

from ._core import (
    InvariantViolation,
    LimitExceeded,
    ZpsError,
    code_type,
    codewords,
    dual,
    gray_preimage,
    gray_scalar,
    gray_table,
    gray_vec,
    kernel_dim,
    kernel_dim_bounds,
    lee_weight,
)
from . import _core

__all__ = [
    "InvariantViolation",
    "LimitExceeded",
    "ZpsError",
    "analyze",
    "code_type",
    "codewords",
    "dual",
    "gray_preimage",
    "gray_scalar",
    "gray_table",
    "gray_vec",
    "kernel_dim",
    "kernel_dim_bounds",
    "lee_weight",
    "search",
]


def analyze(p, s, rows, n=None, max_enum=1 << 20, max_kernel=1 << 12, threads=1):
    """Full analysis report of the code spanned by `rows`, as a dict."""
    return json.loads(_core._analyze_json(p, s, rows, n, max_enum, max_kernel, threads))


def search(p, s, n, exhaustive=False, budget=1000, seed=1, targets=()):
    """Search records as a list of dicts (same content as the NDJSON lines)."""
    text = _core._search_ndjson(p, s, n, exhaustive, budget, seed, list(targets))
    return [json.loads(line) for line in text.splitlines()]
