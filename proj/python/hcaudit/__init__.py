"""Hamiltonian-cycle decision pipeline and its audit harness.

The heavy lifting lives in the compiled extension; this wrapper turns its
JSON-string results into plain dicts.
"""

import json

try:
    from . import _core
except ImportError:
    # In-build layout: the extension sits next to the package on sys.path.
    import _core

Digraph = _core.Digraph
HcauditError = _core.HcauditError
bench_csv = _core.bench_csv
emit_arclist = _core.emit_arclist
generate = _core.generate
parse_arclist = _core.parse_arclist
prism = _core.prism
undirected_to_digraph = _core.undirected_to_digraph

__all__ = [
    "Digraph",
    "HcauditError",
    "bench_csv",
    "compare",
    "decide_exact",
    "decide_paper",
    "emit_arclist",
    "fuzz",
    "generate",
    "oracle",
    "parse_arclist",
    "prism",
    "undirected_to_digraph",
]


def decide_paper(digraph):
    """Run the pipeline verdict; returns a dict with kind/rank/components."""
    return json.loads(_core.decide_paper_json(digraph))


def decide_exact(digraph, limit=1_000_000):
    """Exact decision via perfect-matching enumeration."""
    return json.loads(_core.decide_exact_json(digraph, limit))


def oracle(digraph, backtrack_budget=100_000_000):
    """Ground-truth Hamiltonicity (Held-Karp, or backtracking for n > 24)."""
    return json.loads(_core.oracle_json(digraph, backtrack_budget))


def compare(digraph, enumeration_limit=1_000_000):
    """Pipeline vs. exact vs. oracle on one instance."""
    return json.loads(_core.compare_json(digraph, enumeration_limit))


def fuzz(family, n_min, n_max, trials, seed, p=0.35):
    """Deterministic fuzz campaign; returns the report as a dict."""
    return json.loads(_core.fuzz_json(family, n_min, n_max, trials, seed, p))
