"""Tabular fact verification with executable natural-logic proofs."""

try:
    from ._core import (
        arith_answer,
        canonical_label,
        compare_quantities,
        compute_metrics,
        execute_proof,
        verify_claim,
    )
except ImportError:
    # Build-tree layout: the extension sits on sys.path next to the package
    # directory instead of inside it.
    from _core import (
        arith_answer,
        canonical_label,
        compare_quantities,
        compute_metrics,
        execute_proof,
        verify_claim,
    )

__all__ = [
    "arith_answer",
    "canonical_label",
    "compare_quantities",
    "compute_metrics",
    "execute_proof",
    "verify_claim",
]
