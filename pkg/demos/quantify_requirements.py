"""End-to-end: raw requirement text in, evaluable satisfaction function out.

Uses the bundled pattern base and mini word vectors.  Direction and bounds
are inferred when not supplied (keyword lexicon; bounds default to twice
the largest expectation point).
"""

from perfquant import QuantificationRequest, quantify
from perfquant.data import default_kb, default_store

kb = default_kb()
store = default_store()

requirements = [
    "The search shall return results in 15 seconds",
    "The response time shall be no more than 100 milliseconds",
    "The system shall support at least 500 transactions per second",
    "The server shall synchronize with the backup system every 2 hours",
    "The system shall be fast",
    "The system should response in 5 seconds and ideally less than 2 seconds",
]

for text in requirements:
    result = quantify(QuantificationRequest(text=text), kb, store)
    lo, hi = result.function.bounds
    print(f"\n{text!r}")
    for part_text, label, v_beta, fused in result.parts:
        beta = "n/a" if v_beta is None else f"{v_beta:g}"
        print(f"  part {part_text!r}: class {label}, expectation {beta}, score {fused:.3f}")
    for warning in result.warnings:
        print(f"  note: {warning}")
    mids = [lo + (hi - lo) * k / 4 for k in range(5)]
    curve = "  ".join(f"g({v:g})={result.function(v):.2f}" for v in mids)
    print(f"  {result.function.direction.value} over [{lo:g}, {hi:g}]: {curve}")
