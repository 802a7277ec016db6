#!/usr/bin/env python3
"""Regenerate tests/golden/classification.json.

The counts below are artifact-generated golden values: they come from the
exhaustive scans in ujla.classify, cross-checked against the independent
oracles in tests/reference.py (slot-symmetrization and sympy expansion)
before being frozen.  Rerun after any change to the identity engine and
re-run the cross-check tests before committing the new file.
"""

from __future__ import annotations

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))

from reference import all_tensors, ref_is_ujla  # noqa: E402

from ujla.classify import SearchSpec, enumerate_ujla  # noqa: E402

CASES = [
    (1, 2, "polynomial"), (1, 2, "pointwise"),
    (1, 3, "polynomial"), (1, 3, "pointwise"),
    (1, 5, "polynomial"), (1, 5, "pointwise"),
    (2, 2, "polynomial"), (2, 2, "pointwise"),
    (2, 3, "polynomial"), (2, 3, "pointwise"),
]


def main() -> None:
    golden: dict = {"comment": "artifact-generated golden values; see scripts/freeze_golden.py"}
    entries = {}
    for dim, p, semantics in CASES:
        spec = SearchSpec(dim, p, semantics)
        result = enumerate_ujla(spec, workers=2)
        key = f"d{dim}_p{p}_{semantics}"
        entry = {
            "dim": dim,
            "prime": p,
            "semantics": semantics,
            "total": result.total,
            "ujla_count": result.ujla_count,
            "class_count": result.class_count,
            "orbit_sizes": [c.orbit_size for c in result.classes],
            "failure_counts": {name: n for name, n in result.failure_counts},
        }
        if result.total <= 256:
            entry["survivors"] = [list(s) for s in result.survivors]
            entry["representatives"] = [list(c.representative) for c in result.classes]
        entries[key] = entry
        print(f"{key}: {result.ujla_count} / {result.class_count}")

    # Independent oracle cross-check before freezing the F_2 d=2 counts.
    for semantics in ("polynomial", "pointwise"):
        oracle = [flat for flat, t in all_tensors(2, 2) if ref_is_ujla(t, 2, 2, semantics)]
        key = f"d2_p2_{semantics}"
        frozen = [tuple(s) for s in entries[key]["survivors"]]
        if oracle != frozen:
            raise SystemExit(f"oracle disagrees with scan for {key}; refusing to freeze")
    print("independent oracle agrees on d=2, p=2 (both semantics)")

    golden["cases"] = entries
    out = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"
    out.mkdir(parents=True, exist_ok=True)
    path = out / "classification.json"
    path.write_text(json.dumps(golden, indent=2) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
