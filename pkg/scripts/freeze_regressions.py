#!/usr/bin/env python3
"""Regenerate the frozen regression fixtures under tests/data/.

Run from the repository root after an intentional behavior change:

    python scripts/freeze_regressions.py

Two fixtures are written:
  density_decades_k2.json   represented-integer counts of x^2 + 2y^2 at
                            x = 10^3 .. 10^8
  scaling_counts_k2.json    distinct squared-distance counts of the m*m
                            box, k = 2, for m = 10 .. 500

Both are exact integer outputs, so any diff is a real behavior change,
never numeric noise.
"""

from __future__ import annotations

import json
from pathlib import Path

from few_distances import (
    LatticeModel,
    QuadraticForm,
    count_represented,
    distinct_count_via_value_grid,
    sieve_represented,
)

DATA_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"

DECADES = list(range(3, 9))
SCALING_M_LO = 10
SCALING_M_HI = 500


def freeze_density() -> dict:
    form = QuadraticForm(1, 0, 2)
    rset = sieve_represented(form, 10 ** DECADES[-1])
    samples = [
        {"x": 10**d, "count": count_represented(rset, 10**d)} for d in DECADES
    ]
    return {"form": [1, 0, 2], "samples": samples}


def freeze_scaling() -> dict:
    model = LatticeModel(k=2)
    counts = [
        distinct_count_via_value_grid(model, m)
        for m in range(SCALING_M_LO, SCALING_M_HI + 1)
    ]
    return {"k": 2, "m_lo": SCALING_M_LO, "m_hi": SCALING_M_HI, "counts": counts}


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    for name, payload in (
        ("density_decades_k2.json", freeze_density()),
        ("scaling_counts_k2.json", freeze_scaling()),
    ):
        path = DATA_DIR / name
        path.write_text(json.dumps(payload, indent=2) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
