#!/usr/bin/env python3
"""Contrast the derivation-commutator norm growth of two coefficient decays.

For dyadic coefficients a_k = 2^-k the norm of Gamma D - D* Gamma freezes
almost immediately as the section grows; for the slower a_k = (k+1)^-1.5
it keeps climbing through every size we can afford.  The relative
increment per size doubling is the quantity of interest — directions, not
rates.

Usage:
    python3 scripts/growth_contrast.py [--sizes 64,128,256,512]
"""

import argparse

from foguel_lab import (
    HankelSpec,
    WeightSequence,
    derivation_product,
    op_norm_dense,
)

PROFILES = [
    ("dyadic 2^-k", WeightSequence.geometric(0.5)),
    ("power (k+1)^-1.5", WeightSequence.power(1.5)),
]


def commutator_norms(seq, sizes):
    out = []
    for n in sizes:
        spec = HankelSpec(seq, n)
        out.append(op_norm_dense(derivation_product(spec, "commutator")).value)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="64,128,256,512")
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    for label, seq in PROFILES:
        norms = commutator_norms(seq, sizes)
        rel = [(b - a) / a for a, b in zip(norms, norms[1:])]
        print(f"{label}:")
        for n, v in zip(sizes, norms):
            print(f"    N = {n:4d}   ||commutator|| = {v:.12f}")
        print("    relative increments:", ", ".join(f"{r:+.6f}" for r in rel))
        trend = "plateau" if max(rel) < 1e-6 else "growing"
        print(f"    -> {trend}")
        print()


if __name__ == "__main__":
    main()
