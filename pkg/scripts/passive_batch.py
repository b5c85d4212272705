"""
passive_batch.py

Batch certification harness for the passive synthesis pipeline.  Draws random
passive systems (optionally forcing a fraction to have exactly repeated mode
frequencies), runs passive_realize on each, and certifies triangularity of
the transformed drift, symplecticity of the transform, per-stage passivity,
and transfer-function equivalence.  Prints one JSON summary to stdout and
exits 0 only when every case certifies, so the script can gate CI runs or
larger parameter sweeps.

    python scripts/passive_batch.py --count 500 --max-modes 6 --seed 7
"""

import argparse
import json
import sys
import time

import numpy as np

from cascade_synth import (
    certify_equivalence,
    certify_symplectic,
    from_passive_form,
    is_cascade_realizable,
    is_passive,
    passive_realize,
)
from cascade_synth.sampling import random_passive_form, random_unitary


def run_batch(args):
    rng = np.random.default_rng(args.seed)
    worst_mismatch = 0.0
    worst_upper = 0.0
    failures = []
    degenerate_count = 0
    t0 = time.perf_counter()
    for case in range(args.count):
        n = int(rng.integers(1, args.max_modes + 1))
        m = int(rng.integers(1, args.fields + 1))
        degenerate = rng.random() < args.degenerate_fraction and n > 1
        degenerate_count += degenerate
        pf = random_passive_form(n, m, rng, degenerate=degenerate)
        sys_ = from_passive_form(pf, s=random_unitary(m, rng))

        realization = passive_realize(sys_, tol=args.tol)
        triangularity = is_cascade_realizable(realization.system, tol=args.tol)
        worst_upper = max(worst_upper, triangularity.max_upper_residual)
        if not triangularity.is_triangular:
            failures.append({"case": case, "check": "triangularity"})
        if not certify_symplectic(realization.transform.v, tol=args.tol):
            failures.append({"case": case, "check": "symplectic"})
        if not all(is_passive(stage, args.tol) for stage in realization.chain.stages):
            failures.append({"case": case, "check": "stage_passivity"})
        equivalence = certify_equivalence(sys_, realization.system, seed=args.seed)
        worst_mismatch = max(worst_mismatch, equivalence.max_rel_mismatch)
        if not equivalence.verdict:
            failures.append({"case": case, "check": "equivalence"})
    return {
        "count": args.count,
        "degenerate_cases": degenerate_count,
        "failures": failures,
        "worst_transfer_mismatch": worst_mismatch,
        "worst_upper_residual": worst_upper,
        "tolerance": args.tol,
        "seed": args.seed,
        "seconds": round(time.perf_counter() - t0, 3),
        "ok": not failures,
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[2])
    parser.add_argument("--count", type=int, default=200, help="number of random cases")
    parser.add_argument("--max-modes", type=int, default=5, help="mode count upper bound")
    parser.add_argument("--fields", type=int, default=4, help="field count upper bound")
    parser.add_argument("--seed", type=int, default=0, help="RNG seed")
    parser.add_argument(
        "--degenerate-fraction",
        type=float,
        default=0.2,
        help="fraction of cases with repeated mode frequencies",
    )
    parser.add_argument("--tol", type=float, default=1e-9, help="certification tolerance")
    args = parser.parse_args(argv)

    summary = run_batch(args)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0 if summary["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
