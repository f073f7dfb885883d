"""Point counts of the curve attached to a outside the base field.

Draws random (a1, b, k) with Tr(k) = 1 and tabulates affine point counts
against the 2(q-2) threshold.
"""

import argparse
import json
import random
from collections import Counter
from dataclasses import asdict, dataclass

from trinomial_pp.fields import DomainError, GF2n
from trinomial_pp.trinomial import build_curve, curve_point_count


@dataclass
class CurveRun:
    n: int = 4
    samples: int = 50
    seed: int = 0


def explore(cfg: CurveRun) -> dict:
    F = GF2n(cfg.n)
    rng = random.Random(cfg.seed)
    ks = [x for x in F.elements() if F.trace(x)]
    counts, skipped = Counter(), 0
    for _ in range(cfg.samples):
        a1, b, k = rng.randrange(1, F.q), rng.randrange(1, F.q), rng.choice(ks)
        try:
            counts[curve_point_count(build_curve(F, a1, b, k))] += 1
        except DomainError:
            skipped += 1
    bound = 2 * (F.q - 2)
    return {
        "config": asdict(cfg),
        "q": F.q,
        "threshold_2(q-2)": bound,
        "histogram": dict(sorted(counts.items())),
        "reaching_threshold": sum(v for c, v in counts.items() if c >= bound),
        "all_even": all(c % 2 == 0 for c in counts),
        "skipped_degenerate": skipped,
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for n in args.n:
        print(json.dumps(explore(CurveRun(n, args.samples, args.seed))))


if __name__ == "__main__":
    main()
