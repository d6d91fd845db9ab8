"""Compare the sign-pattern verdict of random Schwarz matrices with the determinant verdict.

    python3 scripts/sign_pattern_sweep.py --samples 2000 --max-n 9 --seed 1
"""
import argparse
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from schwarz_spectra import (SchwarzMatrix, charpoly, classify,
                             classify_by_sign_pattern, cumulative_products, oracle)
from schwarz_spectra.classify import NOT_CLASSIFIED


@dataclass(frozen=True)
class SweepConfig:
    samples: int = 2000
    max_n: int = 9
    bound: int = 10
    seed: int = 1


def random_b(rng: random.Random, cfg: SweepConfig) -> tuple:
    n = rng.randint(1, cfg.max_n)
    out = []
    while len(out) < n:
        x = Fraction(rng.randint(-cfg.bound, cfg.bound), rng.randint(1, 4))
        if x:
            out.append(x)
    return tuple(out)


def sweep(cfg: SweepConfig) -> dict:
    rng = random.Random(cfg.seed)
    verdicts, mismatches, rhp_bad = Counter(), [], 0
    for _ in range(cfg.samples):
        J = SchwarzMatrix(random_b(rng, cfg))
        signs = classify_by_sign_pattern(J)
        det = classify(charpoly(J))
        verdicts[det.key()[0]] += 1
        if signs != NOT_CLASSIFIED and signs.key() != det.key():
            mismatches.append((J.b, signs.key(), det.key()))
        lhp, rhp, boundary = oracle.half_plane_counts(oracle.eigenvalues(J), 1e-6)
        if not boundary and rhp != cumulative_products(J).negatives():
            rhp_bad += 1
    return {"verdicts": dict(verdicts), "mismatches": mismatches, "rhp_disagreements": rhp_bad}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=SweepConfig.samples)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--bound", type=int, default=SweepConfig.bound)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    a = ap.parse_args()
    res = sweep(SweepConfig(a.samples, a.max_n, a.bound, a.seed))
    for kind, count in sorted(res["verdicts"].items()):
        print(f"{kind:20s} {count}")
    print(f"sign-pattern mismatches: {len(res['mismatches'])}")
    for m in res["mismatches"][:10]:
        print("  ", m)
    print(f"cumulative-product disagreements: {res['rhp_disagreements']}")


if __name__ == "__main__":
    main()
