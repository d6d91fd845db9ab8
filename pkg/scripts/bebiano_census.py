"""Census of eigenvalue layouts and reconstruction error for random Bebiano matrices.

    python3 scripts/bebiano_census.py --samples 300 --num 10 --den 4 --seed 2
"""
import argparse
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from schwarz_spectra import Spectrum, bebiano_case, bebiano_from_spectrum, bebiano_matrix, oracle
from schwarz_spectra.errors import SchwarzError
from schwarz_spectra.inverse import bebiano_parameters


@dataclass(frozen=True)
class CensusConfig:
    samples: int = 300
    min_n: int = 3
    max_n: int = 9
    num: int = 10
    den: int = 4
    seed: int = 2


def census(cfg: CensusConfig) -> dict:
    rng = random.Random(cfg.seed)
    cases, failures, errors = Counter(), Counter(), []
    for _ in range(cfg.samples):
        n = rng.randint(cfg.min_n, cfg.max_n)
        draw = lambda: Fraction(rng.randint(1, cfg.num), rng.randint(1, cfg.den))
        a, c = draw(), tuple(draw() for _ in range(n - 1))
        s = Spectrum.of(list(oracle.eigenvalues(bebiano_matrix(a, c)).roots))
        cases[bebiano_case(s)] += 1
        try:
            ra, rc = bebiano_parameters(bebiano_from_spectrum(s))
        except SchwarzError as exc:
            failures[type(exc).__name__] += 1
            continue
        errors.append(max(abs(float(x - y)) / max(1.0, abs(float(y))) for x, y in zip((ra,) + rc, (a,) + c)))
    return {"cases": dict(cases), "failures": dict(failures), "errors": errors}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(CensusConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    res = census(CensusConfig(**vars(ap.parse_args())))
    for case, count in sorted(res["cases"].items(), key=lambda kv: str(kv[0])):
        print(f"case {case}: {count}")
    print(f"failures: {res['failures'] or 'none'}")
    if res["errors"]:
        errs = sorted(res["errors"])
        print(f"relative error: median {errs[len(errs) // 2]:.2e}, max {errs[-1]:.2e}")


if __name__ == "__main__":
    main()
