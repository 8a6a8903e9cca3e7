"""Sweep tangency values w and truncation orders N, checking that C is integral,
agrees with the composed-transform reconstruction, and that integer local BPS
counts map to integer relative BPS counts.

    python scripts/integrality_sweep.py --w-max 30 --n 60
"""

import argparse
import random
import time
from dataclasses import asdict, dataclass, fields

from bpscount import (
    InvariantSequence,
    Kind,
    NonIntegralEntry,
    TangencyContext,
    build_c_matrix,
    check_relative_integrality,
    composed_oracle_matrix,
    invert_c_matrix,
    relative_from_local,
)


@dataclass
class SweepConfig:
    w_min: int = 1
    w_max: int = 30
    n: int = 60
    oracle_n: int = 30
    samples: int = 20
    seed: int = 0


def run(cfg: SweepConfig) -> bool:
    rng = random.Random(cfg.seed)
    ok = True
    print(f"config: {asdict(cfg)}")
    print(f"{'w':>3} {'integral':>9} {'oracle':>7} {'rel-int':>8} {'max|C^-1|':>12} {'time':>7}")
    for w in range(cfg.w_min, cfg.w_max + 1):
        start = time.perf_counter()
        ctx = TangencyContext(w, cfg.n)
        try:
            c = build_c_matrix(ctx)
            integral = True
        except NonIntegralEntry as exc:
            print(f"{w:>3} non-integral entry: {exc}")
            ok = False
            continue
        inv = invert_c_matrix(c)
        octx = TangencyContext(w, min(cfg.oracle_n, cfg.n))
        oracle = build_c_matrix(octx).dense() == composed_oracle_matrix(octx)
        rel_int = all(
            check_relative_integrality(
                relative_from_local(
                    InvariantSequence(tuple(rng.randint(-10**3, 10**3) for _ in range(cfg.n)), Kind.LOCAL_BPS),
                    ctx,
                )
            ).overall
            for _ in range(cfg.samples)
        )
        biggest = max(abs(x) for row in inv.rows for x in row.values())
        ok &= integral and oracle and rel_int
        print(f"{w:>3} {integral!s:>9} {oracle!s:>7} {rel_int!s:>8} {biggest:>12.3g} {time.perf_counter() - start:>6.2f}s")
    return ok


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(SweepConfig):
        parser.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    cfg = SweepConfig(**vars(parser.parse_args()))
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
