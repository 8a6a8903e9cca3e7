"""Print a truncation of C (and optionally its inverse) as an aligned table.

    python scripts/c_matrix_table.py --w 3 --n 12 --inverse
"""

import argparse
from dataclasses import dataclass

from bpscount import TangencyContext, build_c_matrix, invert_c_matrix


@dataclass
class TableConfig:
    w: int = 3
    n: int = 12
    inverse: bool = False


def render(rows):
    cells = [[str(x) if x else "." for x in row[: s + 1]] for s, row in enumerate(rows)]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--w", type=int, default=TableConfig.w)
    parser.add_argument("--n", type=int, default=TableConfig.n)
    parser.add_argument("--inverse", action="store_true")
    cfg = TableConfig(**vars(parser.parse_args()))

    c = build_c_matrix(TangencyContext(cfg.w, cfg.n))
    print(f"C, w={cfg.w}, N={cfg.n}")
    print(render(c.dense()))
    if cfg.inverse:
        print(f"\nC^-1, w={cfg.w}, N={cfg.n}")
        print(render(invert_c_matrix(c).dense()))


if __name__ == "__main__":
    main()
