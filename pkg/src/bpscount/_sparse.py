"""Lower-triangular matrices stored row-wise as ``{column: value}`` dicts.

Row and column indices are 1-based; ``rows[s - 1]`` holds row ``s``. Zero
entries are omitted. Every matrix in this package is supported on pairs
``t | s``, and that support is closed under products and inverses.
"""

from __future__ import annotations

from fractions import Fraction

Rows = list[dict[int, Fraction | int]]


def identity(n: int) -> Rows:
    return [{s: 1} for s in range(1, n + 1)]


def diagonal(values) -> Rows:
    return [{s: v} if v else {} for s, v in enumerate(values, start=1)]


def matmul(a: Rows, b: Rows) -> Rows:
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")
    out: Rows = []
    for row in a:
        acc: dict[int, Fraction | int] = {}
        for u, x in row.items():
            for t, y in b[u - 1].items():
                acc[t] = acc.get(t, 0) + x * y
        out.append({t: v for t, v in sorted(acc.items()) if v})
    return out


def apply(a: Rows, v) -> list:
    if len(a) != len(v):
        raise ValueError(f"size mismatch: matrix {len(a)}, vector {len(v)}")
    return [sum((x * v[t - 1] for t, x in row.items()), 0) for row in a]


def unit_lower_inverse(a: Rows) -> Rows:
    """Inverse of a unit lower-triangular matrix by forward substitution."""
    inv: Rows = []
    for s, row in enumerate(a, start=1):
        if row.get(s) != 1 or any(t > s for t in row):
            raise ValueError(f"row {s} is not unit lower-triangular")
        acc: dict[int, Fraction | int] = {s: 1}
        for u, x in row.items():
            if u == s:
                continue
            for t, y in inv[u - 1].items():
                acc[t] = acc.get(t, 0) - x * y
        inv.append({t: v for t, v in sorted(acc.items()) if v})
    return inv


def unit_lower_solve(a: Rows, b) -> list:
    """Solve ``a @ x = b`` for unit lower-triangular ``a``."""
    if len(a) != len(b):
        raise ValueError(f"size mismatch: matrix {len(a)}, vector {len(b)}")
    x: list = []
    for s, row in enumerate(a, start=1):
        if row.get(s) != 1 or any(t > s for t in row):
            raise ValueError(f"row {s} is not unit lower-triangular")
        x.append(b[s - 1] - sum((c * x[t - 1] for t, c in row.items() if t != s), 0))
    return x


def to_dense(a: Rows) -> list[list]:
    n = len(a)
    return [[row.get(t, 0) for t in range(1, n + 1)] for row in a]
