"""The integer matrix C relating relative and local BPS counts,

    C @ [n_rel_d]_d = [(-1)^(dw+1) dw n_loc_d]_d,

with

    C_st = (-1)^(sw) / (s/t)^2 * sum_{k in I(s/t)} (-1)^omega(s/(kt)) (-1)^(ktw)
           * binom(k(tw-1) - 1, k - 1)        if t | s, else 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import _sparse
from .arith import _check_positive, divisors, gen_binomial, iset, omega
from .transforms import (
    InvariantSequence,
    Kind,
    TangencyContext,
    _expect,
    local_kernel_matrix,
    relative_kernel_matrix,
)


class NonIntegralEntry(ArithmeticError):
    def __init__(self, s: int, t: int, w: int, value: Fraction):
        super().__init__(f"C[{s},{t}] at w={w} is {value}, not an integer")
        self.s, self.t, self.w, self.value = s, t, w, value


@lru_cache(maxsize=None)
def c_entry(s: int, t: int, w: int) -> Fraction:
    """Entry (s, t) of C for tangency ``w``, evaluated exactly.

    Integrality is not assumed here; :func:`build_c_matrix` checks it.
    """
    for x in (s, t, w):
        _check_positive(x)
    if s % t:
        return Fraction(0)
    q = s // t
    total = 0
    for k in iset(q):
        sign = (-1) ** (omega(q // k) + k * t * w)
        total += sign * gen_binomial(k * (t * w - 1) - 1, k - 1)
    return Fraction((-1) ** (s * w) * total, q * q)


@dataclass(frozen=True, eq=True)
class CorrespondenceMatrix:
    """Finite truncation of C (or of its inverse), divisor-sparse.

    ``rows[s - 1]`` maps each column ``t | s`` with a nonzero entry to that
    integer entry.
    """

    w: int
    rows: tuple[dict[int, int], ...] = field(repr=False)
    inverse: bool = False

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, st: tuple[int, int]) -> int:
        s, t = st
        if not (1 <= s <= self.size and 1 <= t <= self.size):
            raise IndexError(f"({s}, {t}) outside a {self.size}x{self.size} matrix")
        return self.rows[s - 1].get(t, 0)

    def dense(self) -> list[list[int]]:
        return _sparse.to_dense(list(self.rows))

    def determinant(self) -> int:
        if any(t > s for s, row in enumerate(self.rows, 1) for t in row):
            raise ValueError("matrix is not lower-triangular")
        det = 1
        for s, row in enumerate(self.rows, 1):
            det *= row.get(s, 0)
        return det

    def apply(self, vector) -> list:
        return _sparse.apply(list(self.rows), list(vector))

    def truncate(self, n: int) -> CorrespondenceMatrix:
        return CorrespondenceMatrix(self.w, self.rows[:n], self.inverse)


def build_c_matrix(ctx: TangencyContext) -> CorrespondenceMatrix:
    """Build the N x N truncation of C. Raises :class:`NonIntegralEntry`
    if any entry fails to be an integer."""
    rows = []
    for s in range(1, ctx.N + 1):
        row = {}
        for t in divisors(s):
            value = c_entry(s, t, ctx.w)
            if value.denominator != 1:
                raise NonIntegralEntry(s, t, ctx.w, value)
            if value:
                row[t] = int(value)
        rows.append(row)
    return CorrespondenceMatrix(ctx.w, tuple(rows))


def invert_c_matrix(c: CorrespondenceMatrix) -> CorrespondenceMatrix:
    rows = _sparse.unit_lower_inverse(list(c.rows))
    if any(v.denominator != 1 for row in rows for v in map(Fraction, row.values())):
        raise ArithmeticError("inverse of C has a non-integer entry")
    inv = CorrespondenceMatrix(c.w, tuple({t: int(v) for t, v in row.items()} for row in rows), not c.inverse)
    if _sparse.matmul(list(c.rows), list(inv.rows)) != _sparse.identity(c.size):
        raise ArithmeticError("C @ C^-1 is not the identity")
    return inv


def theorem_scaling(d: int, w: int) -> int:
    """(-1)^(dw+1) * d * w, the factor multiplying n_loc_d in the theorem."""
    return (-1) ** (d * w + 1) * d * w


def local_from_relative(nrel: InvariantSequence, ctx: TangencyContext) -> InvariantSequence:
    _expect(nrel, Kind.RELATIVE_BPS, ctx)
    image = build_c_matrix(ctx).apply(nrel.values)
    return InvariantSequence(
        tuple(Fraction(x) / theorem_scaling(d, ctx.w) for d, x in enumerate(image, 1)),
        Kind.LOCAL_BPS,
    )


def relative_from_local(nloc: InvariantSequence, ctx: TangencyContext) -> InvariantSequence:
    _expect(nloc, Kind.LOCAL_BPS, ctx)
    scaled = [theorem_scaling(d, ctx.w) * x for d, x in enumerate(nloc.values, 1)]
    cinv = invert_c_matrix(build_c_matrix(ctx))
    return InvariantSequence(tuple(cinv.apply(scaled)), Kind.RELATIVE_BPS)


def composed_oracle_matrix(ctx: TangencyContext) -> list[list[Fraction]]:
    """Rebuild C as Lambda A^-1 Lambda^-1 B from the two transform kernels.

    B maps relative BPS to relative GW, A maps local BPS to local GW and
    Lambda = diag((-1)^(dw+1) dw). A is inverted by generic forward
    substitution, so nothing here touches the closed form for C.
    """
    lam = _sparse.diagonal([Fraction(theorem_scaling(d, ctx.w)) for d in range(1, ctx.N + 1)])
    lam_inv = _sparse.diagonal([1 / row[d] for d, row in enumerate(lam, 1)])
    a_inv = _sparse.unit_lower_inverse(local_kernel_matrix(ctx))
    b = relative_kernel_matrix(ctx)
    product = _sparse.matmul(lam, _sparse.matmul(a_inv, _sparse.matmul(lam_inv, b)))
    return [[Fraction(x) for x in row] for row in _sparse.to_dense(product)]
