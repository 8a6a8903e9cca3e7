"""Gromov-Witten <-> BPS transforms for multiples of a primitive class.

Local:     I_l = sum_{d k = l} n_d / k^3
Relative:  N_l = sum_{d k = l} n_d * M(k, d w),
           M(k, w) = binom(k(w-1) - 1, k - 1) / k^2

Both kernels only couple degree ``l`` to divisors of ``l``, so a truncation
to degrees ``1..N`` is exact and prefix-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import _sparse
from .arith import _check_positive, divisors, gen_binomial, mobius, to_rational


class Kind(str, Enum):
    LOCAL_GW = "local-GW"
    LOCAL_BPS = "local-BPS"
    RELATIVE_GW = "relative-GW"
    RELATIVE_BPS = "relative-BPS"
    CURVE_COUNTS = "curve-counts"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TangencyContext:
    """Intersection number ``w = D.beta`` and truncation order ``N``."""

    w: int
    N: int

    def __post_init__(self):
        _check_positive(self.w)
        _check_positive(self.N)


@dataclass(frozen=True)
class InvariantSequence:
    """Degrees ``1..N`` of a GW or BPS sequence; ``values[d - 1]`` is degree ``d``."""

    values: tuple[Fraction, ...]
    kind: Kind

    def __post_init__(self):
        values = tuple(to_rational(v) for v in self.values)
        if not values:
            raise ValueError("an invariant sequence needs at least one degree")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "kind", Kind(self.kind))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, d: int) -> Fraction:
        """Degree-``d`` entry (1-based)."""
        if not 1 <= d <= len(self.values):
            raise IndexError(f"degree {d} outside 1..{len(self.values)}")
        return self.values[d - 1]

    def truncate(self, n: int) -> InvariantSequence:
        return InvariantSequence(self.values[:n], self.kind)


def _expect(seq: InvariantSequence, kind: Kind, ctx: TangencyContext) -> None:
    if seq.kind is not kind:
        raise ValueError(f"expected a {kind} sequence, got {seq.kind}")
    if len(seq) != ctx.N:
        raise ValueError(f"sequence has {len(seq)} entries but N = {ctx.N}")


def multiple_cover_contribution(k: int, w: int) -> Fraction:
    """Contribution of k-fold covers of a rigid maximal-tangency curve with
    contact order ``w``: binom(k(w-1) - 1, k - 1) / k^2."""
    _check_positive(k)
    _check_positive(w)
    return Fraction(gen_binomial(k * (w - 1) - 1, k - 1), k * k)


def local_kernel_matrix(ctx: TangencyContext) -> _sparse.Rows:
    """Matrix taking local BPS counts to local GW invariants."""
    return [{d: Fraction(1, (m // d) ** 3) for d in divisors(m)} for m in range(1, ctx.N + 1)]


def relative_kernel_matrix(ctx: TangencyContext) -> _sparse.Rows:
    """Matrix taking relative BPS counts to relative GW invariants."""
    return [
        {d: multiple_cover_contribution(m // d, d * ctx.w) for d in divisors(m)}
        for m in range(1, ctx.N + 1)
    ]


def local_gw_from_bps(n: InvariantSequence, ctx: TangencyContext) -> InvariantSequence:
    _expect(n, Kind.LOCAL_BPS, ctx)
    out = []
    for m in range(1, ctx.N + 1):
        out.append(sum((n[d] / (m // d) ** 3 for d in divisors(m)), Fraction(0)))
    return InvariantSequence(tuple(out), Kind.LOCAL_GW)


def local_bps_from_gw(gw: InvariantSequence, ctx: TangencyContext) -> InvariantSequence:
    """Moebius inversion n_m = sum_{d | m} mu(m/d) I_d / (m/d)^3.

    The inverse of a completely multiplicative kernel 1/k^3 is mu(k)/k^3.
    """
    _expect(gw, Kind.LOCAL_GW, ctx)
    out = []
    for m in range(1, ctx.N + 1):
        acc = Fraction(0)
        for d in divisors(m):
            mu = mobius(m // d)
            if mu:
                acc += mu * gw[d] / (m // d) ** 3
        out.append(acc)
    return InvariantSequence(tuple(out), Kind.LOCAL_BPS)


def relative_gw_from_bps(n: InvariantSequence, ctx: TangencyContext) -> InvariantSequence:
    _expect(n, Kind.RELATIVE_BPS, ctx)
    kernel = relative_kernel_matrix(ctx)
    return InvariantSequence(tuple(_sparse.apply(kernel, n.values)), Kind.RELATIVE_GW)


def relative_bps_from_gw(gw: InvariantSequence, ctx: TangencyContext) -> InvariantSequence:
    """Triangular solve against the relative kernel (unit diagonal since M(1, w) = 1)."""
    _expect(gw, Kind.RELATIVE_GW, ctx)
    kernel = relative_kernel_matrix(ctx)
    return InvariantSequence(tuple(_sparse.unit_lower_solve(kernel, gw.values)), Kind.RELATIVE_BPS)
