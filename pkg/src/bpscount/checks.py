"""Per-degree verdicts for integrality of BPS counts and for Takahashi's
relation 3d m_d = (-1)^(d+1) n_d between curve counts and local BPS counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import _check_positive
from .transforms import InvariantSequence, Kind


@dataclass(frozen=True)
class Verdict:
    index: int
    expected: Fraction
    actual: Fraction
    passed: bool


@dataclass(frozen=True)
class CheckReport:
    name: str
    context: dict
    verdicts: tuple[Verdict, ...] = field(default_factory=tuple)

    @property
    def overall(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def failures(self) -> list[int]:
        return [v.index for v in self.verdicts if not v.passed]


def _integrality(name: str, seq: InvariantSequence) -> CheckReport:
    # expected is the nearest integer, so a failing entry shows how far off it is
    verdicts = tuple(
        Verdict(d, Fraction(round(x)), x, x.denominator == 1)
        for d, x in enumerate(seq.values, 1)
    )
    return CheckReport(name, {"kind": str(seq.kind), "degrees": [1, len(seq)]}, verdicts)


def check_local_integrality(nloc: InvariantSequence) -> CheckReport:
    return _integrality("local-integrality", nloc)


def check_relative_integrality(nrel: InvariantSequence) -> CheckReport:
    return _integrality("relative-integrality", nrel)


def torsion_count(d: int) -> int:
    """Number of 3d-torsion points on a plane cubic, 9 d^2."""
    _check_positive(d)
    return 9 * d * d


def check_takahashi(m: InvariantSequence, nloc: InvariantSequence) -> CheckReport:
    """Compare 3d m_d against (-1)^(d+1) n_d degree by degree.

    The scaled form 9d^2 m_d = (-1)^(d+1) 3d n_d is evaluated too; the two
    must agree at every degree.
    """
    if len(m) != len(nloc):
        raise ValueError(f"length mismatch: {len(m)} curve counts vs {len(nloc)} BPS counts")
    if nloc.kind is not Kind.LOCAL_BPS:
        raise ValueError(f"expected local-BPS counts, got {nloc.kind}")
    verdicts = []
    for d in range(1, len(m) + 1):
        sign = (-1) ** (d + 1)
        actual = 3 * d * m[d]
        expected = sign * nloc[d]
        passed = actual == expected
        scaled = torsion_count(d) * m[d] == sign * 3 * d * nloc[d]
        if scaled != passed:
            raise AssertionError(f"scaled and unscaled forms disagree at d={d}")
        verdicts.append(Verdict(d, expected, actual, passed))
    return CheckReport("takahashi", {"degrees": [1, len(m)]}, tuple(verdicts))
