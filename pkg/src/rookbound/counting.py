"""Counting the diagrams for which the diagonal construction is optimal.

For minimum rank 2 the answer is a ballot number: on an n x m board
with m >= n the qualifying diagrams are exactly the ones whose boundary
walk is a generalized Dyck path, and there are
(m - n + 1)/m * binomial(m + n - 2, n - 1) of them, the Catalan numbers
on square boards.  For minimum rank 3 on square boards the count is
Catalan(n-1) + 2 * Catalan(n-2).  Every formula here is asserted
against exhaustive enumeration; the enumeration side always decides
membership via the deletion-bound definition, never via the path
characterization being counted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import binomial
from .bounds import mds_constructible
from .diagrams import FerrersDiagram, diagonal_profile, enumerate_diagrams
from .errors import HypothesisViolation


def charmds2(diagram: FerrersDiagram) -> bool:
    """Does every diagonal beyond index m miss the diagram?

    For m >= n >= 2 this is equivalent to (F, 2) being
    MDS-constructible, and to the boundary walk being a generalized
    Dyck path.
    """
    if diagram.n < 2 or diagram.m < diagram.n:
        raise HypothesisViolation(
            f"{diagram} needs m >= n >= 2; transpose first if m < n"
        )
    return diagonal_profile(diagram).vanishes_beyond(diagram.m)


@dataclass(frozen=True, slots=True)
class CountComparison:
    n: int
    m: int
    d: int
    formula: int
    enumerated: int | None

    @property
    def agree(self) -> bool | None:
        if self.enumerated is None:
            return None
        return self.formula == self.enumerated


def _enumerated_count(n: int, m: int, d: int) -> int:
    return sum(
        1
        for diagram in enumerate_diagrams(n, m)
        if mds_constructible(diagram, d).is_mds_constructible
    )


def count_mds2(n: int, m: int, enumerate_limit: int = 200_000) -> CountComparison:
    """Diagrams on an n x m board (m >= n >= 2) for which the pair with
    d = 2 is MDS-constructible: (m-n+1)/m * binomial(m+n-2, n-1).

    The division is exact and asserted to be.  When the board is small
    enough the diagrams are enumerated and the two counts are required
    to match.
    """
    if not 2 <= n <= m:
        raise HypothesisViolation("count_mds2 needs m >= n >= 2")
    numerator = (m - n + 1) * binomial(m + n - 2, n - 1)
    assert numerator % m == 0, f"{numerator} not divisible by {m}"
    formula = numerator // m
    enumerated = None
    if binomial(m + n - 2, n - 1) <= enumerate_limit:
        enumerated = _enumerated_count(n, m, 2)
        assert enumerated == formula, (
            f"formula {formula} != enumeration {enumerated} for ({n},{m})"
        )
    return CountComparison(n, m, 2, formula, enumerated)


def count_mds3_square(n: int, enumerate_limit: int = 200_000) -> CountComparison:
    """Square diagrams (n >= 3) for which the pair with d = 3 is
    MDS-constructible: 1/n * binomial(2n-2, n-1) + 2/(n-1) * binomial(2n-4, n-2)."""
    if n < 3:
        raise HypothesisViolation("count_mds3_square needs n >= 3")
    first = binomial(2 * n - 2, n - 1)
    assert first % n == 0
    second = 2 * binomial(2 * n - 4, n - 2)
    assert second % (n - 1) == 0
    formula = first // n + second // (n - 1)
    enumerated = None
    if binomial(2 * n - 2, n - 1) <= enumerate_limit:
        enumerated = _enumerated_count(n, n, 3)
        assert enumerated == formula, (
            f"formula {formula} != enumeration {enumerated} for ({n},{n})"
        )
    return CountComparison(n, n, 3, formula, enumerated)


@dataclass(frozen=True, slots=True)
class ChainReport:
    n: int
    checked: int
    violations: tuple[FerrersDiagram, ...]
    nonsquare_break: bool
    d4_break: bool


def chain_check(n: int) -> ChainReport:
    """On square boards, d = 2 MDS-constructibility implies d = 3.

    Scans every n x n diagram for violations (there should be none) and
    re-confirms the two standard boundary cases: the implication fails
    off the square ([1,1,3,3] works at d = 2 but not d = 3) and does not
    extend to d = 4 ([1,1,3,3,5] works at d = 3 but not d = 4).
    """
    if n < 3:
        raise HypothesisViolation("chain_check needs n >= 3")
    violations = []
    checked = 0
    for diagram in enumerate_diagrams(n, n):
        checked += 1
        if (
            mds_constructible(diagram, 2).is_mds_constructible
            and not mds_constructible(diagram, 3).is_mds_constructible
        ):
            violations.append(diagram)
    nonsquare = FerrersDiagram((1, 1, 3, 3))
    nonsquare_break = (
        mds_constructible(nonsquare, 2).is_mds_constructible
        and not mds_constructible(nonsquare, 3).is_mds_constructible
    )
    tall = FerrersDiagram((1, 1, 3, 3, 5))
    d4_break = (
        mds_constructible(tall, 3).is_mds_constructible
        and not mds_constructible(tall, 4).is_mds_constructible
    )
    return ChainReport(n, checked, tuple(violations), nonsquare_break, d4_break)
