"""The Etzion-Silberstein deletion bound and everything built on it:
MDS-constructibility in its three equivalent forms, the dense/sparse
classification of subspace families, and exact existence bounds.

kappa(F, d) is the minimum, over 0 <= j <= d-1, of the number of dots
left in F after deleting the topmost j rows and the rightmost d-1-j
columns.  It upper-bounds the dimension of any subspace of F_q[F] whose
nonzero members all have rank >= d.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import q_binomial_eval
from .diagrams import FerrersDiagram, diagonal_profile
from .errors import HypothesisViolation
from .gfmatrix import ball_size, factor_prime_power
from .rooks import diagonal_surplus, tau_via_polynomial


@dataclass(frozen=True, slots=True)
class KappaReport:
    diagram: FerrersDiagram
    d: int
    values: tuple[int, ...]
    minimum: int
    argmin: tuple[int, ...]


def kappa(diagram: FerrersDiagram, d: int) -> KappaReport:
    """All deletion areas kappa_j and their minimum.

    kappa_j = sum_{t=1}^{m-d+1+j} max(c_t - j, 0): delete j rows from
    the top and d-1-j columns from the right, count what is left.  The
    whole vector and the argmin set are reported, not just the minimum;
    which deletions attain it matters to several downstream arguments.
    """
    n, m = diagram.n, diagram.m
    if not 1 <= d <= min(n, m):
        raise HypothesisViolation(f"d={d} outside 1..min(n,m)={min(n, m)} for {diagram}")
    values = tuple(
        sum(c - j for c in diagram.cols[: m - d + 1 + j] if c > j) for j in range(d)
    )
    minimum = min(values)
    argmin = tuple(j for j, v in enumerate(values) if v == minimum)
    return KappaReport(diagram, d, values, minimum, argmin)


@dataclass(frozen=True, slots=True)
class MdsVerdict:
    diagram: FerrersDiagram
    d: int
    kappa: int
    kappa_vector: tuple[int, ...]
    diagonal_sum_all: int
    diagonal_sum_first_m: int
    tau: int | None
    is_mds_constructible: bool


def mds_constructible(diagram: FerrersDiagram, d: int) -> MdsVerdict:
    """Is kappa(F, d) equal to sum_i max(0, |D_i ∩ F| - d + 1) over all
    m+n-1 diagonals?

    The all-diagonals sum is the source of truth (it is symmetric in n
    and m and sensible at d = 1).  The verdict also carries the sum over
    the first m diagonals, which characterizes the same property when
    m >= n and d >= 2, and the trailing degree tau(F, d-1) when that is
    defined, which characterizes it whenever kappa >= 1.
    """
    report = kappa(diagram, d)
    profile = diagonal_profile(diagram)
    sum_all = profile.surplus(d - 1)
    sum_first = profile.surplus_first(diagram.m, d - 1)
    if d == 1:
        tau = diagram.size  # only the empty placement; nothing crossed out
    elif profile.count(d - 1) == d - 1:
        tau = profile.surplus(d - 1)
    else:
        tau = None  # no rank-(d-1) matrix exists; closed form not applicable
    return MdsVerdict(
        diagram,
        d,
        report.minimum,
        report.values,
        sum_all,
        sum_first,
        tau,
        report.minimum == sum_all,
    )


@dataclass(frozen=True, slots=True)
class EquivalenceReport:
    diagram: FerrersDiagram
    d: int
    kappa: int
    first_m_equality: bool
    all_diagonals_equality: bool
    tau_equality: bool | None
    tau_hypothesis_ok: bool


def check_equivalences(diagram: FerrersDiagram, d: int) -> EquivalenceReport:
    """Evaluate the three characterizations of MDS-constructibility and
    confirm they agree.

    Requires m >= n and 2 <= d <= n.  The trailing-degree form uses the
    actual rook polynomial, not the diagonal formula, so the comparison
    is a genuine cross-check; it needs kappa >= 1, and when that fails
    the report says so instead of silently skipping.
    """
    n, m = diagram.n, diagram.m
    if m < n:
        raise HypothesisViolation(f"{diagram} has m < n; transpose first")
    if not 2 <= d <= n:
        raise HypothesisViolation(f"d={d} outside 2..n={n}")
    verdict = mds_constructible(diagram, d)
    first_m = verdict.kappa == verdict.diagonal_sum_first_m
    all_diag = verdict.kappa == verdict.diagonal_sum_all
    hypothesis_ok = verdict.kappa >= 1
    tau_eq = None
    if hypothesis_ok:
        tau_eq = tau_via_polynomial(diagram, d - 1) == verdict.kappa
    if first_m != all_diag:
        raise RuntimeError(
            f"first-m and all-diagonals characterizations disagree on "
            f"({diagram}, {d}); this indicates a bug"
        )
    if hypothesis_ok and tau_eq != all_diag:
        raise RuntimeError(
            f"trailing-degree characterization disagrees on ({diagram}, {d}); "
            "this indicates a bug"
        )
    return EquivalenceReport(
        diagram, d, verdict.kappa, first_m, all_diag, tau_eq, hypothesis_ok
    )


class DensityClass(Enum):
    DENSE = "DENSE"
    SPARSE = "SPARSE"
    NOT_DENSE_AT_MOST_HALF = "NOT_DENSE_AT_MOST_HALF"


def classify_density(diagram: FerrersDiagram, d: int, k: int) -> DensityClass:
    """Asymptotic (large field) behaviour of the fraction of k-dim
    subspaces of F_q[F] whose nonzero members all have rank >= d.

    The threshold is the trailing degree t = tau(F, d-1): the fraction
    tends to 1 for k <= t, tends to 0 for k >= t + 2, and at k = t + 1
    its limsup is at most 1/2 (it need not tend to 0 there).
    """
    n, m = diagram.n, diagram.m
    if not 2 <= d <= min(n, m):
        raise HypothesisViolation(f"d={d} outside 2..min(n,m)={min(n, m)}")
    if not 1 <= k <= diagram.size:
        raise HypothesisViolation(f"k={k} outside 1..|F|={diagram.size}")
    if kappa(diagram, d).minimum < 1:
        raise HypothesisViolation(
            f"kappa({diagram},{d}) = 0; no nonzero space exists at all"
        )
    # kappa(F, d) >= 1 forces kappa(F, d-1) >= 1, so the closed form applies
    tau = diagonal_surplus(diagram, d - 1)
    if k <= tau:
        return DensityClass.DENSE
    if k >= tau + 2:
        return DensityClass.SPARSE
    return DensityClass.NOT_DENSE_AT_MOST_HALF


def existence_lower_bound(diagram: FerrersDiagram, d: int, k: int, q: int) -> int:
    """Exact lower bound on the number of k-dimensional subspaces of
    F_q[F] in which every nonzero matrix has rank >= d:

        [|F| choose k]_q - (B - 1)/(q - 1) * [|F|-1 choose k-1]_q

    where B counts the matrices of rank < d.  May be negative; a
    positive value certifies that such a space exists.
    """
    factor_prime_power(q)
    if not 2 <= d <= min(diagram.n, diagram.m):
        raise HypothesisViolation(f"d={d} outside 2..min(n,m)")
    kap = kappa(diagram, d).minimum
    if not 1 <= k <= kap:
        raise HypothesisViolation(f"k={k} outside 1..kappa={kap}")
    size = diagram.size
    ball = ball_size(diagram, d - 1, q)
    assert (ball - 1) % (q - 1) == 0
    representatives = (ball - 1) // (q - 1)
    return q_binomial_eval(size, k, q) - representatives * q_binomial_eval(
        size - 1, k - 1, q
    )


def _construction_index_set(diagram: FerrersDiagram) -> FerrersDiagram:
    from .diagrams import transpose

    return diagram if diagram.m >= diagram.n else transpose(diagram)


def mc_upper_bound(diagram: FerrersDiagram, d: int, q: int) -> int:
    """Upper bound on how many distinct spaces the diagonal construction
    can produce: the product over used diagonals of the number of
    (n_i - d + 1)-dimensional subspaces of GF(q)^{n_i}.

    Requires an MDS-constructible pair; diagrams with m < n are
    transposed first.
    """
    factor_prime_power(q)
    work = _construction_index_set(diagram)
    if not 2 <= d <= work.n:
        raise HypothesisViolation(f"d={d} outside 2..n={work.n}")
    if not mds_constructible(work, d).is_mds_constructible:
        raise HypothesisViolation(f"({diagram}, {d}) is not MDS-constructible")
    profile = diagonal_profile(work)
    bound = 1
    for i in range(1, work.m + 1):
        n_i = profile.count(i)
        if n_i >= d:
            bound *= q_binomial_eval(n_i, n_i - d + 1, q)
    return bound


def mc_density_exponent(diagram: FerrersDiagram, d: int) -> int:
    """The exponent kappa * (|F| - kappa - d + 1).

    For an MDS-constructible pair this is the decay rate: among all
    optimal spaces, the fraction reachable by the diagonal construction
    is O(q^-exponent) as the field grows.  The arithmetic is defined for
    any valid (F, d); the decay interpretation needs constructibility.
    """
    kap = kappa(diagram, d).minimum
    return kap * (diagram.size - kap - d + 1)
