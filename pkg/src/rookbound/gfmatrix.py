"""Finite fields GF(q), matrices supported on a Ferrers diagram, exact
rank censuses, and randomized density estimation.

Two independent routes produce the rank census of F_q[F]:

* brute_force_census enumerates all q^|F| matrices and ranks each one;
  it is the oracle and is never used to build anything else;
* census_polynomial converts the rook-placement distribution into the
  polynomial counting matrices of each rank,
      P(F, r) = sum_C (q-1)^r q^(|F| - r - inv(C, F)),
  summed over r-rook placements C.

Their agreement on every board small enough to enumerate is what makes
the polynomial route trustworthy on boards that are not.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .arith import NEG_INFINITY, IntPolynomial
from .diagrams import FerrersDiagram
from .errors import BudgetExceeded, HypothesisViolation
from .rooks import rook_polynomial

DEFAULT_ENUM_BUDGET = 3**12
DEFAULT_COMBO_BUDGET = 1 << 23

PRNG_NAME = "python-random/MT19937"


def enum_budget() -> int:
    return int(os.environ.get("ROOKBOUND_MAX_ENUM", DEFAULT_ENUM_BUDGET))


def combo_budget() -> int:
    return int(os.environ.get("ROOKBOUND_MAX_COMBOS", DEFAULT_COMBO_BUDGET))


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k, p prime; raise otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = q
    for cand in range(2, math.isqrt(q) + 1):
        if q % cand == 0:
            p = cand
            break
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
        return True
    except ValueError:
        return False


# Irreducible moduli for the small extension fields, as base-p digit
# tuples in ascending degree (monic).  These are the conventional
# choices, so generator matrices and test vectors are reproducible.
_IRREDUCIBLE = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (2, 2, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 4, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    49: (3, 6, 1),
    64: (1, 1, 0, 1, 1, 0, 1),
    81: (2, 0, 0, 2, 1),
    121: (2, 7, 1),
    125: (3, 3, 0, 1),
    128: (1, 1, 0, 0, 0, 0, 0, 1),
    169: (2, 12, 1),
    243: (1, 2, 0, 0, 0, 1),
    256: (1, 0, 1, 1, 1, 0, 0, 0, 1),
}


def _poly_remainder(dividend: list[int], divisor: tuple[int, ...], p: int) -> list[int]:
    """Remainder of monic polynomial division over GF(p), digit lists
    in ascending degree."""
    rem = list(dividend)
    d = len(divisor) - 1
    for top in range(len(rem) - 1, d - 1, -1):
        coef = rem[top]
        if coef:
            for t in range(d + 1):
                rem[top - d + t] = (rem[top - d + t] - coef * divisor[t]) % p
    return rem[:d]


def _poly_is_irreducible(digits: tuple[int, ...], p: int) -> bool:
    """Trial division: a composite of degree k has a monic factor of
    degree at most k // 2.  Degrees here never exceed 16."""
    deg = len(digits) - 1
    if deg == 1:
        return True
    for e in range(1, deg // 2 + 1):
        for code in range(p**e):
            divisor = []
            c = code
            for _ in range(e):
                divisor.append(c % p)
                c //= p
            divisor.append(1)
            if not any(_poly_remainder(list(digits), tuple(divisor), p)):
                return False
    return True


def _find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k over GF(p), by the integer
    encoding of the non-leading digits."""
    for code in range(p**k):
        digits = []
        c = code
        for _ in range(k):
            digits.append(c % p)
            c //= p
        candidate = tuple(digits) + (1,)
        if _poly_is_irreducible(candidate, p):
            return candidate
    raise RuntimeError("unreachable: irreducible polynomials exist for every degree")


class FieldTable:
    """Arithmetic for GF(q), q = p**k at most 2**16.

    Elements are integers 0..q-1; for extensions the base-p digits of an
    element are the coefficients of its polynomial representative.
    Multiplication and inversion go through exp/log tables built on a
    fixed primitive element, so construction is deterministic per q.
    """

    def __init__(self, q: int):
        p, k = factor_prime_power(q)
        if q > 1 << 16:
            raise ValueError("fields beyond 2^16 elements are not supported")
        self.q = q
        self.p = p
        self.k = k
        self.modulus = None if k == 1 else _IRREDUCIBLE.get(q, _find_irreducible(p, k))
        self._build_tables()

    # raw polynomial-basis products, used only while building the tables
    def _raw_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        da = [(a // p**t) % p for t in range(k)]
        db = [(b // p**t) % p for t in range(k)]
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] += ai * bj
        mod = self.modulus
        for top in range(2 * k - 2, k - 1, -1):
            coef = prod[top] % p
            if coef:
                for t in range(k + 1):
                    prod[top - k + t] = (prod[top - k + t] - coef * mod[t]) % p
            prod[top] = 0
        return sum((prod[t] % p) * p**t for t in range(k))

    def _element_order(self, g: int) -> int:
        acc = g
        order = 1
        while acc != 1:
            acc = self._raw_mul(acc, g)
            order += 1
        return order

    def _build_tables(self):
        q, p, k = self.q, self.p, self.k
        if q == 2:
            self.generator = 1
        else:
            self.generator = next(
                g for g in range(2, q) if self._element_order(g) == q - 1
            )
        exp = [1] * (q - 1)
        for t in range(1, q - 1):
            exp[t] = self._raw_mul(exp[t - 1], self.generator)
        log = [0] * q
        for t, e in enumerate(exp):
            log[e] = t
        self._exp = exp
        self._log = log
        self._add_table = None
        if k > 1 and p > 2 and q <= 256:
            self._add_table = [
                [self._digit_add(a, b) for b in range(q)] for a in range(q)
            ]
        self._mul_table = None
        if q <= 256:
            self._mul_table = [[self.mul(a, b) for b in range(q)] for a in range(q)]

    def _digit_add(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        out = 0
        mult = 1
        for _ in range(k):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p, k = self.p, self.k
        out = 0
        mult = 1
        for _ in range(k):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if a == 1:
            return 1
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self):
        return f"FieldTable(GF({self.q}))"


@lru_cache(maxsize=None)
def field_table(q: int) -> FieldTable:
    return FieldTable(q)


@dataclass(frozen=True, slots=True)
class SupportedMatrix:
    """A matrix over GF(q) whose nonzero entries all lie in the diagram."""

    field: FieldTable
    diagram: FerrersDiagram
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n, m = self.diagram.n, self.diagram.m
        if len(self.rows) != n or any(len(r) != m for r in self.rows):
            raise ValueError(f"matrix must be {n}x{m}")
        for i in range(1, n + 1):
            for j in range(1, m + 1):
                v = self.rows[i - 1][j - 1]
                if not 0 <= v < self.field.q:
                    raise ValueError(f"entry {v} is not a GF({self.field.q}) element")
                if v and (i, j) not in self.diagram:
                    raise ValueError(
                        f"nonzero entry at {(i, j)} outside the diagram {self.diagram}"
                    )

    @classmethod
    def from_cells(cls, field, diagram, cells: dict) -> "SupportedMatrix":
        rows = [[0] * diagram.m for _ in range(diagram.n)]
        for (i, j), v in cells.items():
            rows[i - 1][j - 1] = v
        return cls(field, diagram, tuple(tuple(r) for r in rows))

    @classmethod
    def from_vector(cls, field, diagram, vec: Sequence[int]) -> "SupportedMatrix":
        """Inverse of to_vector for the column-major cell order."""
        cells = list(diagram.cells())
        if len(vec) != len(cells):
            raise ValueError("vector length must equal the diagram size")
        return cls.from_cells(field, diagram, dict(zip(cells, vec)))

    def to_vector(self) -> tuple[int, ...]:
        return tuple(self.rows[i - 1][j - 1] for i, j in self.diagram.cells())

    def support(self) -> frozenset:
        return frozenset(
            (i + 1, j + 1)
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
            if v
        )


def _rank_of_rows(
    rows: list[list[int]], field: FieldTable, stop_at: int | None = None
) -> int:
    """Row echelon rank; mutates its argument.

    With stop_at, elimination halts once that many pivots are found, so
    the return value is min(rank, stop_at).
    """
    sub, mul, inv_ = field.sub, field.mul, field.inv
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    limit = nrows if stop_at is None else min(nrows, stop_at)
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        head = rows[rank]
        hc = head[col]
        if hc != 1:
            scale = inv_(hc)
            rows[rank] = head = [mul(scale, v) for v in head]
        for r in range(rank + 1, nrows):
            c = rows[r][col]
            if c:
                rows[r] = [sub(a, mul(c, b)) for a, b in zip(rows[r], head)]
        rank += 1
        if rank >= limit:
            break
    return rank


def matrix_rank(matrix: SupportedMatrix) -> int:
    return _rank_of_rows([list(r) for r in matrix.rows], matrix.field)


@dataclass(frozen=True, slots=True)
class RankCensus:
    q: int
    diagram: FerrersDiagram
    counts: tuple[int, ...]

    def total(self) -> int:
        return sum(self.counts)


@lru_cache(maxsize=None)
def _column_vectors(q: int, height: int) -> tuple[tuple[int, ...], ...]:
    return tuple(product(range(q), repeat=height))


def _census_worker(cols: tuple[int, ...], q: int, first_slice: tuple[int, int]) -> list[int]:
    """Count matrices by rank with the first column restricted to a slice
    of its candidate list.  Used as the unit of parallel sharding."""
    field = field_table(q)
    sub, mul, inv_ = field.sub, field.mul, field.inv
    m = len(cols)
    counts = [0] * (min(cols[-1], m) + 1)
    candidates = [_column_vectors(q, c) for c in cols]
    lo, hi = first_slice
    # pivots maps pivot index -> echelon vector with that leading position;
    # columns arrive in weakly increasing height order, so every basis
    # vector fits inside the current column's support.
    pivots: dict[int, list[int]] = {}

    def reduce_and_insert(vec: tuple[int, ...]) -> int | None:
        w = list(vec)
        h = len(w)
        for piv in sorted(pivots):
            if piv >= h:
                break
            coef = w[piv]
            if coef:
                # basis vectors come from earlier, shorter columns and are
                # implicitly zero beyond their own length
                bvec = pivots[piv]
                for t in range(piv, len(bvec)):
                    w[t] = sub(w[t], mul(coef, bvec[t]))
        for t in range(h):
            if w[t]:
                scale = inv_(w[t])
                if scale != 1:
                    w = [mul(scale, v) for v in w]
                pivots[t] = w
                return t
        return None

    def go(j: int) -> None:
        if j == m:
            counts[len(pivots)] += 1
            return
        pool = candidates[j] if j > 0 else candidates[0][lo:hi]
        for vec in pool:
            piv = reduce_and_insert(vec)
            go(j + 1)
            if piv is not None:
                del pivots[piv]

    go(0)
    return counts


def brute_force_census(
    diagram: FerrersDiagram,
    q: int,
    max_total: int | None = None,
    jobs: int = 1,
) -> RankCensus:
    """Exact rank census of F_q[F] by enumerating all q^|F| matrices.

    This is the oracle: it never consults the placement-sum polynomials.
    Refuses to start when q^|F| exceeds the budget.  With jobs > 1 the
    work is sharded over the first column's values; shard results merge
    by addition, so the outcome is identical for any worker count.
    """
    field_table(q)  # validates q is a prime power within range
    budget = enum_budget() if max_total is None else max_total
    total = q**diagram.size
    if total > budget:
        raise BudgetExceeded(
            f"census of {diagram} over GF({q}) needs {total} matrices, "
            f"budget is {budget}"
        )
    first = len(_column_vectors(q, diagram.cols[0]))
    if jobs <= 1:
        merged = _census_worker(diagram.cols, q, (0, first))
    else:
        step = -(-first // jobs)
        slices = [(lo, min(lo + step, first)) for lo in range(0, first, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            shards = list(
                pool.map(_census_worker, *zip(*[(diagram.cols, q, s) for s in slices]))
            )
        merged = [sum(col) for col in zip(*shards)]
    return RankCensus(q, diagram, tuple(merged))


def census_polynomial(diagram: FerrersDiagram, r: int) -> IntPolynomial:
    """Number of rank-r matrices supported on the diagram, as a
    polynomial in the field size:

        P(F, r) = sum over r-rook placements C of
                  (q-1)^r * q^(|F| - r - inv(C, F)).

    Validated against brute_force_census on every small board before
    anything downstream relies on it.
    """
    if r < 0:
        raise ValueError("rank must be nonnegative")
    dist = rook_polynomial(diagram, r)
    if not dist:
        return IntPolynomial.zero()
    size = diagram.size
    tail = IntPolynomial(
        tuple(dist.coefficient(size - r - e) for e in range(size - r + 1))
    )
    q_minus_1 = IntPolynomial((-1, 1))
    return tail * q_minus_1**r


def ball_size_polynomial(diagram: FerrersDiagram, r: int) -> IntPolynomial:
    """Number of matrices of rank at most r, as a polynomial in q."""
    acc = IntPolynomial.zero()
    for i in range(r + 1):
        acc = acc + census_polynomial(diagram, i)
    return acc


def ball_size(diagram: FerrersDiagram, r: int, q: int) -> int:
    factor_prime_power(q)
    return ball_size_polynomial(diagram, r).evaluate(q)


@dataclass(frozen=True, slots=True)
class RecursionReport:
    diagram: FerrersDiagram
    r: int
    degree: object
    via_shorter: object
    holds: bool


def degree_recursion_check(diagram: FerrersDiagram, r: int) -> RecursionReport:
    """Check deg P(F, r) against the column-deletion recursion

        deg P(F, r) = max(n + deg P(F', r-1), r + deg P(F', r))

    where F' drops the rightmost column and n is F's row count, with
    deg P(F, 0) = 0 and, for single-column diagrams, deg P = c_1 at
    r = 1 and -inf for r >= 2.

    The identity is guaranteed for 0 <= r <= min(n, m).  For larger r
    the left side is the degree of the zero polynomial while the right
    side can still see a rank-(r-1) count one column back, so the
    report may legitimately say the recursion does not hold there.
    """
    lhs = census_polynomial(diagram, r).degree()
    if r == 0:
        rhs = 0
    elif diagram.m == 1:
        rhs = diagram.cols[0] if r == 1 else NEG_INFINITY
    else:
        shorter = FerrersDiagram(diagram.cols[:-1])
        rhs = max(
            diagram.n + census_polynomial(shorter, r - 1).degree(),
            r + census_polynomial(shorter, r).degree(),
        )
    return RecursionReport(diagram, r, lhs, rhs, lhs == rhs)


def sample_subspace(
    diagram: FerrersDiagram,
    q: int,
    k: int,
    seed: int | None = None,
    rng: random.Random | None = None,
    max_combinations: int | None = None,
) -> list[SupportedMatrix]:
    """Uniformly random k-dimensional subspace of F_q[F], as a basis.

    Draws a uniform k x |F| matrix until it has full rank; its rows are
    the basis.  Deterministic for a given seed.  Refuses dimensions
    whose projective point count exceeds the combination budget, since
    the only consumers of a sample are the rank scans.
    """
    field = field_table(q)
    size = diagram.size
    if not 1 <= k <= size:
        raise HypothesisViolation(f"k={k} outside 1..|F|={size}")
    budget = combo_budget() if max_combinations is None else max_combinations
    combos = projective_count(q, k)
    if combos > budget:
        raise BudgetExceeded(
            f"{combos} projective combinations exceed the budget {budget}"
        )
    if rng is None:
        rng = random.Random(seed)
    while True:
        mat = [[rng.randrange(q) for _ in range(size)] for _ in range(k)]
        if _rank_of_rows([row[:] for row in mat], field) == k:
            return [SupportedMatrix.from_vector(field, diagram, row) for row in mat]


def _nonzero_triples(matrix: SupportedMatrix) -> list[tuple[int, int, int]]:
    return [
        (i, j, v)
        for i, row in enumerate(matrix.rows)
        for j, v in enumerate(row)
        if v
    ]


def _iter_projective_rows(
    basis: Sequence[SupportedMatrix],
) -> Iterator[tuple[tuple[int, ...], list[list[int]]]]:
    """Yield (coefficients, matrix rows) over one representative of
    every 1-dimensional subspace of the span: the first nonzero
    coefficient is pinned to 1 and the remaining ones run through GF(q)
    in counting order, so the stream is lexicographic and deterministic.

    The combination matrix is updated incrementally digit by digit and
    is borrowed: consumers must copy before mutating.
    """
    if not basis:
        return
    field = basis[0].field
    q = field.q
    add, sub = field.add, field.sub
    # scaled[t][delta] holds the cells of delta * basis[t], so an
    # odometer step costs one table add per nonzero cell
    scaled = [
        [
            tuple((i, j, field.mul(delta, v)) for i, j, v in _nonzero_triples(b))
            for delta in range(q)
        ]
        for b in basis
    ]
    k = len(basis)
    for lead in range(k):
        work = [list(row) for row in basis[lead].rows]
        suffix = [0] * (k - lead - 1)
        while True:
            yield (0,) * lead + (1,) + tuple(suffix), work
            pos = len(suffix) - 1
            while pos >= 0 and suffix[pos] == q - 1:
                delta = sub(0, q - 1)
                for i, j, sv in scaled[lead + 1 + pos][delta]:
                    work[i][j] = add(work[i][j], sv)
                suffix[pos] = 0
                pos -= 1
            if pos < 0:
                break
            old = suffix[pos]
            suffix[pos] = old + 1
            delta = sub(old + 1, old)
            for i, j, sv in scaled[lead + 1 + pos][delta]:
                work[i][j] = add(work[i][j], sv)


def iter_projective_ranks(
    basis: Sequence[SupportedMatrix],
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (coefficients, rank) over one representative of every
    1-dimensional subspace of the span, in a fixed lexicographic order."""
    if not basis:
        return
    field = basis[0].field
    for coeffs, rows in _iter_projective_rows(basis):
        yield coeffs, _rank_of_rows([row[:] for row in rows], field)


def projective_count(q: int, k: int) -> int:
    return (q**k - 1) // (q - 1)


def min_rank(
    basis: Sequence[SupportedMatrix], max_combinations: int | None = None
) -> int:
    """Minimum rank over all nonzero elements of the span of the basis.

    Scans one representative per projective point; exact, so the budget
    must cover (q^k - 1)/(q - 1) combinations.
    """
    if not basis:
        raise ValueError("min_rank of an empty basis is undefined")
    q = basis[0].field.q
    budget = combo_budget() if max_combinations is None else max_combinations
    combos = projective_count(q, len(basis))
    if combos > budget:
        raise BudgetExceeded(
            f"{combos} projective combinations exceed the budget {budget}"
        )
    best = None
    for _, rank in iter_projective_ranks(basis):
        if best is None or rank < best:
            best = rank
            if best <= 1:
                break
    return best


def _contains_rank_below(basis: Sequence[SupportedMatrix], d: int) -> bool:
    """Early-exit scan: does the span contain a nonzero matrix of rank
    < d?  Same enumeration as min_rank but stops at the first witness,
    and elimination per combination stops as soon as d pivots appear."""
    if not basis:
        return False
    field = basis[0].field
    for _, rows in _iter_projective_rows(basis):
        if _rank_of_rows([row[:] for row in rows], field, stop_at=d) < d:
            return True
    return False


@dataclass(frozen=True, slots=True)
class DensityEstimate:
    diagram: FerrersDiagram
    d: int
    k: int
    q: int
    trials: int
    hits: int
    estimate: float
    ci_low: float
    ci_high: float
    seed: int | None
    prng: str


def _wilson_interval(hits: int, trials: int, z: float = 1.96) -> tuple[float, float]:
    phat = hits / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (phat + z2 / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z2 / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def estimate_density(
    diagram: FerrersDiagram,
    d: int,
    k: int,
    q: int,
    trials: int,
    seed: int | None = None,
    max_combinations: int | None = None,
) -> DensityEstimate:
    """Monte-Carlo estimate of the fraction of k-dimensional subspaces
    of F_q[F] in which every nonzero matrix has rank >= d.

    Seeded and sequential, hence reproducible; the report names the
    generator algorithm alongside the seed.
    """
    if trials < 1:
        raise HypothesisViolation("trials must be positive")
    if d < 1:
        raise HypothesisViolation("d must be positive")
    budget = combo_budget() if max_combinations is None else max_combinations
    combos = projective_count(q, k)
    if combos > budget:
        raise BudgetExceeded(
            f"{combos} projective combinations per trial exceed the budget {budget}"
        )
    rng = random.Random(seed)
    hits = 0
    for _ in range(trials):
        basis = sample_subspace(diagram, q, k, rng=rng)
        if d == 1 or not _contains_rank_below(basis, d):
            hits += 1
    lo, hi = _wilson_interval(hits, trials)
    return DensityEstimate(
        diagram, d, k, q, trials, hits, hits / trials, lo, hi, seed, PRNG_NAME
    )
