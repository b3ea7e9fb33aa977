"""Closed-form analysis of the local model of d-th symmetric powers.

The model near a maximal-diagonal point is C^(n*d) / S_d with S_d
permuting n blocks of coordinates, i.e. n copies of the permutation
action on C^d. Cycle types index the conjugacy classes and the exponent
multiset is Galois-stable, so one partition scan replaces a scan of all
d! elements. ``materialize_rep`` builds the same group explicitly for
cross-checking against the generic monomial engine, and
``bruteforce_check`` verifies the constructions against numpy
eigendecompositions class by class.

Stabilizers at non-maximal points are products of smaller symmetric
groups, so their local models are products of smaller instances of this
one and need no separate scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import oracle
from .ages import (
    AgeRecord,
    age,
    age_closed_form,
    age_record,
    cycle_eigen_exponents,
    det_sign,
    nfold,
)
from .combinatorics import CycleType, element_order, partitions
from .errors import MatrixTooLargeError, UnsupportedDimensionError
from .monomial import MonomialElement, MonomialRep, SingularityVerdict

MATRIX_SIZE_CAP = 64


def _require_dim(n: int) -> None:
    if n < 2:
        raise UnsupportedDimensionError(
            f"dim {n} is unsupported: with dim < 2 the transpositions act as "
            "quasi-reflections, so the age criterion does not apply"
        )


def verdict(n: int, d: int) -> SingularityVerdict:
    """Singularity verdict for n copies of the S_d permutation action.

    Scans one representative per conjugacy class using the closed-form
    age; the determinant character has order at most 2, so the index
    comes from the same scan.
    """
    _require_dim(n)
    if d < 1:
        raise ValueError(f"number of points must be >= 1, got {d}")
    if d == 1:
        # trivial group: a smooth point
        return SingularityVerdict(
            canonical=True,
            terminal=True,
            gorenstein=True,
            index=1,
            group_order=1,
            min_age=None,
            witness=None,
        )
    min_age: Fraction | None = None
    witness: str | None = None
    det_trivial = True
    for t in partitions(d):
        if t.is_identity():
            continue
        _, a = age_closed_form(t, n)
        if det_sign(t, n) != 1:
            det_trivial = False
        if min_age is None or a < min_age:
            min_age = a
            witness = str(t)
    index = 1 if det_trivial else 2
    return SingularityVerdict(
        canonical=min_age >= 1,
        terminal=min_age > 1,
        gorenstein=det_trivial,
        index=index,
        group_order=factorial(d),
        min_age=min_age,
        witness=witness,
    )


def class_table(n: int, d: int) -> list[AgeRecord]:
    """One AgeRecord per conjugacy class, in canonical partition order."""
    _require_dim(n)
    if d < 1:
        raise ValueError(f"number of points must be >= 1, got {d}")
    return [age_record(t, n) for t in partitions(d)]


def materialize_rep(n: int, d: int) -> MonomialRep:
    """The model as an explicit monomial group on C^(n*d).

    Generators are the adjacent transpositions of S_d acting on all n
    coordinate blocks at once. Quasi-reflection screening is left to the
    analyzer, so n = 1 is allowed here.
    """
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    size = n * d
    gens = []
    for i in range(d - 1):
        perm = list(range(size))
        for block in range(n):
            a, b = block * d + i, block * d + i + 1
            perm[a], perm[b] = perm[b], perm[a]
        gens.append(MonomialElement(tuple(perm), (0,) * size))
    return MonomialRep(dimension=size, root_order=1, generators=tuple(gens))


@dataclass(frozen=True)
class OracleRow:
    """Outcome of the numeric cross-check for one conjugacy class."""

    cycle_type: CycleType
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class OracleReport:
    n: int
    d: int
    tolerance: float
    rows: tuple[OracleRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def failures(self) -> list[OracleRow]:
        return [row for row in self.rows if not row.passed]


def bruteforce_check(
    n: int, d: int, tolerance: float = oracle.DEFAULT_TOLERANCE
) -> OracleReport:
    """Verify every class against the numeric eigenvalue oracle.

    For each partition the explicit (n*d) x (n*d) permutation matrix is
    eigendecomposed numerically; the recovered exponent multiset must
    equal the per-cycle construction, and the exponent sum must equal the
    closed form exactly. Discrepancies are reported per class, never
    silently dropped.
    """
    _require_dim(n)
    if d < 1:
        raise ValueError(f"number of points must be >= 1, got {d}")
    if n * d > MATRIX_SIZE_CAP:
        raise MatrixTooLargeError(
            f"brute-force matrix would be {n * d} x {n * d}, over the cap "
            f"of {MATRIX_SIZE_CAP}"
        )
    rows = []
    for t in partitions(d):
        r = element_order(t)
        constructed = nfold(cycle_eigen_exponents(t), n)
        s_multiset, age_multiset = age(constructed)
        s_closed, age_closed = age_closed_form(t, n)
        try:
            numeric = oracle.numeric_exponents(oracle.nfold_matrix(t, n), r, tolerance)
        except oracle.RecoveryError as exc:
            rows.append(OracleRow(t, False, f"exponent recovery failed: {exc}"))
            continue
        if numeric != constructed.exponents:
            rows.append(
                OracleRow(
                    t,
                    False,
                    f"exponent multisets differ: numeric {numeric} vs "
                    f"constructed {constructed.exponents}",
                )
            )
        elif (s_multiset, age_multiset) != (s_closed, age_closed):
            rows.append(
                OracleRow(
                    t,
                    False,
                    f"closed form disagrees: multiset S={s_multiset} vs "
                    f"closed S={s_closed}",
                )
            )
        else:
            rows.append(OracleRow(t, True))
    return OracleReport(n=n, d=d, tolerance=tolerance, rows=tuple(rows))
