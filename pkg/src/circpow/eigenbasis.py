"""Eigenspace bases with entries in {-1, 0, 1}, verified exactly.

For every integer eigenvalue of a non-complete circuit power C_n^(d) an
eigenspace basis of sign vectors exists and is constructed here from two
periodic building blocks (1-based unit vectors e_j map to 0-based position
j-1 mod n):

* difference family, period p, k = 1..p-1:
      sum_m e_{k+mp} - e_{p+mp}
  (+1 on residue class k-1 mod p, -1 on class p-1 mod p);
* alternating family, period p (needs 2p | n), k = 1..p:
      sum_m (-1)^m e_{k+mp}.

Eigenvalue 0 uses difference vectors of period gcd(n, d) and alternating
vectors of period gcd(n, d+1); eigenvalue -2 swaps the roles; eigenvalue
-1 uses difference vectors of period gcd(2d+1, n); eigenvalues 1 and -3
use two fixed period-6 patterns; 2d uses the all-ones vector.

Every emitted vector is certified by an exact integer matrix-vector
product, and the basis rank is certified by fraction-free integer
elimination.  No floating point is involved anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import integer_eigs
from .errors import (
    CompleteGraphError,
    DomainError,
    EigenvalueAbsentError,
    InternalConsistencyError,
)
from .graphs import CircuitPower, adjacency

FAMILY_TAGS = ("all_ones", "period6_A", "period6_B", "u_prime", "v_prime")

_PERIOD6_A = (1, 1, 0, -1, -1, 0)
_PERIOD6_B = (1, 0, -1, -1, 0, 1)


@dataclass(frozen=True)
class BasisVector:
    entries: tuple[int, ...]
    eigenvalue: int
    family_tag: str

    def __post_init__(self):
        if self.family_tag not in FAMILY_TAGS:
            raise DomainError(f"unknown family tag {self.family_tag!r}")
        if any(e not in (-1, 0, 1) for e in self.entries):
            raise DomainError("basis vector entries must lie in {-1, 0, 1}")

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)


@dataclass(frozen=True)
class EigenbasisReport:
    eigenvalue: int
    vectors: tuple[BasisVector, ...]
    rank: int
    predicted_multiplicity: int
    reduced: bool
    orthogonal: bool


def verify_exact(a: np.ndarray, v: BasisVector | Sequence[int], lam: int) -> bool:
    """True iff A v = lam v with every arithmetic step in exact integers."""
    vec = v.as_array() if isinstance(v, BasisVector) else np.asarray(v, dtype=np.int64)
    a = np.asarray(a, dtype=np.int64)
    if a.shape[1] != vec.shape[0]:
        raise DomainError(f"dimension mismatch: {a.shape} vs {vec.shape}")
    # int64 is exact here: |A v| is bounded by the vertex degree < n
    return bool(np.array_equal(a @ vec, lam * vec))


def exact_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    rows = [[int(x) for x in vec] for vec in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DomainError("vectors must have equal lengths")
    nrows = len(rows)
    rank = 0
    pivot_row = 0
    prev_pivot = 1
    for col in range(ncols):
        sel = next((r for r in range(pivot_row, nrows) if rows[r][col] != 0), None)
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        piv = rows[pivot_row][col]
        for r in range(pivot_row + 1, nrows):
            factor = rows[r][col]
            for c in range(col + 1, ncols):
                rows[r][c] = (piv * rows[r][c] - factor * rows[pivot_row][c]) // prev_pivot
            rows[r][col] = 0
        prev_pivot = piv
        pivot_row += 1
        rank += 1
        if pivot_row == nrows:
            break
    return rank


def independent_prefix(vectors: Sequence[Sequence[int]]) -> list[int]:
    """Indices of the greedily kept, linearly independent vectors.

    Scans in the given order and keeps a vector iff it is independent of
    those already kept, so earlier vectors always win.  Exact integer
    arithmetic throughout.
    """
    echelon: list[tuple[int, list[int]]] = []  # (pivot column, reduced row)
    kept: list[int] = []
    for idx, vec in enumerate(vectors):
        row = [int(x) for x in vec]
        for pcol, brow in echelon:
            if row[pcol] != 0:
                a, b = brow[pcol], row[pcol]
                row = [a * x - b * y for x, y in zip(row, brow)]
        pivot = next((c for c, val in enumerate(row) if val != 0), None)
        if pivot is None:
            continue
        g = 0
        for val in row:
            g = math.gcd(g, abs(val))
        if g > 1:
            row = [val // g for val in row]
        echelon.append((pivot, row))
        echelon.sort(key=lambda t: t[0])
        kept.append(idx)
    return kept


def _difference_vector(n: int, period: int, k: int, lam: int, tag: str) -> BasisVector:
    """+1 on residue class k-1 mod period, -1 on class period-1."""
    entries = [0] * n
    for m in range(n // period):
        entries[(k - 1 + m * period) % n] = 1
        entries[(period - 1 + m * period) % n] = -1
    return BasisVector(tuple(entries), lam, tag)


def _alternating_vector(n: int, period: int, k: int, lam: int, tag: str) -> BasisVector:
    """(-1)^m at position k-1+m*period; consistent only when 2*period | n."""
    if n % (2 * period) != 0:
        raise InternalConsistencyError(
            f"alternating family with period {period} needs 2*{period} | {n}"
        )
    entries = [0] * n
    for m in range(n // period):
        entries[(k - 1 + m * period) % n] = 1 if m % 2 == 0 else -1
    return BasisVector(tuple(entries), lam, tag)


def _require_noncomplete(n: int, d: int) -> CircuitPower:
    g = CircuitPower(n, d)
    if g.complete:
        raise CompleteGraphError(f"C_{n}^({d}) is complete")
    return g


def _pairwise_orthogonal(vectors: Sequence[BasisVector]) -> bool:
    arrs = [v.as_array() for v in vectors]
    for i in range(len(arrs)):
        for j in range(i + 1, len(arrs)):
            if int(arrs[i] @ arrs[j]) != 0:
                return False
    return True


def _build_report(
    n: int,
    d: int,
    lam: int,
    candidates: list[BasisVector],
    predicted: int,
) -> EigenbasisReport:
    """Reduce candidates to an independent set, verify exactly, certify rank."""
    reduced = False
    vectors = candidates
    if len(candidates) != predicted:
        kept = independent_prefix([v.entries for v in candidates])
        vectors = [candidates[i] for i in kept]
        reduced = True
    a = adjacency(CircuitPower(n, d))
    for v in vectors:
        if not verify_exact(a, v, lam):
            raise InternalConsistencyError(
                f"constructed vector fails A v = {lam} v on C_{n}^({d})"
            )
    rank = exact_rank([v.entries for v in vectors])
    if rank != predicted or rank != len(vectors):
        raise InternalConsistencyError(
            f"rank {rank} != predicted multiplicity {predicted} for "
            f"eigenvalue {lam} of C_{n}^({d})"
        )
    return EigenbasisReport(
        eigenvalue=lam,
        vectors=tuple(vectors),
        rank=rank,
        predicted_multiplicity=predicted,
        reduced=reduced,
        orthogonal=_pairwise_orthogonal(vectors),
    )


def basis_all_ones(n: int, d: int) -> EigenbasisReport:
    """The regularity eigenvalue 2d: the all-ones vector."""
    _require_noncomplete(n, d)
    vec = BasisVector((1,) * n, 2 * d, "all_ones")
    return _build_report(n, d, 2 * d, [vec], predicted=1)


def basis_pm_one(n: int, d: int, lam: int) -> EigenbasisReport:
    """Eigenvalues 1 and -3: two fixed period-6 sign patterns."""
    _require_noncomplete(n, d)
    if lam == 1:
        report = integer_eigs.mult_one(n, d)
    elif lam == -3:
        report = integer_eigs.mult_minus_three(n, d)
    else:
        raise DomainError(f"this construction covers eigenvalues 1 and -3, not {lam}")
    if report.multiplicity == 0:
        raise EigenvalueAbsentError(
            f"{lam} is not an eigenvalue of C_{n}^({d}) "
            f"(needs 6 | n and d = {1 if lam == 1 else 4} mod 6)"
        )
    reps = n // 6
    vecs = [
        BasisVector(_PERIOD6_A * reps, lam, "period6_A"),
        BasisVector(_PERIOD6_B * reps, lam, "period6_B"),
    ]
    return _build_report(n, d, lam, vecs, predicted=2)


def basis_kernel(n: int, d: int) -> EigenbasisReport:
    """Eigenvalue 0, case-driven by the nullity formula.

    Difference family of period g = gcd(n, d); alternating family of
    period h = gcd(n, d+1) when 2h | n; in the (2|n, 2|d) case the union
    is reduced to g+h-2 independent vectors.
    """
    _require_noncomplete(n, d)
    report = integer_eigs.nullity(n, d)
    g, h = report.params.g, report.params.h
    candidates = [_difference_vector(n, g, k, 0, "u_prime") for k in range(1, g)]
    if report.params.ord2_d1 < report.params.ord2_n:  # equivalently 2h | n
        candidates += [_alternating_vector(n, h, k, 0, "v_prime") for k in range(1, h + 1)]
    return _build_report(n, d, 0, candidates, predicted=report.multiplicity)


def basis_minus_two(n: int, d: int) -> EigenbasisReport:
    """Eigenvalue -2: the kernel construction with g and h roles swapped.

    Alternating family of period g = gcd(n, d) (only when 2g | n, i.e. in
    the ord2(d) < ord2(n) cases) plus difference family of period
    h = gcd(n, d+1).  For d = 1 the single alternating vector
    (1, -1, 1, -1, ...) covers the even-circuit eigenvalue -2.
    """
    _require_noncomplete(n, d)
    if d == 1:
        if n % 2 != 0:
            return EigenbasisReport(-2, (), 0, 0, reduced=False, orthogonal=True)
        vec = _alternating_vector(n, 1, 1, -2, "u_prime")
        return _build_report(n, d, -2, [vec], predicted=1)
    report = integer_eigs.mult_minus_two(n, d)
    g, h = report.params.g, report.params.h
    candidates: list[BasisVector] = []
    if report.params.ord2_d < report.params.ord2_n:  # equivalently 2g | n
        candidates += [_alternating_vector(n, g, k, -2, "u_prime") for k in range(1, g + 1)]
    candidates += [_difference_vector(n, h, k, -2, "v_prime") for k in range(1, h)]
    return _build_report(n, d, -2, candidates, predicted=report.multiplicity)


def basis_minus_one(n: int, d: int) -> EigenbasisReport:
    """Eigenvalue -1: difference family of period gcd(2d+1, n)."""
    _require_noncomplete(n, d)
    report = integer_eigs.mult_minus_one(n, d)
    g = report.params.g
    candidates = [_difference_vector(n, g, k, -1, "u_prime") for k in range(1, g)]
    return _build_report(n, d, -1, candidates, predicted=report.multiplicity)


def basis_for_eigenvalue(n: int, d: int, lam: int) -> EigenbasisReport:
    """Dispatch to the construction for the given integer eigenvalue.

    Raises EigenvalueAbsentError when the eigenvalue has multiplicity zero.
    """
    _require_noncomplete(n, d)
    if lam == 2 * d:
        return basis_all_ones(n, d)
    if lam in (1, -3):
        return basis_pm_one(n, d, lam)
    if lam == 0:
        rep = basis_kernel(n, d)
    elif lam == -1:
        rep = basis_minus_one(n, d)
    elif lam == -2:
        rep = basis_minus_two(n, d)
    else:
        raise EigenvalueAbsentError(
            f"{lam} is never an integer eigenvalue of a non-complete circuit power"
        )
    if rep.rank == 0:
        raise EigenvalueAbsentError(f"{lam} is not an eigenvalue of C_{n}^({d})")
    return rep


def orthogonality_check(report: EigenbasisReport) -> bool:
    """True iff all pairwise dot products vanish (exact integers)."""
    return _pairwise_orthogonal(report.vectors)


def report_to_json(report: EigenbasisReport) -> dict:
    return {
        "eigenvalue": report.eigenvalue,
        "rank": report.rank,
        "predicted_multiplicity": report.predicted_multiplicity,
        "reduced": report.reduced,
        "orthogonal": report.orthogonal,
        "vectors": [
            {"family": v.family_tag, "entries": list(v.entries)} for v in report.vectors
        ],
    }


def format_report_text(report: EigenbasisReport) -> str:
    """Aligned sign-pattern table, one basis vector per row."""
    lines = [
        f"eigenvalue {report.eigenvalue}: rank {report.rank}"
        f" (reduced={report.reduced}, orthogonal={report.orthogonal})"
    ]
    for v in report.vectors:
        cells = " ".join(f"{e:>2d}" for e in v.entries)
        lines.append(f"  [{v.family_tag:>9s}] {cells}")
    return "\n".join(lines)
