"""Closed-form spectra of circulant graphs and circuit distance powers.

Two exact routes are implemented:

* the cosine sum  lambda_r = sum_{j in jumps} cos(2 pi j r / n), valid for
  every circulant graph, and
* the ratio form  lambda_0 = 2d,
  lambda_r = sin((2d+1) r pi / n) / sin(r pi / n) - 1  for circuit powers,

which agree for circuit powers.  The ratio form goes through the kernel
function  f_d(phi) = sin((2d+1) phi/2) / sin(phi/2)  whose behaviour also
yields the multiplicity-two bounds exposed by :func:`mult_two_bound`.

Integer-eigenvalue questions are never answered by grouping floats here;
they are decided exactly in :mod:`circpow.integer_eigs`.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import AmbiguousToleranceWarning, DomainError
from .graphs import CirculantGraph, CircuitPower

DEFAULT_GROUP_TOL = 1e-9

# Below this the ratio form loses digits to cancellation; fall back to the
# cosine sum (both are exact identities, the sum is stable).
_RATIO_SIN_CUTOFF = 1e-6


def circulant_spectrum(g: CirculantGraph) -> np.ndarray:
    """Eigenvalues lambda_0..lambda_{n-1} of a circulant graph, in index order.

    Real because the jump set is symmetric.  Each term cos(2 pi j r / n) is
    evaluated from the integer residue j*r mod n folded into [0, n/2], so
    lambda_r == lambda_{n-r} holds bitwise, not just approximately.
    """
    n = g.n
    r = np.arange(n, dtype=np.int64)
    lam = np.zeros(n, dtype=float)
    for j in sorted(g.jumps):
        m = (j * r) % n
        m = np.minimum(m, n - m)
        lam += np.cos(2.0 * np.pi * m / n)
    return lam


def _folded_cosine_sum(n: int, d: int, r: int) -> float:
    total = 0.0
    for j in range(1, d + 1):
        m = (j * r) % n
        m = min(m, n - m)
        total += math.cos(2.0 * math.pi * m / n)
    return 2.0 * total


def _sin_pi_frac(num: int, den: int) -> float:
    """sin(pi * num / den) with the argument folded exactly in the integers.

    Folding keeps the float argument in [0, pi/2], so nothing is lost to
    range reduction even when num >> den.
    """
    num %= 2 * den
    sign = 1.0
    if num >= den:
        num -= den
        sign = -1.0
    if 2 * num > den:
        num = den - num
    return sign * math.sin(math.pi * num / den)


def _ratio_eigenvalue(n: int, d: int, r: int) -> float:
    s = _sin_pi_frac(r, n)
    if s < _RATIO_SIN_CUTOFF:
        return _folded_cosine_sum(n, d, r)
    return _sin_pi_frac((2 * d + 1) * r, n) / s - 1.0


def circuit_power_spectrum(g: CircuitPower) -> np.ndarray:
    """Closed-form eigenvalues of the circuit power, in index order.

    Complete powers are the complete graph K_n, whose spectrum is n-1 once
    and -1 with multiplicity n-1 (still in index order: r=0 carries n-1).
    """
    n, d = g.n, g.d
    if g.complete:
        lam = np.full(n, -1.0)
        lam[0] = float(n - 1)
        return lam
    lam = np.empty(n, dtype=float)
    lam[0] = float(2 * d)
    for r in range(1, n):
        lam[r] = _ratio_eigenvalue(n, d, r)
    return lam


def dirichlet_step(d: int) -> float:
    """The zero spacing q = 2 pi / (2d + 1) of the kernel ratio."""
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    return 2.0 * math.pi / (2 * d + 1)


def dirichlet_ratio(d: int, phi: float) -> float:
    """f_d(phi) = sin((2d+1) phi/2) / sin(phi/2) on [0, 2 pi].

    The endpoints use the continuous extension f_d(0) = f_d(2 pi) = 2d + 1.
    Zeros sit exactly at the multiples k q, k = 1..2d, of the step q.
    """
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if not 0.0 <= phi <= 2.0 * math.pi:
        raise DomainError(f"phi={phi} outside [0, 2 pi]")
    if phi == 0.0 or phi == 2.0 * math.pi:
        return float(2 * d + 1)
    s = math.sin(phi / 2.0)
    if abs(s) < _RATIO_SIN_CUTOFF:
        return 1.0 + 2.0 * sum(math.cos(j * phi) for j in range(1, d + 1))
    return math.sin((2 * d + 1) * phi / 2.0) / s


class MultTwoBound(NamedTuple):
    """Lower thresholds above which non-top eigenvalues come in exact pairs.

    ``sharp`` is 1/sin(2 pi/(2d+1)) - 1: every eigenvalue strictly between
    it and 2d has multiplicity exactly two (proved via the kernel envelope).
    ``relaxed`` is d/pi - 1.  It is smaller than ``sharp`` for every d, so
    the window it defines is wider and the multiplicity-two guarantee does
    NOT extend to it: eigenvalue 0 of C_6^(2) lies above d/pi - 1 with
    multiplicity three.  Both are exposed; scans check the sharp one and
    report violations of the relaxed one as data.
    """

    sharp: float
    relaxed: float


def mult_two_bound(d: int) -> MultTwoBound:
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    q = dirichlet_step(d)
    return MultTwoBound(sharp=1.0 / math.sin(q) - 1.0, relaxed=d / math.pi - 1.0)


@dataclass(frozen=True)
class EigenvalueGroup:
    value: float
    multiplicity: int
    indices: tuple[int, ...]


@dataclass(frozen=True)
class GroupedSpectrum:
    """Eigenvalues merged into (value, multiplicity, indices) groups,
    ascending by value."""

    groups: tuple[EigenvalueGroup, ...]

    def multiplicity_of(self, value: float, tol: float = 1e-7) -> int:
        for grp in self.groups:
            if abs(grp.value - value) <= tol:
                return grp.multiplicity
        return 0

    def as_pairs(self) -> list[tuple[float, int]]:
        return [(g.value, g.multiplicity) for g in self.groups]


def group_spectrum(
    values: Sequence[float] | np.ndarray,
    tol: float = DEFAULT_GROUP_TOL,
    index_order: bool = True,
) -> GroupedSpectrum:
    """Merge eigenvalues that agree within tol (transitively) into groups.

    With ``index_order=True`` (the default) the input is taken to be a full
    spectrum indexed by r = 0..n-1, and the exact circulant symmetry
    lambda_r = lambda_{n-r} is enforced structurally: positions r and n-r
    always land in the same group regardless of float rounding.  Pass
    ``index_order=False`` for value lists in any other order (e.g. sorted
    eigensolver output), where that union would merge unrelated values.

    Warns if two resulting groups are separated by less than 10*tol, since
    the grouping is then ill-conditioned.
    """
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    vals = [float(v) for v in values]
    n = len(vals)
    if n == 0:
        return GroupedSpectrum(groups=())

    # union-find over indices
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    order = sorted(range(n), key=lambda i: vals[i])
    for a, b in zip(order, order[1:]):
        if vals[b] - vals[a] <= tol:
            union(a, b)
    if index_order:
        for r in range(1, n):
            union(r, n - r)

    members: dict[int, list[int]] = {}
    for i in range(n):
        members.setdefault(find(i), []).append(i)

    groups = []
    for idxs in members.values():
        idxs.sort()
        value = sum(vals[i] for i in idxs) / len(idxs)
        groups.append(EigenvalueGroup(value=value, multiplicity=len(idxs), indices=tuple(idxs)))
    groups.sort(key=lambda g: g.value)

    for a, b in zip(groups, groups[1:]):
        if b.value - a.value < 10.0 * tol:
            warnings.warn(
                f"groups at {a.value!r} and {b.value!r} are closer than 10*tol={10 * tol!r}",
                AmbiguousToleranceWarning,
                stacklevel=2,
            )
    return GroupedSpectrum(groups=tuple(groups))
