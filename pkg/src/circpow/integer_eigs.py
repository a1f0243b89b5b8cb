"""Exact multiplicities of the integer eigenvalues of circuit powers.

Every operation here is pure integer arithmetic (gcd, 2-adic order,
congruences); no floats are involved.  The possible integer eigenvalues of
a non-complete circuit power C_n^(d) are -3, -2, -1, 0, 1 and 2d, and each
multiplicity is determined by the closed formulas below:

* 2d: multiplicity 1 (degree of regularity of a connected regular graph);
* -1: g - 1 with g = gcd(2d+1, n);
* 0 and -2: three-case formulas in g = gcd(n, d), h = gcd(n, d+1) and the
  2-adic orders of n, d, d+1;
* 1: multiplicity 2 iff 6 | n and d = 1 (mod 6), else absent;
* -3: multiplicity 2 iff 6 | n and d = 4 (mod 6), else absent.

The -2 formula requires d > 1; for the plain circuit (d = 1) the classical
fact applies instead: -2 is an eigenvalue iff n is even, with multiplicity
one.  ``integer_spectrum`` handles that case with a distinct tag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CompleteGraphError,
    DomainError,
    InternalConsistencyError,
    TheoremDomainError,
)
from .graphs import CirculantGraph, CircuitPower

INT_BOUND = 2**31

INTEGER_CANDIDATES = (-3, -2, -1, 0, 1)  # plus 2d, which depends on d


def ord_p(p: int, n: int) -> int:
    """Largest j such that p**j divides n, for prime p and n >= 1."""
    if p < 2:
        raise DomainError(f"p must be a prime >= 2, got {p}")
    if any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
        raise DomainError(f"p must be prime, got composite {p}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    j = 0
    while n % p == 0:
        n //= p
        j += 1
    return j


@dataclass(frozen=True)
class TheoremParams:
    """The arithmetic data the case splits are keyed on.

    ``g`` is gcd(n, d) except for eigenvalue -1, where it is gcd(2d+1, n).
    """

    g: int
    h: int
    ord2_n: int
    ord2_d: int
    ord2_d1: int


@dataclass(frozen=True)
class IntegerEigReport:
    eigenvalue: int
    multiplicity: int
    case_tag: str
    params: TheoremParams


@dataclass(frozen=True)
class IntegralityVerdict:
    integral: bool
    # witness on failure: (gcd value, a member of the class missing from the jumps)
    violating_class: tuple[int, int] | None = None


def _validate(n: int, d: int) -> None:
    if not (isinstance(n, int) and isinstance(d, int)):
        raise DomainError("n and d must be integers")
    if n < 3 or d < 1:
        raise DomainError(f"need n >= 3 and d >= 1, got ({n}, {d})")
    if n > INT_BOUND or d > INT_BOUND:
        raise DomainError(f"n, d limited to {INT_BOUND}")
    if 2 * d >= n - 1:
        raise CompleteGraphError(
            f"C_{n}^({d}) is complete; the multiplicity formulas do not apply"
        )


def _params(n: int, d: int, g_override: int | None = None) -> TheoremParams:
    return TheoremParams(
        g=g_override if g_override is not None else math.gcd(n, d),
        h=math.gcd(n, d + 1),
        ord2_n=ord_p(2, n),
        ord2_d=ord_p(2, d),
        ord2_d1=ord_p(2, d + 1),
    )


def _pick_case(cases: list[tuple[str, bool, int]]) -> tuple[str, int]:
    """Select the firing case, asserting the splits are consistent.

    ``cases`` lists (tag, condition, value) with the parity-keyed case
    last.  The conditions partition the grid; if that ever breaks we raise
    rather than return a wrong multiplicity.
    """
    hits = [(tag, value) for tag, cond, value in cases if cond]
    if not hits:
        raise InternalConsistencyError(f"no case matched among {[c[0] for c in cases]}")
    values = {value for _, value in hits}
    if len(values) > 1:
        raise InternalConsistencyError(f"overlapping cases disagree: {hits}")
    return hits[0]


def mult_two_d(n: int, d: int) -> IntegerEigReport:
    """The regularity eigenvalue 2d is always simple."""
    _validate(n, d)
    return IntegerEigReport(2 * d, 1, "regularity", _params(n, d))


def mult_minus_one(n: int, d: int) -> IntegerEigReport:
    """Multiplicity of -1 equals gcd(2d+1, n) - 1."""
    _validate(n, d)
    g = math.gcd(2 * d + 1, n)
    return IntegerEigReport(-1, g - 1, "gcd(2d+1,n)-1", _params(n, d, g_override=g))


def nullity(n: int, d: int) -> IntegerEigReport:
    """Multiplicity of 0, by the three-case gcd/2-adic formula."""
    _validate(n, d)
    p = _params(n, d)
    g, h = p.g, p.h
    tag, mult = _pick_case(
        [
            ("ord2(d+1)>=ord2(n)", p.ord2_d1 >= p.ord2_n, g - 1),
            ("ord2(d+1)<ord2(n), d odd", p.ord2_d1 < p.ord2_n and d % 2 == 1, g + h - 1),
            ("2|n, 2|d", n % 2 == 0 and d % 2 == 0, g + h - 2),
        ]
    )
    return IntegerEigReport(0, mult, tag, p)


def mult_minus_two(n: int, d: int) -> IntegerEigReport:
    """Multiplicity of -2 for d > 1, by the swapped three-case formula.

    d = 1 is outside this formula's range and raises; the plain-circuit
    fact (-2 iff n even, multiplicity one) is applied by
    :func:`integer_spectrum` instead.
    """
    _validate(n, d)
    if d == 1:
        raise TheoremDomainError(
            "the -2 multiplicity formula requires d > 1; "
            "for the circuit itself -2 occurs iff n is even, with multiplicity 1"
        )
    p = _params(n, d)
    g, h = p.g, p.h
    tag, mult = _pick_case(
        [
            ("ord2(d)>=ord2(n)", p.ord2_d >= p.ord2_n, h - 1),
            ("ord2(d)<ord2(n), 2|d", p.ord2_d < p.ord2_n and d % 2 == 0, g + h - 1),
            ("2|n, d odd", n % 2 == 0 and d % 2 == 1, g + h - 2),
        ]
    )
    return IntegerEigReport(-2, mult, tag, p)


def _mult_minus_two_circuit(n: int) -> IntegerEigReport:
    mult = 1 if n % 2 == 0 else 0
    return IntegerEigReport(-2, mult, "d=1 circuit: -2 iff 2|n", _params(n, 1))


def mult_one(n: int, d: int) -> IntegerEigReport:
    """Eigenvalue 1 occurs (with multiplicity 2) iff 6|n and d = 1 mod 6."""
    _validate(n, d)
    present = n % 6 == 0 and d % 6 == 1
    tag = "6|n, d=1 mod 6" if present else "absent"
    return IntegerEigReport(1, 2 if present else 0, tag, _params(n, d))


def mult_minus_three(n: int, d: int) -> IntegerEigReport:
    """Eigenvalue -3 occurs (with multiplicity 2) iff 6|n and d = 4 mod 6."""
    _validate(n, d)
    present = n % 6 == 0 and d % 6 == 4
    tag = "6|n, d=4 mod 6" if present else "absent"
    return IntegerEigReport(-3, 2 if present else 0, tag, _params(n, d))


def integer_spectrum(n: int, d: int) -> list[IntegerEigReport]:
    """Reports for all six integer candidates, zero multiplicities included.

    Ordered by eigenvalue descending: 2d, 1, 0, -1, -2, -3.
    """
    _validate(n, d)
    minus_two = _mult_minus_two_circuit(n) if d == 1 else mult_minus_two(n, d)
    return [
        mult_two_d(n, d),
        mult_one(n, d),
        nullity(n, d),
        mult_minus_one(n, d),
        minus_two,
        mult_minus_three(n, d),
    ]


def gcd_class(n: int, g: int) -> frozenset[int]:
    """All k in 1..n-1 with gcd(k, n) equal to gcd(g, n)."""
    target = math.gcd(g, n)
    return frozenset(k for k in range(1, n) if math.gcd(k, n) == target)


def is_integral(graph: CirculantGraph | CircuitPower) -> IntegralityVerdict:
    """Decide integrality: the jump set must be a union of full gcd classes.

    On failure the verdict carries a witness (gcd value, missing member).
    """
    if isinstance(graph, CircuitPower):
        graph = graph.as_circulant()
    n = graph.n
    jumps = graph.jumps
    checked: set[int] = set()
    for j in sorted(jumps):
        target = math.gcd(j, n)
        if target in checked:
            continue
        checked.add(target)
        for k in sorted(gcd_class(n, j)):
            if k not in jumps:
                return IntegralityVerdict(integral=False, violating_class=(target, k))
    return IntegralityVerdict(integral=True)
