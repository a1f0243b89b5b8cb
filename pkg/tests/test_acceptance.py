"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -v -s`.  The full module takes a
few minutes; the n <= 300 closed-form sweep dominates.

Two classical claims checked here are falsifiable and the falsifications
are themselves asserted (see the survey module docstring and README):
the multiplicity-two window above d/pi - 1, whose failures are pinned to
exactly the cells the nullity formula predicts, and the "only C_6^(1) is
integral" claim, whose failures are pinned to exactly the cocktail-party
family C_{2d+2}^(d).  The corrected statements (sharp window, route
agreement) pass everywhere.
"""

import math

import numpy as np

from circpow.eigenbasis import basis_for_eigenvalue, exact_rank, verify_exact
from circpow.graphs import CirculantGraph, CircuitPower, PathPower, adjacency
from circpow.integer_eigs import integer_spectrum, is_integral, nullity
from circpow.oracle import symmetric_eigen, symmetric_eigenvalues
from circpow.spectrum import (
    circuit_power_spectrum,
    circulant_spectrum,
    group_spectrum,
    mult_two_bound,
)
from circpow.survey import (
    ScanConfig,
    scan_path_conjectures,
    smallest_window_hits,
)

PER_ENTRY_TOL = 1e-7


def _noncomplete_cells(n_max: int):
    for n in range(3, n_max + 1):
        for d in range(1, (n - 2) // 2 + 1):
            yield n, d


def _fast_adjacency(first_row: np.ndarray, idx: np.ndarray) -> np.ndarray:
    return first_row[idx]


def _verdict(num: int, name: str) -> None:
    print(f"[acceptance] criterion {num} ({name}): PASS")


def test_criterion_1_closed_form_vs_oracle():
    """Sorted closed-form spectrum matches the dense eigensolver, n <= 300."""
    worst = 0.0
    for n in range(3, 301):
        shift = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
        for d in range(1, (n - 2) // 2 + 1):
            first_row = np.zeros(n)
            first_row[1 : d + 1] = 1.0
            first_row[n - d :] = 1.0
            a = _fast_adjacency(first_row, shift)
            closed = np.sort(circuit_power_spectrum(CircuitPower(n, d)))
            numeric = np.linalg.eigvalsh(a)
            diff = float(np.max(np.abs(closed - numeric)))
            worst = max(worst, diff)
            assert diff < PER_ENTRY_TOL, (n, d, diff)
    print(f"  worst per-entry deviation over the sweep: {worst:.3e}")
    _verdict(1, "closed form vs oracle, n <= 300")


def test_criterion_2_integer_eigenvalue_classification():
    """Proposition membership and exact multiplicity agreement, n <= 120.

    Each formula multiplicity must equal both the numeric-oracle count and
    the closed-form count, with zero tolerance on the integers themselves.
    """
    for n, d in _noncomplete_cells(120):
        values = symmetric_eigenvalues(adjacency(CircuitPower(n, d)))
        closed = circuit_power_spectrum(CircuitPower(n, d))
        candidates = {-3, -2, -1, 0, 1, 2 * d}
        for v in values:
            k = round(float(v))
            if abs(v - k) <= PER_ENTRY_TOL:
                assert k in candidates, (n, d, float(v))
        for rep in integer_spectrum(n, d):
            numeric = int(np.count_nonzero(np.abs(values - rep.eigenvalue) <= PER_ENTRY_TOL))
            formula_count = int(np.count_nonzero(np.abs(closed - rep.eigenvalue) <= PER_ENTRY_TOL))
            assert numeric == rep.multiplicity, (n, d, rep.eigenvalue)
            assert formula_count == rep.multiplicity, (n, d, rep.eigenvalue)
    _verdict(2, "integer eigenvalues and exact multiplicities, n <= 120")


def test_criterion_3_basis_certification():
    """Sign-vector bases verify exactly and have certified rank, n <= 120."""
    for n, d in _noncomplete_cells(120):
        a = adjacency(CircuitPower(n, d))
        for eig_rep in integer_spectrum(n, d):
            if eig_rep.multiplicity == 0:
                continue
            rep = basis_for_eigenvalue(n, d, eig_rep.eigenvalue)
            assert len(rep.vectors) == eig_rep.multiplicity
            for v in rep.vectors:
                assert set(v.entries) <= {-1, 0, 1}
                assert verify_exact(a, v, eig_rep.eigenvalue)
            assert exact_rank([v.entries for v in rep.vectors]) == eig_rep.multiplicity
    # the classical C_36^(14) example, exact sign patterns in output order
    rep = basis_for_eigenvalue(36, 14, -2)
    assert [v.entries for v in rep.vectors] == [
        tuple([1, 0, -1, 0] * 9),
        tuple([0, 1, 0, -1] * 9),
        tuple([1, 0, -1] * 12),
        tuple([0, 1, -1] * 12),
    ]
    _verdict(3, "basis certification, n <= 120")


def test_criterion_4_integrality_scan():
    """Gcd-class and spectral routes agree for n <= 200; the integral set is
    exactly {(6,1)} plus the cocktail-party family {(2d+2, d)}."""
    integral_cells = set()
    for n, d in _noncomplete_cells(200):
        verdict = is_integral(CircuitPower(n, d))
        lam = circuit_power_spectrum(CircuitPower(n, d))
        spectral = bool(np.all(np.abs(lam - np.round(lam)) <= PER_ENTRY_TOL))
        assert verdict.integral == spectral, (n, d)
        if verdict.integral:
            integral_cells.add((n, d))
    expected = {(6, 1)} | {(2 * d + 2, d) for d in range(1, 100) if 2 * d + 2 <= 200}
    assert integral_cells == expected
    print(
        "  note: the classical claim 'only (6,1)' is falsified by the "
        f"{len(expected) - 1}-member cocktail-party family (documented)"
    )
    _verdict(4, "integrality routes agree; integral set fully characterized, n <= 200")


def test_criterion_5_multiplicity_structure():
    """Sharp multiplicity-two window and odd-multiplicity rule, n <= 100;
    the literal d/pi - 1 window's failures are exactly the nullity defects."""
    relaxed_failures = set()
    for n, d in _noncomplete_cells(100):
        values = symmetric_eigenvalues(adjacency(CircuitPower(n, d)))
        grouped = group_spectrum(values, tol=PER_ENTRY_TOL, index_order=False)
        bounds = mult_two_bound(d)
        hi = 2 * d - PER_ENTRY_TOL
        for grp in grouped.groups:
            if bounds.sharp < grp.value < hi:
                assert grp.multiplicity == 2, (n, d, grp.value, grp.multiplicity)
            if bounds.relaxed < grp.value < hi and grp.multiplicity != 2:
                relaxed_failures.add((n, d))
            if grp.multiplicity % 2 == 1:
                assert any(
                    abs(grp.value - t) <= PER_ENTRY_TOL for t in (2 * d, 0, -2)
                ), (n, d, grp.value)
    predicted = {
        (n, d)
        for n, d in _noncomplete_cells(100)
        if d in (2, 3) and nullity(n, d).multiplicity not in (0, 2)
    }
    assert relaxed_failures == predicted
    assert (6, 2) in relaxed_failures  # eigenvalue 0, multiplicity 3
    assert smallest_window_hits([1, 2, 3, 4], 100) == {1: 5, 2: 7, 3: 10, 4: 12}
    print(
        f"  note: the literal d/pi-1 window fails on {len(relaxed_failures)} cells, "
        "all eigenvalue-0 nullity defects with d in {2,3} (documented); "
        "the sharp window is clean"
    )
    _verdict(5, "multiplicity structure, n <= 100")


def test_criterion_6_path_powers():
    """P_15^(6) has nullity three; the proved partial multiplicity-two result
    holds; the conjecture scans find exactly one family of counterexamples
    (plain paths on 3m+2 vertices have eigenvalue 2 cos(pi/3) = 1, falsifying
    the eigenvalue-one conjecture as literally stated) and nothing else."""
    values = symmetric_eigenvalues(adjacency(PathPower(15, 6)))
    assert int(np.count_nonzero(np.abs(values) <= PER_ENTRY_TOL)) == 3

    records = scan_path_conjectures(ScanConfig(n_range=(2, 40), jobs=4))
    eig_one_fails = {
        (rec.n, rec.d) for rec in records if rec.checks["path_eig_one"].outcome == "fail"
    }
    assert eig_one_fails == {(n, 1) for n in range(5, 41) if n % 3 == 2}
    for rec in records:
        assert rec.checks["path_simple"].outcome == "pass", (rec.n, rec.d)
        assert rec.checks["path_partial_mult_two"].outcome != "fail", (rec.n, rec.d)
    found_ints = set()
    for rec in records:
        found_ints |= {int(k) for k in rec.checks["path_int_catalog"].payload["integers"]}
    print(f"  integers catalogued as path-power eigenvalues, n <= 40: {sorted(found_ints)}")
    print(
        "  eigenvalue-one conjecture: falsified by the plain paths "
        f"{sorted(eig_one_fails)} (exact certificate); no counterexample for d >= 2"
    )
    print("  simplicity conjecture: no counterexample in range (remains open)")
    _verdict(6, "path powers, n <= 40")


def test_criterion_7_property_suites():
    """Trace/energy/symmetry identities on 500 random circulant graphs,
    orthonormality of the oracle, and the bound-ratio trend."""
    rng = np.random.default_rng(20260811)
    for _ in range(500):
        n = int(rng.integers(3, 65))
        size = int(rng.integers(1, n // 2 + 1))
        half = rng.choice(np.arange(1, n // 2 + 1), size=size, replace=False)
        jumps = {int(j) for j in half} | {n - int(j) for j in half}
        jumps.discard(0)
        g = CirculantGraph(n, jumps)
        lam = circulant_spectrum(g)
        assert abs(float(lam.sum())) <= 1e-9 * n
        assert abs(float((lam**2).sum()) - n * len(g.jumps)) <= 1e-6 * n
        for r in range(1, n):
            assert lam[r] == lam[n - r]
        dec = symmetric_eigen(adjacency(g))
        ortho = float(np.max(np.abs(dec.vectors.T @ dec.vectors - np.eye(n))))
        assert ortho <= 1e-8
        assert dec.residual <= 1e-8 * n

    # u(2q)/(d/pi) > 1, decreasing toward 1 (checked as a trend, not a limit)
    ds = [1, 2, 3, 5, 10, 30, 100, 300, 1000, 3000, 10000]
    ratios = [(mult_two_bound(d).sharp + 1) / (d / math.pi) for d in ds]
    assert all(r > 1 for r in ratios)
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert ratios[-1] - 1 < 1e-3
    _verdict(7, "property suites")
