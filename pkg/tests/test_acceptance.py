"""Acceptance gate: every certification criterion at its stated tolerance.

Each test runs one full-size check, prints its pass/fail summary line and
asserts both the error bound and the runtime budget.  Run with `-s` to see
the per-criterion lines.
"""

import numpy as np
import pytest

from cstk import verify

RESULTS = []


def record(rep, budget_seconds):
    RESULTS.append(rep)
    print()
    print(rep.summary_line())
    assert rep.passed, f"{rep.check_name} exceeded tolerance: {rep.to_dict()}"
    assert rep.runtime_seconds < budget_seconds, f"{rep.check_name} exceeded {budget_seconds}s budget"
    return rep


def test_criterion_01_orthogonality_2d():
    rep = verify.check_orthogonality_2d(betas=(0.0, 0.5, 2.3), nmax=6, n_r=64, n_theta=256)
    record(rep, 10.0)
    assert rep.max_rel_err <= 1e-8
    assert rep.details["max_offdiag_rel"] <= 1e-10


def test_criterion_02_normalization_closed_form():
    rep = verify.check_kummer_normalization(betas=(0.0, 0.5, 1.0, 2.3), ts=np.linspace(0.0, 10.0, 41))
    record(rep, 1.0)
    assert rep.max_rel_err <= 1e-11


def test_criterion_03_kernel_reduction():
    rep = verify.check_kernel_reduction(mmax=8, samples=100)
    record(rep, 5.0)
    assert rep.max_rel_err <= 1e-8


def test_criterion_04_generating_function():
    rep = verify.check_generating_function(betas=(0.0, 1.2), cs=(1.0, 2.2), xs=(0.0, 0.3, 1.0))
    record(rep, 2.0)
    assert rep.max_rel_err <= 1e-9


def test_criterion_05_pde_eigen_identity():
    rep = verify.check_pde_eigen(betas=(0.0, 0.5, 2.3), nmax=8, samples=50)
    record(rep, 5.0)
    assert rep.max_rel_err <= 1e-10


def test_criterion_06_assoc_hermite_orthogonality():
    rep = verify.check_assoc_hermite(betas=(0.0, 1.0, 1.7), nmax=5)
    record(rep, 30.0)
    assert rep.max_rel_err <= 1e-6
    assert rep.details["beta0_max_rel"] <= 1e-10


def test_criterion_07_overlap():
    rep = verify.check_overlap(mmax=4, samples=6, betas=(0.0, 0.5, 2.3))
    record(rep, 10.0)
    assert rep.max_rel_err <= 1e-8
    assert rep.details["max_diag_deviation"] <= 1e-9


def test_criterion_08_transform_end_to_end():
    rep = verify.check_transform(mmax=3, betas=(0.0, 1.0), nmax=3)
    record(rep, 60.0)
    assert rep.details["pointwise_residual"] <= 1e-5
    assert rep.details["gram_deviation"] <= 1e-5


def test_criterion_09_resolution_of_identity():
    rep = verify.check_resolution_identity(mmax=2, betas=(0.0, 1.0), nmax=4)
    record(rep, 30.0)
    assert rep.max_rel_err <= 1e-6


def test_criterion_10_quadrature_self_tests():
    rep = verify.check_quadrature()
    record(rep, 1.0)
    assert rep.max_rel_err <= 1e-13


def test_zz_all_criteria_summary():
    # emitted after the ten criteria for a single consolidated view
    print()
    for rep in RESULTS:
        print(rep.summary_line())
    assert len(RESULTS) == 10
    assert all(r.passed for r in RESULTS)
