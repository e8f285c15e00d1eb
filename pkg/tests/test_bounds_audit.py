import math

import pytest
from hypothesis import given, strategies as st

from ballcontacts.bounds_audit import (
    AuditResult,
    BoundReport,
    ProofParams,
    audit_chain,
    construction_lower,
    final_bound_inequality,
    high_dim_pairs_upper,
    pairs_upper,
    triplets_quads_upper,
)


def test_pairs_upper_general():
    r = pairs_upper(6)
    assert r.value == pytest.approx(6 * 6 - 0.926 * 6 ** (2 / 3), abs=1e-12)
    assert r.value == pytest.approx(32.94, abs=0.01)
    assert pairs_upper(2).value == pytest.approx(10.53, abs=0.01)
    assert r.n == 6
    assert "0.926" in r.formula_text


def test_pairs_upper_lattice():
    coeff = 3.0 * (18.0 * math.pi) ** (1 / 3) / math.pi
    assert coeff == pytest.approx(3.665, abs=1e-3)
    r = pairs_upper(100, lattice=True)
    assert r.value == pytest.approx(6 * 100 - coeff * 100 ** (2 / 3), abs=1e-9)
    # the lattice bound is stronger for every admissible n
    for n in range(2, 501):
        assert pairs_upper(n, lattice=True).value < pairs_upper(n).value


def test_pairs_upper_domain():
    with pytest.raises(ValueError):
        pairs_upper(1)
    with pytest.raises(ValueError):
        pairs_upper(1, lattice=True)
    with pytest.raises(ValueError):
        pairs_upper(0)


def test_triplets_quads_upper():
    assert triplets_quads_upper(12) == pytest.approx((100.0, 33.0))
    assert triplets_quads_upper(12, lattice=True) == (96.0, 24.0)
    with pytest.raises(ValueError):
        triplets_quads_upper(3)
    with pytest.raises(ValueError):
        triplets_quads_upper(1, lattice=True)
    # lattice counts are admissible from n = 2 on
    t, q = triplets_quads_upper(2, lattice=True)
    assert (t, q) == (16.0, 4.0)


def test_construction_lower():
    assert 486 ** (1 / 3) == pytest.approx(7.862, abs=1e-3)
    pl, tl, ql = construction_lower(19)
    assert pl == pytest.approx(6 * 19 - 486 ** (1 / 3) * 19 ** (2 / 3), abs=1e-9)
    n = 19
    assert tl == pytest.approx(
        8 * n - 12 * (3 * n / 2) ** (2 / 3) + 4 * n ** (1 / 3), abs=1e-9
    )
    assert ql == pytest.approx(
        2 * n - 4 * (3 * n / 2) ** (2 / 3) + 2 * n ** (1 / 3), abs=1e-9
    )
    # the k = 3 octahedral packing realizes more than the guaranteed floor
    assert tl < 56
    assert ql < 8
    with pytest.raises(ValueError):
        construction_lower(1)


def test_high_dim_pairs_upper():
    n, d, tau, delta = 16, 4, 24.0, math.pi**2 / 16.0
    got = high_dim_pairs_upper(n, d, tau, delta)
    want = 0.5 * tau * n - (1.0 / 2**d) * delta ** (-(d - 1) / d) * n ** ((d - 1) / d)
    assert got == pytest.approx(want, abs=1e-12)
    assert high_dim_pairs_upper(0, 4, 24.0, delta) == 0.0
    prev = None
    for n in range(0, 200):
        cur = high_dim_pairs_upper(n, 4, 24.0, delta)
        if prev is not None:
            assert cur > prev
        prev = cur


def test_high_dim_domain():
    delta = 0.5
    with pytest.raises(ValueError):
        high_dim_pairs_upper(4, 3, 12.0, delta)
    with pytest.raises(ValueError):
        high_dim_pairs_upper(-1, 4, 12.0, delta)
    with pytest.raises(ValueError):
        high_dim_pairs_upper(4, 4, 0.0, delta)
    with pytest.raises(ValueError):
        high_dim_pairs_upper(4, 4, 12.0, 0.0)
    with pytest.raises(ValueError):
        high_dim_pairs_upper(4, 4, 12.0, 1.0)


def test_proof_params_validation():
    ProofParams()
    with pytest.raises(ValueError):
        ProofParams(r_hat=1.3)
    with pytest.raises(ValueError):
        ProofParams(hales_separation=2.4)
    with pytest.raises(ValueError):
        ProofParams(density_bound=0.0)
    with pytest.raises(ValueError):
        ProofParams(density_bound=1.5)
    with pytest.raises(ValueError):
        ProofParams(molnar_bound=-0.1)


def test_audit_chain_all_pass():
    results = audit_chain()
    assert len(results) == 11
    assert all(r.passed for r in results)
    names = [r.name for r in results]
    assert len(set(names)) == len(names)
    by_name = {r.name: r for r in results}

    r = by_name["four_over_r_hat"]
    assert r.expected == 2.51998
    assert r.tolerance == 1e-5
    assert r.computed == pytest.approx(4.0 / 1.58731, abs=1e-12)

    r = by_name["surface_coefficient"]
    assert r.expected == 15.15980554
    assert r.tolerance == 1e-6

    r = by_name["final_coefficient"]
    assert r.expected == 0.926675
    assert r.tolerance == 1e-6

    r = by_name["isoperimetric_ball"]
    assert r.expected == 1.0
    assert r.tolerance == 1e-12

    # strict inequalities are encoded as indicators checked exactly
    for name in ("four_over_r_hat_below_separation",
                 "final_coefficient_rounds_down",
                 "r_hat_above_sqrt2"):
        r = by_name[name]
        assert r.computed == 1.0
        assert r.expected == 1.0
        assert r.tolerance == 0.0


def test_audit_result_consistency_guard():
    AuditResult(name="x", computed=1.0, expected=1.0, tolerance=0.0, passed=True)
    with pytest.raises(ValueError):
        AuditResult(name="x", computed=2.0, expected=1.0, tolerance=0.0, passed=True)
    with pytest.raises(ValueError):
        AuditResult(name="x", computed=1.0, expected=1.0, tolerance=0.0, passed=False)


def test_final_bound_inequality():
    assert final_bound_inequality(12, 0, 4) == 62.0
    assert final_bound_inequality(12, 0, 4) == 0.5 * (12 * 12 - (12 - 0 - 4) - 3 * 4)
    with pytest.raises(ValueError):
        final_bound_inequality(12, -1, 4)
    with pytest.raises(ValueError):
        final_bound_inequality(12, 0, 3)
    with pytest.raises(ValueError):
        final_bound_inequality(12, 9, 4)


def test_bound_report_rejects_nonfinite():
    with pytest.raises(ValueError):
        BoundReport(name="bad", n=2, value=math.inf, formula_text="x")


@given(st.integers(min_value=2, max_value=10**6))
def test_upper_lower_sandwich(n):
    # guaranteed floor never exceeds the proven ceiling
    lower, _, _ = construction_lower(n)
    assert lower <= pairs_upper(n).value


@given(st.integers(min_value=4, max_value=10**6))
def test_triplet_quad_ordering(n):
    t, q = triplets_quads_upper(n)
    tl, ql = triplets_quads_upper(n, lattice=True)
    assert tl <= t
    assert ql <= q
