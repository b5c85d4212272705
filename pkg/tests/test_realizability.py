"""Cascade realizability test and decomposition into one-mode stages."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cascade_synth import (
    CascadeChain,
    NotCascadeRealizable,
    SlhSystem,
    cascade,
    decompose_cascade,
    drift_matrix,
    identity_system,
    is_cascade_realizable,
    max_abs,
)
from cascade_synth.sampling import random_chain, random_system

import reference_data as ref

seeds = st.integers(0, 2**32 - 1)


def upper_residual_oracle(sys):
    """Max abs entry in the strictly upper 2x2 block triangle of the drift."""
    a = drift_matrix(sys)
    worst = 0.0
    for j in range(sys.n):
        for k in range(j + 1, sys.n):
            for p in range(2):
                for q in range(2):
                    worst = max(worst, abs(a[2 * j + p, 2 * k + q]))
    return worst, max(1.0, max_abs(a))


class TestIsCascadeRealizable:
    def test_one_mode_always_realizable(self):
        report = is_cascade_realizable(random_system(1, 3, 5))
        assert report.is_triangular
        assert report.max_upper_residual == 0.0

    def test_reference_system_is_not_realizable(self, reference_system):
        report = is_cascade_realizable(reference_system)
        assert not report.is_triangular
        worst, scale = upper_residual_oracle(reference_system)
        assert report.max_upper_residual == pytest.approx(worst, abs=1e-15)
        assert report.scale == pytest.approx(scale, abs=1e-12)
        assert report.max_upper_residual > 1.0

    def test_transformed_reference_system_is_realizable(self):
        sys = SlhSystem(s=np.eye(2, dtype=complex), k=ref.K_PRIME, r=ref.R_PRIME)
        # printed to four decimals, so the residual sits at the rounding level
        report = is_cascade_realizable(sys, tol=1e-4)
        assert report.is_triangular
        assert not is_cascade_realizable(sys, tol=1e-9).is_triangular

    @given(st.integers(1, 6), st.integers(1, 4), seeds)
    @settings(max_examples=30, deadline=None)
    def test_report_matches_entrywise_oracle(self, n, m, seed):
        sys = random_system(n, m, seed)
        report = is_cascade_realizable(sys)
        worst, scale = upper_residual_oracle(sys)
        assert report.max_upper_residual == worst
        assert report.scale == scale
        assert report.is_triangular == (worst <= report.tolerance_used * scale)

    @given(st.integers(1, 6), st.integers(1, 4), seeds)
    @settings(max_examples=30, deadline=None)
    def test_cascade_outputs_are_realizable(self, n, m, seed):
        combined = cascade(random_chain(n, m, seed))
        assert is_cascade_realizable(combined).is_triangular

    def test_tolerance_is_relative_to_drift_scale(self):
        sys = random_system(3, 2, 7)
        huge = SlhSystem(s=sys.s, k=1e6 * sys.k, r=1e12 * sys.r)
        report = is_cascade_realizable(huge, tol=1e-9)
        assert report.scale == max(1.0, max_abs(drift_matrix(huge)))
        # absolute residual is enormous, but so is the scale
        assert report.max_upper_residual > 1e9
        assert not report.is_triangular

    def test_tolerance_floor_for_small_systems(self):
        # drift norm below 1: the floor keeps the test absolute at tol
        sys = SlhSystem(
            s=np.eye(1, dtype=complex),
            k=np.array([[1e-8, 1e-8j], [1e-8, 0.0]])[:1],
            r=np.zeros((2, 2)),
        )
        assert is_cascade_realizable(sys).scale == 1.0


class TestDecomposeCascade:
    def test_zero_mode_system_rejected(self):
        with pytest.raises(ValueError):
            decompose_cascade(identity_system(2))

    def test_raises_with_report_attached(self, reference_system):
        with pytest.raises(NotCascadeRealizable) as exc:
            decompose_cascade(reference_system)
        report = exc.value.report
        assert not report.is_triangular
        assert report.max_upper_residual > 1.0

    @given(st.integers(1, 6), st.integers(1, 4), seeds)
    @settings(max_examples=30, deadline=None)
    def test_roundtrip_through_cascade(self, n, m, seed):
        combined = cascade(random_chain(n, m, seed))
        chain = decompose_cascade(combined)
        assert chain.residual_r is None
        rebuilt = cascade(chain)
        assert max_abs(rebuilt.s - combined.s) == 0.0
        assert max_abs(rebuilt.k - combined.k) == 0.0
        assert max_abs(rebuilt.r - combined.r) <= 1e-12

    def test_stage_drift_equals_parent_diagonal_block(self):
        combined = cascade(random_chain(4, 2, 13))
        chain = decompose_cascade(combined)
        a = drift_matrix(combined)
        for j, stage in enumerate(chain.stages):
            blk = a[2 * j : 2 * j + 2, 2 * j : 2 * j + 2]
            assert max_abs(drift_matrix(stage) - blk) <= 1e-12

    def test_respects_explicit_tolerance(self):
        sys = SlhSystem(s=np.eye(2, dtype=complex), k=ref.K_PRIME, r=ref.R_PRIME)
        chain = decompose_cascade(sys, tol=1e-4)
        assert isinstance(chain, CascadeChain)
        assert chain.n == 2
        with pytest.raises(NotCascadeRealizable):
            decompose_cascade(sys, tol=1e-9)
