"""Shared fixtures: the two-mode passive reference system in both forms."""

import numpy as np
import pytest

from cascade_synth import PassiveForm, from_passive_form

import reference_data as ref


@pytest.fixture
def reference_passive_form():
    return PassiveForm(r_tilde=ref.R_TILDE, k_tilde=ref.K_TILDE, offset=ref.OFFSET)


@pytest.fixture
def reference_system(reference_passive_form):
    return from_passive_form(reference_passive_form, np.eye(2, dtype=complex))
