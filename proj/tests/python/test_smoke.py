# Copyright 2026 The qcop authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import numpy as np
import pytest

import qcop


def test_identity_channel_is_cop():
    ch = qcop.Channel.identity(3)
    assert qcop.cop_degree(ch) <= 1e-12
    report = qcop.analyze(ch, samples=32, seed=1)
    assert report["verdict"] == "cop"
    assert report["tp"] and report["cp"]


def test_channel_apply_roundtrips_numpy():
    ch = qcop.Channel.cloning(3, 1.0)
    rho = np.diag([0.5, 0.3, 0.2]).astype(complex)
    out = ch.apply(rho)
    expected = (np.eye(3) + rho) / 4.0
    assert np.allclose(out, expected, atol=1e-12)
    assert abs(np.trace(ch.choi()) - 3.0) < 1e-12


def test_hamiltonian_degree_matches_closed_form():
    rng = np.random.default_rng(5)
    d = 3
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    h = (g + g.conj().T) / 2
    h -= np.trace(h) / d * np.eye(d)
    h /= np.sqrt(np.trace(h @ h).real * d)  # Tr H^2 = 1/d
    t2 = np.trace(h @ h).real
    t4 = np.trace(h @ h @ h @ h).real
    expected = ((d * d - 6) * t2**2 + d * (d * d - 2) * t4) / d**4
    assert qcop.cop_degree(qcop.Channel.hamiltonian(h)) == pytest.approx(expected, abs=1e-10)


def test_witness_identity():
    ch = qcop.Channel.transpose_cloning(3, 0.5)
    w, z = qcop.witness_expectations(ch)
    assert abs(3 * w - z) <= 1e-10  # CoP channel


def test_oracle_matches_coefficients_at_d2():
    ch = qcop.Channel.unitary(np.array([[0, 1], [1, 0]], dtype=complex))
    w, z = qcop.witness_expectations(ch)
    ow, oz, _ = qcop.witness_expectations_oracle(ch)
    assert w == pytest.approx(ow, abs=1e-10)
    assert z == pytest.approx(oz, abs=1e-10)


def test_k_spectrum_membership():
    eigs = qcop.k_spectrum(3)
    allowed = np.array([2.0, 1.0, -1.0, 0.0, 2.0 / 3.0, -2.0 / 3.0])
    dist = np.min(np.abs(eigs[:, None] - allowed[None, :]), axis=1)
    assert dist.max() <= 1e-9


def test_mixture_quadratic_form():
    ch = qcop.Channel.cloning(3, 0.5)
    assert qcop.mixture_cop_degree(ch, 0.3) <= 1e-12
    report = qcop.cloning_mixture_check(ch, 0.3)
    assert report["is_cloning"]
    assert report["residual"] <= 1e-10


def test_discord_demo_increases():
    demo = qcop.discord_increase_demo()
    assert demo["before"] == pytest.approx(0.0314231, abs=1e-4)
    assert demo["after"] == pytest.approx(0.0325923, abs=1e-4)
    assert demo["increased"]


def test_probe_is_deterministic():
    ch = qcop.Channel.cloning(4, 0.3)
    first = qcop.commuting_pair_probe(ch, samples=64, seed=11)
    second = qcop.commuting_pair_probe(ch, samples=64, seed=11)
    assert first["max_residual"] == second["max_residual"]
    assert first["max_residual"] <= 1e-9


def test_validation_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        qcop.Channel.cloning(2, 1.5)
    with pytest.raises(RuntimeError):
        qcop.k_spectrum(5)


def test_zero_discord_criterion():
    rho = np.kron(np.diag([0.6, 0.4]), np.diag([0.5, 0.5])).astype(complex)
    zero, residual = qcop.zero_a_discord(rho, 2, 2)
    assert zero and residual <= 1e-12
