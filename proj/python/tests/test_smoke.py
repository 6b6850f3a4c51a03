import math

import numpy as np
import pytest

import dwigner


def test_field_arithmetic():
    # GF(4): omega * omega = omega + 1
    assert dwigner.gf_mul(2, 0b10, 0b10) == 0b11
    assert dwigner.gf_inv(2, 0b10) == 0b11
    assert dwigner.default_poly(3) == 0b1011


def test_geometry_counts():
    assert dwigner.geometry_counts(2) == (5, 20)
    assert dwigner.geometry_counts(3) == (9, 72)


def test_net_roundtrip_and_f():
    net = dwigner.random_net(3, seed=42)
    again = dwigner.QuantumNet.from_json(net.to_json())
    assert net.to_json() == again.to_json()
    assert net.f_of(0, 0) == 1
    signs = net.gen_signs()
    assert len(signs) == 9 and all(len(row) == 3 for row in signs)


def test_wigner_table_axioms():
    net = dwigner.random_net(2, seed=7)
    w = dwigner.wigner_table(net, "bell")
    assert w.shape == (4, 4)
    assert abs(w.sum() - 1.0) < 1e-10

    nums, den = dwigner.bell_table_exact(net)
    assert den == 32
    assert sorted(set(nums)) in ([0, 8], [-4, 4])

    flat = dwigner.wigner_table(net, "mixed")
    assert np.allclose(flat, 1 / 16)

    psi = np.zeros(4, dtype=complex)
    psi[0] = psi[3] = 1 / math.sqrt(2)
    w2 = dwigner.wigner_table(net, psi)
    assert np.allclose(w, w2, atol=1e-10)


def test_interference_profile_and_localization():
    net = dwigner.localized_net_for(3, m=0b101, q_I=0b010)
    prof = dwigner.interference_profile(net, 0b101)
    F = np.asarray(prof["F"])
    support = {q for q in range(8) if abs(F[q]) > 1e-12}
    assert support == {0b010, 0b111}
    assert prof["maxR"] == pytest.approx(1 / 16)
    assert prof["maxI"] == pytest.approx(1 / 16)


def test_normalized_entropy():
    assert dwigner.normalized_entropy([1.0, 0.0, 0.0, 0.0]) == pytest.approx(0.0)
    assert dwigner.normalized_entropy([1.0, 1.0, 1.0, 1.0]) == pytest.approx(1.0)
    assert dwigner.normalized_entropy([0.0, 0.0]) is None


def test_overlap_search_two_qubits():
    res = dwigner.overlap_search(2)
    assert res["satisfying"] == 0
    assert res["full_net_satisfying"] == 0
    assert all(c >= 1 for c in res["per_m_satisfying"])

    probe = dwigner.overlap_search_randomized(4, samples=2000, seed=11)
    assert probe["sampled"] == 2000
    assert probe["satisfying"] == 0


def test_experiment_and_fit():
    records_csv, rows = dwigner.run_average_experiment(2, 4, 5, master_seed=3, threads=1)
    assert records_csv.startswith("n,seed,m_bits,maxR,maxI,entropyR,entropyI,degenerate")
    ratios = [(row["n"], row["mean_ratio"]) for row in rows]
    assert ratios[0][1] > ratios[-1][1]
    fit = dwigner.fit_exponential(ratios)
    assert fit["slope"] < 0


def test_code5_report():
    zero, one = dwigner.code5_logical_states()
    assert abs(np.vdot(zero, one)) < 1e-12
    assert np.linalg.norm(zero) == pytest.approx(1.0)

    report = dwigner.code5_report(0b00001)
    assert '"passed": true' in report
