import json
import math

import numpy as np
import pytest

from bcl import fock
from bcl import verification as V
from bcl.entropy import g
from bcl.errors import SingularReference, TruncationBudgetExceeded
from bcl.fock import FockDensity


class TestConjecture:
    def test_small_run_passes_and_ties_only_with_displaced_vacua(self):
        r = V.verify_conjecture(1.5, dim_in=8, samples=60, seed=3, refine_iters=40)
        assert r.passed and r.details["min_at_vacuum"]
        assert "fock[0]" in r.details["tied_with_vacuum"]
        assert all(t.startswith(("fock[0]", "coherent_grid", "refined[coherent")) for t in r.details["tied_with_vacuum"])
        assert abs(r.details["vacuum_margin"]) < 1e-10

    def test_single_photon_strictly_above_floor(self):
        spec, _ = fock.amp_output_spectrum(2.0, fock.fock_vector(1, 4), 120)
        out_entropy = -sum(p * math.log2(p) for p in spec if p > 1e-300)
        assert out_entropy > g(1) + 0.1

    def test_zero_tolerance_fails(self):
        assert not V.verify_conjecture(1.5, dim_in=6, samples=10, seed=0, refine=False, tolerance=0).passed

    def test_thread_count_does_not_change_margin(self):
        a = V.verify_conjecture(1.5, dim_in=6, samples=30, seed=5, refine=False, threads=1)
        b = V.verify_conjecture(1.5, dim_in=6, samples=30, seed=5, refine=False, threads=3)
        assert a.worst_margin == b.worst_margin and a.details["minimizer"] == b.details["minimizer"]


class TestTransposition:
    @pytest.mark.parametrize("kappa0", [1.0, 1.5, 3.0])
    def test_vacuum(self, kappa0):
        r = V.verify_transposition(kappa0, dim=30, inputs=[fock.vacuum(30)], tolerance=1e-9)
        assert r.passed

    def test_single_photon(self):
        assert V.verify_transposition(2.0, dim=40, inputs=[fock.fock_state(1, 40)]).passed

    def test_unit_gain_maps_to_vacuum(self):
        rho = FockDensity.pure(fock.haar_vector(6, 1, 1)).embed(20)
        r = V.verify_transposition(1.0, dim=20, inputs=[rho], tolerance=1e-9)
        assert r.passed


class TestSpectra:
    def test_unit_gain(self):
        assert V.verify_spectra(1.0, dim_in=4, samples=5, seed=0).passed

    def test_random(self):
        r = V.verify_spectra(1.5, dim_in=6, samples=15, seed=2)
        assert r.passed and r.worst_margin > -1e-12


class TestMixing:
    def test_vacuum_fixed(self):
        r = V.verify_mixing(0.7, fock.vacuum(6))
        assert r.passed and r.worst_margin == 0

    def test_two_photons(self):
        assert V.verify_mixing(0.7, fock.fock_state(2, 8), 40).passed

    def test_coherent(self):
        rho = fock.coherent_state(1.0, 30)
        assert V.verify_mixing(0.5, rho, 20).passed
        q = 3
        out = rho
        for _ in range(q):
            out = fock.apply_loss(0.5, out)
        assert fock.trace_distance(out, fock.coherent_state(0.5 ** (q / 2), 30)) < 1e-9


class TestRelativeEntropy:
    def test_margin_positive(self):
        phi = fock.fock_vector(1, 8)
        sigma = fock.thermal_fock(1.0, 8).matrix
        sigma = sigma / np.trace(sigma)
        assert V.relative_entropy_margin(1.5, phi, sigma, fock.minimal_dim_out(1.5, 8, 1e-10)) > 0

    def test_unit_gain_saturates(self):
        sigma = fock.thermal_fock(1.0, 6).matrix
        sigma = sigma / np.trace(sigma)
        assert V.relative_entropy_margin(1.0, fock.fock_vector(0, 6), sigma, 6) == pytest.approx(0, abs=1e-12)

    def test_singular_reference_rejected(self):
        with pytest.raises(SingularReference):
            V.relative_entropy_margin(1.5, fock.fock_vector(1, 4), fock.vacuum(4).matrix, 40)

    def test_sampled(self):
        assert V.verify_relative_entropy_bound(1.5, samples=4, seed=1).passed


class TestEntropyChain:
    def test_vacuum_zero_slack(self):
        res = V.entropy_chain(1.5, fock.fock_vector(0, 6))
        for row in res["rows"]:
            assert row["slack"] == pytest.approx(0, abs=1e-10)
            assert row["rhs"] == pytest.approx(g(0.5), abs=1e-10)

    def test_q_zero_degenerate(self):
        res = V.entropy_chain(2.0, fock.fock_vector(1, 6), q_list=[0])
        assert res["rows"][0]["slack"] == pytest.approx(0, abs=1e-12)

    def test_coherent_converges(self):
        psi = fock.coherent_vector(1.0, 14)
        r = V.verify_entropy_chain(1.5, psi, q_list=(1, 2, 4, 8, 16), convergence_tol=1e-4)
        assert r.passed and r.details["min_slack"] >= -1e-9

    def test_photon_numbers_follow_prediction(self):
        res = V.entropy_chain(1.5, fock.haar_vector(6, 0, 0))
        for row in res["rows"]:
            assert row["output_photons"] == pytest.approx(row["predicted_photons"], abs=1e-8)

    def test_sampled(self):
        assert V.verify_entropy_chain_sampled(1.5, dim_in=6, samples=4, seed=0).passed


class TestAdditivity:
    def test_vacuum_pair_at_floor(self):
        amp2 = V.TwoCopyAmplifier(1.5, 4)
        s, _ = amp2.entropy(fock.fock_vector(0, 16))
        assert s == pytest.approx(2 * g(0.5), abs=1e-9)

    def test_entangled_pair_above_floor(self):
        amp2 = V.TwoCopyAmplifier(1.5, 8)
        psi = np.zeros(64, dtype=complex)
        psi[0] = psi[9] = 1 / math.sqrt(2)
        s, _ = amp2.entropy(psi)
        assert s > 2 * g(0.5)

    def test_against_dense_product_channel(self):
        d, D = 3, 35
        psi = fock.haar_vector(d * d, 4, 0)
        K = fock.kraus_amp(1.5, d, D).operators
        rho = np.outer(psi, psi.conj()).reshape(d, d, d, d)
        # channel on the first mode, then on the second
        mid = np.einsum("aim,mnpq,akp->inkq", K, rho, K.conj())
        out = np.einsum("bjn,inkq,blq->ijkl", K, mid, K.conj()).reshape(D * D, D * D)
        s_fast, _ = V.TwoCopyAmplifier(1.5, d).entropy(psi)
        assert s_fast == pytest.approx(fock.entropy(out), abs=1e-8)

    def test_dimension_cap(self):
        with pytest.raises(ValueError):
            V.verify_additivity_two_copies(1.5, dim_in=13, samples=1)

    def test_sampled(self):
        assert V.verify_additivity_two_copies(1.5, dim_in=4, samples=5, seed=7).passed


class TestEof:
    def test_unsqueezed(self):
        r = V.verify_eof(1.0, 2.0, dim=40)
        assert r.passed and r.details["eof_bits"] == 0.0
        assert r.details["residual_eigenvalues"] == pytest.approx([4, 4, 0, 0], abs=1e-12)

    def test_pure_squeezed(self):
        r = V.verify_eof(2.0, 0.0, dim=60)
        assert r.passed and r.details["eof_bits"] == 2.0


class TestSuite:
    def test_default_config_all_pass(self):
        reports = V.run_all(V.SuiteConfig(conjecture_samples=40, conjecture_dim=8, spectra_samples=10,
                                          chain_samples=3, additivity_samples=3, relent_samples=3))
        assert [r.test_name for r in reports] == list(V.SUITES)
        assert all(r.passed for r in reports)

    def test_zero_tolerance_breaks_something(self):
        reports = V.run_all(V.SuiteConfig(tolerance=0.0, conjecture_samples=10, conjecture_dim=6, refine=False,
                                          spectra_samples=3, chain_samples=2, additivity_samples=2, relent_samples=2))
        assert not all(r.passed for r in reports)

    def test_seed_changes_margins_not_verdicts(self):
        cfg = dict(conjecture_samples=20, conjecture_dim=6, refine=False)
        a = V.run_one("conjecture", V.SuiteConfig(master_seed=1, **cfg))
        b = V.run_one("conjecture", V.SuiteConfig(master_seed=2, **cfg))
        assert a.passed and b.passed and a.seed != b.seed

    def test_report_json_shape(self):
        r = V.run_one("mixing")
        d = r.to_json(timing=False)
        assert list(d)[:8] == ["test", "params", "seed", "samples", "worst_margin", "tolerance", "passed", "elapsed_seconds"]
        assert d["elapsed_seconds"] == 0.0
        json.dumps(d)

    def test_budget_violation_raises(self):
        with pytest.raises(TruncationBudgetExceeded):
            V.verify_transposition(2.0, dim=10, inputs=[fock.coherent_state(1.5, 10)], budget=1e-12)
