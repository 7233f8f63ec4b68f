import numpy as np
import pytest

from hybridsec.channel import (
    DEFAULT_PLC,
    DEFAULT_PLC_ALICE_BOB,
    Cir,
    FreqResponse,
    LinkId,
    Medium,
    NoiseProfile,
    PlcPathModel,
    bundled_plc_path,
    cir_to_freq,
    gen_wireless_cir,
    load_plc_file,
    plc_response,
    realize,
    write_plc_file,
)
from hybridsec.config import ConfigError, ScenarioConfig


class TestGenWirelessCir:
    def test_zero_variance_gives_zero_taps(self, rng):
        cir = gen_wireless_cir(np.zeros(5), rng)
        assert np.all(cir.taps == 0)

    def test_negative_variance_rejected(self, rng):
        with pytest.raises(ConfigError):
            gen_wireless_cir([0.1, -0.1], rng)

    def test_total_energy_matches_variance_sum(self):
        # 17 equal-variance taps, unit total energy; oracle is the analytic
        # expectation E[sum |tap|^2] = sum sigma^2 = 1
        rng = np.random.default_rng(1)
        var = np.full(17, 1.0 / 17.0)
        energies = np.empty(100_000)
        for i in range(energies.size):
            energies[i] = np.sum(np.abs(gen_wireless_cir(var, rng).taps) ** 2)
        assert abs(energies.mean() - 1.0) < 0.02

    def test_deterministic_for_fixed_seed(self):
        var = np.full(4, 0.25)
        a = gen_wireless_cir(var, np.random.default_rng(99)).taps
        b = gen_wireless_cir(var, np.random.default_rng(99)).taps
        assert np.array_equal(a, b)


class TestCirToFreq:
    def test_unit_impulse_is_flat(self):
        cir = Cir(taps=[1.0 + 0j], tap_variances=[1.0])
        resp = cir_to_freq(cir, 64)
        assert np.allclose(resp.gains, 1.0 + 0j, atol=1e-15)

    def test_two_tap_hand_dft(self):
        # hand evaluation of sum_i taps[i] exp(-j 2 pi i k / 4) for taps [1, 1]
        cir = Cir(taps=[1.0 + 0j, 1.0 + 0j], tap_variances=[0.5, 0.5])
        resp = cir_to_freq(cir, 4)
        expected = np.array([2.0 + 0j, 1.0 - 1j, 0.0 + 0j, 1.0 + 1j])
        assert np.allclose(resp.gains, expected, atol=1e-12)

    def test_parseval(self, rng):
        for _ in range(20):
            cir = gen_wireless_cir(rng.uniform(0.0, 1.0, size=9), rng)
            resp = cir_to_freq(cir, 64)
            lhs = np.sum(np.abs(resp.gains) ** 2)
            rhs = 64 * np.sum(np.abs(cir.taps) ** 2)
            assert abs(lhs - rhs) <= 1e-12 * max(rhs, 1.0)

    def test_cir_longer_than_n_rejected(self, rng):
        cir = gen_wireless_cir(np.full(8, 0.125), rng)
        with pytest.raises(ConfigError):
            cir_to_freq(cir, 4)


class TestPlcResponse:
    def test_file_loader_identity(self, tmp_path, rng):
        g = rng.standard_normal((16, 2))
        resp = FreqResponse(g[:, 0] + 1j * g[:, 1])
        path = tmp_path / "chan.csv"
        write_plc_file(resp, path)
        loaded = load_plc_file(path, 16)
        assert np.array_equal(loaded.gains, resp.gains)

    def test_header_lines_skipped(self, tmp_path):
        path = tmp_path / "chan.csv"
        path.write_text("# comment\n0,1.0,0.0\n1,0.5,-0.5\n")
        loaded = load_plc_file(path, 2)
        assert np.array_equal(loaded.gains, np.array([1.0, 0.5 - 0.5j]))

    @pytest.mark.parametrize(
        "content",
        [
            "0,1.0\n1,1.0,0.0\n",  # malformed row
            "0,1.0,0.0\n",  # too few rows
            "0,1.0,0.0\n1,1.0,0.0\n2,1.0,0.0\n",  # too many rows
            "1,1.0,0.0\n0,1.0,0.0\n",  # out of order
            "0,nan,0.0\n1,1.0,0.0\n",  # non-finite
            "0,abc,0.0\n1,1.0,0.0\n",  # not a number
        ],
    )
    def test_bad_files_rejected(self, tmp_path, content):
        path = tmp_path / "bad.csv"
        path.write_text(content)
        with pytest.raises(ConfigError):
            load_plc_file(path, 2)

    def test_missing_file_is_oserror(self, tmp_path):
        with pytest.raises(OSError):
            load_plc_file(tmp_path / "nope.csv", 4)

    def test_single_path_no_attenuation_is_flat(self):
        model = PlcPathModel(gains=(0.5,), lengths_m=(0.0,))
        resp = plc_response(model, 32)
        assert np.allclose(resp.gains, 0.5 + 0j, atol=1e-15)

    def test_same_source_same_output(self):
        a = plc_response(DEFAULT_PLC_ALICE_BOB, 64).gains
        b = plc_response(DEFAULT_PLC_ALICE_BOB, 64).gains
        assert np.array_equal(a, b)

    @pytest.mark.parametrize("link", list(LinkId))
    def test_bundled_profiles_match_golden_files(self, link):
        generated = plc_response(DEFAULT_PLC[link], 64).gains
        golden = load_plc_file(bundled_plc_path(link), 64).gains
        assert np.array_equal(generated, golden)


class TestNoiseProfile:
    def test_flat_profile(self):
        prof = NoiseProfile.flat(2.0, 8)
        assert prof.kappa.shape == (3, 2, 8)
        assert np.all(prof.kappa == 2.0)

    @pytest.mark.parametrize("kappa", [0.0, -1.0])
    def test_non_positive_rejected(self, kappa):
        with pytest.raises(ConfigError):
            NoiseProfile.flat(kappa, 4)

    def test_non_positive_entry_rejected(self):
        k = np.ones((3, 2, 4))
        k[1, 0, 2] = 0.0
        with pytest.raises(ConfigError):
            NoiseProfile(k)


class TestRealize:
    def test_deterministic_given_seed(self):
        cfg = ScenarioConfig(n=32, n_cp=8)
        a = realize(cfg, np.random.default_rng(5))
        b = realize(cfg, np.random.default_rng(5))
        for key in a.responses:
            assert np.array_equal(a.responses[key].gains, b.responses[key].gains)

    def test_plc_fixed_wireless_fresh_across_seeds(self):
        cfg = ScenarioConfig(n=32, n_cp=8)
        a = realize(cfg, np.random.default_rng(5))
        b = realize(cfg, np.random.default_rng(6))
        assert not np.array_equal(
            a.gains(LinkId.ALICE_BOB, Medium.WIRELESS), b.gains(LinkId.ALICE_BOB, Medium.WIRELESS)
        )
        assert np.array_equal(
            a.gains(LinkId.ALICE_BOB, Medium.PLC), b.gains(LinkId.ALICE_BOB, Medium.PLC)
        )

    def test_includes_bob_eve_link(self):
        cfg = ScenarioConfig(n=16, n_cp=4)
        chan = realize(cfg, np.random.default_rng(1))
        assert (LinkId.BOB_EVE, Medium.WIRELESS) in chan.responses
        assert (LinkId.BOB_EVE, Medium.PLC) in chan.responses

    def test_wireless_gain_has_unit_mean(self):
        # unit-energy CIR implies E|H_k|^2 = 1 on every sub-channel
        cfg = ScenarioConfig(n=64, n_cp=16)
        rng = np.random.default_rng(77)
        acc = np.zeros(cfg.n)
        draws = 10_000
        for _ in range(draws):
            acc += realize(cfg, rng).gain2(LinkId.ALICE_BOB, Medium.WIRELESS)
        mean = acc / draws
        assert np.max(np.abs(mean - 1.0)) < 0.05


def test_wireless_gain_is_exponential():
    # |H_k|^2 of a unit-energy Gaussian CIR is Exp(1); KS test at 1e4 samples
    from scipy.stats import kstest

    rng = np.random.default_rng(123)
    var = np.full(17, 1.0 / 17.0)
    samples = np.empty(10_000)
    phases = np.exp(-2j * np.pi * 3 * np.arange(17) / 64.0)  # sub-channel k=3
    for i in range(samples.size):
        taps = gen_wireless_cir(var, rng).taps
        samples[i] = np.abs(np.dot(taps, phases)) ** 2
    stat = kstest(samples, "expon")
    assert stat.pvalue > 0.01
