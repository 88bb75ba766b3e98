"""Periodogram, projections, filter-parameter and slope fitting."""

import numpy as np
import pytest

from modesift import (DegenerateFitError, SiftConfig, Signal, Spectrum,
                      ValidationError, collect_sift_iterates, estimate_alpha,
                      fit_filter_alphas, fit_spectral_slope, periodogram,
                      project_fourier)


def tone_signal(amplitude, cycles, n=256, dt=1.0, phase=0.0):
    """Cosine landing exactly on periodogram bin `cycles`."""
    t = np.arange(n) * dt
    omega = 2 * np.pi * cycles / (n * dt)
    return Signal(amplitude * np.cos(omega * t + phase), 0.0, dt)


class TestPeriodogram:
    def test_single_tone_peaks_at_its_bin(self):
        sig = tone_signal(1.5, cycles=12)
        spec = periodogram(sig)
        assert spec.peak_omega() == pytest.approx(spec.omegas[12])
        # on-bin cosine of amplitude A: peak power = A^2 * n * dt / 4
        assert spec.power[12] == pytest.approx(1.5 ** 2 * 256 / 4)
        others = np.delete(spec.power, 12)
        assert np.max(others) < 1e-20 * spec.power[12]

    def test_mean_is_removed(self):
        sig = tone_signal(1.0, cycles=5)
        shifted = sig.with_samples(sig.samples + 7.0)
        spec = periodogram(shifted)
        assert spec.power[0] == pytest.approx(0.0, abs=1e-18)

    def test_grid_definition(self):
        sig = tone_signal(1.0, cycles=3, n=200, dt=0.25)
        spec = periodogram(sig)
        assert spec.bin_width == pytest.approx(2 * np.pi / (200 * 0.25))
        np.testing.assert_allclose(np.diff(spec.omegas), spec.bin_width)
        assert spec.omegas[0] == 0.0
        assert len(spec.power) == 101

    @pytest.mark.parametrize("n", [256, 257])
    def test_parseval_energy_identity(self, rng, n):
        # independent route: time-domain energy of the centred series
        y = rng.standard_normal(n)
        sig = Signal(y, 0.0, 0.5)
        spec = periodogram(sig)
        time_domain = np.sum((y - np.mean(y)) ** 2) * 0.5
        assert spec.energy() == pytest.approx(time_domain, rel=1e-12)

    def test_too_short(self):
        with pytest.raises(ValidationError):
            periodogram(Signal(np.array([0.0, 1.0, 0.0])))


class TestProjection:
    def setup_method(self):
        self.period = 128.0
        self.dt = 1.0 / 64.0
        self.t = np.arange(8193) * self.dt
        self.omega = 3 * np.pi / 64

    def test_full_capture_of_matching_tone(self):
        sig = Signal(np.cos(self.omega * self.t), 0.0, self.dt)
        amps = project_fourier(sig, self.omega, self.period)
        # integral of cos^2 over the period: period / 2
        assert amps.amplitude == pytest.approx(self.period / 2, rel=1e-6)

    def test_orthogonal_tone_projects_to_nothing(self):
        other = np.pi / 32
        sig = Signal(np.cos(other * self.t), 0.0, self.dt)
        amps = project_fourier(sig, self.omega, self.period)
        assert amps.amplitude < 1e-6 * self.period

    def test_phase_invariance(self):
        a = project_fourier(Signal(np.cos(self.omega * self.t), 0.0,
                                   self.dt), self.omega, self.period)
        b = project_fourier(Signal(np.cos(self.omega * self.t + 1.1), 0.0,
                                   self.dt), self.omega, self.period)
        assert a.amplitude == pytest.approx(b.amplitude, rel=1e-9)

    def test_window_must_cover_a_period(self):
        short = Signal(np.zeros(100), 0.0, self.dt)
        with pytest.raises(ValidationError):
            project_fourier(short, self.omega, self.period)

    def test_parameter_validation(self):
        sig = Signal(np.zeros(16), 0.0, 1.0)
        with pytest.raises(ValidationError):
            project_fourier(sig, 0.0, 8.0)
        with pytest.raises(ValidationError):
            project_fourier(sig, 1.0, -8.0)


class TestAlphaEstimator:
    def run_recurrence(self, alpha, x):
        y = np.zeros_like(x)
        for k in range(1, len(x)):
            y[k] = alpha * (y[k - 1] + x[k] - x[k - 1])
        return y

    @pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
    def test_recovers_planted_alpha(self, rng, alpha):
        x = rng.standard_normal(400)
        y = self.run_recurrence(alpha, x)
        fit = estimate_alpha(x, y)
        assert fit.alpha == pytest.approx(alpha, abs=1e-12)
        assert fit.residual_rms < 1e-12
        assert fit.pairs == 399

    def test_zero_output_fits_alpha_zero(self):
        fit = estimate_alpha([1.0, 2.0, 0.5, 1.5], np.zeros(4))
        assert fit.alpha == 0.0 and fit.residual_rms == 0.0

    def test_degenerate_input_raises(self):
        # y_{n-1} + x_n - x_{n-1} vanishes identically but y is nonzero
        with pytest.raises(DegenerateFitError):
            estimate_alpha([0.0, 1.0, 2.0], [-1.0, -1.0, 0.0])

    def test_length_validation(self):
        with pytest.raises(ValidationError):
            estimate_alpha([1.0, 2.0], [1.0])
        with pytest.raises(ValidationError):
            estimate_alpha([1.0], [1.0])

    def test_sifting_iterates_look_like_a_high_pass(self, two_tone):
        iterates = collect_sift_iterates(two_tone, SiftConfig(max_imfs=1))
        fits = fit_filter_alphas(iterates)
        assert len(fits) == len(iterates) - 1
        assert all(0.0 < fit.alpha <= 1.05 for fit in fits)

    def test_fit_filter_alphas_needs_two_iterates(self):
        with pytest.raises(ValidationError):
            fit_filter_alphas([np.zeros(8)])


class TestSlopeFit:
    def make_power_law(self, slope, n_bins=200, noise=None):
        omegas = np.linspace(0.0, 2.0, n_bins)
        power = np.zeros(n_bins)
        positive = omegas > 0
        power[positive] = 10.0 * omegas[positive] ** slope
        if noise is not None:
            power[positive] *= noise
        return Spectrum(omegas, power, omegas[1] - omegas[0], n_bins, 1.0)

    def test_exact_power_law_recovered(self):
        spec = self.make_power_law(-2.7)
        fit = fit_spectral_slope(spec, 0.05, 1.9)
        assert fit.slope == pytest.approx(-2.7, abs=1e-9)
        assert fit.r_squared == pytest.approx(1.0, abs=1e-12)

    def test_flat_spectrum_hits_degenerate_r2_branch(self):
        spec = self.make_power_law(0.0)
        fit = fit_spectral_slope(spec, 0.05, 1.9)
        assert fit.slope == pytest.approx(0.0, abs=1e-12)
        assert fit.r_squared == 1.0

    def test_band_must_hold_enough_positive_bins(self):
        spec = self.make_power_law(-2.0, n_bins=40)
        with pytest.raises(ValidationError, match="at least 4"):
            fit_spectral_slope(spec, 1.9, 1.95)

    def test_band_validation(self):
        spec = self.make_power_law(-2.0)
        with pytest.raises(ValidationError):
            fit_spectral_slope(spec, -1.0, 1.0)
        with pytest.raises(ValidationError):
            fit_spectral_slope(spec, 1.0, 0.5)

    def test_zero_power_bins_are_excluded(self):
        spec = self.make_power_law(-2.0)
        power = spec.power.copy()
        power[power > 0] = np.where(spec.omegas[power > 0] > 1.0, 0.0,
                                    power[power > 0])
        gappy = Spectrum(spec.omegas, power, spec.bin_width, spec.n, spec.dt)
        fit = fit_spectral_slope(gappy, 0.05, 1.9)
        assert fit.slope == pytest.approx(-2.0, abs=1e-9)
        assert fit.bins_used < np.count_nonzero(spec.omegas > 0)
