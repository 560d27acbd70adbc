import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qelm.encoding import EncodingSpec, encode, generator_eigenvalues
from qelm.fourier import (
    FourierSpectrum,
    FrequencySet,
    coefficient_matrix,
    expressivity_report,
    frequency_set,
    frequency_set_from_eigenvalues,
    multivariate_frequency_set,
    reduced_observable,
    richness,
    spectrum_dft,
    spectrum_direct,
)
from qelm.linalg import derive_rng, svd_rank
from qelm.reservoir import ReservoirSpec, realize
from qelm.states import PauliString, density, pauli_strings, plus_state, sample_pauli_strings, zero_state

from oracles import full_readout

RESERVOIRS = ("identity", "integrable", "chaotic", "haar")


def brute_force_frequencies(spec):
    lam = generator_eigenvalues(spec)
    return sorted({round(a - b, 9) for a in lam for b in lam})


def pipeline(spec, u_r, obs, rho0, n_h):
    o = PauliString(obs).matrix() if isinstance(obs, (str, PauliString)) else obs
    return lambda x: full_readout(rho0, encode(spec, x), u_r, o, n_h)


configs = st.tuples(
    st.sampled_from(["pauli", "exponential"]),
    st.integers(1, 3),
    st.integers(0, 2),
    st.sampled_from(RESERVOIRS),
    st.integers(0, 10**6),
)


class TestFrequencySet:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_pauli_closed_form(self, n):
        np.testing.assert_array_equal(frequency_set(EncodingSpec.pauli(n)).frequencies, np.arange(-n, n + 1))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_exponential_closed_form(self, n):
        m = (3**n - 1) // 2
        np.testing.assert_array_equal(frequency_set(EncodingSpec.exponential(n)).frequencies, np.arange(-m, m + 1))

    def test_single_qubit_any_beta(self):
        assert frequency_set(EncodingSpec.product([2.7])) == FrequencySet(np.array([-2.7, 0.0, 2.7]))

    @settings(max_examples=40)
    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
    def test_matches_brute_force(self, betas):
        spec = EncodingSpec.product(betas)
        np.testing.assert_allclose(frequency_set(spec).frequencies, brute_force_frequencies(spec), atol=1e-9)

    @settings(max_examples=40)
    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
    def test_symmetric_and_bounded(self, betas):
        spec = EncodingSpec.product(betas)
        om = frequency_set(spec)
        assert 0.0 in om
        assert all(-w in om for w in om)
        assert len(om) <= 4**spec.n_accessible

    @pytest.mark.parametrize("n", range(1, 7))
    def test_nonnegative_counts(self, n):
        assert len(frequency_set(EncodingSpec.pauli(n)).nonnegative) == n + 1
        assert len(frequency_set(EncodingSpec.exponential(n)).nonnegative) == 1 + (3**n - 1) // 2

    @pytest.mark.parametrize("n", range(1, 7))
    def test_generic_eigenvalues_reach_maximum(self, n):
        lam = derive_rng(3, (n,)).normal(size=2**n) * np.sqrt(2)
        om = frequency_set_from_eigenvalues(lam)
        assert len(om.nonnegative) == 1 + (4**n - 2**n) // 2

    def test_index(self):
        om = frequency_set(EncodingSpec.exponential(2))
        np.testing.assert_array_equal(om.index([-4, 0, 3]), [0, 4, 7])
        with pytest.raises(ValueError):
            om.index([0.5])


class TestMultivariate:
    def test_two_pauli_components(self):
        got = multivariate_frequency_set([[-0.5, 0.5], [-0.5, 0.5]])
        assert got == sorted(itertools.product([-1.0, 0.0, 1.0], repeat=2))
        assert len(got) == 9

    def test_single_component_reduces_to_scalar(self):
        got = multivariate_frequency_set([[-0.5, 0.5, 1.5]])
        assert [w[0] for w in got] == frequency_set_from_eigenvalues([-0.5, 0.5, 1.5]).frequencies.tolist()

    def test_degenerate_components(self):
        assert multivariate_frequency_set([[0.3, 0.3], [1.0, 1.0]]) == [(0.0, 0.0)]


class TestSpectrumDirect:
    def test_single_qubit_x_is_cosine(self):
        # <X> = cos x for |+> through diag(e^{-ix/2}, e^{ix/2})
        s = spectrum_direct(density(plus_state(1)), EncodingSpec.pauli(1), np.eye(2), "X")
        assert s.coefficient(1) == pytest.approx(0.5)
        assert s.coefficient(-1) == pytest.approx(0.5)
        assert s.coefficient(0) == pytest.approx(0)

    def test_single_qubit_z_is_constant_zero(self):
        s = spectrum_direct(density(plus_state(1)), EncodingSpec.pauli(1), np.eye(2), "Z")
        np.testing.assert_allclose(s.coefficients, 0, atol=1e-15)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_identity_observable(self, n):
        spec = EncodingSpec.exponential(n)
        u_r = realize(ReservoirSpec.haar(n + 1, seed=n))
        s = spectrum_direct(density(plus_state(n)), spec, u_r, "I" * (n + 1))
        assert s.coefficient(0) == pytest.approx(1)
        assert np.sum(np.abs(s.coefficients)) == pytest.approx(1)

    def test_haar_reservoir_matches_dft(self):
        spec = EncodingSpec.exponential(2)
        u_r = realize(ReservoirSpec.haar(3, seed=4))
        rho0 = density(plus_state(2))
        direct = spectrum_direct(rho0, spec, u_r, "XZY")
        dft = spectrum_dft(pipeline(spec, u_r, "XZY", rho0, 1), 4)
        np.testing.assert_allclose(direct.coefficients, dft.coefficients, atol=1e-8)

    @settings(max_examples=40, deadline=None)
    @given(configs)
    def test_oracle_equivalence(self, cfg):
        scheme, n_a, n_h, res, seed = cfg
        spec = EncodingSpec(scheme, n_a)
        rng = derive_rng(seed)
        n = n_a + n_h
        u_r = realize(ReservoirSpec.named(res, n, seed=seed))
        obs = PauliString.random(n, rng, allow_identity=True)
        rho0 = density(plus_state(n_a))
        direct = spectrum_direct(rho0, spec, u_r, obs)
        dft = spectrum_dft(pipeline(spec, u_r, obs, rho0, n_h), int(frequency_set(spec).max))
        np.testing.assert_allclose(direct.coefficients, dft.coefficients, atol=1e-8)

    @settings(max_examples=30, deadline=None)
    @given(configs, st.floats(-10, 10))
    def test_conjugate_symmetry_and_reconstruction(self, cfg, x):
        scheme, n_a, n_h, res, seed = cfg
        spec = EncodingSpec(scheme, n_a)
        u_r = realize(ReservoirSpec.named(res, n_a + n_h, seed=seed))
        obs = PauliString.random(n_a + n_h, derive_rng(seed, (1,)))
        rho0 = density(plus_state(n_a))
        s = spectrum_direct(rho0, spec, u_r, obs)
        assert s.conjugate_symmetry_error() <= 1e-10
        assert s.evaluate(x) == pytest.approx(pipeline(spec, u_r, obs, rho0, n_h)(x), abs=1e-8)

    def test_reduced_observable_dense_oracle(self):
        n_a, n_h = 2, 2
        u_r = realize(ReservoirSpec.haar(4, seed=1))
        obs = PauliString("XIZY")
        iso = np.kron(np.eye(4), np.array([[1.0], [0], [0], [0]]))
        oracle = iso.T @ u_r.conj().T @ obs.matrix() @ u_r @ iso
        np.testing.assert_allclose(reduced_observable(u_r, obs, n_a, n_h), oracle, atol=1e-13)
        np.testing.assert_allclose(reduced_observable(u_r, obs.matrix(), n_a, n_h), oracle, atol=1e-13)

    def test_rejects_layered(self):
        with pytest.raises(ValueError):
            spectrum_direct(density(zero_state(1)), EncodingSpec.layered(1, 1), np.eye(2), "Z")

    def test_integrable_reservoir_only_changes_phases(self):
        # diagonal U_R: each (i, j) term keeps its frequency, so |a_w| of a diagonal observable is unchanged
        spec = EncodingSpec.exponential(2)
        rho0 = density(plus_state(2))
        for obs in ["ZIZI", "IZZZ"]:
            a = spectrum_direct(rho0, spec, realize(ReservoirSpec.identity(4)), obs)
            b = spectrum_direct(rho0, spec, realize(ReservoirSpec.integrable(4)), obs)
            np.testing.assert_allclose(np.abs(a.coefficients), np.abs(b.coefficients), atol=1e-12)


class TestSpectrumDft:
    def test_cosine(self):
        s = spectrum_dft(np.cos, 3)
        assert s.coefficient(1) == pytest.approx(0.5)
        assert s.coefficient(-1) == pytest.approx(0.5)
        assert abs(s.coefficient(2)) < 1e-15

    def test_constant(self):
        s = spectrum_dft(lambda x: 0.25, 2)
        assert s.coefficient(0) == pytest.approx(0.25)
        assert np.sum(np.abs(s.coefficients)) == pytest.approx(0.25)

    def test_vectorized_equals_scalar(self):
        f = lambda x: np.sin(2 * x) + 0.3 * np.cos(3 * x)
        a = spectrum_dft(f, 4)
        b = spectrum_dft(f, 4, vectorized=True)
        np.testing.assert_allclose(a.coefficients, b.coefficients, atol=1e-15)


def brute_force_richness(spec, u_r, rho0, n_h, tol=1e-10):
    omega_max = int(frequency_set(spec).max)
    total = 0
    for p in pauli_strings(spec.n_accessible):
        full = PauliString(str(p) + "I" * n_h)
        s = spectrum_dft(pipeline(spec, u_r, full, rho0, n_h), omega_max)
        mags = np.abs(s.coefficients)
        total += int(np.sum(mags > max(tol * mags.max(), 1e-12)))
    return total / 4**spec.n_accessible


class TestRichness:
    def test_single_qubit_no_reservoir(self):
        # I -> {0}, X -> {+-1}, Y -> {+-1}, Z -> {} on |+>
        raw, norm = richness(EncodingSpec.pauli(1), np.eye(2), density(plus_state(1)))
        assert raw == pytest.approx(1.25)
        assert norm == pytest.approx(1.25 / 3)

    def test_identity_contributes_single_frequency(self):
        s = spectrum_direct(density(plus_state(2)), EncodingSpec.exponential(2), np.eye(4), "II")
        assert s.support().tolist() == [0.0]

    @pytest.mark.parametrize(
        "scheme,n_a,n_h,res",
        [("pauli", 2, 1, "haar"), ("exponential", 2, 2, "chaotic"), ("exponential", 2, 1, "integrable")],
    )
    def test_matches_brute_force(self, scheme, n_a, n_h, res):
        spec = EncodingSpec(scheme, n_a)
        u_r = realize(ReservoirSpec.named(res, n_a + n_h, seed=3))
        rho0 = density(plus_state(n_a))
        raw, norm = richness(spec, u_r, rho0)
        assert raw == pytest.approx(brute_force_richness(spec, u_r, rho0, n_h))
        assert norm == pytest.approx(raw / len(frequency_set(spec)))

    def test_exponential_two_qubits_no_reservoir(self):
        _, norm = richness(EncodingSpec.exponential(2), np.eye(4), density(plus_state(2)))
        assert norm == pytest.approx((5 / 12) ** 2)

    def test_size_limit(self):
        with pytest.raises(ValueError):
            richness(EncodingSpec.pauli(7), np.eye(2**7), density(plus_state(7)))


class TestExpressivity:
    def _spectra(self, obs, spec, u_r, n_h):
        rho0 = density(plus_state(spec.n_accessible))
        return [spectrum_direct(rho0, spec, u_r, o) for o in obs]

    def test_single_observable(self):
        spec = EncodingSpec.exponential(2)
        u_r = realize(ReservoirSpec.haar(3, seed=0))
        rep = expressivity_report(self._spectra(["XZI"], spec, u_r, 1), 3)
        assert rep.rank == 1

    def test_duplicate_does_not_add_rank(self):
        spec = EncodingSpec.exponential(2)
        u_r = realize(ReservoirSpec.haar(3, seed=0))
        a = expressivity_report(self._spectra(["XZI", "YYZ"], spec, u_r, 1), 3)
        b = expressivity_report(self._spectra(["XZI", "YYZ", "XZI"], spec, u_r, 1), 3)
        assert a.rank == b.rank == 2

    @pytest.mark.parametrize("m", [3, 5])
    def test_haar_saturation_with_sampled_oracle(self, m):
        spec = EncodingSpec.exponential(2)
        n_h = 1
        u_r = realize(ReservoirSpec.haar(3, seed=11))
        obs = sample_pauli_strings(3, m, derive_rng(11, (m,)))
        rep = expressivity_report(self._spectra(obs, spec, u_r, n_h), 3)
        assert rep.rank == m == rep.bound
        # readouts sampled on 9 equispaced points span the same space as the columns of A
        rho0 = density(plus_state(2))
        xs = 2 * np.pi * np.arange(9) / 9
        samples = np.array([[pipeline(spec, u_r, o, rho0, n_h)(x) for o in obs] for x in xs])
        assert svd_rank(samples) == m

    @settings(max_examples=40, deadline=None)
    @given(configs, st.integers(1, 12))
    def test_rank_never_exceeds_bound(self, cfg, m):
        scheme, n_a, n_h, res, seed = cfg
        n = n_a + n_h
        m = min(m, 4**n - 1)
        spec = EncodingSpec(scheme, n_a)
        u_r = realize(ReservoirSpec.named(res, n, seed=seed))
        obs = sample_pauli_strings(n, m, derive_rng(seed, (2,)))
        rep = expressivity_report(self._spectra(obs, spec, u_r, n_h), n)
        assert rep.within_bound
        assert rep.rank <= min(m, len(frequency_set(spec)), 4**n)

    def test_inconsistent_grids_rejected(self):
        a = FourierSpectrum(np.array([-1.0, 0, 1]), np.zeros(3))
        b = FourierSpectrum(np.array([-2.0, 0, 2]), np.zeros(3))
        with pytest.raises(ValueError):
            coefficient_matrix([a, b])
