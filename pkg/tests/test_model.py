import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qelm.encoding import EncodingSpec, encode
from qelm.fourier import spectrum_dft
from qelm.linalg import derive_rng
from qelm.model import (
    Dataset,
    FourierTarget,
    QelmModel,
    equidistant_dataset,
    load_model,
    model_spectrum,
    pipeline_expectation,
    predict,
    r2_score,
    readout_matrix,
    readout_vector,
    ridge_solve,
    save_model,
    train,
)
from qelm.reservoir import ReservoirSpec, realize
from qelm.states import PauliString, density, plus_state, zero_state

from oracles import full_readout


def small_model(scheme="exponential", n_a=2, n_h=1, obs=("XZI", "ZZY", "YIX"), seed=4, **kw):
    return QelmModel(EncodingSpec(scheme, n_a), ReservoirSpec.haar(n_a + n_h, seed=seed), list(obs), **kw)


class TestReadout:
    def test_plus_state_z_at_zero(self):
        m = QelmModel(EncodingSpec.pauli(1), ReservoirSpec.identity(1), ["Z"])
        assert readout_vector(m, 0.0)[0] == pytest.approx(0.0)

    def test_zero_input_independent_of_scheme(self):
        a = small_model("pauli")
        b = small_model("exponential")
        np.testing.assert_allclose(readout_vector(a, 0.0), readout_vector(b, 0.0), atol=1e-14)

    @settings(max_examples=20, deadline=None)
    @given(st.floats(-5, 5), st.integers(0, 1000))
    def test_matches_dense_pipeline(self, x, seed):
        m = small_model(seed=seed)
        got = readout_vector(m, x)
        for k, o in enumerate(m.observables):
            assert got[k] == pytest.approx(full_readout(m.rho0, encode(m.encoding, x), m.u_r, o.matrix(), 1), abs=1e-12)
            assert got[k] == pytest.approx(pipeline_expectation(m.rho0, m.encoding, m.u_r, o, x), abs=1e-12)

    def test_layered_encoding_readout(self):
        m = QelmModel(EncodingSpec.layered(2, 2, seed=1), ReservoirSpec.haar(3, seed=2), ["ZZZ", "XIY"])
        for x in (0.2, -1.3):
            expect = [full_readout(m.rho0, encode(m.encoding, x), m.u_r, o.matrix(), 1) for o in m.observables]
            np.testing.assert_allclose(readout_vector(m, x), expect, atol=1e-12)

    def test_shot_noise_within_three_sigma(self):
        exact = small_model()
        noisy = small_model(shots=10**6)
        diff = readout_matrix(noisy, [0.4, 1.7], derive_rng(0)) - readout_matrix(exact, [0.4, 1.7])
        assert np.max(np.abs(diff)) <= 0.004

    def test_shots_need_rng(self):
        with pytest.raises(ValueError):
            readout_matrix(small_model(shots=10), [0.1])

    def test_validation(self):
        with pytest.raises(ValueError):
            QelmModel(EncodingSpec.pauli(3), ReservoirSpec.haar(2), ["ZZ"])
        with pytest.raises(ValueError):
            QelmModel(EncodingSpec.pauli(1), ReservoirSpec.haar(1), [])
        with pytest.raises(ValueError):
            small_model(eta=[1.0, 2.0])


class TestTraining:
    def test_realizable_target_recovers_unit_weight(self):
        m = small_model()
        data = Dataset(np.linspace(0, np.pi, 40), readout_matrix(small_model(), np.linspace(0, np.pi, 40))[:, 0])
        t = train(m, data, ridge=0.0)
        pred = predict(t, data.x)
        assert np.mean((pred - data.y) ** 2) <= 1e-16
        np.testing.assert_allclose(t.eta, [1, 0, 0], atol=1e-8)

    def test_zero_target(self):
        m = small_model()
        t = train(m, Dataset(np.linspace(0, 3, 20), np.zeros(20)), ridge=1e-3)
        np.testing.assert_allclose(t.eta, 0, atol=1e-12)
        assert t.eta0 == pytest.approx(0, abs=1e-12)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 10**6))
    def test_realizable_combination_rmse(self, seed):
        m = small_model(seed=seed % 50)
        rng = derive_rng(seed)
        eta = rng.normal(size=3)
        xs = np.linspace(0, np.pi, 30)
        y = readout_matrix(m, xs) @ eta + 0.7
        t = train(m, Dataset(xs, y), ridge=0.0)
        assert np.sqrt(np.mean((predict(t, xs) - y) ** 2)) <= 1e-12

    def test_prediction_rule(self):
        m = small_model(eta=np.array([0.5, -1.0, 2.0]), eta0=0.3)
        xs = np.array([0.1, 0.9])
        np.testing.assert_allclose(predict(m, xs), readout_matrix(m, xs) @ m.eta + 0.3)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 10**6), st.floats(-3, 3))
    def test_prediction_linear_in_eta(self, seed, c):
        rng = derive_rng(seed)
        e1, e2 = rng.normal(size=3), rng.normal(size=3)
        xs = np.linspace(-1, 1, 5)
        m = small_model()
        p = lambda e: predict(QelmModel(m.encoding, m.reservoir, m.observables, eta=e), xs)
        np.testing.assert_allclose(p(e1 + c * e2), p(e1) + c * p(e2), atol=1e-12)

    def test_ridge_normal_equations_oracle(self):
        rng = np.random.default_rng(3)
        phi = rng.normal(size=(20, 4))
        y = rng.normal(size=20)
        lam = 0.1
        eta, eta0 = ridge_solve(phi, y, lam)
        # intercept unpenalised: centre then solve the normal equations
        pc = phi - phi.mean(axis=0)
        yc = y - y.mean()
        oracle = np.linalg.solve(pc.T @ pc + lam * np.eye(4), pc.T @ yc)
        np.testing.assert_allclose(eta, oracle, atol=1e-12)
        assert eta0 == pytest.approx(y.mean() - phi.mean(axis=0) @ oracle)

    def test_untrained_predict_raises(self):
        with pytest.raises(ValueError):
            predict(small_model(), [0.0])

    def test_negative_ridge(self):
        with pytest.raises(ValueError):
            ridge_solve(np.ones((3, 1)), np.ones(3), -1.0)

    def test_train_keeps_cached_reservoir(self):
        m = small_model()
        u = m.u_r
        t = train(m, Dataset([0.0, 1.0, 2.0], [0.0, 1.0, 0.5]))
        assert t.u_r is u


class TestScores:
    def test_perfect(self):
        assert r2_score([1.0, 2.0, 3.0], [1.0, 2.0, 3.0]) == 1.0

    def test_mean_predictor(self):
        t = np.array([1.0, 2.0, 6.0])
        assert r2_score(np.full(3, t.mean()), t) == pytest.approx(0.0)

    def test_constant_target_rejected(self):
        with pytest.raises(ValueError):
            r2_score([1.0, 2.0], [1.0, 1.0])


class TestSpectrumConsistency:
    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10**6))
    def test_model_spectrum_is_weighted_sum(self, seed):
        rng = derive_rng(seed)
        m = small_model(seed=seed % 20, eta=rng.normal(size=3), eta0=float(rng.normal()))
        s = model_spectrum(m)
        dft = spectrum_dft(lambda x: predict(m, [x])[0], 4)
        np.testing.assert_allclose(s.coefficients, dft.coefficients, atol=1e-10)


class TestData:
    def test_fourier_target_bandlimited(self):
        t = FourierTarget.random(5, np.random.default_rng(0))
        s = spectrum_dft(t, 7, vectorized=True)
        assert np.max(np.abs(s.coefficients[np.abs(s.frequencies) > 5])) < 1e-12
        assert s.coefficient(0) == pytest.approx(0, abs=1e-12)
        assert s.coefficient(3) == pytest.approx(0.5 * (t.a[2] - 1j * t.b[2]))

    def test_equidistant_grid(self):
        d = equidistant_dataset(np.sin, 5)
        np.testing.assert_allclose(d.x, np.linspace(0, np.pi, 5))

    def test_csv_round_trip(self, tmp_path):
        d = Dataset([0.1, 1 / 3, np.pi], [1e-17, -2.5, 7.0])
        d.to_csv(tmp_path / "d.csv")
        back = Dataset.from_csv(tmp_path / "d.csv")
        np.testing.assert_array_equal(back.x, d.x)
        np.testing.assert_array_equal(back.y, d.y)
        assert (tmp_path / "d.csv").read_text().splitlines()[0] == "x,y"

    def test_validation(self):
        with pytest.raises(ValueError):
            Dataset([0.0, 1.0], [1.0])
        with pytest.raises(ValueError):
            Dataset([np.nan], [1.0])


class TestPersistence:
    def test_round_trip(self, tmp_path):
        m = small_model(eta=np.array([0.25, -1.5, 3.0]), eta0=0.125)
        save_model(m, tmp_path / "m.json")
        back = load_model(tmp_path / "m.json")
        assert back.encoding == m.encoding
        assert back.reservoir == m.reservoir
        assert [str(o) for o in back.observables] == [str(o) for o in m.observables]
        xs = np.linspace(0, 3, 7)
        np.testing.assert_array_equal(predict(back, xs), predict(m, xs))

    def test_layered_round_trip(self, tmp_path):
        m = QelmModel(EncodingSpec.layered(2, 3, seed=5), ReservoirSpec.layered(3, 4, seed=6), ["ZZX"], eta=[1.0])
        save_model(m, tmp_path / "m.json")
        np.testing.assert_array_equal(predict(load_model(tmp_path / "m.json"), [0.3]), predict(m, [0.3]))

    def test_dense_observables_not_serialisable(self, tmp_path):
        m = QelmModel(EncodingSpec.pauli(1), ReservoirSpec.identity(1), [np.diag([1.0, 0.0])])
        with pytest.raises(ValueError):
            save_model(m, tmp_path / "m.json")

    def test_default_initial_state_is_plus(self):
        m = small_model()
        np.testing.assert_allclose(m.rho0, density(plus_state(2)))
        # any custom initial state is honoured
        m2 = small_model(rho0=density(zero_state(2)))
        assert readout_vector(m2, 0.5)[0] == pytest.approx(
            full_readout(density(zero_state(2)), encode(m2.encoding, 0.5), realize(m2.reservoir), PauliString("XZI").matrix(), 1),
            abs=1e-12,
        )
