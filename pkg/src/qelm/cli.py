"""Config-driven experiment runner.

Every subcommand starts from a default document, merges an optional JSON
config file and ``--set key=value`` overrides on top, validates the result
against the defaults (unknown keys are errors) and writes ``results.csv``
plus ``manifest.json`` into the output directory.

Exit codes: 0 success, 2 configuration error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import copy
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import concentration as conc
from .encoding import EncodingSpec, encode_density
from .fourier import (
    MAX_RICHNESS_QUBITS,
    expressivity_report,
    frequency_set,
    reduced_observable,
    richness,
    spectrum_from_reduced,
)
from .io import write_csv, write_manifest
from .linalg import derive_rng, haar_unitary
from .model import (
    Dataset,
    FourierTarget,
    QelmModel,
    equidistant_dataset,
    predict,
    r2_score,
    random_observables,
    save_model,
    train,
)
from .reservoir import ReservoirSpec, layered_random_unitary, realize
from .states import PauliString, density, plus_state, zero_state
from .surrogate import full_fourier_surrogate, rff_surrogate, rmse, spectrum_weights

EXIT_OK, EXIT_CONFIG, EXIT_BUDGET = 0, 2, 3
MAX_STATEVECTOR_QUBITS = 12
MAX_DENSITY_QUBITS = 8

RESERVOIR_KINDS = ("identity", "ising", "integrable", "chaotic", "haar", "layered")


class ConfigError(Exception):
    pass


class BudgetError(Exception):
    pass


def _encoding(scheme="exponential", **kw):
    return {"scheme": scheme, "betas": [], "layers": 1, "seed": 0, **kw}


def _reservoir(kind="haar", **kw):
    return {"kind": kind, "seed": 0, "t": 10.0, "J": -1.0, "Bx": 0.0, "Bz": 1.0, "depth": 10, **kw}


DEFAULTS: dict[str, dict] = {
    "spectrum": {
        "seed": 0,
        "out": "qelm-out/spectrum",
        "n_accessible": 2,
        "n_hidden": 2,
        "encoding": _encoding(),
        "reservoir": _reservoir(seed=7),
        "observables": ["ZIII"],
        "rho0": "plus",
    },
    "richness": {
        "seed": 0,
        "out": "qelm-out/richness",
        "n_accessible": [1, 2, 3],
        "n_hidden": 4,
        "encoding": _encoding(),
        "reservoirs": ["identity", "integrable", "chaotic", "haar"],
        "t": 10.0,
        "tol": 1e-10,
        "rho0": "plus",
    },
    "train": {
        "seed": 0,
        "out": "qelm-out/train",
        "n_accessible": 3,
        "n_hidden": 0,
        "encoding": _encoding(),
        "reservoir": _reservoir("layered"),
        "n_observables": 30,
        "target_k": 13,
        "n_train": 200,
        "n_test": 199,
        "data": None,
        "ridge": 1e-10,
        "shots": None,
        "rho0": "plus",
    },
    "expressivity": {
        "seed": 0,
        "out": "qelm-out/expressivity",
        "n_accessible": 2,
        "n_hidden": 1,
        "encoding": _encoding(),
        "reservoir": _reservoir(),
        "observable_counts": [1, 2, 4, 8, 9, 12],
        "n_trials": 5,
        "tol": 1e-9,
        "rho0": "plus",
    },
    "concentration": {
        "seed": 0,
        "out": "qelm-out/concentration",
        "kind": "encoding",
        "n_accessible": [2, 3, 4],
        "n_hidden": 0,
        "n_values": [2, 3, 4, 5, 6],
        "depths": [1, 2, 4, 8],
        "observable": "ZZ",
        "n_samples": 500,
        "noise_ps": [0.05, 0.1, 0.2],
        "n_x": 10,
    },
    "haarstats": {
        "seed": 0,
        "out": "qelm-out/haarstats",
        "n_accessible": 2,
        "n_hidden": 2,
        "observable": "ZIII",
        "n_samples": 2000,
    },
    "hypothesis": {
        "seed": 0,
        "out": "qelm-out/hypothesis",
        "p_true": 0.6,
        "n_trials": 10000,
        "n_values": [4, 6, 8, 10],
    },
    "surrogate": {
        "seed": 0,
        "out": "qelm-out/surrogate",
        "n_accessible": 3,
        "n_hidden": 1,
        "encoding": _encoding(),
        "reservoir": _reservoir(),
        "observable": "ZIII",
        "n_train": 200,
        "n_test": 1000,
        "rff_k": [2, 4, 8],
        "rff_seeds": 5,
        "rho0": "plus",
    },
}

CONCENTRATION_KINDS = ("encoding", "reservoir", "entanglement", "global", "noise")


# -- config handling ------------------------------------------------------

def _check_type(path: str, value, default):
    if default is None or value is None:
        return
    if isinstance(default, bool):
        ok = isinstance(value, bool)
    elif isinstance(default, int):
        ok = isinstance(value, int) and not isinstance(value, bool)
    elif isinstance(default, float):
        ok = isinstance(value, (int, float)) and not isinstance(value, bool)
    elif isinstance(default, str):
        ok = isinstance(value, str)
    elif isinstance(default, list):
        ok = isinstance(value, list)
    else:
        ok = True
    if not ok:
        raise ConfigError(f"field {path!r}: expected {type(default).__name__}, got {value!r}")


def validate(config: dict, defaults: dict, prefix: str = "") -> dict:
    """Merge ``config`` over ``defaults``; unknown keys or wrong types raise ConfigError."""
    if not isinstance(config, dict):
        raise ConfigError(f"field {prefix or '<root>'!r}: expected an object")
    out = copy.deepcopy(defaults)
    for key, value in config.items():
        path = f"{prefix}{key}"
        if key not in defaults:
            raise ConfigError(f"field {path!r}: unknown key")
        if isinstance(defaults[key], dict):
            out[key] = validate(value, defaults[key], path + ".")
        else:
            _check_type(path, value, defaults[key])
            out[key] = value
    return out


def parse_override(text: str) -> tuple[list[str], object]:
    if "=" not in text:
        raise ConfigError(f"override {text!r} is not key=value")
    key, raw = text.split("=", 1)
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key.strip().split("."), value


def apply_override(doc: dict, path: list[str], value) -> None:
    node = doc
    for part in path[:-1]:
        node = node.setdefault(part, {})
        if not isinstance(node, dict):
            raise ConfigError(f"field {'.'.join(path)!r}: parent is not an object")
    node[path[-1]] = value


def resolve_config(command: str, config_path=None, overrides=(), seed=None, out=None) -> dict:
    doc: dict = {}
    if config_path is not None:
        try:
            doc = json.loads(Path(config_path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {config_path}: {exc}") from exc
        # a manifest from an earlier run can be fed back in directly
        if isinstance(doc, dict) and "config" in doc and "versions" in doc:
            if doc.get("command") not in (None, command):
                raise ConfigError(f"manifest belongs to command {doc.get('command')!r}")
            doc = doc["config"]
    for text in overrides:
        apply_override(doc, *parse_override(text))
    if seed is not None:
        doc["seed"] = seed
    if out is not None:
        doc["out"] = out
    cfg = validate(doc, DEFAULTS[command])
    if not isinstance(cfg["seed"], int) or cfg["seed"] < 0:
        raise ConfigError("field 'seed': expected a non-negative integer")
    return cfg


# -- budget gate ----------------------------------------------------------

def _max(v) -> int:
    return max(v) if isinstance(v, list) else v


def check_budget(command: str, cfg: dict) -> None:
    """Refuse oversized runs before anything is allocated."""
    sv = 0
    dm = 0
    if command in ("spectrum", "train", "expressivity", "surrogate", "richness", "haarstats"):
        sv = _max(cfg["n_accessible"]) + cfg["n_hidden"]
    elif command == "concentration":
        kind = cfg["kind"]
        if kind in ("reservoir", "entanglement"):
            sv = _max(cfg["n_values"])
        else:
            sv = _max(cfg["n_accessible"]) + cfg["n_hidden"]
        if kind == "noise":
            dm = _max(cfg["n_accessible"])
    if sv > MAX_STATEVECTOR_QUBITS:
        raise BudgetError(f"{sv} qubits exceeds the statevector budget of {MAX_STATEVECTOR_QUBITS}")
    if dm > MAX_DENSITY_QUBITS:
        raise BudgetError(f"{dm} qubits exceeds the density-matrix budget of {MAX_DENSITY_QUBITS}")
    if command == "richness" and _max(cfg["n_accessible"]) > MAX_RICHNESS_QUBITS:
        raise BudgetError(f"richness is limited to n_accessible <= {MAX_RICHNESS_QUBITS}")


# -- builders -------------------------------------------------------------

def build_encoding(block: dict, n_a: int) -> EncodingSpec:
    scheme = block["scheme"]
    if scheme == "product":
        return EncodingSpec("product", n_a, betas=tuple(block["betas"]))
    return EncodingSpec(scheme, n_a, layers=block["layers"], seed=block["seed"])


def build_reservoir(block: dict, n: int) -> ReservoirSpec:
    kind = block["kind"]
    if kind not in RESERVOIR_KINDS:
        raise ConfigError(f"field 'reservoir.kind': expected one of {RESERVOIR_KINDS}, got {kind!r}")
    if kind == "ising":
        return ReservoirSpec.ising(n, block["J"], block["Bx"], block["Bz"], block["t"])
    return ReservoirSpec.named(kind, n, seed=block["seed"], t=block["t"], depth=block["depth"])


def build_rho0(name: str, n_a: int) -> np.ndarray:
    if name == "plus":
        return density(plus_state(n_a))
    if name == "zero":
        return density(zero_state(n_a))
    raise ConfigError(f"field 'rho0': expected 'plus' or 'zero', got {name!r}")


def _pauli(text: str, n: int, field_name: str) -> PauliString:
    try:
        p = PauliString(text)
    except ValueError as exc:
        raise ConfigError(f"field {field_name!r}: {exc}") from exc
    if p.n_qubits != n:
        raise ConfigError(f"field {field_name!r}: {text!r} needs {n} letters")
    return p


# -- commands -------------------------------------------------------------

def cmd_spectrum(cfg: dict):
    n_a, n_h = cfg["n_accessible"], cfg["n_hidden"]
    spec = build_encoding(cfg["encoding"], n_a)
    u_r = realize(build_reservoir(cfg["reservoir"], n_a + n_h))
    rho0 = build_rho0(cfg["rho0"], n_a)
    rows = []
    for label in cfg["observables"]:
        obs = _pauli(label, n_a + n_h, "observables")
        s = spectrum_from_reduced(rho0, spec, reduced_observable(u_r, obs, n_a, n_h), label)
        for w, a in zip(s.frequencies, s.coefficients):
            rows.append({"observable": label, "omega": float(w), "re": a.real, "im": a.imag, "abs": abs(a)})
    return rows, ("observable", "omega", "re", "im", "abs")


def cmd_richness(cfg: dict):
    n_h = cfg["n_hidden"]
    rho_name = cfg["rho0"]
    rows = []
    for n_a in cfg["n_accessible"]:
        spec = build_encoding(cfg["encoding"], n_a)
        rho0 = build_rho0(rho_name, n_a)
        for name in cfg["reservoirs"]:
            block = _reservoir(name, seed=conc.sub_seed(cfg["seed"], n_a), t=cfg["t"])
            res = build_reservoir(block, n_a + n_h)
            raw, norm = richness(spec, realize(res), rho0, cfg["tol"])
            rows.append(
                {"n_A": n_a, "n_H": n_h, "reservoir": name, "n_frequencies": len(frequency_set(spec)),
                 "raw": raw, "normalized": norm}
            )
    return rows, ("n_A", "n_H", "reservoir", "n_frequencies", "raw", "normalized")


def cmd_train(cfg: dict, out_dir: Path):
    n_a, n_h = cfg["n_accessible"], cfg["n_hidden"]
    rng = derive_rng(cfg["seed"], (0,))
    spec = build_encoding(cfg["encoding"], n_a)
    res = build_reservoir(cfg["reservoir"], n_a + n_h)
    model = QelmModel(
        spec,
        res,
        random_observables(n_a + n_h, cfg["n_observables"], rng),
        rho0=build_rho0(cfg["rho0"], n_a),
        shots=cfg["shots"],
        seed=cfg["seed"],
    )
    if cfg["data"] is not None:
        data = Dataset.from_csv(cfg["data"])
        test = None
    else:
        target = FourierTarget.random(cfg["target_k"], rng)
        data = equidistant_dataset(target, cfg["n_train"])
        # midpoints of the training grid are unseen
        xt = 0.5 * (data.x[1:] + data.x[:-1])[: cfg["n_test"]]
        test = Dataset(xt, target(xt))
    shot_rng = derive_rng(cfg["seed"], (1,))
    trained = train(model, data, cfg["ridge"], shot_rng)
    save_model(trained, out_dir / "model.json")
    data.to_csv(out_dir / "train.csv")
    rows = []
    for split, ds in (("train", data), ("test", test)):
        if ds is None:
            continue
        pred = predict(trained, ds.x, shot_rng)
        rows.append({"split": split, "n_points": len(ds), "r2": r2_score(pred, ds.y), "rmse": rmse(pred, ds.y)})
    return rows, ("split", "n_points", "r2", "rmse")


def cmd_expressivity(cfg: dict):
    n_a, n_h = cfg["n_accessible"], cfg["n_hidden"]
    n = n_a + n_h
    spec = build_encoding(cfg["encoding"], n_a)
    rho0 = build_rho0(cfg["rho0"], n_a)
    rows = []
    for trial in range(cfg["n_trials"]):
        rng = derive_rng(cfg["seed"], (trial,))
        block = dict(cfg["reservoir"], seed=conc.sub_seed(cfg["reservoir"]["seed"], trial))
        u_r = realize(build_reservoir(block, n))
        for m in cfg["observable_counts"]:
            if m > 4**n - 1:
                raise ConfigError(f"field 'observable_counts': {m} exceeds the {4**n - 1} non-identity strings")
            obs = random_observables(n, m, rng)
            spectra = [spectrum_from_reduced(rho0, spec, reduced_observable(u_r, o, n_a, n_h)) for o in obs]
            rep = expressivity_report(spectra, n, cfg["tol"])
            rows.append(
                {"trial": trial, "M": m, "n_frequencies": rep.n_frequencies, "pauli_dim": rep.pauli_dim,
                 "rank": rep.rank, "bound": rep.bound, "within_bound": rep.within_bound, "saturated": rep.saturated}
            )
    return rows, ("trial", "M", "n_frequencies", "pauli_dim", "rank", "bound", "within_bound", "saturated")


def _bound_row(experiment, rep, **kw):
    return conc.row(experiment, statistic="bound_lhs", value=rep.lhs, bound=rep.rhs, satisfied=rep.satisfied, **kw)


def cmd_concentration(cfg: dict):
    kind = cfg["kind"]
    if kind not in CONCENTRATION_KINDS:
        raise ConfigError(f"field 'kind': expected one of {CONCENTRATION_KINDS}, got {kind!r}")
    seed, n_h, ns = cfg["seed"], cfg["n_hidden"], cfg["n_samples"]
    rows = []
    if kind == "encoding":
        sweep = conc.SweepConfig(
            "var_over_inputs", tuple(cfg["n_accessible"]), n_h, tuple(cfg["depths"]), cfg["observable"], ns, seed
        )
        rows += conc.var_over_inputs(sweep)
        for n_a in cfg["n_accessible"]:
            obs = conc.pad_observable(cfg["observable"], n_a + n_h)
            for depth in cfg["depths"]:
                spec = EncodingSpec.layered(n_a, depth, seed=conc.sub_seed(seed, n_a))
                rep = conc.encoding_bound_check(spec, obs, n_h, ns, derive_rng(seed, (n_a, depth, 1)))
                rows.append(_bound_row("encoding_bound", rep, n_A=n_a, n_H=n_h, depth=depth, seed=seed, n_samples=ns))
    elif kind == "reservoir":
        rows += conc.var_over_reservoirs(cfg["n_values"], ns, seed, observable=cfg["observable"][:1])
        for n in cfg["n_values"]:
            rng = derive_rng(seed, (n, 1))
            psi = conc.embedded_input(EncodingSpec.exponential(1), 0.3, n - 1)
            obs = conc.pad_observable(cfg["observable"][:1], n)
            rep = conc.reservoir_bound_check(psi, obs, lambda r, d=2**n: haar_unitary(d, r), ns, rng)
            rows.append(_bound_row("reservoir_bound", rep, n_A=1, n_H=n - 1, seed=seed, n_samples=ns))
    elif kind == "entanglement":
        k = len(cfg["observable"])
        local = PauliString(cfg["observable"])
        for n in cfg["n_values"]:
            if n < k:
                continue
            for depth in cfg["depths"]:
                rng = derive_rng(seed, (n, depth))
                psi = layered_random_unitary(n, depth, rng)[:, 0]
                rep = conc.entanglement_bound_check(psi, local, range(k))
                rows.append(_bound_row("entanglement_bound", rep, n_A=n, n_H=0, depth=depth, seed=seed, n_samples=1))
    elif kind == "global":
        for n_a in cfg["n_accessible"]:
            for depth in [0] + list(cfg["depths"]):
                rng = derive_rng(seed, (n_a, depth))
                res = conc.global_measurement_experiment(n_a, n_h, depth or None, ns, rng)
                common = dict(n_A=n_a, n_H=n_h, depth="haar" if depth == 0 else depth, seed=seed, n_samples=ns)
                rows.append(conc.row("global", statistic="second_moment_mc", value=res.second_moment_mc, **common))
                rows.append(conc.row("global", statistic="second_moment_exact", value=res.second_moment_exact, **common))
                rows.append(_bound_row("global_bound", res.report, **common))
    else:
        for n_a in cfg["n_accessible"]:
            points = conc.noise_concentration_experiment(
                n_a, n_h, cfg["depths"], cfg["noise_ps"], cfg["n_x"], seed, observable=cfg["observable"][:1]
            )
            for pt in points:
                rows.append(
                    conc.row(
                        "noise", n_A=n_a, n_H=n_h, depth=pt.depth, noise_p=pt.p, seed=seed, n_samples=cfg["n_x"],
                        statistic="mean_distance", value=pt.mean,
                        stderr=float(np.std(pt.distances, ddof=1) / np.sqrt(pt.distances.size)),
                        bound=pt.bound, satisfied=pt.satisfied,
                    )
                )
    return rows, conc.CSV_COLUMNS


def cmd_haarstats(cfg: dict):
    n_a, n_h = cfg["n_accessible"], cfg["n_hidden"]
    obs = _pauli(cfg["observable"], n_a + n_h, "observable")
    st = conc.haar_coefficient_stats(n_a, n_h, obs, cfg["n_samples"], derive_rng(cfg["seed"], (0,)))
    z = np.abs(st.mean) / st.mean_stderr
    rows = [
        {"statistic": "max_mean_z", "value": float(z.max()), "stderr": "", "predicted": 0.0},
        {"statistic": "var_offdiag", "value": st.var_offdiag, "stderr": "", "predicted": st.predicted_var_offdiag},
        {"statistic": "var_diag", "value": st.var_diag, "stderr": "", "predicted": st.predicted_var_diag},
        {"statistic": "cov_diag", "value": st.cov_diag, "stderr": st.cov_diag_stderr,
         "predicted": st.predicted_cov_diag},
        {"statistic": "cov_distinct", "value": st.cov_distinct, "stderr": st.cov_distinct_stderr, "predicted": 0.0},
    ]
    return rows, ("statistic", "value", "stderr", "predicted")


def cmd_hypothesis(cfg: dict):
    rows = []
    p = cfg["p_true"]
    rng = derive_rng(cfg["seed"], (0,))
    rows.append(
        {"regime": "single", "n": "", "p_true": p, "n_samples": 1,
         "success_sim": conc.hypothesis_test_sim(p, 1, cfg["n_trials"], rng),
         "success_exact": conc.hypothesis_success_exact(p, 1), "lemma": conc.lemma_success(p)}
    )
    for n in cfg["n_values"]:
        pn = 0.5 + 2.0**-n
        rng = derive_rng(cfg["seed"], (n,))
        rows.append(
            {"regime": "concentrated", "n": n, "p_true": pn, "n_samples": n * n,
             "success_sim": conc.hypothesis_test_sim(pn, n * n, cfg["n_trials"], rng),
             "success_exact": conc.hypothesis_success_exact(pn, n * n), "lemma": conc.lemma_success(pn)}
        )
    return rows, ("regime", "n", "p_true", "n_samples", "success_sim", "success_exact", "lemma")


def cmd_surrogate(cfg: dict):
    n_a, n_h = cfg["n_accessible"], cfg["n_hidden"]
    spec = build_encoding(cfg["encoding"], n_a)
    if not spec.is_product:
        raise ConfigError("field 'encoding.scheme': surrogates need a product encoding")
    u_r = realize(build_reservoir(cfg["reservoir"], n_a + n_h))
    rho0 = build_rho0(cfg["rho0"], n_a)
    o_tilde = reduced_observable(u_r, _pauli(cfg["observable"], n_a + n_h, "observable"), n_a, n_h)

    def readout(x):
        states = encode_density(spec, x, rho0)
        return np.einsum("ji,bij->b", o_tilde, states).real

    rng = derive_rng(cfg["seed"], (0,))
    x_train = rng.uniform(-np.pi, np.pi, cfg["n_train"])
    x_test = rng.uniform(-np.pi, np.pi, cfg["n_test"])
    data = Dataset(x_train, readout(x_train))
    test = Dataset(x_test, readout(x_test))
    omega = frequency_set(spec)
    full = full_fourier_surrogate(omega, data)
    rows = [
        {"surrogate": "full", "k": len(omega.nonnegative), "seed": "", "train_rmse": rmse(full(data.x), data.y),
         "test_rmse": rmse(full(test.x), test.y), "sup_error": float(np.max(np.abs(full(test.x) - test.y)))}
    ]
    weights = spectrum_weights(spectrum_from_reduced(rho0, spec, o_tilde))
    for k in cfg["rff_k"]:
        for s in range(cfg["rff_seeds"]):
            r = rff_surrogate(weights, k, data, derive_rng(cfg["seed"], (k, s)), holdout=test)
            rows.append(
                {"surrogate": "rff", "k": k, "seed": s, "train_rmse": r.train_rmse, "test_rmse": r.holdout_rmse,
                 "sup_error": float(np.max(np.abs(r.surrogate(test.x) - test.y)))}
            )
    return rows, ("surrogate", "k", "seed", "train_rmse", "test_rmse", "sup_error")


COMMANDS = {
    "spectrum": cmd_spectrum,
    "richness": cmd_richness,
    "train": cmd_train,
    "expressivity": cmd_expressivity,
    "concentration": cmd_concentration,
    "haarstats": cmd_haarstats,
    "hypothesis": cmd_hypothesis,
    "surrogate": cmd_surrogate,
}


def run(command: str, cfg: dict) -> Path:
    """Execute ``command`` with a resolved config; returns the output directory."""
    check_budget(command, cfg)
    out_dir = Path(cfg["out"])
    out_dir.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    try:
        if command == "train":
            rows, columns = cmd_train(cfg, out_dir)
        else:
            rows, columns = COMMANDS[command](cfg)
    except ConfigError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigError(str(exc)) from exc
    write_csv(out_dir / "results.csv", rows, columns)
    write_manifest(out_dir / "manifest.json", command, cfg, cfg["seed"], time.perf_counter() - start)
    return out_dir


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qelm", description="QELM simulation experiments")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", help="JSON config (or an earlier manifest.json)")
        p.add_argument("--seed", type=int, help="master seed")
        p.add_argument("--out", help="output directory")
        p.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
                       help="override a config field; dotted keys reach nested blocks")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args.command, args.config, args.overrides, args.seed, args.out)
        out_dir = run(args.command, cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BudgetError as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(out_dir / "results.csv")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
