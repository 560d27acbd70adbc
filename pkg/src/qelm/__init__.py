"""Quantum extreme learning machine simulation laboratory."""

__version__ = "0.1.0"

from .encoding import EncodingSpec, encode, encode_density, encode_states
from .fourier import (
    FourierSpectrum,
    FrequencySet,
    expressivity_report,
    frequency_set,
    richness,
    spectrum_dft,
    spectrum_direct,
)
from .model import Dataset, FourierTarget, QelmModel, predict, r2_score, train
from .reservoir import ReservoirSpec, realize
from .states import NoiseSpec, PauliString
from .surrogate import FourierSurrogate, full_fourier_surrogate, rff_surrogate

__all__ = [
    "Dataset",
    "EncodingSpec",
    "FourierSpectrum",
    "FourierSurrogate",
    "FourierTarget",
    "FrequencySet",
    "NoiseSpec",
    "PauliString",
    "QelmModel",
    "ReservoirSpec",
    "encode",
    "encode_density",
    "encode_states",
    "expressivity_report",
    "frequency_set",
    "full_fourier_surrogate",
    "predict",
    "r2_score",
    "realize",
    "rff_surrogate",
    "richness",
    "spectrum_dft",
    "spectrum_direct",
    "train",
]
