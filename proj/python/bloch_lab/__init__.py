"""Split Bloch bases, correlation tensors, correlation monotones and linear-entropy inequalities."""

from ._core import (
    BlochLabError,
    DensityMatrix,
    basis,
    check,
    correlation_monotone,
    ghz,
    linear_entropy,
    max_entangled,
    maximally_mixed,
    monotone_pure_exact,
    partial_trace,
    pure,
    purify,
    purity_from_tensor,
    random_state,
    renyi,
    split_purity,
    sweep,
    tensor,
    tensor_norms,
    tsallis,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "BlochLabError",
    "DensityMatrix",
    "basis",
    "check",
    "correlation_monotone",
    "ghz",
    "linear_entropy",
    "max_entangled",
    "maximally_mixed",
    "monotone_pure_exact",
    "partial_trace",
    "pure",
    "purify",
    "purity_from_tensor",
    "random_state",
    "renyi",
    "split_purity",
    "sweep",
    "tensor",
    "tensor_norms",
    "tsallis",
    "verify",
]
