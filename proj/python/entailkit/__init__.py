"""Python surface of the entailkit C++ core."""

from _entailkit import (
    VectorSpace,
    auc,
    build_space,
    compose,
    load_space,
    measure_names,
    predict_support,
    save_space,
    score,
    support,
    EntailkitError,
)

__all__ = [
    "VectorSpace",
    "auc",
    "build_space",
    "compose",
    "load_space",
    "measure_names",
    "predict_support",
    "save_space",
    "score",
    "support",
    "EntailkitError",
]
