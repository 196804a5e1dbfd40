"""Python access to the frontal jet library."""

from ._frontal import (
    FrontalError,
    classify,
    discriminant,
    dpc,
    invariants,
    sample,
    verify,
)

__all__ = ["FrontalError", "classify", "discriminant", "dpc", "invariants", "sample", "verify"]
