"""Exact-arithmetic workbench for weak crossed products, coproducts and biproducts."""

from .errors import (ConvolutionError, InvariantError, NotIdempotentError, PreconditionError,
                     ShapeError, TransportError, WcpError)
from .report import CheckEntry, CheckReport
from .tensor import (QQ, FieldSpec, K, Mor, Obj, SplitResult, compose, dualize, identity,
                     split_idempotent, swap, tensor, transpose_dual)

__all__ = [
    "ConvolutionError", "InvariantError", "NotIdempotentError", "PreconditionError", "ShapeError",
    "TransportError", "WcpError", "CheckEntry", "CheckReport", "QQ", "FieldSpec", "K", "Mor", "Obj",
    "SplitResult", "compose", "dualize", "identity", "split_idempotent", "swap", "tensor", "transpose_dual",
]
__version__ = "0.1.0"
