"""Python bindings for the ncgb Groebner basis toolkit."""

import json

from . import _core
from ._core import (basis, canonical_factorization, evaluate_grassmann, is_gamma3_normal, psi, reduce,
                    theta)

__all__ = ["basis", "canonical_factorization", "evaluate_grassmann", "is_gamma3_normal", "psi", "reduce",
           "run", "theta"]


def run(command, **kwargs):
    """Runs a CLI subcommand in-process; returns (exit_code, report dict, text)."""
    code, report, text = _core.run(command, **kwargs)
    return code, json.loads(report), text
