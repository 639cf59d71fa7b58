"""Exact solver for polyhedral d.c. optimization problems.

Thin wrapper over the compiled extension: problems travel as json
dictionaries, every numeric quantity is an exact ``fractions.Fraction``.
"""

import json
from fractions import Fraction

try:
    from . import _polydc
except ImportError:  # in-tree builds put the extension on sys.path directly
    import _polydc

__all__ = ["check", "solve", "generate", "evaluate"]


def _as_text(problem):
    if isinstance(problem, str):
        return problem
    return json.dumps(problem)


def _fraction(text):
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _decode_result(text):
    record = json.loads(text)
    if "value" in record:
        record["value"] = _fraction(record["value"])
    for key in ("x", "dual_y"):
        if key in record:
            record[key] = [_fraction(c) for c in record[key]]
    certificate = record.get("certificate")
    if certificate and "witness" in certificate:
        certificate["witness"] = [_fraction(c) for c in certificate["witness"]]
    return record


def generate(family, n, mg=2, mh=1):
    """Build a benchmark instance; returns the problem as a dictionary."""
    return json.loads(_polydc.gen(family, n, mg, mh))


def check(problem, method="both"):
    """Existence test; returns a result record with the certificate."""
    return _decode_result(_polydc.check(_as_text(problem), method))


def solve(problem, method="primal"):
    """Solve to optimality; x, value and dual_y come back as Fractions."""
    return _decode_result(_polydc.solve(_as_text(problem), method))


def evaluate(problem, which, x):
    """Evaluate ``g``, ``h`` or ``objective`` at x; None when infinite."""
    point = [str(Fraction(c)) for c in x]
    result = _polydc.evaluate(_as_text(problem), which, point)
    return None if result is None else _fraction(result)
