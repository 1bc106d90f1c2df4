"""Python access to the singcat commands.

Each function returns a ``Result`` with the exit code, the parsed JSON report
and the human-readable text. Exit codes: 0 decisive, 1 Unknown verdict,
2 input error, 3 consistency failure.
"""

import json
from typing import NamedTuple, Optional, Sequence

from . import _singcat

__version__ = _singcat.__version__


class Result(NamedTuple):
    exit_code: int
    report: dict
    text: str


def _wrap(raw):
    code, report, text = raw
    return Result(code, json.loads(report), text)


def check(algebra: str, *, bound: int = 20, seed: int = 0, field: Optional[int] = None) -> Result:
    return _wrap(_singcat.check(str(algebra), bound, seed, field))


def resolve(algebra: str, *, module: Optional[str] = None, simple: Optional[str] = None,
            projective: Optional[str] = None, injective: Optional[str] = None,
            bound: int = 20, seed: int = 0, field: Optional[int] = None) -> Result:
    chosen = [(k, v) for k, v in (("simple", simple), ("projective", projective), ("injective", injective))
              if v is not None]
    if module is not None:
        chosen.insert(0, ("module", module))
    if len(chosen) != 1:
        raise ValueError("give exactly one of module, simple, projective, injective")
    kind, value = chosen[0]
    if kind == "module":
        return _wrap(_singcat.resolve(str(algebra), str(value), None, "", bound, seed, field))
    return _wrap(_singcat.resolve(str(algebra), None, kind, str(value), bound, seed, field))


def gorenstein(algebra: str, *, bound: int = 20, seed: int = 0, field: Optional[int] = None) -> Result:
    return _wrap(_singcat.gorenstein(str(algebra), bound, seed, field))


def schur(algebra: str, idempotent: Sequence[str], *, corner_ref: Optional[str] = None,
          bound: int = 20, seed: int = 0, field: Optional[int] = None) -> Result:
    ref = None if corner_ref is None else str(corner_ref)
    return _wrap(_singcat.schur(str(algebra), [str(v) for v in idempotent], ref, bound, seed, field))


def triangular(orientation: str, r: str, s: str, bimodule: str, *, reference: Optional[str] = None,
               bound: int = 20, seed: int = 0, field: Optional[int] = None) -> Result:
    ref = None if reference is None else str(reference)
    return _wrap(_singcat.triangular(orientation, str(r), str(s), str(bimodule), ref, bound, seed, field))


def verify(report: str) -> Result:
    return _wrap(_singcat.verify(str(report)))


__all__ = ["Result", "check", "resolve", "gorenstein", "schur", "triangular", "verify", "__version__"]
