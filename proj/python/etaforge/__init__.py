"""Exact eta invariants of circle bundles over Kahler bases.

Rationals go in as ``str``, ``int`` or :class:`fractions.Fraction` and come back
as :class:`fractions.Fraction`; inside record dicts they stay as ``"p/q"``
strings, exactly as the ``etaforge`` CLI prints them.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence, Union

from . import _core
from ._core import (
    DomainError,
    Error,
    InvalidDolbeaultData,
    NoConsistentConvention,
    NumericalError,
    ProviderConsistencyError,
    UnknownHodgeData,
    UsageError,
)

SCHEMA = _core.SCHEMA

RationalLike = Union[str, int, Fraction]

__all__ = [
    "SCHEMA",
    "Error",
    "UsageError",
    "DomainError",
    "UnknownHodgeData",
    "ProviderConsistencyError",
    "InvalidDolbeaultData",
    "NoConsistentConvention",
    "NumericalError",
    "surface",
    "projective",
    "rational",
    "default_conventions",
    "hodge_number",
    "exact_eta",
    "asymptotic_eta",
    "adiabatic_limit",
    "aps_difference_check",
    "calibrate",
    "dirac_spectrum",
    "flow_in_delta",
    "flow_in_delta_oracle",
    "flow_in_s",
    "heat_density",
    "limit_measure_apply",
    "laplace_check",
    "near_zero_bound",
    "identity_suite",
    "trace_expansion_check",
    "parity_count",
    "parity_closed_form",
]


def _q(x: RationalLike) -> str:
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, str):
        return x
    raise TypeError(f"expected str, int or Fraction, got {type(x).__name__}")


def rational(x: RationalLike) -> Fraction:
    """Parse with the native rules ("p/q", integers, finite decimals)."""
    return Fraction(_core.normalize_rational(_q(x)))


def _j(obj: Optional[Mapping[str, Any]]) -> Optional[str]:
    return None if obj is None else json.dumps(obj)


def surface(genus: int, degree: RationalLike) -> dict:
    return {"preset": "surface", "genus": genus, "degree": _q(degree)}


def projective(m: int, degree: RationalLike) -> dict:
    return {"preset": "projective", "m": m, "degree": _q(degree)}


def default_conventions() -> dict:
    return json.loads(_core.default_conventions())


def hodge_number(geometry: Mapping, p: int, k: int, hodge: Optional[Mapping] = None) -> int:
    return _core.hodge_number(json.dumps(geometry), json.dumps(hodge or {}), p, k)


def exact_eta(
    geometry: Mapping,
    r: RationalLike,
    eps: RationalLike,
    *,
    hodge: Optional[Mapping] = None,
    conventions: Optional[Mapping] = None,
    dolbeault: Optional[Mapping] = None,
) -> dict:
    return json.loads(
        _core.exact_eta(json.dumps(geometry), json.dumps(hodge or {}), _q(r), _q(eps), _j(conventions), _j(dolbeault))
    )


def asymptotic_eta(
    geometry: Mapping,
    r: RationalLike,
    eps: RationalLike,
    *,
    hodge: Optional[Mapping] = None,
    conventions: Optional[Mapping] = None,
) -> Fraction:
    return Fraction(_core.asymptotic_eta(json.dumps(geometry), json.dumps(hodge or {}), _q(r), _q(eps), _j(conventions)))


def adiabatic_limit(
    geometry: Mapping, r: RationalLike, *, hodge: Optional[Mapping] = None, conventions: Optional[Mapping] = None
) -> Fraction:
    return Fraction(_core.adiabatic_limit(json.dumps(geometry), json.dumps(hodge or {}), _q(r), _j(conventions)))


def aps_difference_check(
    geometry: Mapping,
    r0: RationalLike,
    r1: RationalLike,
    eps: RationalLike,
    *,
    hodge: Optional[Mapping] = None,
    conventions: Optional[Mapping] = None,
    dolbeault: Optional[Mapping] = None,
) -> dict:
    return json.loads(
        _core.aps_difference_check(
            json.dumps(geometry), json.dumps(hodge or {}), _q(r0), _q(r1), _q(eps), _j(conventions), _j(dolbeault)
        )
    )


def calibrate() -> dict:
    return json.loads(_core.calibrate())


def dirac_spectrum(
    geometry: Mapping,
    r: RationalLike,
    eps: RationalLike,
    k_min: int,
    k_max: int,
    *,
    hodge: Optional[Mapping] = None,
    dolbeault: Optional[Mapping] = None,
) -> list:
    return json.loads(
        _core.dirac_spectrum(
            json.dumps(geometry), json.dumps(hodge or {}), _q(r), _q(eps), k_min, k_max, _j(dolbeault)
        )
    )


def flow_in_delta(geometry: Mapping, r: RationalLike, eps: RationalLike, *, hodge: Optional[Mapping] = None) -> int:
    """Closed-form spectral flow along delta in [0, eps]."""
    return _core.flow_in_delta_closed(json.dumps(geometry), json.dumps(hodge or {}), _q(r), _q(eps))


def flow_in_delta_oracle(
    geometry: Mapping, r: RationalLike, eps: RationalLike, *, hodge: Optional[Mapping] = None
) -> dict:
    return json.loads(_core.flow_in_delta_oracle(json.dumps(geometry), json.dumps(hodge or {}), _q(r), _q(eps)))


def flow_in_s(
    geometry: Mapping, r0: RationalLike, r1: RationalLike, eps: RationalLike, *, hodge: Optional[Mapping] = None
) -> dict:
    return json.loads(_core.flow_in_s_oracle(json.dumps(geometry), json.dumps(hodge or {}), _q(r0), _q(r1), _q(eps)))


def heat_density(n: int, lambdas: Sequence[float], t: float) -> float:
    return _core.heat_density(n, list(lambdas), t)


def limit_measure_apply(
    n: int,
    lambdas: Sequence[float],
    phi: Callable[[float], float],
    s_max: float,
    breakpoints: Iterable[float] = (),
) -> float:
    return _core.limit_measure_apply(n, list(lambdas), phi, s_max, list(breakpoints))


def laplace_check(n: int, lambdas: Sequence[float], t: float, s_max: float = 0.0) -> dict:
    return json.loads(_core.laplace_check(n, list(lambdas), t, s_max))


def near_zero_bound(n: int, lambdas: Sequence[float], eps_support: float) -> dict:
    return json.loads(_core.near_zero_bound(n, list(lambdas), eps_support))


def identity_suite(m: int, kappas: Iterable[RationalLike] = (1,)) -> dict:
    return json.loads(_core.identity_suite(m, [_q(k) for k in kappas]))


def trace_expansion_check(m: int, N: int, delta: RationalLike) -> dict:
    return json.loads(_core.trace_expansion_check(m, N, _q(delta)))


def parity_count(N: int, k: int, variant: int) -> int:
    return _core.parity_count(N, k, variant)


def parity_closed_form(N: int, k: int, variant: int) -> int:
    return _core.parity_closed_form(N, k, variant)
