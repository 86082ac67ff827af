"""The difference function of the second/first-kind integral combination,
its closed-form derivatives, the admissibility conditions, and the sharp
linear bounds it satisfies on admissible parameter pairs.

The difference function is evaluated through the closed hypergeometric form
of the kernel H (regular on the whole closed interval), not through the
subtractive first/second-kind formula, which loses digits near both
endpoints and is kept only as a cross-check route.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from . import elliptic
from .gentrig import PQParams, pi_pq
from .special import (
    METHOD_GAUSS_CLOSED_FORM,
    DomainError,
    EvalResult,
    HypArgs,
    gauss_2f1,
)


class CancellationWarning(RuntimeWarning):
    """The evaluation subtracts nearly equal quantities and loses digits."""


class InadmissibleWarning(UserWarning):
    """The parameter pair fails the admissibility conditions; the bound
    being evaluated is unproven there."""


#: Below this internal argument the defining kernel combination suffers
#: subtractive cancellation (the closed form stays accurate).
CANCELLATION_THRESHOLD = 0.05


@dataclass(frozen=True)
class DeltaConstants:
    """Derived constants of the difference function for one parameter pair.

    c1 is the recurring coefficient 1 + 1/q - 1/p; delta0 and
    delta1 = -delta0 are the endpoint limits; eta scales both derivative
    closed forms; beta1 = -2*delta0 is the sharp upper slope.
    """

    c1: float
    delta0: float
    delta1: float
    eta: float
    beta1: float

    @classmethod
    def for_params(cls, params: PQParams) -> "DeltaConstants":
        c1 = 1.0 + params.inv_q - params.inv_p
        delta0 = (1.0 - params.inv_p) * params.pi_pq / (2.0 * c1) - 1.0
        eta = (
            (params.p / params.q) * (1.0 - params.inv_p) ** 2 * params.pi_pq
            / (2.0 * c1 * (2.0 + params.inv_q - params.inv_p))
        )
        return cls(c1=c1, delta0=delta0, delta1=-delta0, eta=eta, beta1=-2.0 * delta0)


def _kernel_closed_at_argument(a: float, b: float, x: float) -> EvalResult:
    """Closed form of the kernel H_{a,b} at internal argument x = r**(1/b)."""
    coefficient = (1.0 - b) * pi_pq(1.0 / b, 1.0 / a) / (2.0 * (1.0 + a - b))
    inner = gauss_2f1(HypArgs(a, 1.0 - b, 2.0 + a - b, x))
    return EvalResult(coefficient * inner.value, abs(coefficient) * inner.err_estimate,
                      inner.method)


def _check_kernel_parameters(a: float, b: float) -> None:
    if not (0.0 < a < 1.0 and 0.0 < b < 1.0):
        raise DomainError(f"kernel requires a, b in (0, 1), got a={a}, b={b}")


def H_def(a: float, b: float, r: float) -> float:
    """Kernel H_{a,b}(r) evaluated by its defining two-term combination.

    This is the normalized second-minus-first-kind combination
    (E - (r')**p * K) / r**p expressed in the symmetric parameters
    a, b; r itself is the modulus and x = r**(1/b) feeds the series.
    Emits CancellationWarning when x < 0.05, where the two terms agree
    to many digits and the subtraction loses precision.
    """
    _check_kernel_parameters(a, b)
    if not 0.0 < r <= 1.0:
        raise DomainError(f"defining kernel form requires r in (0, 1], got r={r}")
    x = r ** (1.0 / b)
    if x < CANCELLATION_THRESHOLD:
        warnings.warn(
            f"kernel combination at internal argument {x:.3e} < {CANCELLATION_THRESHOLD}"
            " subtracts nearly equal values; use the closed form instead",
            CancellationWarning, stacklevel=2)
    prefactor = pi_pq(1.0 / b, 1.0 / a) / (2.0 * x)
    first = gauss_2f1(HypArgs(a, -b, 1.0 + a - b, x)).value
    if x == 1.0:
        return prefactor * first
    second = gauss_2f1(HypArgs(a, 1.0 - b, 1.0 + a - b, x)).value
    return prefactor * (first - (1.0 - x) * second)


def H_closed(a: float, b: float, r: float) -> float:
    """Kernel H_{a,b}(r) by its closed one-term hypergeometric form.

    Regular on all of [0, 1]: at r = 0 it equals
    (1-b) * pi_{1/b,1/a} / (2 * (1+a-b)) and at r = 1 it equals 1.
    """
    _check_kernel_parameters(a, b)
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"closed kernel form requires r in [0, 1], got r={r}")
    return _kernel_closed_at_argument(a, b, r ** (1.0 / b)).value


def delta_result(params: PQParams, r: float) -> EvalResult:
    """Difference function with error estimate and method tag."""
    constants = DeltaConstants.for_params(params)
    if r == 0.0:
        return EvalResult(constants.delta0, 1e-15 * abs(constants.delta0),
                          METHOD_GAUSS_CLOSED_FORM)
    if r == 1.0:
        return EvalResult(constants.delta1, 1e-15 * abs(constants.delta1),
                          METHOD_GAUSS_CLOSED_FORM)
    if not 0.0 < r < 1.0:
        raise DomainError(f"difference function requires r in [0, 1], got r={r}")
    x = r ** params.p
    upper = _kernel_closed_at_argument(params.inv_q, params.inv_p, x)
    lower = _kernel_closed_at_argument(params.inv_q, params.inv_p, 1.0 - x)
    method = upper.method if upper.method == lower.method else "series"
    return EvalResult(upper.value - lower.value,
                      upper.err_estimate + lower.err_estimate, method)


def delta(params: PQParams, r: float) -> float:
    """Difference function on [0, 1]; endpoint queries return the exact limits.

    Computed as the kernel closed form at x = r**p minus the same form at
    1 - x, which is regular at both endpoints and antisymmetric under the
    complement map by construction.
    """
    return delta_result(params, r).value


def delta_via_elliptic(params: PQParams, r: float) -> float:
    """Cross-check route: the difference function straight from K and E.

    Subtractive; trustworthy to ~1e-9 only for r in [0.05, 0.95], the band
    used by the route-equivalence certification.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"direct route requires r in (0, 1), got r={r}")
    r_p = r ** params.p
    comp_p = 1.0 - r_p
    k_val = elliptic.K_pq(params, r).value
    e_val = elliptic.E_pq(params, r).value
    k_comp = elliptic.K_comp(params, r).value
    e_comp = elliptic.E_comp(params, r).value
    return (e_val - comp_p * k_val) / r_p - (e_comp - r_p * k_comp) / comp_p


def _derivative_front(params: PQParams) -> tuple[float, float, float]:
    a1 = 1.0 + params.inv_q
    b1 = 2.0 - params.inv_p
    c1 = 3.0 + params.inv_q - params.inv_p
    return a1, b1, c1


def delta_prime_result(params: PQParams, r: float) -> EvalResult:
    if r == 0.0:
        return EvalResult(0.0, 0.0, METHOD_GAUSS_CLOSED_FORM)
    if not 0.0 < r < 1.0:
        raise DomainError(f"slope requires r in [0, 1), got r={r}")
    constants = DeltaConstants.for_params(params)
    a1, b1, c1 = _derivative_front(params)
    x = r ** params.p
    fx = gauss_2f1(HypArgs(a1, b1, c1, x))
    fy = gauss_2f1(HypArgs(a1, b1, c1, 1.0 - x))
    scale = constants.eta * r ** (params.p - 1.0)
    method = fx.method if fx.method == fy.method else "series"
    return EvalResult(scale * (fx.value + fy.value),
                      scale * (fx.err_estimate + fy.err_estimate), method)


def delta_prime(params: PQParams, r: float) -> float:
    """Closed-form slope of the difference function on [0, 1).

    eta * r**(p-1) times the sum of one contiguous hypergeometric value at
    r**p and one at 1 - r**p; strictly positive on (0, 1) for admissible
    parameters and 0 in the limit r -> 0 (p > 1).
    """
    return delta_prime_result(params, r).value


def delta_second_result(params: PQParams, r: float) -> EvalResult:
    if not 0.0 < r < 1.0:
        raise DomainError(f"curvature requires r in (0, 1), got r={r}")
    constants = DeltaConstants.for_params(params)
    a1, b1, c1 = _derivative_front(params)
    p = params.p
    x = r ** p
    f1x = gauss_2f1(HypArgs(a1, b1, c1, x))
    f1y = gauss_2f1(HypArgs(a1, b1, c1, 1.0 - x))
    f2x = gauss_2f1(HypArgs(a1 + 1.0, b1 + 1.0, c1 + 1.0, x))
    f2y = gauss_2f1(HypArgs(a1 + 1.0, b1 + 1.0, c1 + 1.0, 1.0 - x))
    shift = a1 * b1 / c1
    value = constants.eta * (
        (p - 1.0) * r ** (p - 2.0) * (f1x.value + f1y.value)
        + p * r ** (2.0 * p - 2.0) * shift * (f2x.value - f2y.value)
    )
    err = constants.eta * (
        (p - 1.0) * r ** (p - 2.0) * (f1x.err_estimate + f1y.err_estimate)
        + p * r ** (2.0 * p - 2.0) * shift * (f2x.err_estimate + f2y.err_estimate)
    )
    methods = {f1x.method, f1y.method, f2x.method, f2y.method}
    method = methods.pop() if len(methods) == 1 else "series"
    return EvalResult(value, err, method)


def delta_second(params: PQParams, r: float) -> float:
    """Curvature of the difference function: the exact derivative of the
    closed-form slope.

    eta * ((p-1) * r**(p-2) * [F1(x) + F1(y)] + p * r**(2p-2) * (a1*b1/c1)
    * [F2(x) - F2(y)]) with x = r**p, y = 1 - x. Strictly positive wherever
    the admissibility conditions hold.
    """
    return delta_second_result(params, r).value


def delta_second_sign_variant(params: PQParams, r: float) -> float:
    """Sign-variant curvature expression (difference of F1 terms, sum of F2
    terms) kept for comparison.

    Disagrees with the analytic derivative of the slope except at isolated
    points; the finite-difference probe in the verification report records
    which form it supports.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"curvature requires r in (0, 1), got r={r}")
    constants = DeltaConstants.for_params(params)
    a1, b1, c1 = _derivative_front(params)
    p = params.p
    x = r ** p
    f1x = gauss_2f1(HypArgs(a1, b1, c1, x)).value
    f1y = gauss_2f1(HypArgs(a1, b1, c1, 1.0 - x)).value
    f2x = gauss_2f1(HypArgs(a1 + 1.0, b1 + 1.0, c1 + 1.0, x)).value
    f2y = gauss_2f1(HypArgs(a1 + 1.0, b1 + 1.0, c1 + 1.0, 1.0 - x)).value
    shift = a1 * b1 / c1
    return constants.eta * r ** (p - 2.0) * (
        (p - 1.0) * (f1x - f1y) + p * shift * x * (f2x + f2y)
    )


def _is_exact(value) -> bool:
    return isinstance(value, Rational)


def epsilon(p, q):
    """Admissibility margin of condition (2): a rational expression in 1/p, 1/q.

    Exact for int or Fraction inputs (the result is then a Fraction);
    floats are evaluated in double precision.
    """
    if _is_exact(p) and _is_exact(q):
        p, q = Fraction(p), Fraction(q)
    return (
        20 - 42 / p + 6 / q + 21 / p ** 2 - 2 / q ** 2 - 20 / (p * q)
        + 9 / (p ** 2 * q) - 3 / p ** 3 - 1 / (p ** 3 * q)
    )


def condition1(p, q) -> bool:
    """First admissibility condition, decided in exact rational arithmetic.

    Arguments are promoted to exact rationals (binary floats convert
    exactly), making the mixed strict/non-strict boundary classification
    reproducible: 2 + 1/p + 1/p**2 <= 5/p + 1/q < 3 + 1/p**2.
    """
    p, q = Fraction(p), Fraction(q)
    _require_pq(p, q)
    middle = 5 / p + 1 / q
    return 2 + 1 / p + 1 / p ** 2 <= middle < 3 + 1 / p ** 2


def admissible(p, q) -> bool:
    """Both admissibility conditions: condition1 and epsilon > 0 (strict)."""
    p, q = Fraction(p), Fraction(q)
    _require_pq(p, q)
    return condition1(p, q) and epsilon(p, q) > 0


def _require_pq(p, q) -> None:
    if not (p > 1 and q > 1):
        raise DomainError(f"admissibility requires p > 1 and q > 1, got p={p}, q={q}")


def sharp_linear_bounds(params: PQParams, r: float) -> tuple[float, float]:
    """Sharp linear envelope (lower, upper) of the difference function.

    lower = delta0 (slope 0) and upper = delta0 + beta1 * r, strict on
    (0, 1) for admissible parameters; sharp as r -> 0 and, for the upper
    bound, also as r -> 1. Warns when the pair is inadmissible, where the
    envelope is unproven (evaluation still proceeds).
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"bounds require r in (0, 1), got r={r}")
    _warn_if_inadmissible(params)
    constants = DeltaConstants.for_params(params)
    return constants.delta0, constants.delta0 + constants.beta1 * r


def product_gap(params: PQParams, r: float, s: float) -> float:
    """Gap delta(r*s) - delta(r) - delta(s) for r, s in (0, 1)."""
    if not (0.0 < r < 1.0 and 0.0 < s < 1.0):
        raise DomainError(f"product gap requires r, s in (0, 1), got r={r}, s={s}")
    return delta(params, r * s) - delta(params, r) - delta(params, s)


def product_gap_in_bounds(params: PQParams, r: float, s: float) -> bool:
    """Whether the product gap lies strictly between the endpoint limits.

    True iff delta0 < gap < delta1; proven for admissible parameter pairs
    (warns and still evaluates otherwise).
    """
    _warn_if_inadmissible(params)
    constants = DeltaConstants.for_params(params)
    gap = product_gap(params, r, s)
    return constants.delta0 < gap < constants.delta1


def _warn_if_inadmissible(params: PQParams) -> None:
    if not admissible(params.p, params.q):
        warnings.warn(
            f"(p, q) = ({params.p}, {params.q}) fails the admissibility conditions;"
            " the requested bound is unproven there",
            InadmissibleWarning, stacklevel=3)
