"""
Exact evaluators for the Bernoulli-number identities.

Every evaluator returns "left-hand side minus right-hand side" as a Fraction,
so an identity holds exactly when the residual is zero.
"""
import enum
import logging
from fractions import Fraction
from typing import Callable

from .exact import bernoulli, binomial, inverse_factorial
from .exceptions import DomainError

logger = logging.getLogger(__name__)

CoefficientTable = Callable[[int, int], Fraction]


class GenEulerVariant(str, enum.Enum):
    # The two sums joined by "-", exactly as the theorem is printed.
    AS_PRINTED = 'as-printed'
    # The two sums joined by "+", which is what substituting the c_(p,q)
    # values into the x^p y^2 x^q coefficient identity produces.
    SUM_CORRECTED = 'sum-corrected'


def c_coeff(p: int, q: int) -> Fraction:
    """c_(p,q) = (-1)^q B_{p+q}/(p+q)! C(p+q, q), i.e. (-1)^q B_{p+q}/(p! q!)."""
    if p < 0 or q < 0:
        raise DomainError(f"c_(p,q) needs p, q >= 0, got ({p}, {q})")
    n = p + q
    value = bernoulli(n) * inverse_factorial(n) * binomial(n, q)
    return -value if q % 2 else value


def eq4_residual(p: int, q: int, coeff: CoefficientTable = c_coeff) -> Fraction:
    """Coefficient of x^p y^2 x^q in sum c_(p,q) Gamma(p,q).

    c_(p,q) + sum_{i=0}^{p} c_(p+1-i,q) c_(i,0) - sum_{j=0}^{q} c_(p,q+1-j) c_(0,j)
    """
    if p < 0 or q < 0:
        raise DomainError(f"eq4_residual needs p, q >= 0, got ({p}, {q})")
    total = coeff(p, q)
    for i in range(p + 1):
        total += coeff(p + 1 - i, q) * coeff(i, 0)
    for j in range(q + 1):
        total -= coeff(p, q + 1 - j) * coeff(0, j)
    return total


def recursion_residual(n: int) -> Fraction:
    """-n B_n - sum_{k=1}^{n} C(n,k) B_k B_{n-k} - n B_{n-1}."""
    if n < 1:
        raise DomainError(f"recursion_residual needs n >= 1, got {n}")
    total = -n * bernoulli(n) - n * bernoulli(n - 1)
    for k in range(1, n + 1):
        total -= binomial(n, k) * bernoulli(k) * bernoulli(n - k)
    return total


def _weighted(k: int) -> Fraction:
    return bernoulli(k) * inverse_factorial(k)


def euler_residual(n: int) -> Fraction:
    """-(n+1) B_n/n! - sum_{k=2}^{n-2} B_k/k! B_{n-k}/(n-k)!, for even n > 2."""
    if n <= 2 or n % 2:
        raise DomainError(f"Euler's formula needs an even n > 2, got {n}")
    lhs = -(n + 1) * _weighted(n)
    rhs = sum((_weighted(k) * _weighted(n - k) for k in range(2, n - 1)), Fraction(0))
    return lhs - rhs


def gen_euler_sums(n: int, m: int):
    """The two sums of the generalized Euler identity.

    A sum whose upper index is below 2 is empty, hence zero.
    """
    first = sum(
        (_weighted(i) * _weighted(n - i) * binomial(n - i, n - m - 1) for i in range(2, m + 1)),
        Fraction(0),
    )
    second = sum(
        (_weighted(j) * _weighted(n - j) * binomial(n - j, m) for j in range(2, n - m)),
        Fraction(0),
    )
    return first, second


def gen_euler_residual(n: int, m: int, variant=GenEulerVariant.SUM_CORRECTED) -> Fraction:
    """LHS - RHS of -B_n/n! C(n+1, n-m) = first (-|+) second."""
    variant = GenEulerVariant(variant)
    if n < 2 or n % 2:
        raise DomainError(f"the generalized Euler identity needs an even n >= 2, got {n}")
    if not 0 <= m <= n - 1:
        raise DomainError(f"m must satisfy 0 <= m <= n-1, got m={m} for n={n}")
    lhs = -_weighted(n) * binomial(n + 1, n - m)
    first, second = gen_euler_sums(n, m)
    if variant is GenEulerVariant.AS_PRINTED:
        return lhs - (first - second)
    return lhs - (first + second)
