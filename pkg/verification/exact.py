"""
Exact rational arithmetic helpers: binomials, factorials and Bernoulli numbers.

Bernoulli numbers follow the convention B_1 = -1/2, the one under which
t/(e^t - 1) = sum B_n t^n / n! and under which the recursion

    -n B_n = sum_{k=1}^{n} C(n,k) B_k B_{n-k} + n B_{n-1}     (n >= 1)

holds. The table is produced by solving that recursion for B_n, so it is
checked against the same recursion by ``identities.recursion_residual``.
"""
import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .exceptions import DomainError

logger = logging.getLogger(__name__)

# The only scalar type in the system.
Rational = Fraction

_table = [Fraction(1)]
_table_lock = threading.Lock()


@dataclass(frozen=True)
class BernoulliTable:
    """Bernoulli numbers B_0..B_max."""
    values: Tuple[Fraction, ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def max_index(self):
        return len(self.values) - 1


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) as an exact Rational; zero when k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def factorial(n: int) -> int:
    return math.factorial(n)


def inverse_factorial(n: int) -> Fraction:
    return Fraction(1, math.factorial(n))


def _extend_to(n: int) -> None:
    # caller holds the lock
    while len(_table) <= n:
        m = len(_table)
        acc = m * _table[m - 1]
        for k in range(1, m):
            acc += math.comb(m, k) * _table[k] * _table[m - k]
        _table.append(-acc / (m + 1))
    logger.debug("Bernoulli table extended to B_%d", len(_table) - 1)


def bernoulli(n: int) -> Fraction:
    """Return B_n (B_1 = -1/2)."""
    if n < 0:
        raise DomainError(f"bernoulli requires n >= 0, got {n}")
    if n < len(_table):
        return _table[n]
    with _table_lock:
        _extend_to(n)
        return _table[n]


def bernoulli_table(max_n: int) -> BernoulliTable:
    """B_0..B_max_n as an immutable table."""
    bernoulli(max_n)
    return BernoulliTable(tuple(_table[: max_n + 1]))
