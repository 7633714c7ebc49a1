"""
Baker-Campbell-Hausdorff series BCH(y, x) = log(e^y e^x) and its y-linear part.

Everything is computed in the tensor algebra on {y, x}; only concatenation
products occur, so no Koszul signs enter. y carries degree -1 and x degree 0
so that the substitution y -> u'-u, x -> su into the cylinder is a
degree-preserving morphism.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from math import factorial
from typing import Union

from .exact import bernoulli, inverse_factorial
from .exceptions import DomainError
from .freeseries import Alphabet, Generator, Series, ad_pow, exp, log1p
from .identities import CoefficientTable, c_coeff

logger = logging.getLogger(__name__)

BCH_ALPHABET = Alphabet.of(('y', -1), ('x', 0))
Y, X = 0, 1


def _require_order(order: int) -> None:
    if order < 1:
        raise DomainError(f"BCH order must be >= 1, got {order}")


def bch_log(order: int) -> Series:
    """log1p(exp(y) exp(x) - 1) through ``order``."""
    _require_order(order)
    y = Series.letter(BCH_ALPHABET, 'y', order)
    x = Series.letter(BCH_ALPHABET, 'x', order)
    group_product = exp(y) * exp(x)
    return log1p(group_product - Series.one(BCH_ALPHABET, order))


def bch_direct(order: int) -> Series:
    """The double sum over block tuples (p_i, q_i) with p_i + q_i > 0.

    sum_k (-1)^{k-1}/k sum y^{p1} x^{q1} ... y^{pk} x^{qk} / (p1! q1! ... pk! qk!)
    """
    _require_order(order)
    blocks = []
    for weight in range(1, order + 1):
        for p in range(weight + 1):
            q = weight - p
            blocks.append(((Y,) * p + (X,) * q, Fraction(1, factorial(p) * factorial(q))))
    acc = defaultdict(Fraction)

    def extend(word, coeff, k):
        # word is a product of k blocks
        for block, block_coeff in blocks:
            if len(word) + len(block) > order:
                continue
            grown = word + block
            grown_coeff = coeff * block_coeff
            acc[grown] += Fraction((-1) ** k, k + 1) * grown_coeff
            extend(grown, grown_coeff, k + 1)

    extend((), Fraction(1), 0)
    return Series(BCH_ALPHABET, order, acc)


def linear_part(s: Series, generator: Union[str, Generator]) -> Series:
    """Restriction of ``s`` to the words containing ``generator`` exactly once."""
    name = generator.name if isinstance(generator, Generator) else generator
    index = s.alphabet.index(name)
    return s.restrict(lambda word: word.count(index) == 1)


def bch_linear_closed(order: int, coeff: CoefficientTable = c_coeff) -> Series:
    """sum_{n<order} sum_{p+q=n} c_(p,q) x^p y x^q.

    With the default table this is sum_n B_n/n! ad_x^n(y) expanded
    binomially, which is valid because x is even.
    """
    _require_order(order)
    terms = {}
    for n in range(order):
        for p in range(n + 1):
            q = n - p
            terms[(X,) * p + (Y,) + (X,) * q] = coeff(p, q)
    return Series(BCH_ALPHABET, order, terms)


def bch_linear_ad(order: int) -> Series:
    """sum_n B_n/n! ad_x^n(y) computed with iterated brackets."""
    _require_order(order)
    x = Series.letter(BCH_ALPHABET, 'x', order)
    y = Series.letter(BCH_ALPHABET, 'y', order)
    total = Series.zero(BCH_ALPHABET, order)
    for n in range(order):
        total = total + ad_pow(x, n, y).scale(bernoulli(n) * inverse_factorial(n))
    return total
