"""
Maurer-Cartan elements and the gauge action of degree-0 elements on them.

Only degree-0 gauge parameters are supported, so ad_x preserves degree and
every operator series below carries trivial Koszul signs. The scalar part of
x is dropped, since ad and d both vanish on it; each ad_x then lengthens words
by at least one letter, and the operator series e^{ad_x}, f_x and f_x^{-1}
become finite sums at any fixed truncation order. No local nilpotency
hypothesis is needed beyond that.

The homotopy between a and x*a is represented by its polynomial path
p(t) = sum a_i t^i (GaugePath), never by forms in t and dt.
"""
import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Tuple

from .dgl import LS_ALPHABET, DifferentialModel
from .exact import bernoulli, inverse_factorial
from .exceptions import ConstantTermError, NotMaurerCartan
from .freeseries import AlgebraMorphism, Series, bracket, series_sum

logger = logging.getLogger(__name__)


class PathOrientation(str, enum.Enum):
    # a_1 = dx - ad_x(a), a_{n+1} = -ad_x(a_n)/(n+1); ends at gauge(-x, a).
    AS_PRINTED = 'as-printed'
    # a_1 = ad_x(a) - dx, a_{n+1} = ad_x(a_n)/(n+1); ends at gauge(x, a).
    FLOW = 'flow'


@dataclass(frozen=True)
class MaurerCartanResult:
    flat: bool
    residual: Series

    def __bool__(self):
        return self.flat


def is_mc(model: DifferentialModel, s: Series) -> MaurerCartanResult:
    """ds + 1/2 [s, s] through the model's order."""
    s.require_degree(-1, "Maurer-Cartan candidate")
    s = s.truncate(min(s.order, model.order))
    residual = model.apply(s) + bracket(s, s).scale(Fraction(1, 2))
    return MaurerCartanResult(not residual, residual)


def _gauge_parameter(x: Series) -> Series:
    x.require_degree(0, "gauge parameter")
    return x.without_constant()


def _operator_series(x: Series, y: Series, weight: Callable[[int], Fraction]) -> Series:
    x = _gauge_parameter(x)
    order = min(x.order, y.order)
    total = Series.zero(y.alphabet, order)
    term = y.truncate(order)
    n = 0
    while term:
        total = total + term.scale(weight(n))
        term = bracket(x, term)
        n += 1
    return total


def op_exp_ad(x: Series, y: Series) -> Series:
    """e^{ad_x}(y) = sum ad_x^n(y)/n!."""
    return _operator_series(x, y, inverse_factorial)


def op_f(x: Series, y: Series) -> Series:
    """f_x(y) = (e^{ad_x} - id)/ad_x (y) = sum ad_x^n(y)/(n+1)!."""
    return _operator_series(x, y, lambda n: inverse_factorial(n + 1))


def op_f_inv(x: Series, y: Series) -> Series:
    """f_x^{-1}(y) = ad_x/(e^{ad_x} - id) (y) = sum B_n ad_x^n(y)/n!."""
    return _operator_series(x, y, lambda n: bernoulli(n) * inverse_factorial(n))


def gauge(model: DifferentialModel, x: Series, a: Series) -> Series:
    """x * a = e^{ad_x}(a) - f_x(dx)."""
    x = _gauge_parameter(x)
    a.require_degree(-1, "gauge action input")
    order = min(model.order, x.order, a.order)
    x = x.truncate(order)
    return op_exp_ad(x, a.truncate(order)) - op_f(x, model.apply(x))


@dataclass(frozen=True)
class GaugePath:
    """The polynomial path p(t) = sum a_i t^i, with a_0 the starting MC element."""
    x: Series
    coefficients: Tuple[Series, ...]
    orientation: PathOrientation = PathOrientation.AS_PRINTED

    @property
    def order(self) -> int:
        return self.coefficients[0].order

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, i) -> Series:
        if i >= len(self.coefficients):
            return Series.zero(self.coefficients[0].alphabet, self.order)
        return self.coefficients[i]

    def evaluate(self, t=1) -> Series:
        t = Fraction(t)
        power = Fraction(1)
        parts = []
        for coefficient in self.coefficients:
            parts.append(coefficient.scale(power))
            power *= t
        return series_sum(parts, self.coefficients[0].alphabet, self.order)


def gauge_ode(model: DifferentialModel, x: Series, a: Series,
              orientation: PathOrientation = PathOrientation.AS_PRINTED) -> GaugePath:
    """Coefficients of the path solving the gauge ODE.

    With the recursion as printed the path ends at gauge(-x, a); the flow
    orientation flips the sign of every ad_x and of dx and ends at gauge(x, a).
    Either way a_n vanishes once n exceeds the truncation order.
    """
    orientation = PathOrientation(orientation)
    x = _gauge_parameter(x)
    a.require_degree(-1, "gauge action input")
    order = min(model.order, x.order, a.order)
    x = x.truncate(order)
    a = a.truncate(order)
    sign = 1 if orientation is PathOrientation.FLOW else -1
    dx = model.apply(x)
    coefficients = [a]
    current = (bracket(x, a) - dx).scale(sign)
    n = 1
    while current and n <= order + 1:
        coefficients.append(current)
        current = bracket(x, current).scale(Fraction(sign, n + 1))
        n += 1
    return GaugePath(x, tuple(coefficients), orientation)


def morphism_from_gauge(w: Series, v: Series, target: DifferentialModel) -> AlgebraMorphism:
    """Phi from the LS model: b -> v, a -> w * v, z -> w.

    v must be Maurer-Cartan in ``target``; Phi is then a chain map.
    """
    result = is_mc(target, v)
    if not result.flat:
        raise NotMaurerCartan(
            f"{v.text()} is not Maurer-Cartan in {target.name}", result.residual,
        )
    w.require_degree(0, "gauge parameter")
    if w.constant_term:
        raise ConstantTermError(f"Phi(z) = w must be constant-free, constant term is {w.constant_term}")
    order = min(target.order, w.order, v.order)
    w = w.truncate(order)
    v = v.truncate(order)
    u = gauge(target, w, v)
    logger.debug("gauge image of %s under %s has %d terms", v.text(), w.text(), len(u))
    return AlgebraMorphism(LS_ALPHABET, target.alphabet, {'a': u, 'b': v, 'z': w})
