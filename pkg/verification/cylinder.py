"""
The one-generator Baues-Lemaire cylinder on T(u) and its perturbation.

Alphabet {u: -1, u': -1, su: 0}. Inside it x = su and y = u' - u; the
perturbed differential is

    D su = su⊗u' - u'⊗su + B,    B = sum_{p,q} c_(p,q) x^p y x^q,

and B is exactly the y-linear part of BCH(y, x) under y -> u' - u, x -> su.
"""
import logging
from typing import List

from .bch import BCH_ALPHABET, bch_linear_closed, bch_log, linear_part
from .dgl import (
    LS_ALPHABET, S0_ALPHABET, DifferentialModel, ModelKind, ResidualReport, chain_map_check,
    model_ls, model_s0, require_model_order,
)
from .exceptions import DomainError
from .freeseries import AlgebraMorphism, Alphabet, Series, morph, product, series_sum
from .identities import CoefficientTable, c_coeff

logger = logging.getLogger(__name__)

CYLINDER_ALPHABET = Alphabet.of(('u', -1), ("u'", -1), ('su', 0))
U, U_PRIME, SU = 0, 1, 2


def _letters(order: int):
    return (
        Series.letter(CYLINDER_ALPHABET, 'u', order),
        Series.letter(CYLINDER_ALPHABET, "u'", order),
        Series.letter(CYLINDER_ALPHABET, 'su', order),
    )


def _flat_images(order: int):
    u, u_prime, _ = _letters(order)
    return {'u': -(u * u), "u'": -(u_prime * u_prime)}


def cyl_classical(order: int = 3) -> DifferentialModel:
    """d su = u' - u + su⊗u' - u⊗su."""
    require_model_order(order, minimum=3)
    u, u_prime, su = _letters(order)
    images = _flat_images(order)
    images['su'] = u_prime - u + su * u_prime - u * su
    return DifferentialModel('cyl', CYLINDER_ALPHABET, order, images, ModelKind.ASSOCIATIVE)


def dsu_tail(order: int, coeff: CoefficientTable = c_coeff) -> Series:
    """B = sum_{p+q<order} c_(p,q) su^p (u' - u) su^q."""
    terms = {}
    for n in range(order):
        for p in range(n + 1):
            q = n - p
            c = coeff(p, q)
            if not c:
                continue
            terms[(SU,) * p + (U_PRIME,) + (SU,) * q] = c
            terms[(SU,) * p + (U,) + (SU,) * q] = -c
    return Series(CYLINDER_ALPHABET, order, terms)


def cyl_perturbed(order: int, coeff: CoefficientTable = c_coeff) -> DifferentialModel:
    """D su = su⊗u' - u'⊗su + B, with Du, Du' as in the classical cylinder.

    A coefficient table other than c_(p,q) yields a mutated model; D^2 su
    then stops vanishing.
    """
    require_model_order(order)
    _, u_prime, su = _letters(order)
    images = _flat_images(order)
    images['su'] = su * u_prime - u_prime * su + dsu_tail(order, coeff)
    logger.debug("materialized perturbed cylinder at order %d", order)
    return DifferentialModel('cyl-perturbed', CYLINDER_ALPHABET, order, images, ModelKind.ASSOCIATIVE)


def theorem1_morphism(order: int, sign: int = 1) -> AlgebraMorphism:
    """a -> u, b -> u', z -> sign·su. Only sign = 1 is a chain map."""
    u, u_prime, su = _letters(order)
    return AlgebraMorphism(LS_ALPHABET, CYLINDER_ALPHABET, {'a': u, 'b': u_prime, 'z': su.scale(sign)})


def theorem1_check(order: int, sign: int = 1) -> ResidualReport:
    return chain_map_check(theorem1_morphism(order, sign), model_ls(order), cyl_perturbed(order))


def inclusion(end: int, order: int) -> AlgebraMorphism:
    """i_0: u -> u and i_1: u -> u' from T(u) into the cylinder."""
    if end not in (0, 1):
        raise DomainError(f"cylinder ends are 0 and 1, got {end}")
    name = 'u' if end == 0 else "u'"
    return AlgebraMorphism(S0_ALPHABET, CYLINDER_ALPHABET, {'u': Series.letter(CYLINDER_ALPHABET, name, order)})


def projection(order: int) -> AlgebraMorphism:
    """p: u, u' -> u and su -> 0."""
    u = Series.letter(S0_ALPHABET, 'u', order)
    return AlgebraMorphism(CYLINDER_ALPHABET, S0_ALPHABET, {
        'u': u, "u'": u, 'su': Series.zero(S0_ALPHABET, order),
    })


def cylinder_maps_report(cylinder: DifferentialModel) -> List[ResidualReport]:
    """Chain-map reports for i_0, i_1 and p against ``cylinder``."""
    s0 = model_s0(cylinder.order)
    return [
        chain_map_check(inclusion(0, cylinder.order), s0, cylinder),
        chain_map_check(inclusion(1, cylinder.order), s0, cylinder),
        chain_map_check(projection(cylinder.order), cylinder, s0),
    ]


def projection_retracts(order: int) -> bool:
    """p∘i_0 and p∘i_1 are the identity of T(u)."""
    identity = AlgebraMorphism.identity(S0_ALPHABET, order)
    p = projection(order)
    return all(
        p.compose(inclusion(end, order)).image('u') == identity.image('u')
        for end in (0, 1)
    )


def eq2_residual(order: int, coeff: CoefficientTable = c_coeff) -> Series:
    """D(B) + B⊗u' + u'⊗B; it equals D^2 su, so it vanishes for the real table."""
    model = cyl_perturbed(order, coeff)
    _, u_prime, _ = _letters(order)
    tail = dsu_tail(order, coeff)
    return model.apply(tail) + tail * u_prime + u_prime * tail


def gamma_term(p: int, q: int, tail: Series) -> Series:
    """Gamma(p, q) = x^p y^2 x^q + sum_{i<p} x^i B x^{p-1-i} y x^q - sum_{i<q} x^p y x^i B x^{q-1-i}."""
    order = tail.order
    y = Series.letter(BCH_ALPHABET, 'y', order)

    def xs(n):
        return Series.word(BCH_ALPHABET, ['x'] * n, order)

    parts = [xs(p) * y * y * xs(q)]
    for i in range(p):
        parts.append(xs(i) * tail * xs(p - 1 - i) * y * xs(q))
    for i in range(q):
        parts.append(-(xs(p) * y * xs(i) * tail * xs(q - 1 - i)))
    return series_sum(parts, BCH_ALPHABET, order)


def gamma_sum(order: int, coeff: CoefficientTable = c_coeff) -> Series:
    """sum_{p,q} c_(p,q) Gamma(p, q) in the {y, x} alphabet.

    Gamma(p, q) starts at word length p + q + 1 (B contributes the single
    letter y), so only p + q <= order - 1 contribute.
    """
    require_model_order(order)
    tail = bch_linear_closed(order, coeff)
    parts = []
    for n in range(order):
        for p in range(n + 1):
            q = n - p
            c = coeff(p, q)
            if c:
                parts.append(gamma_term(p, q, tail).scale(c))
    return series_sum(parts, BCH_ALPHABET, order)


def gamma_residual(order: int, coeff: CoefficientTable = c_coeff) -> Series:
    return gamma_sum(order, coeff)


def gamma_eq4_coefficient(p: int, q: int, coeff: CoefficientTable = c_coeff):
    """The x^p y^2 x^q coefficient of the Gamma sum, computed at the smallest order that holds it."""
    if p < 0 or q < 0:
        raise DomainError(f"need p, q >= 0, got ({p}, {q})")
    order = p + q + 2
    word = ('x',) * p + ('y', 'y') + ('x',) * q
    return gamma_sum(order, coeff).coefficient(word)


def su_power_defect(m: int, order: int) -> Series:
    """D(su^m) - (su^m⊗u' - u'⊗su^m + sum_{i<m} su^i B su^{m-1-i})."""
    if m < 1:
        raise DomainError(f"su power must be >= 1, got {m}")
    model = cyl_perturbed(order)
    _, u_prime, _ = _letters(order)
    tail = dsu_tail(order)

    def su_pow(n):
        return Series.word(CYLINDER_ALPHABET, ['su'] * n, order)

    expected = [su_pow(m) * u_prime, -(u_prime * su_pow(m))]
    for i in range(m):
        expected.append(product(product(su_pow(i), tail), su_pow(m - 1 - i)))
    return model.apply(su_pow(m)) - series_sum(expected, CYLINDER_ALPHABET, order)


def bch_substitution(order: int) -> AlgebraMorphism:
    """y -> u' - u, x -> su."""
    u, u_prime, su = _letters(order)
    return AlgebraMorphism(BCH_ALPHABET, CYLINDER_ALPHABET, {'y': u_prime - u, 'x': su})


def corollary_substitution(order: int, coeff: CoefficientTable = c_coeff) -> ResidualReport:
    """D su - (su⊗u' - u'⊗su) against the y-linear part of log(e^y e^x) pushed into the cylinder."""
    _, u_prime, su = _letters(order)
    tail = cyl_perturbed(order, coeff).d('su') - (su * u_prime - u_prime * su)
    pushed = morph(bch_substitution(order), linear_part(bch_log(order), 'y'))
    return ResidualReport.difference("BCH substitution", 'su', tail, pushed)
