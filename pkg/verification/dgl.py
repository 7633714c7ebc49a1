"""
Differential models: the S^0 model, the Lawrence-Sullivan construction, the
interval model, plus d^2 and chain-map verification.

A DifferentialModel is an alphabet with a degree -1 derivation whose
generator images are materialized through a fixed truncation order. The LS
differential of z is an infinite series; at order N only the terms
B_i/i! ad_z^i(b - a) with i < N survive, since each ad_z adds one letter.

d^2 is checked on generators only. That suffices: d^2 = (1/2)[d, d] is itself
a derivation, so it vanishes on every word once it vanishes on generators.
"""
import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Mapping, Optional, Tuple

from .exact import bernoulli, inverse_factorial
from .exceptions import AlphabetMismatch, DegreeError, DomainError
from .freeseries import (
    Alphabet, AlgebraMorphism, Derivation, Series, Word, bracket, derive, morph,
)

logger = logging.getLogger(__name__)

BernoulliSource = Callable[[int], Fraction]

S0_ALPHABET = Alphabet.of(('u', -1))
LS_ALPHABET = Alphabet.of(('a', -1), ('b', -1), ('z', 0))
INTERVAL_ALPHABET = Alphabet.of(('a', -1), ('z', 0))
PROBE_ALPHABET = Alphabet.of(('v', -1), ('x', 0), ('t', 1))


class ModelKind(str, enum.Enum):
    LIE = 'lie'
    ASSOCIATIVE = 'associative'


class DifferentialModel:
    """An alphabet with a degree -1 differential materialized through ``order``."""

    def __init__(self, name: str, alphabet: Alphabet, order: int, images: Mapping[str, Series],
                 kind: ModelKind = ModelKind.LIE):
        differential = Derivation(alphabet, -1, images, order=order)
        wrong = differential.degree_violations()
        if wrong:
            raise DegreeError(f"model {name!r}: images of {', '.join(wrong)} are not of degree deg(g) - 1")
        self.name = name
        self.alphabet = alphabet
        self.order = order
        self.differential = differential
        self.kind = ModelKind(kind)

    def d(self, name: str) -> Series:
        return self.differential.image(name)

    def apply(self, s: Series) -> Series:
        return derive(self.differential, s)

    def generator(self, name: str) -> Series:
        return Series.letter(self.alphabet, name, self.order)

    def with_image(self, name: str, image: Series) -> 'DifferentialModel':
        images = self.differential.images
        images[name] = image
        return DifferentialModel(self.name, self.alphabet, self.order, images, self.kind)

    def __repr__(self):
        return f"DifferentialModel({self.name!r}, {self.alphabet!r}, order={self.order})"


def require_model_order(order: int, minimum: int = 2) -> None:
    if order < minimum:
        raise DomainError(f"model order must be >= {minimum}, got {order}")


def flat_differential(alphabet: Alphabet, name: str, order: int) -> Series:
    """-1/2 [g, g] = -g⊗g for an odd generator g."""
    g = Series.letter(alphabet, name, order)
    return bracket(g, g).scale(Fraction(-1, 2))


def bernoulli_ad_series(z: Series, e: Series, bernoulli_fn: BernoulliSource = bernoulli) -> Series:
    """sum_i B_i/i! ad_z^i(e), stopping once ad_z^i(e) vanishes at the truncation order."""
    total = Series.zero(e.alphabet, min(z.order, e.order))
    term = e
    i = 0
    while term:
        total = total + term.scale(bernoulli_fn(i) * inverse_factorial(i))
        term = bracket(z, term)
        i += 1
    return total


def model_s0(order: int) -> DifferentialModel:
    """(L(u), d) with du = -1/2[u, u] = -u⊗u."""
    require_model_order(order)
    return DifferentialModel('s0', S0_ALPHABET, order, {'u': flat_differential(S0_ALPHABET, 'u', order)})


def ls_dz(order: int, bernoulli_fn: BernoulliSource = bernoulli) -> Series:
    """dz = [z, b] + sum_i B_i/i! ad_z^i(b - a)."""
    a = Series.letter(LS_ALPHABET, 'a', order)
    b = Series.letter(LS_ALPHABET, 'b', order)
    z = Series.letter(LS_ALPHABET, 'z', order)
    return bracket(z, b) + bernoulli_ad_series(z, b - a, bernoulli_fn)


def model_ls(order: int, bernoulli_fn: BernoulliSource = bernoulli) -> DifferentialModel:
    """The Lawrence-Sullivan construction: a, b flat, z carrying the Bernoulli series.

    ``bernoulli_fn`` exists for mutation tests; the real model uses B_1 = -1/2.
    """
    require_model_order(order)
    images = {
        'a': flat_differential(LS_ALPHABET, 'a', order),
        'b': flat_differential(LS_ALPHABET, 'b', order),
        'z': ls_dz(order, bernoulli_fn),
    }
    logger.debug("materialized LS differential at order %d (%d terms in dz)", order, len(images['z']))
    return DifferentialModel('ls', LS_ALPHABET, order, images)


def dz_alternative(order: int) -> Series:
    """dz written as ad_z(b) + f_z^{-1}(b - a)."""
    from .gauge import op_f_inv

    require_model_order(order)
    a = Series.letter(LS_ALPHABET, 'a', order)
    b = Series.letter(LS_ALPHABET, 'b', order)
    z = Series.letter(LS_ALPHABET, 'z', order)
    return bracket(z, b) + op_f_inv(z, b - a)


def model_interval(order: int, bernoulli_fn: BernoulliSource = bernoulli) -> DifferentialModel:
    """The cofibre of L(b) -> LS: generators a (flat) and z with dz = -sum B_i/i! ad_z^i(a)."""
    require_model_order(order)
    a = Series.letter(INTERVAL_ALPHABET, 'a', order)
    z = Series.letter(INTERVAL_ALPHABET, 'z', order)
    images = {
        'a': flat_differential(INTERVAL_ALPHABET, 'a', order),
        'z': -bernoulli_ad_series(z, a, bernoulli_fn),
    }
    return DifferentialModel('interval', INTERVAL_ALPHABET, order, images)


def model_probe(order: int) -> DifferentialModel:
    """A free flat generator v next to a cycle x and a generator t with dt = x.

    Its degree-0 part (x, tv, vt, xtv, ...) is richer than powers of one
    letter, and dt != 0 makes the gauge term f_w(dw) nontrivial.
    """
    require_model_order(order)
    images = {
        'v': flat_differential(PROBE_ALPHABET, 'v', order),
        't': Series.letter(PROBE_ALPHABET, 'x', order),
    }
    return DifferentialModel('probe', PROBE_ALPHABET, order, images)


def quotient_morphism(order: int) -> AlgebraMorphism:
    """LS -> interval killing b."""
    return AlgebraMorphism(LS_ALPHABET, INTERVAL_ALPHABET, {
        'a': Series.letter(INTERVAL_ALPHABET, 'a', order),
        'b': Series.zero(INTERVAL_ALPHABET, order),
        'z': Series.letter(INTERVAL_ALPHABET, 'z', order),
    })


def swap_morphism(order: int) -> AlgebraMorphism:
    """LS -> LS exchanging a and b; not a chain map."""
    return AlgebraMorphism(LS_ALPHABET, LS_ALPHABET, {
        'a': Series.letter(LS_ALPHABET, 'b', order),
        'b': Series.letter(LS_ALPHABET, 'a', order),
        'z': Series.letter(LS_ALPHABET, 'z', order),
    })


@dataclass(frozen=True)
class FailurePoint:
    generator: str
    word: Word
    word_text: str
    coefficient: Fraction

    @property
    def location(self) -> str:
        return f"{self.generator}:{self.word_text}"


@dataclass(frozen=True)
class ResidualReport:
    """Per-generator residual series; passes iff every residual vanishes."""
    title: str
    order: int
    residuals: Tuple[Tuple[str, Series], ...]

    @property
    def passed(self) -> bool:
        return all(not residual for _, residual in self.residuals)

    def residual(self, generator: str) -> Series:
        return dict(self.residuals)[generator]

    def first_failure(self) -> Optional[FailurePoint]:
        for generator, residual in self.residuals:
            word = residual.first_word()
            if word is not None:
                return FailurePoint(
                    generator, word, residual.alphabet.word_text(word), residual.coefficient(word),
                )
        return None

    @classmethod
    def difference(cls, title: str, label: str, actual: Series, expected: Series) -> 'ResidualReport':
        order = min(actual.order, expected.order)
        return cls(title, order, ((label, (actual - expected).truncate(order)),))


def d_squared_report(model: DifferentialModel) -> ResidualReport:
    """derive(d, d(g)) for every generator g."""
    residuals: List[Tuple[str, Series]] = []
    for generator in model.alphabet:
        residuals.append((generator.name, model.apply(model.d(generator.name))))
    report = ResidualReport(f"d^2 in {model.name}", model.order, tuple(residuals))
    if not report.passed:
        logger.warning("d^2 != 0 in %s at %s", model.name, report.first_failure().location)
    return report


def chain_map_check(f: AlgebraMorphism, src: DifferentialModel, tgt: DifferentialModel) -> ResidualReport:
    """f(d_src g) - d_tgt(f g) for every source generator g."""
    if f.source != src.alphabet:
        raise AlphabetMismatch(f"morphism source {f.source!r} is not the alphabet of {src.name}")
    if f.target != tgt.alphabet:
        raise AlphabetMismatch(f"morphism target {f.target!r} is not the alphabet of {tgt.name}")
    order = min(src.order, tgt.order, f.order)
    residuals = []
    for generator in src.alphabet:
        pushed = morph(f, src.d(generator.name))
        pulled = tgt.apply(f.image(generator.name))
        residuals.append((generator.name, (pushed - pulled).truncate(order)))
    return ResidualReport(f"chain map {src.name} -> {tgt.name}", order, tuple(residuals))
