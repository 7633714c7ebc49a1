"""
Truncated noncommutative formal series with exact coefficients.

A Series over an Alphabet is a finite map from words (tuples of generator
indices) to nonzero Fractions, together with a truncation order N: only
words of length <= N are kept, and every operation discards longer words.
Truncation is by word length, never by degree, because degree-0 letters
(z, su) would otherwise make a single degree infinitely long.

The words of length > N span a two-sided ideal, and every derivation and
morphism used here has constant-free generator images, so the truncated
algebra is itself a DGA: an identity that holds in the completed tensor
algebra holds exactly "through order N" here. That is also why the local
nilpotency hypotheses on ad_x never need checking; every operator series
below is a finite sum at fixed order.

Lie elements are represented by their tensor-algebra images, with the
graded commutator [s, t] = st - (-1)^{|s||t|} ts computed per pair of
homogeneous words.
"""
import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .exceptions import AlphabetMismatch, ConstantTermError, DegreeError, DomainError

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int

    def __str__(self):
        return self.name


class Alphabet:
    """An ordered, nonempty list of generators with unique names.

    The order fixes the canonical word ordering: length first, then
    lexicographic on generator indices.
    """

    __slots__ = ('generators', 'degrees', '_index')

    def __init__(self, generators: Iterable[Generator]):
        generators = tuple(generators)
        if not generators:
            raise DomainError("an alphabet needs at least one generator")
        index = {}
        for i, generator in enumerate(generators):
            if generator.name in index:
                raise DomainError(f"duplicate generator name {generator.name!r}")
            index[generator.name] = i
        self.generators = generators
        self.degrees = tuple(g.degree for g in generators)
        self._index = index

    @classmethod
    def of(cls, *pairs: Tuple[str, int]) -> 'Alphabet':
        return cls(Generator(name, degree) for name, degree in pairs)

    def __eq__(self, other):
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, name):
        return name in self._index

    def __repr__(self):
        letters = ', '.join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"Alphabet({letters})"

    @property
    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise DomainError(f"unknown generator {name!r} in {self!r}") from None

    def generator(self, name: str) -> Generator:
        return self.generators[self.index(name)]

    def word(self, names: Sequence[str]) -> Word:
        return tuple(self.index(name) for name in names)

    def word_names(self, word: Word) -> List[str]:
        return [self.generators[i].name for i in word]

    def word_degree(self, word: Word) -> int:
        degrees = self.degrees
        return sum(degrees[i] for i in word)

    def word_text(self, word: Word) -> str:
        if not word:
            return "1"
        return "⊗".join(self.word_names(word))


def _canonical_key(word: Word):
    return (len(word), word)


def _clean(acc: Mapping[Word, Fraction]) -> Dict[Word, Fraction]:
    return {w: c for w, c in acc.items() if c}


def _scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"series coefficients must be int or Fraction, not {type(value).__name__}")


class Series:
    """An element of the free tensor algebra truncated at word length ``order``."""

    __slots__ = ('alphabet', 'order', '_terms', '_buckets')

    def __init__(self, alphabet: Alphabet, order: int, terms: Optional[Mapping[Word, object]] = None):
        if order < 0:
            raise DomainError(f"truncation order must be >= 0, got {order}")
        cleaned = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            if len(word) > order:
                continue
            coeff = _scalar(coeff)
            if coeff:
                cleaned[word] = coeff
        self.alphabet = alphabet
        self.order = order
        self._terms = cleaned
        self._buckets = None

    @classmethod
    def _wrap(cls, alphabet, order, terms):
        # terms are already clean and within the order
        series = cls.__new__(cls)
        series.alphabet = alphabet
        series.order = order
        series._terms = terms
        series._buckets = None
        return series

    # constructors

    @classmethod
    def zero(cls, alphabet: Alphabet, order: int) -> 'Series':
        return cls(alphabet, order)

    @classmethod
    def one(cls, alphabet: Alphabet, order: int) -> 'Series':
        return cls(alphabet, order, {EMPTY_WORD: 1})

    @classmethod
    def letter(cls, alphabet: Alphabet, name: str, order: int) -> 'Series':
        return cls(alphabet, order, {(alphabet.index(name),): 1})

    @classmethod
    def word(cls, alphabet: Alphabet, names: Sequence[str], order: int, coeff=1) -> 'Series':
        return cls(alphabet, order, {alphabet.word(names): coeff})

    @classmethod
    def from_names(cls, alphabet: Alphabet, order: int, terms: Mapping[Sequence[str], object]) -> 'Series':
        return cls(alphabet, order, {alphabet.word(names): c for names, c in terms.items()})

    # inspection

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, word) -> Fraction:
        if word and isinstance(word[0], str):
            word = self.alphabet.word(word)
        return self._terms.get(tuple(word), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get(EMPTY_WORD, Fraction(0))

    def words(self) -> List[Word]:
        return sorted(self._terms, key=_canonical_key)

    def items(self) -> List[Tuple[Word, Fraction]]:
        return [(w, self._terms[w]) for w in self.words()]

    def first_word(self) -> Optional[Word]:
        if not self._terms:
            return None
        return min(self._terms, key=_canonical_key)

    def min_length(self) -> Optional[int]:
        if not self._terms:
            return None
        return min(len(w) for w in self._terms)

    def _by_length(self) -> Dict[int, List[Tuple[Word, Fraction]]]:
        if self._buckets is None:
            buckets = defaultdict(list)
            for w, c in self._terms.items():
                buckets[len(w)].append((w, c))
            self._buckets = dict(buckets)
        return self._buckets

    def homogeneous_components(self) -> Dict[int, 'Series']:
        parts = defaultdict(dict)
        for w, c in self._terms.items():
            parts[self.alphabet.word_degree(w)][w] = c
        return {d: Series._wrap(self.alphabet, self.order, t) for d, t in sorted(parts.items())}

    def degrees(self) -> List[int]:
        return sorted({self.alphabet.word_degree(w) for w in self._terms})

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        """True when all words share one degree (equal to ``degree`` if given).

        The zero series is homogeneous of every degree.
        """
        found = self.degrees()
        if not found:
            return True
        if len(found) > 1:
            return False
        return degree is None or found[0] == degree

    def homogeneous_degree(self) -> Optional[int]:
        found = self.degrees()
        if len(found) > 1:
            raise DegreeError(f"series is not homogeneous (degrees {found})")
        return found[0] if found else None

    def require_degree(self, degree: int, what: str = "series") -> 'Series':
        if not self.is_homogeneous(degree):
            raise DegreeError(f"{what} must be homogeneous of degree {degree}, has degrees {self.degrees()}")
        return self

    # truncation and filtering

    def truncate(self, order: int) -> 'Series':
        if order > self.order:
            raise DomainError(f"cannot raise truncation order from {self.order} to {order}")
        return Series._wrap(self.alphabet, order, {w: c for w, c in self._terms.items() if len(w) <= order})

    def restrict(self, predicate: Callable[[Word], bool]) -> 'Series':
        return Series._wrap(self.alphabet, self.order, {w: c for w, c in self._terms.items() if predicate(w)})

    def without_constant(self) -> 'Series':
        return self.restrict(lambda w: len(w) > 0)

    def agrees_with(self, other: 'Series', through: Optional[int] = None) -> bool:
        """Coefficient maps agree on every word of length <= ``through``."""
        _check_alphabets(self, other)
        limit = min(self.order, other.order) if through is None else through
        mine = {w: c for w, c in self._terms.items() if len(w) <= limit}
        theirs = {w: c for w, c in other._terms.items() if len(w) <= limit}
        return mine == theirs

    # arithmetic

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.alphabet != other.alphabet:
            return False
        return self.agrees_with(other)

    __hash__ = None

    def __neg__(self):
        return Series._wrap(self.alphabet, self.order, {w: -c for w, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return _linear_combination(self, 1, other, 1)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return _linear_combination(self, 1, other, -1)

    def __mul__(self, other):
        if isinstance(other, Series):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Series):
            return product(other, self)
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(1 / _scalar(other))

    def scale(self, factor) -> 'Series':
        factor = _scalar(factor)
        if not factor:
            return Series.zero(self.alphabet, self.order)
        return Series._wrap(self.alphabet, self.order, {w: factor * c for w, c in self._terms.items()})

    # rendering

    def text(self) -> str:
        """Canonical text: terms sorted length-lex, each as ``coeff·g1⊗g2``."""
        if not self._terms:
            return "0"
        return " + ".join(f"{c}·{self.alphabet.word_text(w)}" for w, c in self.items())

    def records(self) -> List[dict]:
        """Canonical structured rendering: ``[{word: [names], coeff: "p/q"}]``."""
        return [{'word': self.alphabet.word_names(w), 'coeff': str(c)} for w, c in self.items()]

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"Series(order={self.order}, {self.text()})"


def _check_alphabets(s: Series, t: Series) -> None:
    if s.alphabet != t.alphabet:
        raise AlphabetMismatch(f"{s.alphabet!r} != {t.alphabet!r}")


def _linear_combination(s: Series, a, t: Series, b) -> Series:
    _check_alphabets(s, t)
    order = min(s.order, t.order)
    acc = defaultdict(Fraction)
    for w, c in s._terms.items():
        if len(w) <= order:
            acc[w] += a * c
    for w, c in t._terms.items():
        if len(w) <= order:
            acc[w] += b * c
    return Series._wrap(s.alphabet, order, _clean(acc))


def series_sum(parts: Iterable[Series], alphabet: Alphabet, order: int) -> Series:
    total = Series.zero(alphabet, order)
    for part in parts:
        total = total + part
    return total


def product(s: Series, t: Series) -> Series:
    """Concatenation product truncated at min(order(s), order(t))."""
    _check_alphabets(s, t)
    order = min(s.order, t.order)
    buckets = t._by_length()
    acc = defaultdict(Fraction)
    for v, c in s._terms.items():
        room = order - len(v)
        for length in range(room + 1):
            for w, d in buckets.get(length, ()):
                acc[v + w] += c * d
    return Series._wrap(s.alphabet, order, _clean(acc))


def bracket(s: Series, t: Series) -> Series:
    """Graded commutator, with the Koszul sign taken per pair of words."""
    _check_alphabets(s, t)
    order = min(s.order, t.order)
    alphabet = s.alphabet
    buckets = t._by_length()
    acc = defaultdict(Fraction)
    degree_cache = {}
    for v, c in s._terms.items():
        room = order - len(v)
        if room < 0:
            continue
        dv = alphabet.word_degree(v)
        for length in range(room + 1):
            for w, d in buckets.get(length, ()):
                dw = degree_cache.get(w)
                if dw is None:
                    dw = degree_cache[w] = alphabet.word_degree(w)
                cd = c * d
                acc[v + w] += cd
                if (dv * dw) % 2:
                    acc[w + v] += cd
                else:
                    acc[w + v] -= cd
    result = _clean(acc)
    assert EMPTY_WORD not in result, "a commutator produced a constant term"
    return Series._wrap(alphabet, order, result)


def ad_pow(x: Series, n: int, y: Series) -> Series:
    """The n-fold iterated bracket [x, [x, ..., [x, y]...]]."""
    if n < 0:
        raise DomainError(f"ad_pow requires n >= 0, got {n}")
    _check_alphabets(x, y)
    result = y
    for _ in range(n):
        if not result:
            break
        result = bracket(x, result)
    return result


def _require_constant_free(s: Series, what: str) -> None:
    if s.constant_term:
        raise ConstantTermError(f"{what} needs a constant-free series, constant term is {s.constant_term}")


def exp(s: Series) -> Series:
    """sum_{n>=0} s^n / n! through the order of ``s``."""
    _require_constant_free(s, "exp")
    result = term = Series.one(s.alphabet, s.order)
    for n in range(1, s.order + 1):
        term = product(term, s).scale(Fraction(1, n))
        if not term:
            break
        result = result + term
    return result


def log1p(s: Series) -> Series:
    """sum_{n>=1} (-1)^{n-1} s^n / n through the order of ``s``."""
    _require_constant_free(s, "log1p")
    result = power = s
    for n in range(2, s.order + 1):
        power = product(power, s)
        if not power:
            break
        result = result + power.scale(Fraction((-1) ** (n - 1), n))
    return result


class Derivation:
    """A derivation of the given degree, determined by its generator images.

    Extension to words follows the graded Leibniz rule
    D(vw) = D(v) w + (-1)^{deg(D) deg(v)} v D(w).
    Images must be constant-free so that D never shortens a word.
    """

    def __init__(self, alphabet: Alphabet, degree: int, images: Mapping[str, Series], order: Optional[int] = None):
        images = dict(images)
        for name, image in images.items():
            alphabet.index(name)
            if image.alphabet != alphabet:
                raise AlphabetMismatch(f"image of {name!r} lives over {image.alphabet!r}")
            _require_constant_free(image, f"derivation image of {name!r}")
        if order is None:
            if not images:
                raise DomainError("a derivation without images needs an explicit order")
            order = min(image.order for image in images.values())
        self.alphabet = alphabet
        self.degree = degree
        self.order = order
        self._images = {
            g.name: (images[g.name].truncate(order) if g.name in images else Series.zero(alphabet, order))
            for g in alphabet
        }
        self._image_terms = [
            sorted(self._images[g.name].terms.items(), key=lambda item: len(item[0]))
            for g in alphabet
        ]

    def image(self, name: str) -> Series:
        self.alphabet.index(name)
        return self._images[name]

    @property
    def images(self) -> Dict[str, Series]:
        return dict(self._images)

    def with_image(self, name: str, image: Series) -> 'Derivation':
        images = self.images
        images[name] = image
        return Derivation(self.alphabet, self.degree, images, order=min(self.order, image.order))

    def degree_violations(self) -> List[str]:
        """Generators whose image is not homogeneous of degree deg(g) + deg(D)."""
        return [
            g.name for g in self.alphabet
            if not self._images[g.name].is_homogeneous(g.degree + self.degree)
        ]

    def __call__(self, s: Series) -> Series:
        return derive(self, s)


def derive(derivation: Derivation, s: Series) -> Series:
    """Apply a derivation through min(order(s), order(D))."""
    if derivation.alphabet != s.alphabet:
        raise AlphabetMismatch(f"derivation over {derivation.alphabet!r} applied to {s.alphabet!r}")
    order = min(s.order, derivation.order)
    degrees = s.alphabet.degrees
    odd = derivation.degree % 2 == 1
    images = derivation._image_terms
    acc = defaultdict(Fraction)
    for word, c in s._terms.items():
        length = len(word)
        if length > order:
            continue
        room = order - length + 1
        prefix_degree = 0
        for i, letter in enumerate(word):
            coeff = -c if (odd and prefix_degree % 2) else c
            head, tail = word[:i], word[i + 1:]
            for v, e in images[letter]:
                if len(v) > room:
                    break
                acc[head + v + tail] += coeff * e
            prefix_degree += degrees[letter]
    return Series._wrap(s.alphabet, order, _clean(acc))


class AlgebraMorphism:
    """A degree-preserving algebra morphism given on generators.

    Images are constant-free and homogeneous of their generator's degree;
    anything else is rejected here, at construction.
    """

    def __init__(self, source: Alphabet, target: Alphabet, images: Mapping[str, Series], order: Optional[int] = None):
        images = dict(images)
        for name in images:
            source.index(name)
        missing = [g.name for g in source if g.name not in images]
        if missing:
            raise DomainError(f"morphism has no image for {', '.join(missing)}")
        for g in source:
            image = images[g.name]
            if image.alphabet != target:
                raise AlphabetMismatch(f"image of {g.name!r} lives over {image.alphabet!r}, expected {target!r}")
            _require_constant_free(image, f"morphism image of {g.name!r}")
            image.require_degree(g.degree, f"image of {g.name!r}")
        if order is None:
            order = min(image.order for image in images.values())
        self.source = source
        self.target = target
        self.order = order
        self._images = {g.name: images[g.name].truncate(order) for g in source}
        self._by_index = [self._images[g.name] for g in source]

    @classmethod
    def identity(cls, alphabet: Alphabet, order: int) -> 'AlgebraMorphism':
        return cls(alphabet, alphabet, {g.name: Series.letter(alphabet, g.name, order) for g in alphabet})

    def image(self, name: str) -> Series:
        self.source.index(name)
        return self._images[name]

    @property
    def images(self) -> Dict[str, Series]:
        return dict(self._images)

    def compose(self, inner: 'AlgebraMorphism') -> 'AlgebraMorphism':
        """self ∘ inner."""
        if inner.target != self.source:
            raise AlphabetMismatch("cannot compose: inner target differs from outer source")
        return AlgebraMorphism(
            inner.source, self.target,
            {g.name: morph(self, inner.image(g.name)) for g in inner.source},
        )

    def __call__(self, s: Series) -> Series:
        return morph(self, s)


def morph(f: AlgebraMorphism, s: Series) -> Series:
    """Multiplicative-linear extension of ``f`` through min(order(s), order(f))."""
    if s.alphabet != f.source:
        raise AlphabetMismatch(f"morphism from {f.source!r} applied to {s.alphabet!r}")
    order = min(s.order, f.order)
    images = [image.truncate(order) for image in f._by_index]
    memo = {EMPTY_WORD: Series.one(f.target, order)}

    def image_of(word):
        found = memo.get(word)
        if found is None:
            found = memo[word] = product(image_of(word[:-1]), images[word[-1]])
        return found

    acc = defaultdict(Fraction)
    for word, c in s._terms.items():
        if len(word) > order:
            continue
        for w, d in image_of(word)._terms.items():
            acc[w] += c * d
    return Series._wrap(f.target, order, _clean(acc))


def words_of_degree(alphabet: Alphabet, degree: int, min_length: int, max_length: int) -> List[Word]:
    found = []
    for length in range(min_length, max_length + 1):
        for word in itertools.product(range(len(alphabet)), repeat=length):
            if alphabet.word_degree(word) == degree:
                found.append(word)
    return found


def random_series(rng, alphabet: Alphabet, degree: int, order: int, max_length: int = 3, terms: int = 3) -> Series:
    """A seeded random constant-free series, homogeneous of ``degree``."""
    pool = words_of_degree(alphabet, degree, 1, min(max_length, order))
    if not pool:
        return Series.zero(alphabet, order)
    chosen = rng.sample(pool, min(terms, len(pool)))
    coeffs = {}
    for word in chosen:
        numerator = rng.choice([-3, -2, -1, 1, 2, 3])
        coeffs[word] = Fraction(numerator, rng.randint(1, 4))
    return Series(alphabet, order, coeffs)
