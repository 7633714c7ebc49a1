"""
Named verification checks and the runner that executes them.

Every check computes residuals that must vanish exactly and reports the first
offending word (or index tuple) in canonical order. Checks run in
declaration order, so report streams are deterministic.
"""
import logging
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

from django.conf import settings

from . import cylinder, dgl, gauge as gauge_ops
from .bch import bch_direct, bch_linear_ad, bch_linear_closed, bch_log, linear_part
from .exact import bernoulli
from .exceptions import DomainError
from .freeseries import Series, random_series
from .identities import (
    GenEulerVariant, c_coeff, eq4_residual, euler_residual, gen_euler_residual, recursion_residual,
)

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
BOTH_VARIANTS = 'both'
VARIANT_CHOICES = [variant.value for variant in GenEulerVariant] + [BOTH_VARIANTS]

MODEL_BUILDERS: Dict[str, Callable[[int], dgl.DifferentialModel]] = {
    's0': dgl.model_s0,
    'ls': dgl.model_ls,
    'interval': dgl.model_interval,
    'cyl': cylinder.cyl_classical,
    'cyl-perturbed': cylinder.cyl_perturbed,
    'probe': dgl.model_probe,
}


def build_model(name: str, order: int) -> dgl.DifferentialModel:
    try:
        builder = MODEL_BUILDERS[name]
    except KeyError:
        raise DomainError(f"unknown model {name!r}; known models: {', '.join(MODEL_BUILDERS)}") from None
    return builder(order)


@dataclass(frozen=True)
class FailureDetail:
    location: str
    expected: Fraction
    actual: Fraction


@dataclass
class CheckReport:
    check: str
    parameters: Dict[str, object]
    status: str
    first_failure: Optional[FailureDetail] = None
    elapsed_ms: float = 0.0
    note: str = ''

    @property
    def passed(self) -> bool:
        return self.status == PASS


def _residual_failure(report: dgl.ResidualReport, prefix: str = '') -> Optional[FailureDetail]:
    point = report.first_failure()
    if point is None:
        return None
    return FailureDetail(f"{prefix}{point.location}", Fraction(0), point.coefficient)


def _series_failure(label: str, residual: Series) -> Optional[FailureDetail]:
    word = residual.first_word()
    if word is None:
        return None
    return FailureDetail(f"{label}:{residual.alphabet.word_text(word)}", Fraction(0), residual.coefficient(word))


def _first(failures: Iterable[Optional[FailureDetail]]) -> Optional[FailureDetail]:
    # lazily, so later computations are skipped once something fails
    for failure in failures:
        if failure is not None:
            return failure
    return None


def _variant_note(failures: Dict[GenEulerVariant, Optional[FailureDetail]], passing: List[str]) -> str:
    parts = []
    for variant, failure in failures.items():
        if failure is None:
            parts.append(f"{variant.value} holds")
        else:
            parts.append(f"{variant.value} first fails at {failure.location} (got {failure.actual})")
    if passing:
        parts.append(
            f"passing: {', '.join(passing)}, the sign obtained by substituting c_(p,q) into the "
            "x^p y^2 x^q coefficient identity (eq4), which the gamma check derives from D^2 = 0"
        )
    return '; '.join(parts)


@dataclass(frozen=True)
class CheckSpec:
    name: str
    method: str
    parameters: tuple = field(default=('order',))


_REGISTRY: Dict[str, CheckSpec] = {}


def check(name: str, *parameters: str):
    """Register a CheckRunner method under ``name``; registration order is run order."""
    def decorator(method):
        _REGISTRY[name] = CheckSpec(name, method.__name__, parameters or ('order',))
        return method
    return decorator


def check_names() -> List[str]:
    return list(_REGISTRY)


class CheckRunner:
    """Runs named checks with options defaulting to the LSVERIFY settings."""

    def __init__(self, order: Optional[int] = None, max_n: Optional[int] = None, min_n: Optional[int] = None,
                 max_weight: Optional[int] = None, variant: Optional[str] = None,
                 samples: Optional[int] = None, seed: Optional[int] = None):
        conf = settings.LSVERIFY
        self.conf = conf
        self.order = order if order is not None else conf['DEFAULT_ORDER']
        self._max_n = max_n
        self._min_n = min_n
        self.max_weight = max_weight if max_weight is not None else conf['EQ4_MAX_WEIGHT']
        self.variant = getattr(variant, 'value', variant) or conf['GEN_EULER_VARIANT']
        if self.variant not in VARIANT_CHOICES:
            raise DomainError(f"unknown gen-euler variant {self.variant!r}; choose from {', '.join(VARIANT_CHOICES)}")
        self._notes: Dict[str, str] = {}
        self.samples = samples
        self.seed = seed if seed is not None else conf['RANDOM_SEED']

    def max_n(self, setting: str) -> int:
        return self._max_n if self._max_n is not None else self.conf[setting]

    def _parameters(self, spec: CheckSpec) -> Dict[str, object]:
        values = {
            'order': self.order,
            'max_weight': self.max_weight,
            'variant': self.variant,
            'seed': self.seed,
        }
        parameters = {}
        for key in spec.parameters:
            if key == 'max_n':
                parameters[key] = self.max_n(self._max_n_setting(spec.name))
            elif key == 'min_n':
                parameters[key] = self.min_n
            elif key == 'samples':
                parameters[key] = self.sample_count(spec.name)
            else:
                parameters[key] = values[key]
        return parameters

    @staticmethod
    def _max_n_setting(name: str) -> str:
        return {'euler': 'EULER_MAX_N', 'gen-euler': 'GEN_EULER_MAX_N'}.get(name, 'BERNOULLI_MAX_N')

    @property
    def min_n(self) -> int:
        return self._min_n if self._min_n is not None else self.conf['GEN_EULER_MIN_N']

    def sample_count(self, name: str) -> int:
        if self.samples is not None:
            return self.samples
        return self.conf['PROP1_SAMPLES'] if name == 'prop1' else self.conf['RANDOM_SAMPLES']

    def run(self, name: str) -> CheckReport:
        """
        Run one named check.

        Args:
            name: a registered check name, e.g. 'ls-d2'

        Returns:
            CheckReport with status, first failure and elapsed time
        """
        try:
            spec = _REGISTRY[name]
        except KeyError:
            raise DomainError(f"unknown check {name!r}") from None
        parameters = self._parameters(spec)
        logger.info("running %s with %s", name, parameters)
        self._notes.pop(name, None)
        started = time.perf_counter()
        failure = getattr(self, spec.method)()
        elapsed = (time.perf_counter() - started) * 1000
        report = CheckReport(
            check=name,
            parameters=parameters,
            status=FAIL if failure else PASS,
            first_failure=failure,
            elapsed_ms=round(elapsed, 3),
            note=self._notes.get(name) or self._note(name),
        )
        if failure:
            logger.warning("%s failed at %s", name, failure.location)
        return report

    def run_all(self) -> List[CheckReport]:
        return [self.run(name) for name in _REGISTRY]

    @staticmethod
    def _note(name: str) -> str:
        if name == 'projection':
            return 'chain-map identity and p∘i = id only; the quasi-isomorphism claim is not verified'
        return ''

    # models

    @check('ls-d2')
    def _check_ls_d2(self):
        return _residual_failure(dgl.d_squared_report(dgl.model_ls(self.order)))

    @check('interval-d2')
    def _check_interval_d2(self):
        return _residual_failure(dgl.d_squared_report(dgl.model_interval(self.order)))

    @check('s0-d2')
    def _check_s0_d2(self):
        return _residual_failure(dgl.d_squared_report(dgl.model_s0(self.order)))

    @check('dz-forms')
    def _check_dz_forms(self):
        report = dgl.ResidualReport.difference(
            'dz forms', 'z', dgl.dz_alternative(self.order), dgl.model_ls(self.order).d('z'),
        )
        return _residual_failure(report)

    @check('interval-quotient')
    def _check_interval_quotient(self):
        report = dgl.chain_map_check(
            dgl.quotient_morphism(self.order), dgl.model_ls(self.order), dgl.model_interval(self.order),
        )
        return _residual_failure(report)

    # gauge

    @check('mc')
    def _check_mc(self):
        witnesses = [('ls', 'a'), ('ls', 'b'), ('interval', 'a'), ('s0', 'u'), ('probe', 'v')]

        def failures():
            ls = dgl.model_ls(self.order)
            yield _series_failure('ls:0', gauge_ops.is_mc(ls, Series.zero(ls.alphabet, self.order)).residual)
            for model_name, generator in witnesses:
                model = build_model(model_name, self.order)
                result = gauge_ops.is_mc(model, model.generator(generator))
                yield _series_failure(f"{model_name}:{generator}", result.residual)

        return _first(failures())

    @check('ls-gauge')
    def _check_ls_gauge(self):
        ls = dgl.model_ls(self.order)

        def failures():
            moved = gauge_ops.gauge(ls, ls.generator('z'), ls.generator('b'))
            yield _series_failure('z*b-a', moved - ls.generator('a'))
            phi = gauge_ops.morphism_from_gauge(ls.generator('z'), ls.generator('b'), ls)
            yield _residual_failure(dgl.chain_map_check(phi, ls, ls), prefix='phi:')

        return _first(failures())

    def _probe_samples(self, count: int):
        """Seeded (x, a) pairs over the probe model: x of degree 0, a Maurer-Cartan."""
        rng = random.Random(self.seed)
        probe = dgl.model_probe(self.order)
        v = probe.generator('v')
        for k in range(count):
            x = random_series(rng, probe.alphabet, 0, probe.order)
            if k % 2:
                a = gauge_ops.gauge(probe, random_series(rng, probe.alphabet, 0, probe.order), v)
            else:
                a = v
            yield k, probe, x, a

    @check('gauge-mc', 'order', 'samples', 'seed')
    def _check_gauge_mc(self):
        def failures():
            ls = dgl.model_ls(self.order)
            yield _series_failure('ls:z*b', gauge_ops.is_mc(
                ls, gauge_ops.gauge(ls, ls.generator('z'), ls.generator('b'))).residual)
            for k, probe, x, a in self._probe_samples(self.sample_count('gauge-mc')):
                yield _series_failure(f"probe#{k}", gauge_ops.is_mc(probe, gauge_ops.gauge(probe, x, a)).residual)

        return _first(failures())

    @check('gauge-ode', 'order', 'samples', 'seed')
    def _check_gauge_ode(self):
        def compare(label, model, x, a):
            printed = gauge_ops.gauge_ode(model, x, a)
            flow = gauge_ops.gauge_ode(model, x, a, gauge_ops.PathOrientation.FLOW)
            yield _series_failure(f"{label}:t=0", printed.evaluate(0) - a)
            yield _series_failure(f"{label}:as-printed", printed.evaluate(1) - gauge_ops.gauge(model, -x, a))
            yield _series_failure(f"{label}:flow", flow.evaluate(1) - gauge_ops.gauge(model, x, a))

        def failures():
            ls = dgl.model_ls(self.order)
            yield from compare('ls', ls, ls.generator('z'), ls.generator('b'))
            for k, probe, x, a in self._probe_samples(self.sample_count('gauge-ode')):
                yield from compare(f"probe#{k}", probe, x, a)

        return _first(failures())

    @check('prop1', 'order', 'samples', 'seed')
    def _check_prop1(self):
        def failures():
            ls = dgl.model_ls(self.order)
            zero = Series.zero(ls.alphabet, ls.order)
            for w, v, label in ((ls.generator('z'), ls.generator('b'), 'ls:z,b'),
                                (zero, ls.generator('a'), 'ls:0,a')):
                phi = gauge_ops.morphism_from_gauge(w, v, ls)
                yield _residual_failure(dgl.chain_map_check(phi, ls, ls), prefix=f"{label}:")
            for k, probe, w, v in self._probe_samples(self.sample_count('prop1')):
                phi = gauge_ops.morphism_from_gauge(w, v, probe)
                yield _residual_failure(dgl.chain_map_check(phi, ls, probe), prefix=f"probe#{k}:")

        return _first(failures())

    # cylinder

    @check('cylinder-d2')
    def _check_cylinder_d2(self):
        return _residual_failure(dgl.d_squared_report(cylinder.cyl_perturbed(self.order)))

    @check('classical-cyl-d2')
    def _check_classical_cyl_d2(self):
        return _residual_failure(dgl.d_squared_report(cylinder.cyl_classical(max(self.order, 3))))

    @check('theorem1')
    def _check_theorem1(self):
        return _residual_failure(cylinder.theorem1_check(self.order))

    def _cylinders(self):
        return (cylinder.cyl_classical(max(self.order, 3)), cylinder.cyl_perturbed(self.order))

    @check('inclusions')
    def _check_inclusions(self):
        return _first(
            _residual_failure(report, prefix=f"{cyl.name}:i{end}:")
            for cyl in self._cylinders()
            for end, report in enumerate(cylinder.cylinder_maps_report(cyl)[:2])
        )

    @check('projection')
    def _check_projection(self):
        def failures():
            for cyl in self._cylinders():
                yield _residual_failure(cylinder.cylinder_maps_report(cyl)[2], prefix=f"{cyl.name}:p:")
            if not cylinder.projection_retracts(self.order):
                yield FailureDetail('p∘i', Fraction(0), Fraction(1))

        return _first(failures())

    @check('su-powers')
    def _check_su_powers(self):
        return _first(
            _series_failure(f"su^{m}", cylinder.su_power_defect(m, self.order))
            for m in range(1, self.conf['SU_POWER_MAX'] + 1)
        )

    # BCH

    @check('bch-cross')
    def _check_bch_cross(self):
        return _series_failure('direct-log', bch_direct(self.order) - bch_log(self.order))

    @check('bch-linear')
    def _check_bch_linear(self):
        closed = bch_linear_closed(self.order)
        return _first((
            _series_failure('log-closed', linear_part(bch_log(self.order), 'y') - closed),
            _series_failure('ad-closed', bch_linear_ad(self.order) - closed),
        ))

    @check('corollary')
    def _check_corollary(self):
        return _residual_failure(cylinder.corollary_substitution(self.order))

    @check('eq2')
    def _check_eq2(self):
        return _series_failure('eq2', cylinder.eq2_residual(self.order))

    @check('gamma')
    def _check_gamma(self):
        return _series_failure('gamma', cylinder.gamma_residual(self.order))

    # Bernoulli identities

    @check('eq4', 'max_weight')
    def _check_eq4(self):
        return _first(
            self._scalar_failure(f"(p,q)=({p},{weight - p})", eq4_residual(p, weight - p))
            for weight in range(self.max_weight + 1)
            for p in range(weight + 1)
        )

    @check('recursion', 'max_n')
    def _check_recursion(self):
        top = self.max_n('BERNOULLI_MAX_N')
        return _first(self._scalar_failure(f"n={n}", recursion_residual(n)) for n in range(1, top + 1))

    @check('euler', 'max_n')
    def _check_euler(self):
        top = self.max_n('EULER_MAX_N')
        return _first(self._scalar_failure(f"n={n}", euler_residual(n)) for n in range(4, top + 1, 2))

    @check('gen-euler', 'min_n', 'max_n', 'variant')
    def _check_gen_euler(self):
        """
        One variant, or with ``both`` each variant's status in the note.

        ``both`` fails when the eq4 coefficient identity fails on p+q+1 in range,
        when the variants disagree where their second sum is empty, or when
        neither variant holds.
        """
        if self.variant != BOTH_VARIANTS:
            return self._gen_euler_failure(GenEulerVariant(self.variant))
        eq4_failure = _first(
            self._scalar_failure(f"eq4:(p,q)=({p},{n - 1 - p})", eq4_residual(p, n - 1 - p))
            for n in self._gen_euler_ns()
            for p in range(n)
        )
        if eq4_failure:
            return eq4_failure
        for n, m in self._gen_euler_range():
            if n - m - 1 < 2:
                printed = gen_euler_residual(n, m, GenEulerVariant.AS_PRINTED)
                corrected = gen_euler_residual(n, m, GenEulerVariant.SUM_CORRECTED)
                if printed != corrected:
                    return FailureDetail(f"agreement:(n,m)=({n},{m})", corrected, printed)
        failures = {variant: self._gen_euler_failure(variant) for variant in GenEulerVariant}
        passing = [variant.value for variant, failure in failures.items() if failure is None]
        self._notes['gen-euler'] = _variant_note(failures, passing)
        if passing:
            return None
        failure = failures[GenEulerVariant.SUM_CORRECTED]
        return FailureDetail(f"sum-corrected:{failure.location}", failure.expected, failure.actual)

    def _gen_euler_ns(self):
        start = self.min_n + (self.min_n % 2)
        return range(start, self.max_n('GEN_EULER_MAX_N') + 1, 2)

    def _gen_euler_range(self):
        for n in self._gen_euler_ns():
            for m in range(n):
                yield n, m

    def _gen_euler_failure(self, variant: GenEulerVariant) -> Optional[FailureDetail]:
        return _first(
            self._scalar_failure(f"(n,m)=({n},{m})", gen_euler_residual(n, m, variant))
            for n, m in self._gen_euler_range()
        )

    @staticmethod
    def _scalar_failure(location: str, residual: Fraction) -> Optional[FailureDetail]:
        return FailureDetail(location, Fraction(0), residual) if residual else None

    # mutation sensitivity

    @check('mutation')
    def _check_mutation(self):
        """Each corrupted input must be caught; a mutation that passes is the failure."""
        order = self.order

        def flipped_b1(n):
            return -bernoulli(n) if n == 1 else bernoulli(n)

        def flipped_c10(p, q):
            return -c_coeff(p, q) if (p, q) == (1, 0) else c_coeff(p, q)

        mutations = [
            ('ls-b1', lambda: dgl.d_squared_report(dgl.model_ls(order, flipped_b1)).passed),
            ('swap-ab', lambda: dgl.chain_map_check(
                dgl.swap_morphism(order), dgl.model_ls(order), dgl.model_ls(order)).passed),
            ('theorem1-sign', lambda: cylinder.theorem1_check(order, sign=-1).passed),
            ('cyl-c10', lambda: dgl.d_squared_report(cylinder.cyl_perturbed(order, flipped_c10)).passed),
            ('gen-euler-as-printed', lambda: not gen_euler_residual(4, 0, GenEulerVariant.AS_PRINTED)),
        ]
        for label, survives in mutations:
            if survives():
                return FailureDetail(f"mutation:{label}", Fraction(1), Fraction(0))
        return None
