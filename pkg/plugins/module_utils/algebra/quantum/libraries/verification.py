# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Verification reports, suite configuration and the suite runner"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import json
import time
from concurrent.futures import ProcessPoolExecutor

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum \
    import utils

LOG = utils.get_logger('verification')

PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'
STATUSES = (PASS, FAIL, INCONCLUSIVE)

SUITE_NAMES = ('sphere', 'confluence', 'translation', 'coinvariants', 'bialgebroid',
               'antipode-q', 'antipode-flip', 'beta-lambda', 'right-coproduct',
               'twists', 'bohm-theorem', 'projections')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def render_value(value):
    if value is None:
        return ''
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(render_value(item) for item in value) + "]"
    if hasattr(value, 'render'):
        return value.render()
    if hasattr(value, 'denominator'):
        return utils.format_rational(value)
    return str(value)


class Check:

    def __init__(self, name, status, lhs='', rhs='', elapsed_ms=0.0):
        if status not in STATUSES:
            raise utils.ConfigurationError(f"Unknown check status {status!r}")
        self.name = name
        self.status = status
        self.lhs = lhs
        self.rhs = rhs
        self.elapsed_ms = elapsed_ms

    def to_dict(self):
        return dict(name=self.name, status=self.status, lhs=self.lhs, rhs=self.rhs)

    def __repr__(self):
        return f"Check({self.name!r}, {self.status!r})"


class VerificationReport:

    """Ordered list of checks for one suite at one rank"""

    def __init__(self, suite, n, q_value=None):
        self.suite = suite
        self.n = n
        self.q_value = q_value
        self.checks = []
        self.total_millis = 0.0
        self._started = time.perf_counter()

    def add(self, check):
        self.checks.append(check)
        return check

    def record(self, name, status, lhs='', rhs='', elapsed_ms=0.0):
        return self.add(Check(name, status, render_value(lhs), render_value(rhs), elapsed_ms))

    def _guarded(self, name, compute, judge):
        start = time.perf_counter()
        try:
            lhs, rhs, status = judge(compute())
        except (utils.DegreeCapExceeded, utils.RewritingFuelExhausted) as e:
            lhs, rhs, status = str(e), '', INCONCLUSIVE
        except utils.QuantumAlgebraError as e:
            LOG.error("Check %s raised: %s", name, e)
            lhs, rhs, status = f"error: {e}", '', FAIL
        except Exception as e:
            LOG.error("Check %s raised %s: %s", name, type(e).__name__, e)
            lhs, rhs, status = f"error: {type(e).__name__}: {e}", '', FAIL
        elapsed = (time.perf_counter() - start) * 1000.0
        return self.record(name, status, lhs, rhs, elapsed)

    def check(self, name, compute):
        """Run compute() -> (lhs, rhs) and pass when both sides are equal"""
        return self._guarded(name, compute,
                             lambda sides: (sides[0], sides[1], PASS if sides[0] == sides[1] else FAIL))

    def check_true(self, name, compute):
        """Run compute() -> (ok, lhs, rhs)"""
        return self._guarded(name, compute,
                             lambda result: (result[1], result[2], PASS if result[0] else FAIL))

    def merge(self, other, prefix=''):
        for check in other.checks:
            self.add(Check(prefix + check.name, check.status, check.lhs, check.rhs, check.elapsed_ms))
        return self

    @property
    def summary(self):
        counts = {status: 0 for status in STATUSES}
        for check in self.checks:
            counts[check.status] += 1
        return counts

    @property
    def passed(self):
        return self.summary[FAIL] == 0

    @property
    def has_inconclusive(self):
        return self.summary[INCONCLUSIVE] > 0

    def failures(self):
        return [check for check in self.checks if check.status == FAIL]

    def finish(self):
        self.total_millis = (time.perf_counter() - self._started) * 1000.0
        LOG.info("Suite %s n=%s q=%s finished: %s", self.suite, self.n,
                 render_value(self.q_value) or 'formal', self.summary)
        return self

    def to_dict(self):
        return dict(suite=self.suite, n=self.n,
                    q=render_value(self.q_value) if self.q_value is not None else None,
                    checks=[check.to_dict() for check in self.checks],
                    summary=self.summary,
                    timing=dict(totalMillis=round(self.total_millis, 3)))


class SuiteConfig:

    def __init__(self, suites=None, n_values=None, max_degree=utils.DEFAULT_MAX_DEGREE,
                 q_spots=None, workers=1, strict=False):
        self.suites = list(suites or SUITE_NAMES)
        self.n_values = list(n_values or utils.DEFAULT_N_VALUES)
        self.max_degree = max_degree
        self.q_spots = list(q_spots or [])
        self.workers = workers
        self.strict = strict
        self.validate()

    @classmethod
    def from_params(cls, suites=None, n_values=None, max_degree=None, q_spots=None,
                    workers=None, strict=False):
        """Build a configuration from raw module or command line values"""
        suite_names = utils.split_list(suites) or ['all']
        if 'all' in suite_names:
            suite_names = list(SUITE_NAMES)
        n_list = utils.parse_n_values(n_values) if n_values else list(utils.DEFAULT_N_VALUES)
        q_list = [utils.parse_nonzero_q(value) for value in utils.split_list(q_spots)]
        return cls(suites=suite_names, n_values=n_list,
                   max_degree=utils.DEFAULT_MAX_DEGREE if max_degree is None else max_degree,
                   q_spots=q_list, workers=1 if workers is None else workers, strict=strict)

    def validate(self):
        unknown = [name for name in self.suites if name not in SUITE_NAMES]
        if unknown:
            raise utils.ConfigurationError(
                f"Unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITE_NAMES)} or all")
        for n in self.n_values:
            if n not in utils.SUPPORTED_N_VALUES:
                raise utils.ConfigurationError(
                    f"Rank {n} is not supported, choose from {list(utils.SUPPORTED_N_VALUES)}")
        utils.validate_degree_cap(self.max_degree)
        for q_value in self.q_spots:
            if q_value == 0:
                raise utils.DomainError("Spot values of q must be nonzero")
        if not isinstance(self.workers, int) or self.workers < 1:
            raise utils.ConfigurationError(f"workers must be a positive integer, got {self.workers!r}")

    def tasks(self):
        """Suite runs in deterministic order: formal first, then each spot value"""
        return [(suite, n, q_value, self.max_degree)
                for q_value in [None] + self.q_spots
                for n in self.n_values
                for suite in self.suites]


def suite_runner(name):
    """Resolve a suite name to a callable (n, q_value, max_degree) -> report"""
    # Imported here: the suite modules import this one for their reports.
    from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries \
        import quantum_spaces, galois, algebroid, antipodes, twists

    runners = {
        'sphere': quantum_spaces.verify_sphere,
        'confluence': quantum_spaces.verify_confluence,
        'projections': quantum_spaces.verify_projections,
        'translation': galois.verify_translation_properties,
        'coinvariants': galois.verify_coinvariants,
        'bialgebroid': algebroid.verify_bialgebroid_axioms,
        'antipode-q': antipodes.verify_antipode_q,
        'antipode-flip': antipodes.verify_antipode_flip,
        'beta-lambda': antipodes.verify_beta_lambda,
        'right-coproduct': antipodes.verify_right_coprod_lemma,
        'twists': twists.verify_twists,
        'bohm-theorem': twists.verify_bohm_theorem,
    }
    if name not in runners:
        raise utils.ConfigurationError(f"Unknown suite {name!r}")
    return runners[name]


def run_suite_task(task):
    suite, n, q_value, max_degree = task
    LOG.info("Starting suite %s n=%s q=%s", suite, n, render_value(q_value) or 'formal')
    runner = suite_runner(suite)
    try:
        report = runner(n, q_value=q_value, max_degree=max_degree)
    except Exception as e:
        LOG.error("Suite %s n=%s could not be built: %s: %s", suite, n, type(e).__name__, e)
        report = VerificationReport(suite, n, q_value)
        status = INCONCLUSIVE if isinstance(e, (utils.DegreeCapExceeded, utils.RewritingFuelExhausted)) else FAIL
        report.record("suite setup", status, f"error: {type(e).__name__}: {e}")
    return report.finish()


class VerificationRun:

    def __init__(self, reports):
        self.reports = list(reports)

    @property
    def summary(self):
        totals = {status: 0 for status in STATUSES}
        for report in self.reports:
            for status, count in report.summary.items():
                totals[status] += count
        return totals

    def exit_code(self, strict=False):
        summary = self.summary
        if summary[FAIL]:
            return EXIT_FAILED
        if strict and summary[INCONCLUSIVE]:
            return EXIT_INCONCLUSIVE
        return EXIT_OK

    def to_dict(self):
        return dict(reports=[report.to_dict() for report in self.reports], summary=self.summary)

    def render_structured(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def render_text(self):
        lines = []
        for report in self.reports:
            q_label = render_value(report.q_value) if report.q_value is not None else 'formal'
            lines.append(f"== {report.suite} (n={report.n}, q={q_label}) ==")
            width = max((len(check.name) for check in report.checks), default=0)
            for check in report.checks:
                line = f"  {check.status.upper():<12} {check.name:<{width}}"
                if check.status != PASS:
                    line += f"  lhs: {check.lhs}  rhs: {check.rhs}"
                lines.append(line.rstrip())
            counts = report.summary
            lines.append(f"  -- {counts[PASS]} pass, {counts[FAIL]} fail, "
                         f"{counts[INCONCLUSIVE]} inconclusive ({report.total_millis:.0f} ms)")
        totals = self.summary
        lines.append(f"TOTAL: {totals[PASS]} pass, {totals[FAIL]} fail, {totals[INCONCLUSIVE]} inconclusive")
        return "\n".join(lines)


def run_verification(config):
    tasks = config.tasks()
    LOG.info("Running %s suite task(s) with %s worker(s)", len(tasks), config.workers)
    if config.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            reports = list(pool.map(run_suite_task, tasks))
    else:
        reports = [run_suite_task(task) for task in tasks]
    run = VerificationRun(reports)
    LOG.info("Verification finished: %s", run.summary)
    return run
