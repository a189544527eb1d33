# Copyright: (c) 2026, Quantum Geometry Maintainers
# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import logging
import re
import traceback
from fractions import Fraction
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.logging_handler \
    import CustomRotatingFileHandler
from ansible.module_utils.basic import missing_required_lib

"""importing sympy"""
try:
    import sympy  # noqa   # pylint: disable=unused-import
    HAS_SYMPY, SYMPY_IMP_ERR = True, None
except ImportError:
    HAS_SYMPY, SYMPY_IMP_ERR = False, traceback.format_exc()


DEFAULT_DEGREE_CAP = 12
DEFAULT_MAX_DEGREE = 6
DEFAULT_N_VALUES = (2, 3)
SUPPORTED_N_VALUES = (1, 2, 3, 4)
SPOT_Q = Fraction(1, 2)


class QuantumAlgebraError(Exception):
    """Base class of every error raised by the algebra libraries"""


class ConfigurationError(QuantumAlgebraError):
    """Invalid rank, generator index, suite name or bound"""


class DomainError(ConfigurationError):
    """Value outside the domain of an operation, such as q0 = 0"""


class ExpressionParseError(QuantumAlgebraError):
    """Syntax error in an expression, with the 0-based offset of the fault"""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DegreeCapExceeded(QuantumAlgebraError):
    """A word longer than the configured degree guard reached the rewriter"""


class PowerTooLarge(ExpressionParseError, DegreeCapExceeded):
    """A power in an expression whose expansion would pass the degree guard"""


class RewritingFuelExhausted(QuantumAlgebraError):
    """The rewrite chain of a single word ran past its fuel"""


class MembershipError(QuantumAlgebraError):
    """An element is not in the subspace an operation requires"""


class FunctionalDomainError(QuantumAlgebraError):
    """A functional was evaluated on a tensor it holds no value for"""


class NotATwistError(QuantumAlgebraError):
    """A functional failed the twist axioms where a twist is required"""


def get_algebroid_common_parameters():
    """Provides common parameters required for the
    ansible modules working on the quantum sphere algebra"""

    return dict(
        n=dict(type='int', required=False, default=2),
        max_degree=dict(type='int', required=False, default=DEFAULT_DEGREE_CAP)
    )


def ensure_required_libs(module):
    """Check required libraries"""

    if not HAS_SYMPY:
        module.fail_json(msg=missing_required_lib("sympy"),
                         exception=SYMPY_IMP_ERR)


def get_logger(module_name, log_file_name='ansible_algebroid.log', log_devel=logging.INFO):
    """
    Initialize logger and return the logger object.
    :param module_name: Name of module to be part of log message
    :param log_file_name: Name of file in which the log messages get appended
    :param log_devel: Log level
    :return LOG object
    """
    FORMAT = '%(asctime)-15s %(filename)s %(levelname)s : %(message)s'
    max_bytes = 5 * 1024 * 1024
    LOG = logging.getLogger(module_name)
    LOG.setLevel(log_devel)
    if not LOG.handlers:
        handler = CustomRotatingFileHandler(log_file_name, maxBytes=max_bytes, backupCount=5)
        formatter = logging.Formatter(FORMAT)
        handler.setFormatter(formatter)
        LOG.addHandler(handler)
    LOG.propagate = False
    return LOG


def validate_rank(n):
    """Validate the rank n of the sphere algebra"""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ConfigurationError(f"Rank n must be a positive integer, got {n!r}")
    return n


def validate_index(index, n, label="index"):
    """Validate a generator index against the rank"""
    if not isinstance(index, int) or not 1 <= index <= n:
        raise ConfigurationError(
            f"Generator {label} {index!r} is out of range 1..{n}")
    return index


def validate_degree_cap(max_degree):
    if not isinstance(max_degree, int) or max_degree < 2 or max_degree > DEFAULT_DEGREE_CAP:
        raise ConfigurationError(
            f"Degree bound must lie in 2..{DEFAULT_DEGREE_CAP}, got {max_degree!r}")
    return max_degree


def parse_rational(text):
    """Convert text such as '2/3' or '-1' to a Fraction"""

    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    match = re.fullmatch(r'\s*(-?\d+)(?:\s*/\s*(\d+))?\s*', str(text))
    if not match or (match.group(2) is not None and int(match.group(2)) == 0):
        raise ConfigurationError(f"Invalid rational value {text!r}")
    denominator = int(match.group(2)) if match.group(2) else 1
    return Fraction(int(match.group(1)), denominator)


def parse_nonzero_q(text):
    q_value = parse_rational(text)
    if q_value == 0:
        raise DomainError("q must be nonzero for spot evaluation")
    return q_value


def split_list(value):
    """Accept a comma separated string or a list and return a list of stripped strings"""

    if value is None:
        return []
    if isinstance(value, (list, tuple)):
        items = []
        for item in value:
            items.extend(split_list(item) if isinstance(item, str) else [item])
        return items
    return [part.strip() for part in str(value).split(',') if part.strip()]


def parse_n_values(value):
    """Parse the list of ranks to verify"""

    n_values = []
    for item in split_list(value):
        try:
            n = int(item)
        except (TypeError, ValueError):
            raise ConfigurationError(f"Invalid rank {item!r}")
        if n not in SUPPORTED_N_VALUES:
            raise ConfigurationError(
                f"Rank {n} is not supported, choose from {list(SUPPORTED_N_VALUES)}")
        if n not in n_values:
            n_values.append(n)
    if not n_values:
        raise ConfigurationError("At least one rank must be given")
    return n_values


def format_rational(value):
    """Render a Fraction the way the expression grammar reads it"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
