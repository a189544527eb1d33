# Copyright: (c) 2026, Quantum Geometry Maintainers

# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Command line front end

    python -m ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.command_line \\
        verify --suite antipode-q,bohm-theorem --n 2,3 --q 1/2,2/3 --format structured

Exit codes: 0 every check passed, 1 a check failed, 2 usage, parse or
evaluation error, 3 inconclusive checks with --strict.
"""

from __future__ import (absolute_import, division, print_function)

__metaclass__ = type

import argparse
import sys

from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum \
    import utils
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.expression_parser \
    import normalize_expression, evaluate_expression
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.quantum_spaces \
    import SphereAlgebra
from ansible_collections.qgeometry.algebroid.plugins.module_utils.algebra.quantum.libraries.verification \
    import SuiteConfig, run_verification, SUITE_NAMES, EXIT_OK, EXIT_USAGE

LOG = utils.get_logger('command_line')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='algebroid',
        description="Exact computations on the quantum sphere, its projective space "
                    "and the gauge bialgebroid of the circle bundle")
    commands = parser.add_subparsers(dest='command', required=True)

    normalize = commands.add_parser('normalize', help="print the normal form of an expression")
    normalize.add_argument('expression')
    normalize.add_argument('--n', type=int, default=2, help="rank of the sphere (default 2)")
    normalize.add_argument('--max-degree', type=int, default=utils.DEFAULT_DEGREE_CAP,
                           help="longest word the rewriter accepts")

    evaluate = commands.add_parser('eval', help="evaluate an expression at a rational q")
    evaluate.add_argument('expression')
    evaluate.add_argument('--q', required=True, help="nonzero rational such as 1/2")
    evaluate.add_argument('--n', type=int, default=2, help="rank of the sphere (default 2)")
    evaluate.add_argument('--max-degree', type=int, default=utils.DEFAULT_DEGREE_CAP,
                          help="longest word the rewriter accepts")

    verify = commands.add_parser('verify', help="run verification suites")
    verify.add_argument('--suite', default='all',
                        help=f"comma separated list of {', '.join(SUITE_NAMES)} or all")
    verify.add_argument('--n', default=','.join(str(n) for n in utils.DEFAULT_N_VALUES),
                        help="comma separated ranks, each in 1..4")
    verify.add_argument('--max-degree', type=int, default=utils.DEFAULT_MAX_DEGREE)
    verify.add_argument('--q', default=None,
                        help="comma separated nonzero rationals; each adds a numeric rerun")
    verify.add_argument('--format', choices=['text', 'structured'], default='text')
    verify.add_argument('--workers', type=int, default=1)
    verify.add_argument('--strict', action='store_true',
                        help="exit with 3 when a check is inconclusive")
    return parser


def report_error(error, expression=None, stream=None):
    """Print an error to stderr; parse errors get a caret under the offending position"""
    stream = sys.stderr if stream is None else stream
    print(f"error: {error}", file=stream)
    position = getattr(error, 'position', None)
    if expression is not None and position is not None:
        print(f"  {expression}", file=stream)
        print(f"  {' ' * position}^", file=stream)
    return EXIT_USAGE


def cmd_normalize(args, out):
    sphere = SphereAlgebra(args.n, degree_cap=utils.validate_degree_cap(args.max_degree))
    print(normalize_expression(args.expression, sphere).render(), file=out)
    return EXIT_OK


def cmd_eval(args, out):
    sphere = SphereAlgebra(args.n, degree_cap=utils.validate_degree_cap(args.max_degree))
    print(evaluate_expression(args.expression, sphere, args.q).render(), file=out)
    return EXIT_OK


def cmd_verify(args, out):
    config = SuiteConfig.from_params(suites=args.suite, n_values=args.n, max_degree=args.max_degree,
                                     q_spots=args.q, workers=args.workers, strict=args.strict)
    run = run_verification(config)
    if args.format == 'structured':
        print(run.render_structured(), file=out)
    else:
        print(run.render_text(), file=out)
    return run.exit_code(strict=config.strict)


COMMANDS = {
    'normalize': cmd_normalize,
    'eval': cmd_eval,
    'verify': cmd_verify,
}


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except utils.QuantumAlgebraError as e:
        LOG.error("%s failed: %s", args.command, e)
        return report_error(e, getattr(args, 'expression', None), err)


if __name__ == '__main__':
    sys.exit(main())
