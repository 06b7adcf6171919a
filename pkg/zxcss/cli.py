# This file is part of zxcss.  The COPYRIGHT file at the top level of
# this repository contains the full copyright notices and license terms.
"""Command line interface.

Exit status is 0 on success, 1 when a dense verification fails and 2 on
usage or input errors.  Qubit and wire indices are 1-based.
"""
import argparse
import logging
import os
import random
import sys

from zxcss import __version__
from zxcss.catalog import CodeCatalog, get_code
from zxcss.code import BudgetExceeded, SubsystemCssCode, css_parameters
from zxcss.f2 import same_row_space
from zxcss.nf import (subsystem_xz_normal_form, subsystem_zx_normal_form,
                      xz_normal_form, zx_normal_form)
from zxcss.reporting import DOT, GRAPHML, default_repository
from zxcss.schema import code_from_json, diagram_to_json, to_json
from zxcss.sem import DEFAULT_TOL
from zxcss.xform import (VerificationError, eta_factorization, gauge_fix,
                         morph, parse_layer, push_through, switch,
                         verify_code, verify_rules)

logger = logging.getLogger(__name__)


def load_code(source):
    "a catalog name or the path of a code JSON file"
    if source.endswith('.json') or os.path.exists(source):
        with open(source, encoding='utf-8') as fp:
            return code_from_json(fp.read())
    return get_code(source)


def _subset(text):
    try:
        return sorted({int(q) for q in text.split(',') if q.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError('expected qubits such as 2,3,6,7')


def _write(path, payload):
    if isinstance(payload, bytes):
        with open(path, 'wb') as fp:
            fp.write(payload)
    else:
        with open(path, 'w', encoding='utf-8') as fp:
            fp.write(payload)
    logger.info('wrote %s', path)


def _export_diagram(args, diagram, title):
    repository = default_repository()
    if getattr(args, 'dot', None):
        _write(args.dot, repository.render(diagram, DOT, title=title))
    if getattr(args, 'graphml', None):
        _write(args.graphml, repository.render(diagram, GRAPHML,
                                               title=title))
    if getattr(args, 'json', None):
        _write(args.json, diagram_to_json(diagram) + '\n')


def _summary(diagram):
    return '%d spiders, %d inputs, %d outputs' % (
        len(diagram.spiders()), diagram.n_inputs, diagram.n_outputs)


def _verdict(flag, what):
    print('%s %s' % ('PASS' if flag else 'FAIL', what))
    return 0 if flag else 1


def cmd_code_list(args):
    for name in CodeCatalog.names():
        print('%-12s %s' % (name, CodeCatalog.descriptions.get(name, '')))
    return 0


def cmd_code_show(args):
    code = load_code(args.code)
    if args.json:
        print(to_json(code))
        return 0
    print(default_repository().render(code, with_distance=args.distance),
          end='')
    return 0


def cmd_nf(args):
    code = load_code(args.code)
    if args.form == 'subsystem':
        if not isinstance(code, SubsystemCssCode):
            raise ValueError('%s is not a subsystem code' % args.code)
        build = subsystem_zx_normal_form if args.color == 'zx' \
            else subsystem_xz_normal_form
        diagram = build(code, args.gauge)
    elif isinstance(code, SubsystemCssCode):
        raise ValueError('use --form subsystem for %s' % args.code)
    else:
        diagram = (zx_normal_form if args.form == 'zx'
                   else xz_normal_form)(code)
    print('%s normal form of %s: %s' % (args.form, code.name or args.code,
                                        _summary(diagram)))
    _export_diagram(args, diagram, '%s %s' % (code.name or 'code',
                                              args.form))
    return 0


def cmd_verify(args):
    report = verify_code(load_code(args.code), args.tol)
    print(default_repository().render(report), end='')
    return 0 if report.passed else 1


def cmd_push(args):
    code = load_code(args.code)
    layer = parse_layer(args.op)
    diagram = push_through(code, layer, tol=args.tol)
    print('physical implementation on %s: %s'
          % (code.name or args.code, _summary(diagram)))
    _export_diagram(args, diagram, 'push %s' % args.op)
    return _verdict(True, 'E L = P E')


def cmd_morph(args):
    code = load_code(args.code)
    result = morph(code, args.subset, form=args.form, tol=args.tol)
    if args.json:
        _write(args.json, to_json(result) + '\n')
    if args.emit:
        for part in ('child', 'morphed'):
            if args.emit in (part, 'both'):
                print(to_json(getattr(result, part)))
        return 0
    print(default_repository().render(result), end='')
    return 0


def cmd_gaugefix(args):
    code = load_code(args.code)
    if not isinstance(code, SubsystemCssCode):
        raise ValueError('%s is not a subsystem code' % args.code)
    result = gauge_fix(code, args.basis, args.outcomes, tol=args.tol)
    if args.json:
        _write(args.json, to_json(result) + '\n')
    print(default_repository().render(result), end='')
    return 0


def _fixed_basis(code, subsystem):
    for basis in ('X', 'Z'):
        fixed = subsystem.fix(basis)
        if fixed.n == code.n and same_row_space(fixed.G, code.G) \
                and same_row_space(fixed.H, code.H):
            return basis
    raise ValueError('%s is not a gauge fixing of %s'
                     % (code.name, subsystem.name))


def cmd_switch(args):
    subsystem = load_code(args.via)
    source, target = load_code(args.source), load_code(args.target)
    direction = _fixed_basis(target, subsystem)
    _fixed_basis(source, subsystem)
    steps = switch(source, direction, subsystem, outcomes=args.outcomes,
                   tol=args.tol)
    if args.json:
        _write(args.json, to_json(steps) + '\n')
    for number, step in enumerate(steps, 1):
        print('step %d: measure %s -> %d, apply %s, now %s'
              % (number, step.measured, step.outcome, step.recovery,
                 css_parameters(step.code, False)))
    return _verdict(all(step.verified for step in steps),
                    'switch from %s to %s in %d step(s)'
                    % (source.name, target.name, len(steps)))


def cmd_rules_check(args):
    report = verify_rules(args.samples, random.Random(args.seed), args.tol,
                          args.rule or None)
    print(default_repository().render(report), end='')
    return 0 if report.passed else 1


def cmd_eta_check(args):
    result = eta_factorization(load_code(args.big), load_code(args.small),
                               args.tol)
    if args.json:
        _write(args.json, to_json(result.eta) + '\n')
    print(default_repository().render(result), end='')
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog='zxcss',
        description='CSS encoders as ZX diagrams: normal forms, '
                    'verification, morphing and gauge fixing.')
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for progress, -vv for rewrite details')
    parser.add_argument('--tol', type=float, default=DEFAULT_TOL,
                        help='relative tolerance of dense comparisons')
    parser.add_argument('--seed', type=int, default=0,
                        help='seed of randomized checks')
    commands = parser.add_subparsers(dest='command', required=True)

    code = commands.add_parser('code', help='inspect catalog codes')
    code_commands = code.add_subparsers(dest='action', required=True)
    code_commands.add_parser('list').set_defaults(func=cmd_code_list)
    show = code_commands.add_parser('show')
    show.add_argument('code', help='catalog name or code JSON file')
    show.add_argument('--distance', action='store_true')
    show.add_argument('--json', action='store_true',
                      help='print the code JSON instead')
    show.set_defaults(func=cmd_code_show)

    nf = commands.add_parser('nf', help='build a normal form')
    nf.add_argument('code')
    nf.add_argument('--form', choices=['zx', 'xz', 'subsystem'],
                    default='zx')
    nf.add_argument('--color', choices=['zx', 'xz'], default='zx',
                    help='color of a subsystem normal form')
    nf.add_argument('--gauge', default='open',
                    help="'open' or one state per gauge wire, e.g. +++")
    for option in ('--dot', '--graphml', '--json'):
        nf.add_argument(option, metavar='PATH')
    nf.set_defaults(func=cmd_nf)

    verify = commands.add_parser('verify', help='dense checks of a code')
    verify.add_argument('code')
    verify.set_defaults(func=cmd_verify)

    push = commands.add_parser('push', help='push a logical layer through')
    push.add_argument('code')
    push.add_argument('--op', required=True,
                      help='primitives such as "X:1;Z:2;ZS:1/1"')
    for option in ('--dot', '--graphml', '--json'):
        push.add_argument(option, metavar='PATH')
    push.set_defaults(func=cmd_push)

    morph_cmd = commands.add_parser('morph', help='morph along a subset')
    morph_cmd.add_argument('code')
    morph_cmd.add_argument('--subset', type=_subset, required=True)
    morph_cmd.add_argument('--form', choices=['zx', 'xz'], default='zx')
    morph_cmd.add_argument('--emit', choices=['child', 'morphed', 'both'])
    morph_cmd.add_argument('--json', metavar='PATH')
    morph_cmd.set_defaults(func=cmd_morph)

    fix = commands.add_parser('gaugefix', help='fix the gauge of a code')
    fix.add_argument('code')
    fix.add_argument('--basis', choices=['X', 'Z'], required=True)
    fix.add_argument('--outcomes', required=True,
                     help='one outcome bit per gauge pair, e.g. 010')
    fix.add_argument('--json', metavar='PATH')
    fix.set_defaults(func=cmd_gaugefix)

    switch_cmd = commands.add_parser('switch',
                                     help='switch between gauge fixings')
    switch_cmd.add_argument('--from', dest='source', required=True)
    switch_cmd.add_argument('--to', dest='target', required=True)
    switch_cmd.add_argument('--via', default='sub15',
                            help='the common subsystem code')
    switch_cmd.add_argument('--outcomes')
    switch_cmd.add_argument('--json', metavar='PATH')
    switch_cmd.set_defaults(func=cmd_switch)

    rules = commands.add_parser('rules', help='rewrite rule soundness')
    rules_commands = rules.add_subparsers(dest='action', required=True)
    check = rules_commands.add_parser('check')
    check.add_argument('--samples', type=int, default=200)
    check.add_argument('--seed', type=int, default=argparse.SUPPRESS)
    check.add_argument('--rule', action='append',
                       help='restrict to a rule, may be repeated')
    check.set_defaults(func=cmd_rules_check)

    eta = commands.add_parser('eta', help='eta factorization')
    eta_commands = eta.add_subparsers(dest='action', required=True)
    eta_check = eta_commands.add_parser('check')
    eta_check.add_argument('--big', default='ext_steane')
    eta_check.add_argument('--small', default='steane')
    eta_check.add_argument('--json', metavar='PATH',
                           help='write the eta state as a dense map')
    eta_check.set_defaults(func=cmd_eta_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose,
                                                      logging.DEBUG)
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.func(args)
    except VerificationError as error:
        print('FAIL %s' % error, file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError, BudgetExceeded) as error:
        print('zxcss: error: %s' % error, file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
