import argparse
import os
import logging

from typing import List, Optional, Tuple

from pfister_check.check_conf import CheckConf
from pfister_check.constants import (
    CEILING_ENV_VAR,
    DEFAULT_MAX_N,
    DEFAULT_ORACLE_CEILING,
    MAX_N_ENV_VAR,
    OUTPUT_FORMATS,
    VERSION,
)
from pfister_check.scalar_domain import all_domain_names
from pfister_check.verifier import ScaledEntry, parse_scaled_entry


def int_from_env(env_var_name: str, default: int) -> int:
    value = os.getenv(env_var_name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError("Environment variable %s must be an integer, got %r" % (
            env_var_name, value))


def scaled_entry_arg(value: str) -> ScaledEntry:
    try:
        return parse_scaled_entry(value)
    except (ValueError, ZeroDivisionError) as ex:
        raise argparse.ArgumentTypeError(str(ex))


def create_common_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        '--format',
        dest='output_format',
        choices=OUTPUT_FORMATS,
        default='json',
        help='Certificate output format. Default: json')
    parser.add_argument(
        '--out',
        dest='out_path',
        help='Write the certificate to this file instead of stdout')
    parser.add_argument(
        '--max-n',
        type=int,
        default=int_from_env(MAX_N_ENV_VAR, DEFAULT_MAX_N),
        help='Largest n to accept. n = 4 needs --max-n 4 and may take a long time. '
             'Default: %d, or the %s environment variable' % (DEFAULT_MAX_N, MAX_N_ENV_VAR))
    parser.add_argument(
        '--ceiling',
        type=int,
        default=int_from_env(CEILING_ENV_VAR, DEFAULT_ORACLE_CEILING),
        help='Largest number of candidate vectors the isotropy oracle may enumerate. '
             'Default: 2^40, or the %s environment variable' % CEILING_ENV_VAR)
    parser.add_argument(
        '--verbose',
        action='store_true',
        help='Log at DEBUG level')
    return parser


def create_arg_parser() -> argparse.ArgumentParser:
    common = create_common_arg_parser()
    parser = argparse.ArgumentParser(
        prog='pfister_check',
        description='Exact checks for the non-linkage of bilinear Pfister forms')
    parser.add_argument('--version', action='version', version='%(prog)s ' + VERSION)
    commands = parser.add_subparsers(dest='command', required=True)

    check_parser = commands.add_parser('check', help='Run a check and emit a certificate')
    checks = check_parser.add_subparsers(dest='check', required=True)

    prop_char2 = checks.add_parser(
        'prop-char2', parents=[common],
        help='The char 2 family over F2(x1..xn): anisotropy and no common slot')
    prop_char2.add_argument('--n', type=int, required=True, help='Number of slots')
    prop_char2.add_argument(
        '--slots',
        help='Slots alpha_1..alpha_n separated by ";", e.g. "x1;x2^3". Default: x1;...;xn')

    prop_main = checks.add_parser(
        'prop-main', parents=[common],
        help='The family over Q(x1..xn), reduced to F2 by the 2-adic Gauss valuation')
    prop_main.add_argument('--n', type=int, required=True, help='Number of slots')
    prop_main.add_argument(
        '--scale-entry',
        type=scaled_entry_arg,
        help='D,J,FACTOR: multiply entry J of the expansion of the D-th family member by '
             'FACTOR before the valuation step')

    theorem_a = checks.add_parser(
        'theorem-a', parents=[common],
        help='Four quaternion algebras over Q(x1, x2) without a common maximal subfield')
    theorem_a.add_argument(
        '--symbols',
        help='Quaternion symbols "a, b" separated by ";". Default: '
             '"x1, x2; x1, x2+1; x2, x1+1; x2, x1*x2+1"')

    linkage = checks.add_parser(
        'linkage', parents=[common],
        help='Common slot space of every pair of forms in the F2 family')
    linkage.add_argument('--n', type=int, required=True, help='Number of slots')

    family = checks.add_parser(
        'family', parents=[common],
        help='List the family of 2^n Pfister forms and their expansions')
    family.add_argument('--n', type=int, required=True, help='Number of slots')
    family.add_argument(
        '--domain', choices=[name.lower() for name in all_domain_names()], default='rat',
        help='Scalar domain. Default: rat')
    family.add_argument('--slots', help='Slots separated by ";". Default: x1;...;xn')

    replay = checks.add_parser(
        'replay', parents=[common],
        help='Re-run a recorded certificate and re-verify its witnesses')
    replay.add_argument('--cert', required=True, help='Certificate JSON file')

    oracle_parser = commands.add_parser('oracle', help='Independent brute-force oracles')
    oracles = oracle_parser.add_subparsers(dest='oracle', required=True)
    isotropy = oracles.add_parser(
        'isotropy', parents=[common],
        help='Search for an isotropic vector of a diagonal form over F2 by enumeration')
    isotropy.add_argument(
        '--form', required=True, help='Diagonal entries separated by ";", e.g. "1;x1;x2"')
    isotropy.add_argument(
        '--degree', type=int, required=True,
        help='Total degree bound of the candidate coordinates')
    isotropy.add_argument(
        '--n', type=int, default=None,
        help='Number of variables. Default: the highest variable index in --form')
    return parser


def parse_args(argv: Optional[List[str]] = None) -> Tuple[argparse.Namespace, CheckConf]:
    parser = create_arg_parser()
    args = parser.parse_args(argv)

    if getattr(args, 'degree', None) is not None and args.degree < 0:
        raise ValueError("--degree must be nonnegative, got %d" % args.degree)

    check_conf = CheckConf(
        max_n=args.max_n,
        ceiling=args.ceiling,
        output_format=args.output_format,
        out_path=args.out_path)
    logging.debug("Configuration: %s", check_conf)
    return args, check_conf
