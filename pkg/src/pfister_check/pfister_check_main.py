#!/usr/bin/env python3

import argparse
import json
import logging
import os
import sys
import time

from typing import List, Optional

from pfister_check.certificate import Certificate
from pfister_check.check_conf import CheckConf
from pfister_check.cmd_line_args import parse_args
from pfister_check.constants import (
    EXIT_CODE_CEILING,
    EXIT_CODE_FAIL,
    EXIT_CODE_INPUT_ERROR,
    EXIT_CODE_PASS,
    LOG_LEVEL_ENV_VAR,
)
from pfister_check.errors import CeilingExceededError
from pfister_check.expr_parser import max_variable_index, parse_expr_list, parse_pair_list
from pfister_check.family import QuaternionSymbol
from pfister_check.scalar_domain import F2, RAT, domain_by_name
from pfister_check.verifier import (
    describe_family,
    render_family,
    replay_certificate,
    verify_char0_reduction,
    verify_linkage,
    verify_oracle_isotropy,
    verify_prop_char2,
    verify_theorem_a,
)


class CheckRunner:
    args: argparse.Namespace
    conf: CheckConf

    def parse_args(self, argv: Optional[List[str]] = None) -> None:
        self.args, self.conf = parse_args(argv)

    def emit(self, output: str) -> None:
        if self.conf.out_path:
            with open(self.conf.out_path, 'w', encoding='utf-8') as output_file:
                output_file.write(output)
            logging.info("Wrote %s", os.path.abspath(self.conf.out_path))
        else:
            sys.stdout.write(output)

    def run_certificate_check(self) -> Certificate:
        args = self.args
        if args.command == 'oracle':
            n = args.n if args.n is not None else max(1, max_variable_index(args.form))
            entries = parse_expr_list(args.form, n, F2)
            return verify_oracle_isotropy(entries, args.degree, self.conf)
        if args.check == 'prop-char2':
            slots = None
            if args.slots is not None:
                slots = parse_expr_list(args.slots, args.n, F2, expected_count=args.n)
            return verify_prop_char2(args.n, slots, self.conf)
        if args.check == 'prop-main':
            return verify_char0_reduction(args.n, args.scale_entry, self.conf)
        if args.check == 'theorem-a':
            symbols = None
            if args.symbols is not None:
                symbols = [
                    QuaternionSymbol(a, b) for a, b in parse_pair_list(args.symbols, 2, RAT)]
            return verify_theorem_a(symbols, self.conf)
        if args.check == 'linkage':
            return verify_linkage(args.n, self.conf)
        raise ValueError("Unknown check: %s" % args.check)

    def run_replay(self) -> int:
        with open(self.args.cert, encoding='utf-8') as cert_file:
            certificate_dict = json.load(cert_file)
        result = replay_certificate(certificate_dict, self.conf)
        self.emit(json.dumps({
            'cert': self.args.cert,
            'identical': result.identical,
            'identities_checked': result.identities_checked,
            'failures': list(result.failures),
        }, indent=2, ensure_ascii=False) + '\n')
        return EXIT_CODE_PASS if result.ok else EXIT_CODE_FAIL

    def run_family(self) -> int:
        domain = domain_by_name(self.args.domain)
        slots = None
        if self.args.slots is not None:
            slots = parse_expr_list(self.args.slots, self.args.n, domain,
                                    expected_count=self.args.n)
        listing = describe_family(self.args.n, domain, slots, self.conf)
        self.emit(render_family(listing, self.conf.output_format))
        return EXIT_CODE_PASS

    def run(self) -> int:
        name = self.args.command + ' ' + (
            self.args.oracle if self.args.command == 'oracle' else self.args.check)
        start_time_sec = time.time()
        try:
            if self.args.command == 'check' and self.args.check == 'replay':
                exit_code = self.run_replay()
            elif self.args.command == 'check' and self.args.check == 'family':
                exit_code = self.run_family()
            else:
                certificate = self.run_certificate_check()
                self.emit(certificate.render(self.conf.output_format))
                logging.info("Verdict of %s: %s", certificate.check, certificate.verdict)
                exit_code = certificate.exit_code
        except CeilingExceededError as ex:
            logging.error("%s", ex)
            return EXIT_CODE_CEILING
        except (ValueError, OSError) as ex:
            logging.error("%s", ex)
            return EXIT_CODE_INPUT_ERROR
        logging.info("Finished check %s in %.1f seconds", name, time.time() - start_time_sec)
        return exit_code


def run_main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=os.getenv(LOG_LEVEL_ENV_VAR, 'INFO').upper(),
        format="[%(filename)s:%(lineno)d] %(asctime)s %(levelname)s: %(message)s")
    runner = CheckRunner()
    try:
        runner.parse_args(argv)
    except ValueError as ex:
        logging.error("%s", ex)
        return EXIT_CODE_INPUT_ERROR
    if runner.args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    return runner.run()


def main() -> None:
    sys.exit(run_main())


if __name__ == '__main__':
    main()
