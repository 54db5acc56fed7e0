import json

from fractions import Fraction
from typing import Any, Callable, Dict, List

import pytest

from pfister_check.certificate import (
    VERDICT_CITED,
    VERDICT_ERROR,
    VERDICT_FAIL,
    VERDICT_PASS,
    Certificate,
    Step,
    overall_verdict,
)
from pfister_check.check_conf import CheckConf
from pfister_check.constants import VERSION
from pfister_check.errors import (
    ArityError,
    CeilingExceededError,
    DomainMismatchError,
    MalformedCertificateError,
)
from pfister_check.expr_parser import parse_expr, parse_expr_list
from pfister_check.family import QuaternionSymbol
from pfister_check.scalar_domain import F2, RAT
from pfister_check.verifier import (
    CHECK_PROP_CHAR2,
    describe_family,
    parse_scaled_entry,
    render_family,
    replay_certificate,
    verify_char0_reduction,
    verify_identity,
    verify_linkage,
    verify_oracle_isotropy,
    verify_prop_char2,
    verify_theorem_a,
)


def step_ids(certificate: Certificate) -> List[str]:
    return [step.id for step in certificate.steps]


def symbol(a: str, b: str) -> QuaternionSymbol:
    return QuaternionSymbol(parse_expr(a, 2, RAT), parse_expr(b, 2, RAT))


class TestCertificate:
    def test_overall_verdict_ignores_cited_steps(self) -> None:
        def step(verdict: str) -> Step:
            return Step('s', 'claim', 'ref', verdict)
        assert overall_verdict([]) == VERDICT_PASS
        assert overall_verdict([step(VERDICT_PASS), step(VERDICT_CITED)]) == VERDICT_PASS
        assert overall_verdict([step(VERDICT_FAIL), step(VERDICT_PASS)]) == VERDICT_FAIL
        assert overall_verdict([step(VERDICT_FAIL), step(VERDICT_ERROR)]) == VERDICT_ERROR

    def test_unknown_step_verdict(self) -> None:
        with pytest.raises(ValueError):
            Step('s', 'claim', 'ref', 'MAYBE')

    def test_json_layout(self) -> None:
        certificate = verify_prop_char2(2)
        document = json.loads(certificate.to_json())
        assert list(document.keys()) == [
            'check', 'domain', 'n', 'conventions', 'inputs', 'steps', 'assumptions', 'verdict',
            'version']
        assert list(document['steps'][0].keys()) == [
            'id', 'claim', 'paper_ref', 'verdict', 'witness']
        assert 'd1 least significant' in document['conventions']['bit_order']
        assert certificate.to_json().endswith('}\n')

    def test_runs_are_byte_identical(self) -> None:
        assert verify_prop_char2(2).to_json() == verify_prop_char2(2).to_json()
        assert verify_theorem_a().to_json() == verify_theorem_a().to_json()

    def test_text_rendering(self) -> None:
        text = verify_prop_char2(2).render('text')
        assert text.startswith('check:   prop-char2 (F2, n = 2)')
        assert '[PASS] two-independence' in text
        assert text.endswith('verdict: PASS\nversion: %s\n' % VERSION)

    def test_from_dict(self) -> None:
        certificate = verify_prop_char2(2)
        restored = Certificate.from_dict(json.loads(certificate.to_json()))
        assert restored.to_json() == certificate.to_json()
        with pytest.raises(ValueError):
            Certificate.from_dict({'check': CHECK_PROP_CHAR2})


class TestPropChar2:
    @pytest.mark.parametrize('n', [2, 3])
    def test_default_slots_pass(self, n: int) -> None:
        certificate = verify_prop_char2(n)
        assert certificate.verdict == VERDICT_PASS
        assert certificate.exit_code == 0
        assert step_ids(certificate) == ['two-independence', 'anisotropy', 'common-slot']
        common = certificate.step_by_id('common-slot').witness
        assert common['dimension'] == 0
        assert common['per_form_dimensions'] == [2 ** n - 1] * 2 ** n
        assert certificate.step_by_id('two-independence').witness['rank'] == 2 ** n

    def test_dependent_slots_fail(self) -> None:
        certificate = verify_prop_char2(2, parse_expr_list('x1; x1', 2, F2))
        assert certificate.verdict == VERDICT_FAIL
        assert certificate.exit_code == 1
        assert step_ids(certificate) == ['two-independence']
        identities = certificate.step_by_id('two-independence').witness['identities']
        assert len(identities) == 1
        assert verify_identity(identities[0])

    def test_odd_powers_pass(self) -> None:
        certificate = verify_prop_char2(2, parse_expr_list('x1; x2^3', 2, F2))
        assert certificate.verdict == VERDICT_PASS
        assert certificate.inputs == ['x1', 'x2^3']

    def test_bad_input(self) -> None:
        with pytest.raises(CeilingExceededError):
            verify_prop_char2(4)
        with pytest.raises(ArityError):
            verify_prop_char2(1)
        with pytest.raises(ArityError):
            verify_prop_char2(3, parse_expr_list('x1; x2', 3, F2))
        with pytest.raises(DomainMismatchError):
            verify_prop_char2(2, parse_expr_list('x1; x2', 2, RAT))


class TestChar0Reduction:
    def test_pass(self) -> None:
        certificate = verify_char0_reduction(2)
        assert certificate.verdict == VERDICT_PASS
        assert step_ids(certificate) == [
            'build-family', 'coefficient-values', 'residue-family', 'char2-two-independence',
            'char2-anisotropy', 'char2-common-slot', 'specialization']
        assert certificate.steps[-1].verdict == VERDICT_CITED
        assert certificate.step_by_id('coefficient-values').witness['coefficients_checked'] == 16
        assert certificate.step_by_id('residue-family').witness['mismatches'] == []

    def test_scaled_entry_is_an_error(self) -> None:
        certificate = verify_char0_reduction(2, parse_scaled_entry('1,2,2'))
        assert certificate.verdict == VERDICT_ERROR
        assert certificate.exit_code == 2
        assert step_ids(certificate) == ['build-family', 'coefficient-values']
        witness = certificate.step_by_id('coefficient-values').witness
        assert witness['index'] == '(1,0)'
        assert witness['entry_index'] == 2
        assert witness['gauss_value'] == '1'
        assert certificate.step_by_id('build-family').witness['scaled_entry'] == '1,2,2'

    def test_odd_scaling_keeps_the_residues(self) -> None:
        certificate = verify_char0_reduction(2, (0, 3, Fraction(1, 3)))
        assert certificate.verdict == VERDICT_PASS

    def test_scaled_entry_parsing(self) -> None:
        assert parse_scaled_entry('0,3,1/3') == (0, 3, Fraction(1, 3))
        with pytest.raises(ValueError):
            parse_scaled_entry('1,2')
        with pytest.raises(ArityError):
            verify_char0_reduction(2, (4, 0, Fraction(2)))


class TestTheoremA:
    def test_default_symbols_pass(self) -> None:
        certificate = verify_theorem_a()
        assert certificate.verdict == VERDICT_PASS
        assert certificate.inputs == ['x1, x2', 'x1, x2 + 1', 'x2, x1 + 1', 'x2, x1*x2 + 1']
        ids = step_ids(certificate)
        assert ids[:2] == ['identification', 'symbol-common-slot']
        assert 'prop-main-specialization' in ids
        assert ids[-2:] == ['pairwise-linkage', 'maximal-subfield-bridge']
        assert certificate.step_by_id('symbol-common-slot').witness['dimension'] == 0
        pairs = certificate.step_by_id('pairwise-linkage').witness['pairs']
        assert len(pairs) == 6
        assert all(pair['linked'] for pair in pairs)

    def test_repeated_symbol_fails_identification(self) -> None:
        certificate = verify_theorem_a([symbol('x1', 'x2')] * 4)
        assert certificate.verdict == VERDICT_FAIL
        assert certificate.step_by_id('identification').verdict == VERDICT_FAIL
        assert 'prop-main-build-family' not in step_ids(certificate)

    def test_linked_symbols_fail(self) -> None:
        certificate = verify_theorem_a([symbol('x1', 'x2'), symbol('x1', 'x2 + 1')])
        assert certificate.verdict == VERDICT_FAIL
        common = certificate.step_by_id('symbol-common-slot')
        assert common.verdict == VERDICT_FAIL
        assert common.witness['linked']
        assert common.witness['dimension'] == 2
        assert all(verify_identity(identity) for identity in common.witness['identities'])

    def test_even_argument_is_an_error(self) -> None:
        certificate = verify_theorem_a([symbol('2*x1', 'x2')])
        assert certificate.verdict == VERDICT_ERROR
        assert step_ids(certificate) == ['identification', 'symbol-common-slot']

    def test_symbols_must_be_over_q(self) -> None:
        with pytest.raises(DomainMismatchError):
            verify_theorem_a([QuaternionSymbol(parse_expr('x1', 2, F2), parse_expr('x2', 2, F2))])
        with pytest.raises(ArityError):
            verify_theorem_a([])


class TestLinkage:
    def test_every_pair_is_linked(self) -> None:
        certificate = verify_linkage(2)
        assert certificate.verdict == VERDICT_PASS
        assert len(certificate.steps) == 6
        assert certificate.steps[0].id == 'pair-(0,0)-(1,0)'
        for step in certificate.steps:
            assert step.witness['dimension'] >= 1
            assert all(verify_identity(identity) for identity in step.witness['identities'])
        assert certificate.step_by_id('pair-(0,0)-(0,1)').witness['dimension'] == 2


class TestOracle:
    def test_isotropic_form(self) -> None:
        certificate = verify_oracle_isotropy(parse_expr_list('x1; x1*x2^2', 2, F2), 1)
        assert certificate.verdict == VERDICT_PASS
        search = certificate.step_by_id('brute-force-search').witness
        assert search['found']
        assert search['identities'][0]['vector'] == ['x2', '1']
        assert verify_identity(search['identities'][0])

    def test_anisotropic_form(self) -> None:
        certificate = verify_oracle_isotropy(parse_expr_list('1; x1; x2; x1*x2', 2, F2), 2)
        assert certificate.verdict == VERDICT_PASS
        search = certificate.step_by_id('brute-force-search').witness
        assert not search['found']
        assert 'note' in search

    def test_ceiling(self) -> None:
        with pytest.raises(CeilingExceededError):
            verify_oracle_isotropy(parse_expr_list('1; x1; x2; x1*x2', 2, F2), 2,
                                   CheckConf(ceiling=2 ** 20))


class TestFamilyListing:
    def test_listing(self) -> None:
        listing = describe_family(2)
        assert [member['index'] for member in listing['members']] == [
            '(0,0)', '(1,0)', '(0,1)', '(1,1)']
        assert listing['members'][3]['form'] == '<<x2, x1*x2 + 1>>'
        text = render_family(listing, 'text')
        assert text.startswith('family over RAT, n = 2, slots: x1; x2')
        assert json.loads(render_family(listing, 'json'))['n'] == 2


class TestReplay:
    @pytest.mark.parametrize('make', [
        lambda: verify_prop_char2(2),
        lambda: verify_prop_char2(2, parse_expr_list('x1; x1', 2, F2)),
        lambda: verify_char0_reduction(2, parse_scaled_entry('1,2,2')),
        lambda: verify_theorem_a(),
        lambda: verify_linkage(2),
        lambda: verify_oracle_isotropy(parse_expr_list('x1; x1*x2^2', 2, F2), 1),
    ])
    def test_replay_reproduces(self, make: Callable[[], Certificate]) -> None:
        certificate = make()
        result = replay_certificate(json.loads(certificate.to_json()))
        assert result.identical
        assert result.ok
        assert result.failures == ()

    def test_tampered_identity_is_reported(self) -> None:
        document = json.loads(verify_linkage(2).to_json())
        identity = document['steps'][0]['witness']['identities'][0]
        identity['value'] = identity['value'] + ' + 1'
        result = replay_certificate(document)
        assert not result.identical
        assert len(result.failures) == 1
        assert not result.ok

    def test_certificate_with_a_missing_step(self) -> None:
        document = json.loads(verify_theorem_a().to_json())
        del document['steps'][0]
        document['check'] = 'prop-main'
        with pytest.raises(MalformedCertificateError, match='build-family'):
            replay_certificate(document)

        document = json.loads(
            verify_oracle_isotropy(parse_expr_list('x1; x1*x2^2', 2, F2), 1).to_json())
        document['steps'] = document['steps'][:1]
        with pytest.raises(MalformedCertificateError, match='brute-force-search'):
            replay_certificate(document)

    @pytest.mark.parametrize('edit', [
        lambda document: document['steps'][0].pop('witness'),
        lambda document: document.__setitem__('steps', {'id': 'x'}),
        lambda document: document.__setitem__('steps', ['two-independence']),
        lambda document: document.__setitem__('inputs', 7),
        lambda document: document['steps'][1]['witness'].__setitem__('degree_bound', 'one'),
    ])
    def test_malformed_certificate(self, edit: Callable[[Dict[str, Any]], Any]) -> None:
        document = json.loads(
            verify_oracle_isotropy(parse_expr_list('x1; x1*x2^2', 2, F2), 1).to_json())
        edit(document)
        with pytest.raises(MalformedCertificateError):
            replay_certificate(document)

    def test_certificate_must_be_an_object(self) -> None:
        with pytest.raises(MalformedCertificateError):
            replay_certificate([])  # type: ignore
