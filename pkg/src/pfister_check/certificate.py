"""
Certificates: ordered step records with witnesses, serialized deterministically.
"""

import json

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence

from pfister_check.constants import (
    BASE_FIELD_CONVENTION,
    BIT_ORDER_CONVENTION,
    EXIT_CODE_FAIL,
    EXIT_CODE_INPUT_ERROR,
    EXIT_CODE_PASS,
    SIGN_CONVENTION,
    VERSION,
)
from pfister_check.errors import MalformedCertificateError
from pfister_check.rat_func import RatFunc


VERDICT_PASS = 'PASS'
VERDICT_FAIL = 'FAIL'
VERDICT_ERROR = 'ERROR'
# Cited bridges: recorded, never computed, and left out of the overall verdict.
VERDICT_CITED = 'CITED'

STEP_VERDICTS = [VERDICT_PASS, VERDICT_FAIL, VERDICT_ERROR, VERDICT_CITED]
STEP_FIELDS = ['id', 'claim', 'paper_ref', 'verdict', 'witness']
CERTIFICATE_FIELDS = ['check', 'domain', 'n', 'inputs', 'steps', 'assumptions', 'version']

Witness = Dict[str, Any]


@dataclass
class Step:
    id: str
    claim: str
    paper_ref: str
    verdict: str
    witness: Witness = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.verdict not in STEP_VERDICTS:
            raise ValueError("Unknown step verdict: %s" % self.verdict)

    def to_dict(self) -> Dict[str, Any]:
        return OrderedDict([
            ('id', self.id),
            ('claim', self.claim),
            ('paper_ref', self.paper_ref),
            ('verdict', self.verdict),
            ('witness', self.witness),
        ])

    @staticmethod
    def from_dict(d: Dict[str, Any]) -> 'Step':
        _require_fields('step', d, STEP_FIELDS)
        return Step(
            id=d['id'],
            claim=d['claim'],
            paper_ref=d['paper_ref'],
            verdict=d['verdict'],
            witness=d['witness'])


def _require_fields(kind: str, d: Any, fields: Sequence[str]) -> None:
    if not isinstance(d, dict):
        raise MalformedCertificateError(
            "Expected a %s object, got %s" % (kind, type(d).__name__))
    missing = [key for key in fields if key not in d]
    if missing:
        raise MalformedCertificateError(
            "The %s is missing fields: %s" % (kind, ', '.join(missing)))


def overall_verdict(steps: Sequence[Step]) -> str:
    verdicts = [step.verdict for step in steps if step.verdict != VERDICT_CITED]
    if VERDICT_ERROR in verdicts:
        return VERDICT_ERROR
    if VERDICT_FAIL in verdicts:
        return VERDICT_FAIL
    return VERDICT_PASS


def exit_code_for_verdict(verdict: str) -> int:
    return {
        VERDICT_PASS: EXIT_CODE_PASS,
        VERDICT_FAIL: EXIT_CODE_FAIL,
        VERDICT_ERROR: EXIT_CODE_INPUT_ERROR,
    }[verdict]


def conventions_block() -> Dict[str, str]:
    return OrderedDict([
        ('bit_order', BIT_ORDER_CONVENTION),
        ('sign_convention', SIGN_CONVENTION),
        ('base_field', BASE_FIELD_CONVENTION),
    ])


def identity_witness(
        entries: Sequence[RatFunc],
        vector: Sequence[RatFunc],
        value: RatFunc) -> Witness:
    """
    A replayable claim sum(entries[i] * vector[i]^2) = value.
    """
    return OrderedDict([
        ('domain', value.domain.name),
        ('n', value.n),
        ('entries', [str(entry) for entry in entries]),
        ('vector', [str(component) for component in vector]),
        ('value', str(value)),
    ])


@dataclass
class Certificate:
    check: str
    domain: str
    n: int
    inputs: List[str]
    steps: List[Step]
    assumptions: List[str]
    version: str = VERSION

    @property
    def verdict(self) -> str:
        return overall_verdict(self.steps)

    @property
    def exit_code(self) -> int:
        return exit_code_for_verdict(self.verdict)

    def step_by_id(self, step_id: str) -> Step:
        for step in self.steps:
            if step.id == step_id:
                return step
        raise KeyError("No step %s in the %s certificate" % (step_id, self.check))

    def to_dict(self) -> Dict[str, Any]:
        return OrderedDict([
            ('check', self.check),
            ('domain', self.domain),
            ('n', self.n),
            ('conventions', conventions_block()),
            ('inputs', list(self.inputs)),
            ('steps', [step.to_dict() for step in self.steps]),
            ('assumptions', list(self.assumptions)),
            ('verdict', self.verdict),
            ('version', self.version),
        ])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + '\n'

    def to_text(self) -> str:
        lines = [
            'check:   %s (%s, n = %d)' % (self.check, self.domain, self.n),
            'inputs:  %s' % ' | '.join(self.inputs),
            'conventions:',
        ]
        for key, value in conventions_block().items():
            lines.append('  %s: %s' % (key, value))
        lines.append('steps:')
        for step in self.steps:
            lines.append('  [%s] %s: %s' % (step.verdict, step.id, step.claim))
            lines.append('      (%s)' % step.paper_ref)
            for key, value in step.witness.items():
                lines.append('      %s: %s' % (key, json.dumps(value, ensure_ascii=False)))
        lines.append('assumptions:')
        lines.extend('  - %s' % assumption for assumption in self.assumptions)
        lines.append('verdict: %s' % self.verdict)
        lines.append('version: %s' % self.version)
        return '\n'.join(lines) + '\n'

    def render(self, output_format: str) -> str:
        if output_format == 'text':
            return self.to_text()
        return self.to_json()

    @staticmethod
    def from_dict(d: Dict[str, Any]) -> 'Certificate':
        _require_fields('certificate', d, CERTIFICATE_FIELDS)
        if not isinstance(d['steps'], list):
            raise MalformedCertificateError("Certificate steps must be a list")
        return Certificate(
            check=d['check'],
            domain=d['domain'],
            n=d['n'],
            inputs=list(d['inputs']),
            steps=[Step.from_dict(step) for step in d['steps']],
            assumptions=list(d['assumptions']),
            version=d['version'])
