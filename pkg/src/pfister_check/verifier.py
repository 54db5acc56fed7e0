"""
End-to-end checks. Each check is a short pipeline of steps. A step that does not pass ends its
pipeline, and the certificate records every step that ran together with its witness. Witnesses
of the form sum(c_i * v_i^2) = value are stored as identities and re-verified on replay.
"""

import json
import logging

from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pfister_check.bilinear_forms import (
    CommonSlotResult,
    DiagonalForm,
    PfisterForm,
    common_slot_space,
    is_isotropic_char2,
    pfister_expand,
    pure_part,
)
from pfister_check.bit_vector import BitVector, format_bit_vector
from pfister_check.certificate import (
    VERDICT_CITED,
    VERDICT_ERROR,
    VERDICT_FAIL,
    VERDICT_PASS,
    Certificate,
    Step,
    Witness,
    identity_witness,
)
from pfister_check.char2_linalg import two_independent
from pfister_check.check_conf import CheckConf
from pfister_check.constants import (
    ASSUMPTION_BASE_FIELD,
    ASSUMPTION_M_LINKEDNESS,
    ASSUMPTION_MAXIMAL_SUBFIELD,
    ASSUMPTION_RESIDUE_FIELD,
    ASSUMPTION_SLOT_CRITERION,
    ASSUMPTION_SPECIALIZATION,
    CHAR2_FAIL_ADVICE,
    UNVERIFIED_ONE_SIDED_ORACLE,
)
from pfister_check.dyadic import ResidueMap, gauss_v
from pfister_check.errors import (
    ArityError,
    DegenerateResidueError,
    DomainMismatchError,
    IsotropicFormError,
    MalformedCertificateError,
    ResidueValuationError,
    ZeroEntryError,
)
from pfister_check.expr_parser import parse_expr, parse_pair_list
from pfister_check.family import (
    QuaternionSymbol,
    binary_family,
    identify_with_family,
    norm_form,
    notation1_family,
    residue_family,
    theorem_a_quaternions,
)
from pfister_check.helpers import log_info_heading
from pfister_check.isotropy_oracle import brute_isotropy_search
from pfister_check.rat_func import RatFunc, eval_bilinear, variables_of
from pfister_check.scalar_domain import F2, RAT, ScalarDomain, domain_by_name


CHECK_PROP_CHAR2 = 'prop-char2'
CHECK_PROP_MAIN = 'prop-main'
CHECK_THEOREM_A = 'theorem-a'
CHECK_LINKAGE = 'linkage'
CHECK_ORACLE_ISOTROPY = 'oracle-isotropy'

# (family index in BitVector order, expansion entry index, factor)
ScaledEntry = Tuple[int, int, Fraction]


def parse_scaled_entry(src: str) -> ScaledEntry:
    """
    Parses 'D,J,FACTOR', e.g. '1,2,2' or '0,3,1/3'.
    """
    parts = [part.strip() for part in src.split(',')]
    if len(parts) != 3:
        raise ValueError("Expected D,J,FACTOR, got %r" % src)
    return int(parts[0]), int(parts[1]), Fraction(parts[2])


def format_scaled_entry(scaled_entry: ScaledEntry) -> str:
    return '%d,%d,%s' % scaled_entry


def _slots_or_default(
        n: int,
        slots: Optional[Sequence[RatFunc]],
        domain: ScalarDomain) -> List[RatFunc]:
    if slots is None:
        return variables_of(n, domain)
    if len(slots) != n:
        raise ArityError("Expected %d slots, got %d" % (n, len(slots)))
    for index, slot in enumerate(slots):
        if slot.domain is not domain:
            raise DomainMismatchError("Slot %d is over %s, expected %s" % (
                index + 1, slot.domain, domain))
    return list(slots)


def _common_slot_identities(
        forms: Sequence[PfisterForm],
        result: CommonSlotResult) -> List[Witness]:
    assert result.witness is not None and result.representations is not None
    return [
        identity_witness(pure_part(pfister_expand(form)).entries, representation,
                         result.witness)
        for form, representation in zip(forms, result.representations)
    ]


def _common_slot_witness(forms: Sequence[PfisterForm], result: CommonSlotResult) -> Witness:
    witness: Witness = OrderedDict([
        ('dimension', result.dimension),
        ('per_form_dimensions', [subspace.dimension for subspace in result.per_form_subspaces]),
    ])
    if result.dimension:
        witness['value'] = str(result.witness)
        witness['identities'] = _common_slot_identities(forms, result)
    return witness


def char2_steps(alphas: Sequence[RatFunc], id_prefix: str = '') -> List[Step]:
    m = len(alphas)
    zero = RatFunc.zero(alphas[0].n, F2)
    steps = []

    independence = two_independent(alphas)
    witness: Witness = OrderedDict([('rank', independence.rank), ('size', 2 ** m)])
    claim = "The %d subset products of the slots are linearly independent over the squares" % (
        2 ** m)
    paper_ref = 'hypothesis of the char 2 non-linkage statement: 2-independent slots'
    if not independence.independent:
        assert independence.dependence is not None
        witness['identities'] = [
            identity_witness(independence.products, independence.dependence, zero)]
        steps.append(Step(id_prefix + 'two-independence', claim, paper_ref, VERDICT_FAIL,
                          witness))
        return steps
    steps.append(Step(id_prefix + 'two-independence', claim, paper_ref, VERDICT_PASS, witness))

    family = notation1_family(m, alphas, F2)
    forms_witness = []
    identities = []
    for d, form in family.items():
        expansion = pfister_expand(form)
        isotropy = is_isotropic_char2(expansion)
        forms_witness.append(OrderedDict([
            ('index', format_bit_vector(d)),
            ('form', str(form)),
            ('isotropic', isotropy.isotropic),
            ('rank', isotropy.rank),
            ('dimension', isotropy.dimension),
        ]))
        if isotropy.witness is not None:
            identities.append(identity_witness(expansion.entries, isotropy.witness, zero))
    witness = OrderedDict([('forms', forms_witness)])
    claim = "All %d forms of the family are anisotropic" % len(family)
    paper_ref = 'char 2 non-linkage: the family forms are anisotropic'
    if identities:
        witness['identities'] = identities
        witness['note'] = CHAR2_FAIL_ADVICE
        steps.append(Step(id_prefix + 'anisotropy', claim, paper_ref, VERDICT_FAIL, witness))
        return steps
    steps.append(Step(id_prefix + 'anisotropy', claim, paper_ref, VERDICT_PASS, witness))

    forms = list(family.values())
    result = common_slot_space(forms)
    witness = _common_slot_witness(forms, result)
    claim = ("The pure value subspaces of the %d forms intersect in 0, so the forms share no "
             "common 1-fold factor" % len(forms))
    paper_ref = 'char 2 non-linkage: no common 1-fold factor'
    if result.dimension:
        witness['note'] = CHAR2_FAIL_ADVICE
        steps.append(Step(id_prefix + 'common-slot', claim, paper_ref, VERDICT_FAIL, witness))
    else:
        steps.append(Step(id_prefix + 'common-slot', claim, paper_ref, VERDICT_PASS, witness))
    return steps


def verify_prop_char2(
        n: int,
        alphas: Optional[Sequence[RatFunc]] = None,
        conf: Optional[CheckConf] = None) -> Certificate:
    """
    For 2-independent alpha_1..alpha_n over F2(x1..xn): the 2^n family forms are anisotropic
    and have no common 1-fold factor.
    """
    conf = conf or CheckConf()
    conf.check_n(n)
    alphas = _slots_or_default(n, alphas, F2)
    log_info_heading("Checking the char 2 family for n = %d with slots %s", n,
                     ', '.join(str(alpha) for alpha in alphas))
    return Certificate(
        check=CHECK_PROP_CHAR2,
        domain=F2.name,
        n=n,
        inputs=[str(alpha) for alpha in alphas],
        steps=char2_steps(alphas),
        assumptions=[ASSUMPTION_SLOT_CRITERION, ASSUMPTION_M_LINKEDNESS])


def _scale_entry(
        expansions: Dict[BitVector, DiagonalForm],
        scaled_entry: ScaledEntry) -> Dict[BitVector, DiagonalForm]:
    d_index, entry_index, factor = scaled_entry
    keys = list(expansions.keys())
    if not 0 <= d_index < len(keys):
        raise ArityError("Family index %d out of range 0..%d" % (d_index, len(keys) - 1))
    d = keys[d_index]
    entries = list(expansions[d].entries)
    if not 0 <= entry_index < len(entries):
        raise ArityError("Entry index %d out of range 0..%d" % (entry_index, len(entries) - 1))
    if factor == 0:
        raise ZeroEntryError("Scaling factor must be nonzero")
    sample = entries[entry_index]
    entries[entry_index] = sample * RatFunc.constant(sample.n, RAT, factor)
    logging.info("Scaled entry %d of the expansion of phi_%s by %s", entry_index,
                 format_bit_vector(d), factor)
    scaled = OrderedDict(expansions)
    scaled[d] = DiagonalForm(tuple(entries))
    return scaled


def _valuation_error_witness(
        d: BitVector,
        expansion: DiagonalForm,
        entry_index: int,
        reason: str) -> Witness:
    entry = expansion.entries[entry_index]
    return OrderedDict([
        ('index', format_bit_vector(d)),
        ('entry_index', entry_index),
        ('entry', str(entry)),
        ('gauss_value', str(gauss_v(entry))),
        ('reason', reason),
    ])


def verify_char0_reduction(
        n: int,
        scaled_entry: Optional[ScaledEntry] = None,
        conf: Optional[CheckConf] = None) -> Certificate:
    """
    Builds the family over Q(x1..xn) and checks that its residue forms under the Gauss valuation
    are the F2 family, for which the char 2 check is run. scaled_entry multiplies one
    expansion coefficient before the valuation step.
    """
    conf = conf or CheckConf()
    conf.check_n(n)
    log_info_heading("Checking the char 0 family for n = %d by residues", n)
    alphas = variables_of(n, RAT)
    certificate = Certificate(
        check=CHECK_PROP_MAIN,
        domain=RAT.name,
        n=n,
        inputs=[str(alpha) for alpha in alphas],
        steps=[],
        assumptions=[
            ASSUMPTION_BASE_FIELD,
            ASSUMPTION_RESIDUE_FIELD,
            ASSUMPTION_SPECIALIZATION,
            ASSUMPTION_SLOT_CRITERION,
            ASSUMPTION_M_LINKEDNESS,
        ])
    steps = certificate.steps

    family = notation1_family(n, alphas, RAT)
    expansions: Dict[BitVector, DiagonalForm] = OrderedDict(
        (d, pfister_expand(form)) for d, form in family.items())
    if scaled_entry is not None:
        expansions = _scale_entry(expansions, scaled_entry)
    steps.append(Step(
        'build-family',
        "The %d forms of the family over Q(x1..x%d) and their expansions" % (len(family), n),
        'family of 2^n forms built from alpha_1, ..., alpha_n',
        VERDICT_PASS,
        OrderedDict([
            ('forms', [
                OrderedDict([
                    ('index', format_bit_vector(d)),
                    ('form', str(form)),
                    ('expansion', str(expansions[d])),
                ])
                for d, form in family.items()
            ]),
            ('scaled_entry', None if scaled_entry is None else format_scaled_entry(scaled_entry)),
        ])))

    residue_map = ResidueMap(n)
    residue_expansions: Dict[BitVector, DiagonalForm] = OrderedDict()
    claim = "Every expansion coefficient has Gauss value 0 and a nonzero residue"
    paper_ref = 'char 0 reduction: all coefficients of the forms have value 0'
    for d, expansion in expansions.items():
        try:
            residue_expansions[d] = residue_map.residue_form(expansion)
        except (ResidueValuationError, DegenerateResidueError) as ex:
            steps.append(Step('coefficient-values', claim, paper_ref, VERDICT_ERROR,
                              _valuation_error_witness(d, expansion, ex.index, str(ex))))
            return certificate
    steps.append(Step('coefficient-values', claim, paper_ref, VERDICT_PASS, OrderedDict([
        ('coefficients_checked', sum(e.dimension for e in expansions.values())),
        ('gauss_value', 0),
    ])))

    expected = binary_family(n)
    residues = residue_family(family)
    mismatches = [
        format_bit_vector(d) for d in family
        if residues[d] != expected[d] or
        residue_expansions[d].entry_multiset() !=
        pfister_expand(expected[d]).entry_multiset()
    ]
    claim = "The residue forms are exactly the family over F2(x1..x%d)" % n
    paper_ref = 'char 0 reduction: the residue forms are the char 2 family'
    witness: Witness = OrderedDict([
        ('residue_forms', [str(form) for form in residues.values()]),
        ('mismatches', mismatches),
    ])
    if mismatches:
        steps.append(Step('residue-family', claim, paper_ref, VERDICT_FAIL, witness))
        return certificate
    steps.append(Step('residue-family', claim, paper_ref, VERDICT_PASS, witness))

    residue_alphas = [residue_map.residue(alpha) for alpha in alphas]
    delegated = verify_prop_char2(n, residue_alphas, conf)
    for step in delegated.steps:
        step.id = 'char2-' + step.id
        steps.append(step)
    if delegated.verdict != VERDICT_PASS:
        return certificate

    steps.append(Step(
        'specialization',
        "A common slot over Q(x1..x%d) would yield one of the residue forms after scaling to "
        "value 0, so the char 0 family has no common 1-fold factor" % n,
        'char 0 reduction: scaling and specialization argument',
        VERDICT_CITED,
        OrderedDict([('assumption', ASSUMPTION_SPECIALIZATION)])))
    return certificate


@dataclass(frozen=True)
class PairLinkage:
    first: int
    second: int
    result: CommonSlotResult

    @property
    def linked(self) -> bool:
        return self.result.dimension > 0


def pairwise_linkage(forms: Sequence[PfisterForm]) -> List[PairLinkage]:
    """
    Common slot space of every pair of forms, in lexicographic pair order.
    """
    pairs = []
    for first in range(len(forms)):
        for second in range(first + 1, len(forms)):
            result = common_slot_space([forms[first], forms[second]])
            logging.debug("Forms %d and %d: common slot space of dimension %d",
                          first, second, result.dimension)
            pairs.append(PairLinkage(first, second, result))
    return pairs


def _pair_witness(
        forms: Sequence[PfisterForm],
        labels: Sequence[str],
        pair: PairLinkage) -> Witness:
    pair_forms = [forms[pair.first], forms[pair.second]]
    witness: Witness = OrderedDict([
        ('first', labels[pair.first]),
        ('second', labels[pair.second]),
        ('linked', pair.linked),
    ])
    witness.update(_common_slot_witness(pair_forms, pair.result))
    return witness


def verify_linkage(n: int, conf: Optional[CheckConf] = None) -> Certificate:
    """
    Searches every pair of the F2 family for a common slot. Each step passes once its witness
    identities hold; linked pairs are expected.
    """
    conf = conf or CheckConf()
    conf.check_n(n)
    log_info_heading("Probing pairwise linkage of the F2 family for n = %d", n)
    family = binary_family(n)
    labels = [format_bit_vector(d) for d in family]
    forms = list(family.values())
    steps = []
    for pair in pairwise_linkage(forms):
        steps.append(Step(
            'pair-%s-%s' % (labels[pair.first], labels[pair.second]),
            "phi_%s and phi_%s have a common slot space of dimension %d" % (
                labels[pair.first], labels[pair.second], pair.result.dimension),
            'linkage of pairs of forms from the family',
            VERDICT_PASS,
            _pair_witness(forms, labels, pair)))
    return Certificate(
        check=CHECK_LINKAGE,
        domain=F2.name,
        n=n,
        inputs=[str(alpha) for alpha in variables_of(n, F2)],
        steps=steps,
        assumptions=[ASSUMPTION_SLOT_CRITERION])


def _format_symbol(symbol: QuaternionSymbol) -> str:
    return '%s, %s' % (symbol.a, symbol.b)


def verify_theorem_a(
        symbols: Optional[Sequence[QuaternionSymbol]] = None,
        conf: Optional[CheckConf] = None) -> Certificate:
    """
    The quaternion algebras (x1, x2), (x1, x2 + 1), (x2, x1 + 1), (x2, x1*x2 + 1) over
    Q(x1, x2) have no common maximal subfield.
    """
    conf = conf or CheckConf()
    symbols = list(symbols) if symbols is not None else theorem_a_quaternions()
    if not symbols:
        raise ArityError("At least one quaternion symbol is needed")
    for symbol in symbols:
        for argument in (symbol.a, symbol.b):
            if argument.domain is not RAT or argument.n != 2:
                raise DomainMismatchError(
                    "Quaternion symbols must be over Q(x1, x2), got %s" % symbol)
    log_info_heading("Checking %d quaternion symbols for a common maximal subfield",
                     len(symbols))
    certificate = Certificate(
        check=CHECK_THEOREM_A,
        domain=RAT.name,
        n=2,
        inputs=[_format_symbol(symbol) for symbol in symbols],
        steps=[],
        assumptions=[
            ASSUMPTION_BASE_FIELD,
            ASSUMPTION_RESIDUE_FIELD,
            ASSUMPTION_SPECIALIZATION,
            ASSUMPTION_SLOT_CRITERION,
            ASSUMPTION_MAXIMAL_SUBFIELD,
            ASSUMPTION_M_LINKEDNESS,
        ])
    steps = certificate.steps

    identification = identify_with_family(symbols)
    steps.append(Step(
        'identification',
        "The norm forms of the symbols are the forms of the family for n = 2",
        'identification of the quaternion norm forms with the family',
        VERDICT_PASS if identification.matches else VERDICT_FAIL,
        OrderedDict([
            ('pairs', [
                OrderedDict([
                    ('symbol', _format_symbol(symbols[position])),
                    ('index', format_bit_vector(d)),
                    ('equal', equal),
                ])
                for position, d, equal in identification.pairs
            ]),
            ('reason', identification.reason),
        ])))

    claim = "The residue norm forms of the symbols share no common slot"
    paper_ref = 'no common maximal subfield'
    residue_map = ResidueMap(2)
    try:
        residue_forms = [residue_map.residue_pfister(norm_form(symbol)) for symbol in symbols]
        common = common_slot_space(residue_forms)
    except (ResidueValuationError, DegenerateResidueError, IsotropicFormError) as ex:
        steps.append(Step('symbol-common-slot', claim, paper_ref, VERDICT_ERROR,
                          OrderedDict([('reason', str(ex))])))
        return certificate
    witness: Witness = OrderedDict([
        ('residue_forms', [str(form) for form in residue_forms]),
        ('linked', common.dimension > 0),
    ])
    witness.update(_common_slot_witness(residue_forms, common))
    steps.append(Step('symbol-common-slot', claim, paper_ref,
                      VERDICT_FAIL if common.dimension else VERDICT_PASS, witness))

    if identification.matches:
        for step in verify_char0_reduction(2, conf=conf).steps:
            step.id = 'prop-main-' + step.id
            steps.append(step)

    labels = [str(position) for position in range(len(symbols))]
    steps.append(Step(
        'pairwise-linkage',
        "For every pair of residue norm forms the common slot space is computed and every "
        "witness re-verifies",
        'linkage of pairs of quaternion algebras',
        VERDICT_PASS,
        OrderedDict([
            ('pairs', [
                _pair_witness(residue_forms, labels, pair)
                for pair in pairwise_linkage(residue_forms)
            ]),
        ])))

    steps.append(Step(
        'maximal-subfield-bridge',
        "Two quaternion algebras share a maximal subfield iff their norm forms share a slot",
        'linkage of quaternion algebras via norm forms',
        VERDICT_CITED,
        OrderedDict([('assumption', ASSUMPTION_MAXIMAL_SUBFIELD)])))
    return certificate


def verify_oracle_isotropy(
        entries: Sequence[RatFunc],
        degree_bound: int,
        conf: Optional[CheckConf] = None) -> Certificate:
    """
    Runs the coordinate criterion and the brute-force search on one form over F2 and checks
    that they do not contradict each other.
    """
    conf = conf or CheckConf()
    f = DiagonalForm(tuple(entries))
    if f.domain is not F2:
        raise DomainMismatchError("The isotropy oracle works over F2, got %s" % f.domain)
    zero = RatFunc.zero(f.n, F2)
    steps = []

    criterion = is_isotropic_char2(f)
    witness: Witness = OrderedDict([
        ('isotropic', criterion.isotropic),
        ('rank', criterion.rank),
        ('dimension', criterion.dimension),
    ])
    if criterion.witness is not None:
        witness['identities'] = [identity_witness(f.entries, criterion.witness, zero)]
    steps.append(Step(
        'criterion',
        "The form %s is %s: its entries have rank %d over the squares" % (
            f, 'isotropic' if criterion.isotropic else 'anisotropic', criterion.rank),
        'isotropy in char 2 as linear dependence over the squares',
        VERDICT_PASS,
        witness))

    search = brute_isotropy_search(f, degree_bound, conf.ceiling)
    witness = OrderedDict([
        ('degree_bound', degree_bound),
        ('search_space_size', search.search_space_size),
        ('method', search.method),
        ('found', search.witness is not None),
    ])
    if search.witness is not None:
        witness['identities'] = [identity_witness(f.entries, search.witness, zero)]
    else:
        witness['note'] = UNVERIFIED_ONE_SIDED_ORACLE
    contradiction = search.witness is not None and not criterion.isotropic
    steps.append(Step(
        'brute-force-search',
        "The search over vectors of degree <= %d agrees with the criterion" % degree_bound,
        'independent enumeration of candidate vectors',
        VERDICT_FAIL if contradiction else VERDICT_PASS,
        witness))
    return Certificate(
        check=CHECK_ORACLE_ISOTROPY,
        domain=F2.name,
        n=f.n,
        inputs=[str(entry) for entry in f.entries],
        steps=steps,
        assumptions=[UNVERIFIED_ONE_SIDED_ORACLE])


def describe_family(
        n: int,
        domain: ScalarDomain = RAT,
        alphas: Optional[Sequence[RatFunc]] = None,
        conf: Optional[CheckConf] = None) -> Dict[str, Any]:
    conf = conf or CheckConf()
    conf.check_n(n)
    alphas = _slots_or_default(n, alphas, domain)
    family = notation1_family(n, alphas, domain)
    return OrderedDict([
        ('check', 'family'),
        ('domain', domain.name),
        ('n', n),
        ('inputs', [str(alpha) for alpha in alphas]),
        ('members', [
            OrderedDict([
                ('index', format_bit_vector(d)),
                ('form', str(form)),
                ('expansion', str(pfister_expand(form))),
            ])
            for d, form in family.items()
        ]),
    ])


def render_family(listing: Dict[str, Any], output_format: str) -> str:
    if output_format == 'json':
        return json.dumps(listing, indent=2, ensure_ascii=False) + '\n'
    lines = ['family over %s, n = %d, slots: %s' % (
        listing['domain'], listing['n'], '; '.join(listing['inputs']))]
    for member in listing['members']:
        lines.append('  phi_%s = %s' % (member['index'], member['form']))
        lines.append('      = %s' % member['expansion'])
    return '\n'.join(lines) + '\n'


def _collect_identities(value: Any) -> List[Witness]:
    found = []
    if isinstance(value, dict):
        if {'domain', 'n', 'entries', 'vector', 'value'} <= set(value.keys()):
            found.append(value)
        for item in value.values():
            found.extend(_collect_identities(item))
    elif isinstance(value, list):
        for item in value:
            found.extend(_collect_identities(item))
    return found


def verify_identity(identity: Witness) -> bool:
    """
    Re-parses a serialized identity and checks sum(entries[i] * vector[i]^2) = value exactly.
    """
    domain = domain_by_name(identity['domain'])
    n = identity['n']
    entries = [parse_expr(src, n, domain) for src in identity['entries']]
    vector = [parse_expr(src, n, domain) for src in identity['vector']]
    value = parse_expr(identity['value'], n, domain)
    return eval_bilinear(entries, vector) == value


def _recorded_witness(recorded: Certificate, step_id: str) -> Witness:
    try:
        return recorded.step_by_id(step_id).witness
    except KeyError:
        raise MalformedCertificateError(
            "The %s certificate has no %s step" % (recorded.check, step_id)) from None


def rerun_certificate(recorded: Certificate, conf: Optional[CheckConf] = None) -> Certificate:
    n = recorded.n
    if recorded.check == CHECK_PROP_CHAR2:
        return verify_prop_char2(
            n, [parse_expr(src, n, F2) for src in recorded.inputs], conf)
    if recorded.check == CHECK_PROP_MAIN:
        scaled = _recorded_witness(recorded, 'build-family').get('scaled_entry')
        return verify_char0_reduction(
            n, None if scaled is None else parse_scaled_entry(scaled), conf)
    if recorded.check == CHECK_THEOREM_A:
        pairs = parse_pair_list(';'.join(recorded.inputs), 2, RAT)
        return verify_theorem_a([QuaternionSymbol(a, b) for a, b in pairs], conf)
    if recorded.check == CHECK_LINKAGE:
        return verify_linkage(n, conf)
    if recorded.check == CHECK_ORACLE_ISOTROPY:
        degree_bound = _recorded_witness(recorded, 'brute-force-search')['degree_bound']
        return verify_oracle_isotropy(
            [parse_expr(src, n, F2) for src in recorded.inputs], degree_bound, conf)
    raise ValueError("Unknown check in certificate: %s" % recorded.check)


@dataclass(frozen=True)
class ReplayResult:
    # The re-run serializes to exactly the recorded certificate.
    identical: bool
    identities_checked: int
    # Descriptions of witness identities that did not hold.
    failures: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.identical and not self.failures


def replay_certificate(
        certificate_dict: Dict[str, Any],
        conf: Optional[CheckConf] = None) -> ReplayResult:
    """
    Re-runs the recorded check and re-verifies every witness identity. A certificate with missing
    or mistyped fields raises MalformedCertificateError.
    """
    try:
        return _replay(certificate_dict, conf)
    except (KeyError, TypeError, AttributeError) as ex:
        raise MalformedCertificateError("Malformed certificate: %r" % ex) from ex


def _replay(certificate_dict: Dict[str, Any], conf: Optional[CheckConf]) -> ReplayResult:
    recorded = Certificate.from_dict(certificate_dict)
    rerun = rerun_certificate(recorded, conf)
    recorded_json = json.dumps(certificate_dict, indent=2, ensure_ascii=False) + '\n'
    identical = rerun.to_json() == recorded_json
    if not identical:
        logging.warning("Re-running %s does not reproduce the recorded certificate",
                        recorded.check)

    failures = []
    identities = []
    for step in recorded.steps:
        for identity in _collect_identities(step.witness):
            identities.append(identity)
            if not verify_identity(identity):
                failures.append("step %s: sum of %s * (%s)^2 != %s" % (
                    step.id, identity['entries'], identity['vector'], identity['value']))
    logging.info("Replayed %s: identical=%s, %d identities checked, %d failed",
                 recorded.check, identical, len(identities), len(failures))
    return ReplayResult(identical, len(identities), tuple(failures))
