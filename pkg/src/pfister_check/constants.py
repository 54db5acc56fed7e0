from pfister_check.helpers import multiline_str_to_list


VERSION = '0.3.0'

DEFAULT_MAX_N = 3

# n above this is refused outright, even when --max-n asks for it.
HARD_MAX_N = 4

# Largest enumeration size brute_isotropy_search accepts by default.
DEFAULT_ORACLE_CEILING = 2 ** 40

# Up to this many candidate vectors the oracle walks the space literally.
LITERAL_ENUMERATION_LIMIT = 2 ** 16

# Bound on m in two_independent: 2^m subset products are formed.
MAX_TWO_INDEPENDENCE_SLOTS = 8

MAX_N_ENV_VAR = 'PFISTER_CHECK_MAX_N'
CEILING_ENV_VAR = 'PFISTER_CHECK_CEILING'
LOG_LEVEL_ENV_VAR = 'PFISTER_CHECK_LOG_LEVEL'

OUTPUT_FORMATS = ['json', 'text']

SLOT_SEPARATOR = ';'

# Separates the two arguments of a quaternion symbol.
PAIR_SEPARATOR = ','

EXIT_CODE_PASS = 0
EXIT_CODE_FAIL = 1
EXIT_CODE_INPUT_ERROR = 2
EXIT_CODE_CEILING = 3

BIT_ORDER_CONVENTION = (
    'd = (d1, ..., dn) is enumerated by the integer d1 + 2*d2 + ... + 2^(n-1)*dn '
    '(d1 least significant), starting at 0 = (0, ..., 0)')

SIGN_CONVENTION = '<<a>> = <1, -a>; <<a1, ..., am>> = <<a1>> x ... x <<am>>; -a = a over F2'

BASE_FIELD_CONVENTION = (
    'k = Q with the 2-adic valuation and residue field F2, standing in for an arbitrary '
    'field of characteristic zero whose valuation extends the 2-adic one')

ASSUMPTION_BASE_FIELD = (
    'Base field substitution: the char-0 statement is checked over k = Q, where the 2-adic '
    'valuation is native; extending it to other fields of characteristic zero (Chevalley) '
    'is cited, not computed.')
ASSUMPTION_RESIDUE_FIELD = (
    'Residue field: the residue field of k is fixed to F2; a larger residue field of '
    'characteristic 2 is not examined.')
ASSUMPTION_SPECIALIZATION = (
    'Specialization argument: a common slot over k(x1..xn) would give a nontrivial solution '
    'of the homogeneous system of pure-part equations; scaling it to minimum Gauss value 0 '
    'and taking residues yields a common slot of the residue forms. This step is cited, '
    'not machine-checked.')
ASSUMPTION_SLOT_CRITERION = (
    'Slot criterion: beta != 0 is a slot of an anisotropic Pfister form iff beta is '
    'represented by its pure part; both directions are taken as known.')
ASSUMPTION_MAXIMAL_SUBFIELD = (
    'Linkage: two quaternion algebras (a, b), (c, d) share a maximal subfield iff their norm '
    'forms <<a, b>>, <<c, d>> share a common slot.')
ASSUMPTION_M_LINKEDNESS = (
    'm-linkedness: n-fold Pfister forms without a common 1-fold factor cannot share a '
    'common (n-1)-fold factor (for n >= 2 such a factor contains a 1-fold one), so any '
    'family containing them refutes 2^n-linkedness of I^n F.')

UNVERIFIED_ONE_SIDED_ORACLE = (
    'The brute-force search is one-sided: finding no vector up to the degree bound does not '
    'prove anisotropy.')

CHAR2_FAIL_ADVICE = " ".join(multiline_str_to_list("""
    A FAIL on 2-independent slots contradicts the known char-2 theorem for such families,
    so either the slots are not what was intended or this tool has a bug.
"""))
