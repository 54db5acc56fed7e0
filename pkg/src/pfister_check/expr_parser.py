"""
Recursive descent parser for rational expressions in x1, ..., xn:

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | base ('^' uint)?
    base   := 'x' uint | uint | '(' expr ')'

Whitespace is insignificant. The leading '-' in factor admits the canonical display of
negative coefficients, e.g. '-x1 + 1'.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from pfister_check.constants import PAIR_SEPARATOR, SLOT_SEPARATOR
from pfister_check.errors import (
    ArityError,
    ExprSyntaxError,
    UnknownVariableError,
    ZeroDivisionInFieldError,
)
from pfister_check.rat_func import RatFunc
from pfister_check.scalar_domain import ScalarDomain


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


OPERATOR_CHARS = '+-*/^()'


def tokenize(src: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        ch = src[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            start = pos
            while pos < len(src) and src[pos].isdigit():
                pos += 1
            tokens.append(Token('NUMBER', src[start:pos], start))
        elif ch == 'x':
            start = pos
            pos += 1
            while pos < len(src) and src[pos].isdigit():
                pos += 1
            if pos == start + 1:
                raise ExprSyntaxError("Variable name 'x' must be followed by an index", start)
            tokens.append(Token('VAR', src[start:pos], start))
        elif ch in OPERATOR_CHARS:
            tokens.append(Token(ch, ch, pos))
            pos += 1
        else:
            raise ExprSyntaxError("Unexpected character %r" % ch, pos)
    tokens.append(Token('END', '', len(src)))
    return tokens


@dataclass(frozen=True)
class Variable:
    index: int
    position: int


@dataclass(frozen=True)
class IntLiteral:
    value: int


@dataclass(frozen=True)
class Negation:
    operand: 'ExprAst'


@dataclass(frozen=True)
class Power:
    base: 'ExprAst'
    exponent: int


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: 'ExprAst'
    right: 'ExprAst'
    position: int


ExprAst = Union[Variable, IntLiteral, Negation, Power, BinaryOp]


class Parser:
    tokens: List[Token]
    pos: int

    def __init__(self, src: str) -> None:
        self.tokens = tokenize(src)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def eat(self, kind: str) -> Token:
        token = self.current
        if token.kind != kind:
            expected = 'end of input' if kind == 'END' else repr(kind)
            found = 'end of input' if token.kind == 'END' else repr(token.text)
            raise ExprSyntaxError("Expected %s, found %s" % (expected, found), token.position)
        self.pos += 1
        return token

    def parse(self) -> ExprAst:
        node = self.expr()
        self.eat('END')
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while self.current.kind in ('+', '-'):
            token = self.eat(self.current.kind)
            node = BinaryOp(token.kind, node, self.term(), token.position)
        return node

    def term(self) -> ExprAst:
        node = self.factor()
        while self.current.kind in ('*', '/'):
            token = self.eat(self.current.kind)
            node = BinaryOp(token.kind, node, self.factor(), token.position)
        return node

    def factor(self) -> ExprAst:
        if self.current.kind == '-':
            self.eat('-')
            return Negation(self.factor())
        node = self.base()
        if self.current.kind == '^':
            self.eat('^')
            exponent = self.eat('NUMBER')
            node = Power(node, int(exponent.text))
        return node

    def base(self) -> ExprAst:
        token = self.current
        if token.kind == 'VAR':
            self.eat('VAR')
            return Variable(int(token.text[1:]), token.position)
        if token.kind == 'NUMBER':
            self.eat('NUMBER')
            return IntLiteral(int(token.text))
        if token.kind == '(':
            self.eat('(')
            node = self.expr()
            self.eat(')')
            return node
        found = 'end of input' if token.kind == 'END' else repr(token.text)
        raise ExprSyntaxError("Expected a variable, a number or '(', found %s" % found,
                              token.position)


def parse_ast(src: str) -> ExprAst:
    return Parser(src).parse()


def evaluate_ast(node: ExprAst, n: int, domain: ScalarDomain) -> RatFunc:
    if isinstance(node, Variable):
        if not 1 <= node.index <= n:
            raise UnknownVariableError(
                "Unknown variable x%d at position %d: only x1..x%d are available" % (
                    node.index, node.position, n))
        return RatFunc.variable(node.index - 1, n, domain)
    if isinstance(node, IntLiteral):
        return RatFunc.from_int(n, domain, node.value)
    if isinstance(node, Negation):
        return -evaluate_ast(node.operand, n, domain)
    if isinstance(node, Power):
        return evaluate_ast(node.base, n, domain) ** node.exponent
    left = evaluate_ast(node.left, n, domain)
    right = evaluate_ast(node.right, n, domain)
    if node.op == '+':
        return left + right
    if node.op == '-':
        return left - right
    if node.op == '*':
        return left * right
    if right.is_zero():
        raise ZeroDivisionInFieldError(
            "Division by a subexpression equal to 0 (at position %d)" % node.position)
    return left / right


def parse_expr(src: str, n: int, domain: ScalarDomain) -> RatFunc:
    return evaluate_ast(parse_ast(src), n, domain)


def parse_expr_list(
        src: str,
        n: int,
        domain: ScalarDomain,
        expected_count: Optional[int] = None) -> List[RatFunc]:
    """
    Expressions separated by ';'. A trailing separator is allowed.
    """
    pieces = src.split(SLOT_SEPARATOR)
    if pieces and not pieces[-1].strip():
        pieces = pieces[:-1]
    values = []
    offset = 0
    for piece in pieces:
        try:
            values.append(parse_expr(piece, n, domain))
        except ExprSyntaxError as ex:
            raise ExprSyntaxError(
                "%s in list item %d" % (ex.detail, len(values) + 1),
                offset + ex.position) from ex
        offset += len(piece) + len(SLOT_SEPARATOR)
    if expected_count is not None and len(values) != expected_count:
        raise ArityError("Expected %d expressions, got %d in %r" % (
            expected_count, len(values), src))
    return values


def variable_indices(node: ExprAst) -> List[int]:
    if isinstance(node, Variable):
        return [node.index]
    if isinstance(node, IntLiteral):
        return []
    if isinstance(node, Negation):
        return variable_indices(node.operand)
    if isinstance(node, Power):
        return variable_indices(node.base)
    return variable_indices(node.left) + variable_indices(node.right)


def max_variable_index(src: str) -> int:
    """
    Highest i such that xi occurs in a ';'-separated list, or 0 when no variable occurs.
    """
    indices = [0]
    for piece in src.split(SLOT_SEPARATOR):
        if piece.strip():
            indices.extend(variable_indices(parse_ast(piece)))
    return max(indices)


def parse_pair_list(src: str, n: int, domain: ScalarDomain) -> List[Tuple[RatFunc, RatFunc]]:
    """
    Pairs 'a, b' separated by ';', e.g. 'x1, x2; x1, x2 + 1'.
    """
    pairs = []
    for piece in src.split(SLOT_SEPARATOR):
        if not piece.strip():
            continue
        values = piece.split(PAIR_SEPARATOR)
        if len(values) != 2:
            raise ArityError("Expected a pair 'a%s b', got %r" % (
                PAIR_SEPARATOR, piece.strip()))
        pairs.append((parse_expr(values[0], n, domain), parse_expr(values[1], n, domain)))
    return pairs
