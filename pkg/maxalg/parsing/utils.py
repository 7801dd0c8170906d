# -*- coding: utf-8 -*-
"""
Expression language for distribution functions.

Every expression is a call::

    expr   = call ;
    call   = ident , "(" , [ arg , { "," , arg } ] , ")" ;
    arg    = number | string | expr ;
    number = [ "+" | "-" ] , ( digits , [ "." , [ digits ] ] | "." , digits ) ,
             [ ( "e" | "E" ) , [ "+" | "-" ] , digits ] ;
    string = '"' , { char | '\\"' | '\\\\' } , '"' ;

Identifiers are case-insensitive, whitespace is ignored. Arity, argument kinds
and numeric ranges are checked while parsing against :py:data:`SIGNATURES`,
so a successfully parsed tree can always be elaborated up to class rules of
the distribution functions.

.. autosummary::
    :nosignatures:

    Token
    FamilyCall
    OpCall
    ArgSpec
    Signature
    tokenize
    parse
    unparse
"""

import math
import re
from dataclasses import dataclass, field
from typing import Tuple, Union

from maxalg.utils.errors import ArityError, ParseError, RangeError
from maxalg.utils.utils import format_number

IDENT = 'identifier'
NUMBER = 'number'
STRING = 'string'
LPAREN = "'('"
RPAREN = "')'"
COMMA = "','"
END = 'end of input'

_TOKEN_RE = re.compile(r'''
    (?P<space>\s+)
  | (?P<number>[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<identifier>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<comma>,)
''', re.VERBOSE)

_PUNCTUATION = {'lparen': LPAREN, 'rparen': RPAREN, 'comma': COMMA}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text):
    """Split ``text`` into tokens. The list ends with an ``END`` token."""

    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            if text[pos] == '"':
                raise ParseError("parse error at offset {}: unterminated "
                                 "string".format(pos), pos, {'"'})
            raise ParseError("parse error at offset {}: unexpected character "
                             "{!r}".format(pos, text[pos]), pos)
        group = match.lastgroup
        if group != 'space':
            kind = _PUNCTUATION.get(group, group)
            tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(Token(END, '', len(text)))
    return tokens


@dataclass(frozen=True)
class FamilyCall:
    """Call of a parametric family, e.g. ``dagum(1, 2)`` or
    ``cpc(1, frechet(1))``."""

    name: str
    args: Tuple = ()
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class OpCall:
    """Call of an operation on distribution functions, e.g.
    ``maxb(pareto(2), frechet(2))``."""

    name: str
    args: Tuple = ()
    offset: int = field(default=0, compare=False)


ExprAst = Union[FamilyCall, OpCall]

EXPR = 'expr'
NUM = 'num'
STR = 'str'


@dataclass(frozen=True)
class ArgSpec:
    """Kind and admissible range of a call argument."""

    kind: str
    low: float = None
    high: float = None
    low_open: bool = False
    high_open: bool = False
    integer: bool = False

    def describe(self):
        parts = []
        if self.integer:
            parts.append('an integer')
        if self.low is not None and self.high is not None:
            parts.append('in {}{}, {}{}'.format(
                '(' if self.low_open else '[', format_number(self.low),
                format_number(self.high), ')' if self.high_open else ']'))
        elif self.low is not None:
            parts.append('{} {}'.format('>' if self.low_open else '>=',
                                        format_number(self.low)))
        return ' '.join(parts) or 'a number'

    def admits(self, value):
        if self.integer and abs(value - round(value)) > 1e-9:
            return False
        if self.low is not None and (value < self.low or
                                     (self.low_open and value == self.low)):
            return False
        if self.high is not None and (value > self.high or
                                      (self.high_open and value == self.high)):
            return False
        return True


@dataclass(frozen=True)
class Signature:
    name: str
    family: bool
    args: Tuple[ArgSpec, ...]
    min_args: int = None

    @property
    def required(self):
        return len(self.args) if self.min_args is None else self.min_args


_E = ArgSpec(EXPR)
_REAL = ArgSpec(NUM)
_POSITIVE = ArgSpec(NUM, low=0., low_open=True)
_NONNEGATIVE = ArgSpec(NUM, low=0.)
_INDEX = ArgSpec(NUM, low=1., integer=True)


def _signatures(*entries):
    return {s.name: s for s in entries}


SIGNATURES = _signatures(
    Signature('gumbel', True, ()),
    Signature('frechet', True, (_POSITIVE,)),
    Signature('weibull', True, (_POSITIVE,)),
    Signature('freeexp', True, ()),
    Signature('pareto', True, (_POSITIVE,)),
    Signature('betalaw', True, (_POSITIVE,)),
    Signature('dagum', True, (_POSITIVE, _POSITIVE)),
    Signature('cpc', True, (_NONNEGATIVE, _E)),
    Signature('cpf', True, (_NONNEGATIVE, _E)),
    Signature('prelimit', True, (_NONNEGATIVE, _E, _INDEX)),
    Signature('maxc', False, (_E, _E)),
    Signature('maxf', False, (_E, _E)),
    Signature('maxb', False, (_E, _E)),
    Signature('powc', False, (_E, _POSITIVE)),
    Signature('powf', False, (_E, ArgSpec(NUM, low=1.))),
    Signature('powb', False, (_E, _NONNEGATIVE)),
    Signature('lambda', False, (_E,)),
    Signature('chi', False, (_E,)),
    Signature('chiinv', False, (_E,)),
    Signature('bn', False, (_E, _NONNEGATIVE)),
    Signature('tocl', False, (_E,)),
    Signature('tobool', False, (_E,)),
    Signature('scale', False, (_E, _POSITIVE, _REAL), min_args=2),
    Signature('truncate', False, (_E, _REAL)),
    Signature('dirac', False, (_REAL,)),
    Signature('empirical', False, (ArgSpec(STR),)),
    Signature('freeroot', False, (_E, _INDEX)),
    Signature('boolroot', False, (_E, _INDEX)),
    Signature('mix', False, (_E, _E, ArgSpec(NUM, low=0., high=1.))),
)


def _unescape(literal):
    return re.sub(r'\\(.)', r'\1', literal[1:-1])


class _Parser:
    """Recursive descent over the token list; one token of lookahead."""

    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def fail(self, expected):
        token = self.current
        got = END if token.kind == END else repr(token.text)
        raise ParseError("parse error at offset {}: expected {}, got "
                         "{}".format(token.offset,
                                     ' or '.join(sorted(expected)), got),
                         token.offset, expected)

    def expect(self, kind):
        if self.current.kind != kind:
            self.fail({kind})
        token = self.current
        self.pos += 1
        return token

    def parse(self):
        tree = self.call()
        if self.current.kind != END:
            self.fail({END})
        return tree

    def call(self):
        name_token = self.expect(IDENT)
        name = name_token.text.lower()
        self.expect(LPAREN)
        args = []
        offsets = []
        if self.current.kind != RPAREN:
            offsets.append(self.current.offset)
            args.append(self.arg())
            while self.current.kind == COMMA:
                self.pos += 1
                offsets.append(self.current.offset)
                args.append(self.arg())
        if self.current.kind != RPAREN:
            self.fail({RPAREN, COMMA})
        self.pos += 1
        return check_call(name, tuple(args), name_token.offset, offsets)

    def arg(self):
        token = self.current
        if token.kind == NUMBER:
            self.pos += 1
            return float(token.text)
        if token.kind == STRING:
            self.pos += 1
            return _unescape(token.text)
        if token.kind == IDENT:
            return self.call()
        self.fail({IDENT, NUMBER, STRING})


def _arg_kind(arg):
    if isinstance(arg, (FamilyCall, OpCall)):
        return EXPR
    if isinstance(arg, str):
        return STR
    return NUM


def check_call(name, args, offset=0, arg_offsets=None):
    """Validate a call against :py:data:`SIGNATURES` and build its node.

    Raises :py:exc:`~maxalg.utils.errors.ArityError` for unknown names,
    wrong argument counts or kinds and
    :py:exc:`~maxalg.utils.errors.RangeError` for numbers out of range.
    """

    if arg_offsets is None:
        arg_offsets = [offset] * len(args)
    signature = SIGNATURES.get(name)
    if signature is None:
        raise ArityError("arity error at offset {}: unknown call "
                         "'{}'".format(offset, name), offset)
    if not signature.required <= len(args) <= len(signature.args):
        if signature.required == len(signature.args):
            count = str(len(signature.args))
        else:
            count = '{} to {}'.format(signature.required, len(signature.args))
        raise ArityError("arity error at offset {}: {} takes {} argument(s), "
                         "got {}".format(offset, name, count, len(args)),
                         offset)
    for i, (arg, spec) in enumerate(zip(args, signature.args)):
        kind = _arg_kind(arg)
        if kind != spec.kind:
            raise ArityError("arity error at offset {}: argument {} of {} "
                             "must be {}, got {}".format(
                                 arg_offsets[i], i + 1, name,
                                 _KIND_NAMES[spec.kind], _KIND_NAMES[kind]),
                             arg_offsets[i])
        if kind == NUM and not math.isfinite(arg):
            raise RangeError("range error at offset {}: argument {} of {} "
                             "must be finite".format(arg_offsets[i], i + 1,
                                                     name), arg_offsets[i])
        if kind == NUM and not spec.admits(arg):
            raise RangeError("range error at offset {}: argument {} of {} "
                             "must be {}, got {}".format(
                                 arg_offsets[i], i + 1, name, spec.describe(),
                                 format_number(arg)), arg_offsets[i])
    node = FamilyCall if signature.family else OpCall
    return node(name, tuple(args), offset)


_KIND_NAMES = {EXPR: 'an expression', NUM: 'a number', STR: 'a string'}


def parse(text):
    """Parse ``text`` into a :py:class:`FamilyCall` or :py:class:`OpCall`
    tree.

    Parameters
    ----------

    text: str

    Returns
    -------

    : FamilyCall | OpCall
    """

    return _Parser(text).parse()


def _unparse_arg(arg):
    kind = _arg_kind(arg)
    if kind == EXPR:
        return unparse(arg)
    if kind == STR:
        return '"{}"'.format(arg.replace('\\', '\\\\').replace('"', '\\"'))
    return format_number(arg)


def unparse(ast):
    """Canonical text of ``ast``: lower case names, ``", "`` between
    arguments and the shortest exact rendering of numbers."""

    return '{}({})'.format(ast.name, ', '.join(_unparse_arg(a)
                                                for a in ast.args))
