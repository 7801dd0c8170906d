# -*- coding: utf-8 -*-
"""Exceptions raised by the toolbox.

Every exception derives from :py:class:`MaxAlgError` and carries the exit code
the command line front end returns when it surfaces the error. Where a builtin
exception has the same meaning, it is used as second base class so callers
can catch either.

.. autosummary::
    :nosignatures:

    MaxAlgError
    DomainError
    ClassError
    ParameterError
    HypothesisError
    TailVanished
    EmptyGrid
    ConfigError
    ExprError
    ParseError
    ArityError
    RangeError
"""


class MaxAlgError(Exception):
    """Base class of all toolbox errors."""

    exit_code = 1


class DomainError(MaxAlgError, ValueError):
    """An argument lies outside the domain of a scalar operation."""

    exit_code = 3


class ClassError(MaxAlgError, TypeError):
    """A distribution function does not belong to the required class.

    For instance, Boolean max-convolutions are only defined for distribution
    functions supported on the positive half-line.
    """

    exit_code = 3


class ParameterError(MaxAlgError, ValueError):
    """A family or sequence parameter is out of range."""

    exit_code = 3


class HypothesisError(MaxAlgError, ValueError):
    """The hypothesis of a limit theorem is not met by its input."""

    exit_code = 3


class TailVanished(MaxAlgError, ArithmeticError):
    """The survival function is zero at a tail probe."""

    exit_code = 3


class EmptyGrid(MaxAlgError, ValueError):
    """No grid point survives the exclusion of discontinuities."""

    exit_code = 3


class ConfigError(MaxAlgError, ValueError):
    """Invalid settings in a config file, an experiment document or on the
    command line."""

    exit_code = 2


class ExprError(MaxAlgError, ValueError):
    """Base class of errors in the expression language.

    Parameters
    ----------

    message: str
        Human readable description.
    offset: int
        Character offset into the source text where the error was detected.
    """

    exit_code = 2

    def __init__(self, message, offset=0):
        super(ExprError, self).__init__(message)
        self.offset = offset


class ParseError(ExprError):
    """Syntax error, raised with the set of tokens that would have been
    accepted at ``offset``."""

    def __init__(self, message, offset=0, expected=()):
        super(ParseError, self).__init__(message, offset)
        self.expected = frozenset(expected)


class ArityError(ExprError):
    """Wrong number or kind of arguments in a call."""


class RangeError(ExprError):
    """A numeric argument is outside the range its call accepts."""
