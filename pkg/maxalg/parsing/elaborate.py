# -*- coding: utf-8 -*-
"""
Build distribution functions from parsed expressions.

.. autosummary::
    :nosignatures:

    elaborate
    compile_expression
"""

from maxalg.conversion.utils import bn, boolean_to_classical, \
    classical_to_boolean
from maxalg.datasets.utils import load_empirical_csv
from maxalg.distributions.families import FamilySpec, cp_prelimit, make
from maxalg.distributions.utils import apply_map, bool_nth_root, combine, \
    Dirac, free_nth_root, mixture, power, rescale, truncate
from maxalg.parsing.utils import FamilyCall, OpCall, parse
from maxalg.utils.errors import ExprError, MaxAlgError

_OPERATIONS = {
    'maxc': lambda F, G: combine('classical_max', F, G),
    'maxf': lambda F, G: combine('free_max', F, G),
    'maxb': lambda F, G: combine('bool_max', F, G),
    'powc': lambda F, t: power('classical', F, t),
    'powf': lambda F, t: power('free', F, t),
    'powb': lambda F, t: power('bool', F, t),
    'lambda': lambda F: apply_map('lambda_vee', F),
    'chi': lambda F: apply_map('chi', F),
    'chiinv': lambda F: apply_map('chi_inv', F),
    'bn': bn,
    'tocl': boolean_to_classical,
    'tobool': classical_to_boolean,
    'scale': rescale,
    'truncate': truncate,
    'dirac': Dirac,
    'empirical': load_empirical_csv,
    'freeroot': lambda F, n: free_nth_root(F, round(n)),
    'boolroot': lambda F, n: bool_nth_root(F, round(n)),
    'mix': mixture,
}


def _family(name, args):
    if name == 'prelimit':
        lam, base, n = args
        return cp_prelimit(lam, base, round(n))
    params = tuple(a for a in args if isinstance(a, float))
    bases = [a for a in args if not isinstance(a, float)]
    return make(FamilySpec(name, params, bases[0] if bases else None))


def elaborate(ast, path=None):
    """Construct the distribution function described by ``ast``.

    Class and parameter errors of the distribution layer are re-raised with
    the path of the offending call appended to the message, e.g.
    ``maxb/1:gumbel``, and stored as ``error.path``.
    """

    if path is None:
        path = ast.name
    args = []
    for i, arg in enumerate(ast.args):
        if isinstance(arg, (FamilyCall, OpCall)):
            arg = elaborate(arg, '{}/{}:{}'.format(path, i, arg.name))
        args.append(arg)
    try:
        if isinstance(ast, FamilyCall):
            return _family(ast.name, args)
        return _OPERATIONS[ast.name](*args)
    except ExprError:
        raise
    except MaxAlgError as e:
        if getattr(e, 'path', None) is not None:
            raise
        error = type(e)("{} (at {})".format(e, path))
        error.path = path
        raise error from e


def compile_expression(text):
    """Parse and elaborate ``text`` in one step."""

    return elaborate(parse(text))
