# -*- coding: utf-8 -*-
"""
Read and write distribution functions.

Empirical distribution functions are loaded from two-column CSV files
``x[, weight]``; expression graphs are stored as JSON documents mirroring
the graph (see :ref:`formats`).

.. autosummary::
    :nosignatures:

    load_empirical_csv
    distfn_from_dict
    save_distfn
    load_distfn
"""

import json

import numpy as np

from maxalg.distributions.families import FAMILIES, FamilySpec, make
from maxalg.distributions.utils import AffineRescale, Dirac, EmpiricalLeaf, \
    Pointwise1, Pointwise2, TruncateBelow
from maxalg.utils.errors import ConfigError, ParameterError
from maxalg.utils.utils import to_json


def _is_number(text):
    try:
        float(text)
    except ValueError:
        return False
    return True


def load_empirical_csv(path):
    """Load a weighted sample as :py:class:`EmpiricalLeaf`.

    The file has one sample per line, ``x`` or ``x,weight``. Lines starting
    with ``#`` are comments; a first line that is not numeric is taken as a
    header. An :py:exc:`OSError` is raised if the file cannot be read.
    """

    with open(path) as f:
        lines = [line for line in f
                 if line.strip() and not line.lstrip().startswith('#')]
    if lines and not _is_number(lines[0].split(',')[0]):
        lines = lines[1:]
    if not lines:
        raise ParameterError("No samples in {}.".format(path))
    try:
        data = np.loadtxt(lines, delimiter=',', comments='#', ndmin=2)
    except ValueError as e:
        raise ParameterError("Malformed sample in {}: {}".format(path, e))
    if data.ndim != 2 or data.shape[1] not in (1, 2):
        raise ParameterError("Expected one or two columns in {}.".format(
            path))
    weights = data[:, 1] if data.shape[1] == 2 else None
    return EmpiricalLeaf(data[:, 0], weights)


def distfn_from_dict(d):
    """Rebuild a distribution function from its
    :py:meth:`~maxalg.distributions.utils.AbstractDistFn.to_dict`
    representation."""

    try:
        node = d['node']
        children = [distfn_from_dict(c) for c in d.get('children', [])]
        if node == 'parametric':
            names = FAMILIES[d['family']][1]
            params = tuple(float(d['params'][name]) for name in names)
            base = children[0] if children else None
            return make(FamilySpec(d['family'], params, base))
        if node == 'empirical':
            return EmpiricalLeaf(d['points'], d['weights'])
        if node == 'dirac':
            return Dirac(d['location'])
        if node == 'affine':
            return AffineRescale(children[0], d['a'], d['b'])
        if node == 'truncate':
            return TruncateBelow(children[0], d['cut'])
        if node == 'pointwise1':
            return Pointwise1(d['op'], children[0], d.get('param'))
        if node == 'pointwise2':
            return Pointwise2(d['op'], children[0], children[1],
                              d.get('param'))
    except (KeyError, IndexError, TypeError) as e:
        raise ConfigError("Malformed distribution document: {!r}.".format(e))
    raise ConfigError("Unknown node kind {!r}.".format(node))


def save_distfn(F, path):
    to_json(F.to_dict(), path)


def load_distfn(path):
    with open(path) as f:
        try:
            d = json.load(f)
        except ValueError as e:
            raise ConfigError("Malformed JSON in {}: {}".format(path, e))
    return distfn_from_dict(d)
