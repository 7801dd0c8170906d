"""General utility functions on project-level.

Config loading, number formatting and output writers shared by the
sub-packages.
"""

import ast
import configparser
import json
import os
import sys
from functools import lru_cache

import numpy as np

from maxalg.utils.errors import ConfigError

DEFAULTS_PATH = os.path.abspath(os.path.join(
    os.path.dirname(__file__), '..', 'config_defaults'))


def load_config(filepath):
    """
    Load a config file from ``filepath``.
    """

    if not os.path.isfile(filepath):
        raise ConfigError(
            "Configuration file not found at {}.".format(filepath))

    config = configparser.ConfigParser()
    config.optionxform = str
    config.read(filepath)

    return config


@lru_cache(maxsize=None)
def get_default_config():
    """Return the settings shipped in ``config_defaults``.

    The returned object is shared; do not modify it. Use
    :py:func:`maxalg.bin.utils.update_setup` to obtain a private copy that
    includes user settings.
    """

    return load_config(DEFAULTS_PATH)


def config_string_to_list(string):
    """Parse a list or set literal from a config value, e.g.
    ``[10, 31, 100]``."""

    try:
        value = ast.literal_eval(string)
    except (ValueError, SyntaxError):
        raise ConfigError("Cannot parse config value {!r}.".format(string))
    if isinstance(value, (int, float)):
        return [value]
    return list(value)


def config_string_to_set_of_strings(string):
    return {str(s) for s in config_string_to_list(string)}


def parse_number_list(string):
    """Parse comma separated numbers like ``"10,31,100"``."""

    try:
        return [float(s) for s in string.split(',') if s.strip()]
    except ValueError:
        raise ConfigError("Cannot parse number list {!r}.".format(string))


def format_number(value):
    """Shortest string that reads back as the same 64-bit float.

    Integral values drop the trailing ``.0``.
    """

    text = repr(float(value))
    if text.endswith('.0'):
        text = text[:-2]
    return text


def get_json_type(obj):
    """Convert numpy scalars and arrays to serializable python objects."""

    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if hasattr(obj, 'to_dict'):
        return obj.to_dict()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError("Not JSON Serializable: {}".format(type(obj).__name__))


def to_json(data, path=None):
    """Serialize ``data`` and write it to ``path``, or return the text if no
    path is given.

    A :py:exc:`TypeError` is raised if objects in ``data`` are not JSON
    serializable.
    """

    text = json.dumps(data, default=get_json_type, indent=2, sort_keys=True)
    if path is None:
        return text
    with open(path, 'w') as f:
        f.write(text + '\n')


def to_csv(header, columns, path=None):
    """Write equally long numeric ``columns`` as CSV under ``header``.

    Numbers are printed with :py:func:`format_number`, which makes the output
    bit-stable for identical inputs.
    """

    lines = [','.join(header)]
    for row in zip(*columns):
        lines.append(','.join(format_number(v) for v in row))
    text = '\n'.join(lines)
    if path is None:
        return text
    with open(path, 'w') as f:
        f.write(text + '\n')


def echo(text, verbose=True):
    """Write a progress message to stderr. stdout carries data only."""

    if not verbose:
        return
    sys.stderr.write(u'{}'.format(text))
    sys.stderr.flush()
