# coding=utf-8

"""py.test fixtures with module-scope."""

import configparser
import os

import numpy as np
import pytest

from maxalg.bin.utils import update_setup
from maxalg.distributions.families import CompoundPoissonFree, Dagum, \
    Frechet, Gumbel, Pareto
from maxalg.distributions.utils import EvalGrid


@pytest.fixture(scope='function')
def _path_wd(tmpdir_factory):
    return tmpdir_factory.mktemp('wd')


def write_config(path_wd, params):
    """Write ``params`` as ini file into ``path_wd`` and return its path."""

    config = configparser.ConfigParser()
    config.optionxform = str
    config.read_dict(params)
    config_filepath = os.path.join(str(path_wd), 'config')
    with open(config_filepath, 'w') as configfile:
        config.write(configfile)
    return config_filepath


@pytest.fixture(scope='function')
def _config(_path_wd):
    return update_setup(write_config(_path_wd, {}))


@pytest.fixture(scope='session')
def _rng():
    return np.random.default_rng(0)


@pytest.fixture(scope='session')
def _grid():
    return EvalGrid.linear(-2., 50., 1041)


@pytest.fixture(scope='session')
def _dagum():
    return Dagum(1., 1.)


@pytest.fixture(scope='session')
def _frechet():
    return Frechet(1.)


@pytest.fixture(scope='session')
def _pareto():
    return Pareto(1.)


@pytest.fixture(scope='session')
def _gumbel():
    return Gumbel()


@pytest.fixture(scope='session')
def _cp_free():
    return CompoundPoissonFree(0.5, Frechet(1.))


@pytest.fixture(scope='session', params=['dagum', 'dagum2', 'cp_free'])
def _positive_law(request):
    """Distribution functions supported on [0, inf)."""

    return {'dagum': Dagum(1., 1.), 'dagum2': Dagum(1., 2.),
            'cp_free': CompoundPoissonFree(0.5, Frechet(1.))}[request.param]


@pytest.fixture(scope='session')
def _short_schedule():
    return [10, 31, 100, 316, 1000]
