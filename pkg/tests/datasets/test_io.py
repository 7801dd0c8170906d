# coding=utf-8

"""Loading and storing distribution functions."""

import json
import os

import numpy as np
import pytest

from maxalg.conversion.utils import bn
from maxalg.datasets.utils import distfn_from_dict, load_distfn, \
    load_empirical_csv, save_distfn
from maxalg.distributions.families import CompoundPoissonFree, Dagum, \
    Frechet
from maxalg.distributions.utils import AffineRescale, Dirac, \
    EmpiricalLeaf, TruncateBelow, combine, mixture, power
from maxalg.utils.errors import ConfigError, ParameterError


def _write(path_wd, name, text):
    path = os.path.join(str(path_wd), name)
    with open(path, 'w') as f:
        f.write(text)
    return path


class TestEmpiricalCsv:

    def test_plain_samples(self, _path_wd):
        path = _write(_path_wd, 'sample.csv', '# data\nx\n3\n1\n2\n1\n')
        F = load_empirical_csv(path)
        assert isinstance(F, EmpiricalLeaf)
        np.testing.assert_allclose(F([0., 1., 2., 3.]),
                                   [0., 0.5, 0.75, 1.])

    def test_weighted_samples(self, _path_wd):
        path = _write(_path_wd, 'weighted.csv', 'x,weight\n1,1\n2,3\n')
        F = load_empirical_csv(path)
        assert F(1.) == 0.25
        assert F.class_tag == 'delta_plus_zero'

    def test_inline_comments_and_blank_lines(self, _path_wd):
        path = _write(_path_wd, 'commented.csv',
                      '\n1, 2  # heavy point\n\n3,1\n')
        F = load_empirical_csv(path)
        assert F(1.) == pytest.approx(2 / 3)
        assert F(3.) == 1

    @pytest.mark.parametrize('text', ['', '# only a comment\n', 'x\n',
                                      '1\nfoo\n', '1,1,1\n2,2,2\n',
                                      '1,-1\n2,1\n'])
    def test_malformed(self, text, _path_wd):
        path = _write(_path_wd, 'bad.csv', text)
        with pytest.raises(ParameterError):
            load_empirical_csv(path)

    def test_missing_file(self, _path_wd):
        with pytest.raises(OSError):
            load_empirical_csv(os.path.join(str(_path_wd), 'missing.csv'))


class TestDocuments:

    def test_composite_graph(self, _grid):
        F = mixture(
            AffineRescale(bn(Dagum(2., 1.5), 0.5), 2., -0.5),
            TruncateBelow(combine('free_max', Frechet(1.),
                                  CompoundPoissonFree(0.5, Frechet(2.))),
                          0.25),
            0.3)
        G = distfn_from_dict(json.loads(json.dumps(F.to_dict())))
        np.testing.assert_array_equal(G(_grid.points), F(_grid.points))
        assert G.class_tag == F.class_tag
        assert G.to_dict() == F.to_dict()

    def test_leaves(self):
        for F in [Dirac(-1.5), EmpiricalLeaf([1., 2., 2., 3.]),
                  power('bool', Dagum(1., 1.), 0.5)]:
            assert distfn_from_dict(F.to_dict()).to_dict() == F.to_dict()

    def test_save_and_load(self, _path_wd, _cp_free):
        path = os.path.join(str(_path_wd), 'cp.json')
        save_distfn(_cp_free, path)
        G = load_distfn(path)
        assert isinstance(G, CompoundPoissonFree)
        assert G(1.) == _cp_free(1.)

    @pytest.mark.parametrize('d', [
        {'node': 'spline'}, {'family': 'pareto'},
        {'node': 'parametric', 'family': 'lognormal', 'params': {}},
        {'node': 'dirac'}, {'node': 'affine', 'a': 1., 'b': 0.}])
    def test_malformed_documents(self, d):
        with pytest.raises(ConfigError):
            distfn_from_dict(d)

    def test_malformed_json(self, _path_wd):
        path = _write(_path_wd, 'broken.json', '{"node": ')
        with pytest.raises(ConfigError):
            load_distfn(path)
