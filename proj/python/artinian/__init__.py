"""Homological invariants of Artinian local algebras."""

import json

from . import _core
from ._core import Error, InvariantViolation, ParseError, UnsupportedField

__all__ = [
    "Ring",
    "reproduce",
    "scan",
    "fibre_product",
    "Error",
    "InvariantViolation",
    "ParseError",
    "UnsupportedField",
]


class Ring:
    """An Artinian local algebra with cached resolutions of its residue field."""

    def __init__(self, session):
        self._s = session

    @classmethod
    def from_text(cls, text, field=None, seed=None):
        kwargs = {} if seed is None else {"seed": seed}
        return cls(_core.Session.from_text(text, field, **kwargs))

    @classmethod
    def from_file(cls, path, field=None, seed=None):
        kwargs = {} if seed is None else {"seed": seed}
        return cls(_core.Session.from_file(str(path), field, **kwargs))

    field = property(lambda self: self._s.field)
    presentation = property(lambda self: self._s.presentation)
    hash = property(lambda self: self._s.hash)
    e = property(lambda self: self._s.e)
    dim = property(lambda self: self._s.dim)
    gorenstein = property(lambda self: self._s.gorenstein)
    hypersurface = property(lambda self: self._s.hypersurface)
    fibre_product = property(lambda self: self._s.fibre_product)

    def algebra(self):
        return json.loads(self._s.algebra_json())

    def betti(self, n):
        return list(self._s.betti(n))

    def ring_profile(self):
        return list(self._s.ring_profile())

    def syzygy_profile(self, n):
        return list(self._s.syzygy_profile(n))

    def golod(self, n_max=None):
        return json.loads(self._s.golod_json(n_max))

    def table(self, n_max, l_max):
        return json.loads(self._s.table_json(n_max, l_max))

    def star_scan(self, bound):
        return json.loads(self._s.star_scan_json(bound))

    def burch(self):
        return self._s.burch()

    def simple_summand(self, n):
        return self._s.simple_summand(n)

    def exceptional(self, bound):
        return json.loads(self._s.exceptional_json(bound))

    def summand(self, a, b, maps=False):
        return json.loads(self._s.summand_json(a, b, maps))

    def decompose(self, n, maps=False):
        return json.loads(self._s.decompose_json(n, maps))

    def golod_decomposition(self, shifts, mode="numeric"):
        return json.loads(self._s.golod_decomposition_json(shifts, mode))

    def monotonicity(self, module, a, b, bound):
        return json.loads(self._s.monotonicity_json(module, a, b, bound))

    def tachikawa(self, n_max):
        return json.loads(self._s.tachikawa_json(n_max))

    def formulas(self, n_max):
        return json.loads(self._s.formulas_json(n_max))


def reproduce():
    """Outcomes of every bundled corpus expectation."""
    return json.loads(_core.reproduce_json())


def scan(config, jobs=1, where=None):
    """Scan records for a config given as a dict."""
    return json.loads(_core.scan_json(json.dumps(config), jobs, where))


def fibre_product(s_text, t_text):
    """Presentation text of the fibre product of two presentations."""
    return _core.fibre_product_text(s_text, t_text)
