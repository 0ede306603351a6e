import random

import pytest

from hlskit.exactalg import LaurentPoly, VarTable
from hlskit.poset import PosetSpec
from hlskit.series import make_context

SEED = 20260809


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_poly(rng, table, nvars=4, max_terms=5):
    """Small random Laurent polynomial: exponents in [-3, 3], coeffs in [-9, 9]."""
    p = LaurentPoly.zero(table)
    for _ in range(rng.randint(0, max_terms)):
        exps = {v: rng.randint(-3, 3) for v in rng.sample(range(nvars), rng.randint(0, nvars))}
        coeff = rng.randint(-9, 9)
        p = p + LaurentPoly.monomial(table, exps, coeff)
    return p


def reference_numerator_1_2(table):
    """The twelve numerator terms of the (1),(2) series, tabulated by hand.

    Golden oracle: the implementation must reproduce this polynomial exactly.
    """
    y0 = table.id("Y[1,0]")
    y1 = table.id("Y[1,1]")
    x0 = table.id("X{0}")
    x00 = table.id("X{0^2}")
    x1 = table.id("X{1}")
    x01 = table.id("X{0 1}")
    terms = [
        (+1, {y0: 1, y1: 2, x00: 1, x01: 1, x0: 1, x1: 1}),
        (+1, {y1: 2, x00: 1, x01: 1, x1: 1}),
        (+1, {y1: 2, x00: 1, x0: 1, x1: 1}),
        (-1, {y0: 1, y1: 1, x00: 1, x01: 1}),
        (-1, {y0: 1, y1: 1, x0: 1, x1: 1}),
        (-1, {y1: 2, x00: 1, x1: 1}),
        (-1, {y0: 1, x01: 1, x0: 1}),
        (-1, {y1: 1, x00: 1, x01: 1}),
        (-1, {y1: 1, x0: 1, x1: 1}),
        (+1, {y0: 1, x01: 1}),
        (+1, {y0: 1, x0: 1}),
        (+1, {}),
    ]
    acc = LaurentPoly.zero(table)
    for coeff, exps in terms:
        acc = acc + LaurentPoly.monomial(table, exps, coeff)
    return acc


@pytest.fixture
def ctx_1_2():
    return make_context(PosetSpec((1,), (2,)))
