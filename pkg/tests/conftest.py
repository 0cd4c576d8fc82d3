import os
import random
from pathlib import Path

import pytest

from apolar.algebra.models import Monomial, SparsePoly
from apolar.circuits.builders import build_row_product
from apolar.circuits.models import CircuitBuilder, LinearForm
from apolar.shared.scalars import EXACT

FIXTURES = Path(__file__).resolve().parent.parent / "apolar" / "cli" / "fixtures"


def pytest_collection_modifyitems(config, items):
    if os.getenv("APOLAR_RUN_SLOW", "0") == "1":
        return
    skip = pytest.mark.skip(reason="set APOLAR_RUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def rng():
    return random.Random(20240517)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def random_form(rng, nvars, lo=-2, hi=2, mode=EXACT):
    """A nonzero linear form with small integer coefficients."""
    while True:
        coeffs = {v: rng.randint(lo, hi) for v in range(1, nvars + 1)}
        form = LinearForm.of(coeffs, mode)
        if form:
            return form


def random_poly(rng, nvars, degree, terms=4, lo=-3, hi=3):
    """Homogeneous polynomial of the given degree; may come out zero."""
    return SparsePoly.from_terms([(Monomial.product_of(rng.randint(1, nvars) for _ in range(degree)),
                                   rng.randint(lo, hi)) for _ in range(terms)], nvars)


def random_skew_circuit(rng, nvars, degree, width=2, mode=EXACT):
    """Layered skew circuit: each layer multiplies sums of the previous layer by random forms."""
    b = CircuitBuilder(nvars, mode)
    layer = [b.const(rng.randint(1, 3)) for _ in range(width)]
    for _ in range(degree):
        nxt = []
        for _ in range(width):
            picks = rng.sample(layer, rng.randint(1, len(layer)))
            src = b.sum(picks)
            nxt.append(b.mullin(random_form(rng, nvars, mode=mode), src))
        layer = nxt
    return b.build(b.sum(layer))


@pytest.fixture
def skew_circuit_factory(rng):
    def make(nvars, degree, width=2):
        return random_skew_circuit(rng, nvars, degree, width)
    return make


@pytest.fixture
def row_product():
    return build_row_product
