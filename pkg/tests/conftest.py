"""Shared fixtures: the chain corpus used across the suite.

Chains are built through the validating constructor, so the corpus doubles
as a construction test.  Primes 2, 3 and 5 are covered; two chains carry an
infinitesimal final value, two have three levels, and the rest exercise
ramified, inert and mixed second levels.
"""

from fractions import Fraction as F

import pytest

from vforge import Chain, Poly, Value

P = Poly.parse


def _mk(p, levels):
    return Chain.from_levels(p, [(P(q), v) for q, v in levels])


def build_corpus():
    quartic_2 = "X^4 + 2X^3 - 4X^2 - 4X + 12"  # (X^2-2)^2 + 2X(X^2-2) + 8
    q4 = (P("X^2+X+1") ** 2 + P("2X") * P("X^2+X+1") + Poly.of(4)).to_text()
    chains = {
        "gauss2": _mk(2, [("X", Value(0))]),
        "shifted2": _mk(2, [("X - 1", Value(2))]),
        "c2": _mk(2, [("X", Value(F(1, 2))), ("X^2 - 2", Value(F(3, 2)))]),
        "c3": _mk(2, [("X", Value(F(1, 2))), ("X^2 - 2", Value(F(3, 2), 1))]),
        "c4": _mk(2, [("X", Value(0)), ("X^2 + X + 1", Value(1))]),
        "c5": _mk(2, [("X", Value(F(1, 3))), ("X^3 - 2", Value(F(4, 3)))]),
        "c6": _mk(
            2,
            [
                ("X", Value(F(1, 2))),
                ("X^2 - 2", Value(F(3, 2))),
                (quartic_2, Value(F(7, 2))),
            ],
        ),
        "c7": _mk(2, [("X", Value(0)), ("X^2 + X + 1", Value(1)), (q4, Value(F(5, 2)))]),
        "p3_inert": _mk(3, [("X", Value(0)), ("X^2 + 1", Value(F(1, 2)))]),
        "p3_ram": _mk(3, [("X", Value(F(1, 2))), ("X^2 - 3", Value(F(3, 2)))]),
        "p3_cubic": _mk(3, [("X", Value(F(1, 3))), ("X^3 - 3", Value(F(3, 2)))]),
        "p3_tau": _mk(3, [("X", Value(0)), ("X^2 + 1", Value(F(1, 2), 1))]),
        "p5_inert": _mk(5, [("X", Value(0)), ("X^2 + 2", Value(1))]),
        "p5_ram": _mk(5, [("X", Value(F(1, 2))), ("X^2 - 5", Value(F(3, 2)))]),
    }
    return chains


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def rational_corpus(corpus):
    """Chains with a rational final value (residue-transcendental)."""
    return {k: c for k, c in corpus.items() if c.classify() == "residue-transcendental"}


@pytest.fixture(scope="session")
def c2(corpus):
    return corpus["c2"]


@pytest.fixture(scope="session")
def c3(corpus):
    return corpus["c3"]


@pytest.fixture(scope="session")
def c4(corpus):
    return corpus["c4"]
