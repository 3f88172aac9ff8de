"""Randomized construction fuzz: grow chains by lifting random residuals.

Each chain is grown from a random integer center by sampling an
irreducible residual polynomial over the current residue field, lifting
it to a key, and augmenting with a random admissible value.  Construction
alone already exercises the graded lift and the key test; the grown
chains are then put through the valuation laws, the root-distance
oracle, class enumeration and the file round trip.
"""

import random
from fractions import Fraction as F

import pytest

from vforge import (
    AlgebraicNumber,
    Chain,
    Poly,
    Value,
    delta_via_roots,
    enumerate_common_extensions,
    extend_to_number_field,
    value_min,
)
from vforge.finitefields import FqPoly, ff_is_irreducible

MAX_DEGREE = 8


def random_residual(rng, field, degree):
    while True:
        cc = [field.element([rng.randrange(field.p) for _ in range(field.degree)])
              for _ in range(degree)]
        rho = FqPoly(field, cc + [field.one])
        if not rho[0].is_zero() and ff_is_irreducible(rho):
            return rho


def random_chain(rng, p, levels=3, tau_last=False, cross_check=False):
    center = rng.randint(-p, p)
    denom = rng.choice([1, 1, 2, 3])
    beta0 = F(rng.randint(0, 2 * denom), denom)
    chain = Chain(p, Poly((-center, 1)), Value(beta0))
    for _ in range(levels - 1):
        field = chain.residue_field
        e_cur = chain.levels[-1].rel_denom
        d = chain.degree
        options = [
            f for f in (1, 2, 3)
            if e_cur * f >= 2 and e_cur * f * d <= MAX_DEGREE and field.degree * f <= MAX_DEGREE
        ]
        if not options:
            break
        f = rng.choice(options)
        rho = random_residual(rng, field, f)
        key = chain.key_from_residual(rho)
        if cross_check:
            # the extension search must rediscover the lifted key's tower
            # data from scratch: one extension, ramification equal to the
            # accumulated value denominator, residue degree grown by rho
            exts = extend_to_number_field(key, p)
            assert len(exts) == 1
            assert exts[0].e == chain.levels[-1].denom
            assert exts[0].f == field.degree * rho.degree
        current = chain.eval(key).r
        step_denom = rng.choice([1, 1, 2])
        beta = current + F(rng.randint(1, 2), step_denom)
        chain = chain.augment(key, Value(beta))
    if tau_last and len(chain.levels) >= 2:
        # rebuild the final level with an infinitesimal part added to its value
        levels_data = [(lev.key, lev.beta) for lev in chain.levels]
        last_key, last_beta = levels_data[-1]
        levels_data[-1] = (last_key, Value(last_beta.r, F(1, rng.randint(1, 3))))
        chain = Chain.from_levels(chain.p, levels_data)
    return chain


def rand_poly(rng, max_deg, spread, monic=False):
    deg = rng.randint(1 if monic else 0, max_deg)
    cc = [F(rng.randint(-spread, spread)) for _ in range(deg)]
    cc.append(F(1) if monic else F(rng.randint(1, spread)))
    return Poly(cc)


@pytest.mark.parametrize("p,seed", [(2, 1), (2, 2), (2, 3), (2, 4),
                                    (3, 1), (3, 2), (3, 3),
                                    (5, 1), (5, 2), (5, 3)])
def test_random_tower(p, seed):
    rng = random.Random(1000 * p + seed)
    chain = random_chain(rng, p, cross_check=True)
    assert chain.classify() == "residue-transcendental"

    # construction invariants
    degs = [lev.degree for lev in chain.levels]
    assert all(b % a == 0 and b > a for a, b in zip(degs, degs[1:]))
    text = chain.to_text()
    assert Chain.parse(text) == chain

    # valuation laws
    for _ in range(25):
        f = rand_poly(rng, 5, p**2)
        g = rand_poly(rng, 5, p**2)
        assert chain.eval(f * g) == chain.eval(f) + chain.eval(g)
        assert chain.eval(f + g) >= value_min(chain.eval(f), chain.eval(g))
    for _ in range(10):
        f = rand_poly(rng, 2 * chain.degree, p**2)
        w = chain.eval(f)
        truncs = [chain.truncate(i, f) for i in range(len(chain.levels))]
        assert all(t <= w for t in truncs) and w in truncs

    # growth invariant against the root-distance oracle
    exts = extend_to_number_field(chain.last_key, p)
    assert sum(e.e * e.f for e in exts) == chain.degree
    center = AlgebraicNumber(exts[0])
    delta = chain.epsilon(chain.last_key)
    for _ in range(6):
        f = rand_poly(rng, 5, p**2, monic=True)
        assert chain.epsilon(f) == delta_via_roots(center, delta, f)

    # class structure
    if chain.degree <= 6:
        report = enumerate_common_extensions(chain, samples=8, rng=rng)
        assert report.ok, [c.as_dict() for c in report.checks if not c.ok]
        assert report.class_count <= chain.degree


@pytest.mark.parametrize("p,seed", [(2, 11), (3, 12), (5, 13)])
def test_random_tower_with_infinitesimal_top(p, seed):
    rng = random.Random(1000 * p + seed)
    chain = random_chain(rng, p, tau_last=True)
    if chain.classify() != "value-transcendental":
        pytest.skip("generator stopped before a second level")

    for _ in range(15):
        f = rand_poly(rng, 5, p**2)
        g = rand_poly(rng, 5, p**2)
        assert chain.eval(f * g) == chain.eval(f) + chain.eval(g)
        assert chain.eval(f + g) >= value_min(chain.eval(f), chain.eval(g))

    # the top value and the growth invariant both carry the infinitesimal
    assert not chain.last_value.is_rational
    delta = chain.epsilon(chain.last_key)
    assert not delta.is_rational

    exts = extend_to_number_field(chain.last_key, p)
    center = AlgebraicNumber(exts[0])
    for _ in range(4):
        f = rand_poly(rng, 4, p**2, monic=True)
        assert chain.epsilon(f) == delta_via_roots(center, delta, f)

    if chain.degree <= 6:
        report = enumerate_common_extensions(chain, samples=6, rng=rng)
        assert report.ok
