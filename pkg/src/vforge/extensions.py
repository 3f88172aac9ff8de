"""Extensions of the p-adic valuation to number fields Q[Y]/(m).

Each extension is represented by an approximating chain in Y whose last
key converges to one p-adic factor of m: the search starts from the
center 0, walks the polygon faces of the expansion of m in the current
key, lifts irreducible residual factors to new keys, and splits whenever
the residual factors.  A branch is isolated once the minimum-value index
range of the expansion of m has width one; from then on improvement
steps keep a single child and the assigned values grow without bound.

Values v(g(a)) are read off the approximating chain.  For arguments of
degree below the current key degree the chain value is already exact;
otherwise the chain is improved until the constant digit of the
expansion is the strict unique minimum, which pins the exact value.
Improvement is guarded by a lock, so concurrent valuation queries on a
shared extension are safe.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .finitefields import ff_factor
from .maclane import Chain
from .newton import NewtonPolygon
from .polynomials import (
    Poly,
    difference_resultant,
    hasse_derivative,
    padic_valuation,
    q_expansion,
)
from .values import INFINITY, Value

DEFAULT_DEGREE_BOUND = 8


class ReducibleError(ValueError):
    """The given minimal polynomial factors over Q; carries one factor."""

    def __init__(self, poly: Poly, factor: Poly):
        super().__init__(f"{poly} is reducible; factor {factor}")
        self.factor = factor


def rational_factor_list(m: Poly) -> list[Poly]:
    """Monic irreducible factors of m over Q (multiplicity flattened)."""
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(m.coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, x))
    out = []
    for fac, mult in factors:
        poly = sympy.Poly(fac, x)
        cc = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        lead = cc[-1]
        monic = Poly([c / lead for c in cc])
        out.extend([monic] * mult)
    return out


def is_irreducible_over_q(m: Poly) -> bool:
    return len(rational_factor_list(m)) == 1


def _expansion_points(chain: Chain, m: Poly):
    """(index, value) points of the expansion of m in the last key.

    Digit values are prefix values, so they do not move when the last
    assigned value changes.
    """
    pts = []
    for j, digit in enumerate(q_expansion(m, chain.last_key)):
        if digit.is_zero():
            continue
        pts.append((j, chain.eval(digit).r))
    return pts


def _active_width(chain: Chain, m: Poly) -> int:
    """Width of the minimum-value index range of m's expansion."""
    best = None
    achieving = []
    beta = chain.last_value
    for j, v in _expansion_points(chain, m):
        term = Value(v) + beta.scale(j)
        if best is None or term < best:
            best = term
            achieving = [j]
        elif term == best:
            achieving.append(j)
    return achieving[-1] - achieving[0]


def _attach(chain: Chain, psi: Poly, value: Value) -> Chain:
    if psi.degree == chain.degree:
        return chain.refine(psi, value)
    return chain.augment(psi, value)


def _branch_children(chain: Chain, m: Poly) -> list[Chain]:
    """One search step: all continuations of a value-matched branch toward m.

    Only the non-monomial factors of the residual are followed: branches for
    roots strictly closer along the current key were already enumerated when
    the key received its value, since every steeper polygon face spawns its
    own sibling.
    """
    out = []
    residual = chain.residual_polynomial(m)
    for u, _mult in ff_factor(residual):
        if u.degree == 1 and u[0].is_zero():
            continue
        psi = chain.key_from_residual(u)
        digits = q_expansion(m, psi)
        if digits[0].is_zero():
            # psi divides m exactly, hence equals m: the branch is exact and
            # any larger assigned value works
            out.append(_attach(chain, psi, chain.eval(psi) + Value(1)))
            continue
        pts = [(j, chain.eval(d).r) for j, d in enumerate(digits) if not d.is_zero()]
        current = chain.eval(psi).r
        for pslope, _plen in NewtonPolygon(pts).slopes():
            plam = -pslope
            if plam > current:
                out.append(_attach(chain, psi, Value(plam)))
    return out


def _is_isolated(chain: Chain, m: Poly) -> bool:
    return chain.last_key == m or _active_width(chain, m) == 1


class ValuationExtension:
    """One extension of v_p to Q[Y]/(m), held as an improvable chain."""

    def __init__(self, m: Poly, p: int, chain: Chain | None, index: int, rational_root=None):
        self.m = m
        self.p = p
        self.index = index
        self.rational_root = rational_root
        self._chain = chain
        self._lock = threading.RLock()
        if rational_root is not None:
            self.e = 1
            self.f = 1
        else:
            self.e = chain.levels[-1].denom
            self.f = chain.residue_field.degree

    @property
    def chain(self) -> Chain:
        with self._lock:
            return self._chain

    def _improve(self):
        children = _branch_children(self._chain, self.m)
        assert len(children) == 1, "isolated branch must improve deterministically"
        self._chain = children[0]

    def is_exact(self) -> bool:
        """Whether the approximating chain already ends in m itself."""
        return self.rational_root is not None or self._chain.last_key == self.m

    def ensure_value_above(self, bound: Fraction):
        """Improve the approximation until the last assigned value clears bound."""
        if self.rational_root is not None:
            return
        with self._lock:
            while not self.is_exact() and self._chain.last_value.r <= bound:
                self._improve()

    def valuation(self, g: Poly) -> Value:
        """v(g(a)) for the root a tracked by this extension; exact."""
        g = Poly.of(g) % self.m
        if g.is_zero():
            return INFINITY
        if self.rational_root is not None:
            return padic_valuation(g(self.rational_root), self.p)
        with self._lock:
            while True:
                chain = self._chain
                if g.degree < chain.degree:
                    return chain.eval(g)
                digits = q_expansion(g, chain.last_key)
                if not digits[0].is_zero():
                    v0 = chain.eval(digits[0])
                    beta = chain.last_value
                    if all(
                        digit.is_zero() or chain.eval(digit) + beta.scale(j) > v0
                        for j, digit in enumerate(digits[1:], start=1)
                    ):
                        return v0
                self._improve()

    def difference_profile(self) -> list[Fraction]:
        """Multiset of v(a - b) over the other roots b of m, via the local
        polygon of m(a + T)/T."""
        if self.m.degree == 1:
            return []
        pts = []
        for j in range(self.m.degree):
            coeff = hasse_derivative(self.m, j + 1)
            v = self.valuation(coeff)
            if not v.infinite:
                pts.append((j, v.r))
        return NewtonPolygon(pts).root_valuations()

    def best_rational_approximation(self) -> Value:
        """Largest v(a - c) over rational c; infinite when a lies in Q_p."""
        if self.rational_root is not None or self.e * self.f == 1:
            return INFINITY
        return self.chain.levels[0].beta

    def root_distances_to(self, other_poly: Poly) -> list:
        """Multiset of v(a - b) over roots b of other_poly, exact Values.

        Uses the polygon of other_poly(a + T); entries can be infinite when a
        root of other_poly equals a.
        """
        shifted_digits = []
        for j in range(other_poly.degree + 1):
            coeff = other_poly if j == 0 else hasse_derivative(other_poly, j)
            shifted_digits.append(self.valuation(coeff))
        infinite = 0
        pts = []
        for j, v in enumerate(shifted_digits):
            if v.infinite:
                continue
            pts.append((j, v.r))
        low = min(j for j, _ in pts)
        infinite = low  # T^low divides the shifted polynomial exactly
        out = [INFINITY] * infinite
        out.extend(Value(v) for v in NewtonPolygon(pts).root_valuations())
        return out

    def __repr__(self):
        if self.rational_root is not None:
            return f"ValuationExtension(m={self.m}, p={self.p}, root={self.rational_root})"
        return f"ValuationExtension(m={self.m}, p={self.p}, e={self.e}, f={self.f}, {self._chain!r})"


def extend_to_number_field(m: Poly, p: int, degree_bound: int = DEFAULT_DEGREE_BOUND):
    """All extensions of v_p to Q[Y]/(m), for monic irreducible m.

    Runs the branch search from the center 0; each isolated branch yields
    one ValuationExtension with its ramification index and residue degree.
    The sum of e*f over the result equals deg m.
    """
    m = Poly.of(m)
    if not m.is_monic():
        raise ValueError("minimal polynomial must be monic")
    if m.degree < 1:
        raise ValueError("minimal polynomial must be nonconstant")
    if m.degree > degree_bound:
        raise ValueError(f"degree {m.degree} exceeds the configured bound {degree_bound}")
    factors = rational_factor_list(m)
    if len(factors) > 1:
        other = next(f for f in factors if f != m)
        raise ReducibleError(m, other)
    if m.degree == 1:
        return [ValuationExtension(m, p, None, 0, rational_root=-m[0])]
    if any(c.denominator % p == 0 for c in m.coeffs):
        raise ValueError("minimal polynomial must be p-integral")

    roots: list[Chain] = []
    base_points = [(j, padic_valuation(c, p).r) for j, c in enumerate(m.coeffs) if c != 0]
    base_polygon = NewtonPolygon(base_points)
    seeds = []
    for slope, _length in base_polygon.slopes():
        lam = -slope
        seeds.append(Chain(p, Poly((0, 1)), Value(lam)))
    queue = seeds
    while queue:
        branch = queue.pop()
        if _is_isolated(branch, m):
            roots.append(branch)
            continue
        children = _branch_children(branch, m)
        assert children, "an unisolated branch must continue"
        queue.extend(children)

    roots.sort(key=lambda c: tuple((tuple(l.key.coeffs), l.beta.r) for l in c.levels))
    exts = [ValuationExtension(m, p, chain, i) for i, chain in enumerate(roots)]
    total = sum(ext.e * ext.f for ext in exts)
    assert total == m.degree, f"local degrees {total} must sum to {m.degree}"
    return exts


# -- multiset-level root difference data ------------------------------------


def root_difference_valuations(m1: Poly, m2: Poly, p: int) -> list:
    """Multiset {v(a - b)} over roots a of m1 and b of m2, as Values.

    For m1 == m2 the zero differences a == b are dropped.  Distinct inputs
    sharing a root contribute infinite entries.  Well defined as a multiset
    because every extension of v_p to the splitting field permutes the
    differences.
    """
    m1 = Poly.of(m1)
    m2 = Poly.of(m2)
    res = difference_resultant(m1, m2)
    order = 0
    while res[order] == 0:
        order += 1
    if m1 == m2:
        order -= m1.degree  # remove the diagonal pairs a == a
        if order < 0:
            raise ValueError("inputs must be squarefree")
    out = [INFINITY] * order
    out.extend(Value(v) for v in NewtonPolygon.of_poly(res, p).root_valuations())
    out.sort(key=lambda v: (1,) if v.infinite else (0, v.r))
    return out


@dataclass
class AlgebraicNumber:
    """An element of Q[Y]/(m) together with its chosen valuation extension."""

    ext: ValuationExtension
    rep: Poly = None

    def __post_init__(self):
        if self.rep is None:
            self.rep = Poly((0, 1)) if self.ext.m.degree > 1 else Poly((self.ext.rational_root,))
        self.rep = Poly.of(self.rep) % self.ext.m

    def value_of(self, g: Poly) -> Value:
        """v(g(self)); composes g with the representative inside Q[Y]/(m)."""
        composed = Poly.of(g).compose(self.rep) % self.ext.m
        return self.ext.valuation(composed)

    def value(self) -> Value:
        return self.ext.valuation(self.rep)

    def minimal_polynomial(self) -> Poly:
        """Monic minimal polynomial of the represented element over Q."""
        from .polynomials import composed_value_poly

        if self.rep == Poly((0, 1)):
            return self.ext.m
        if self.rep.degree <= 0:
            return Poly((-self.rep[0], 1))
        char = composed_value_poly(self.ext.m, self.rep)
        deriv = char.derivative()
        g = char.gcd(deriv)
        minimal, _ = char.divmod(g)
        return minimal * (1 / minimal.leading())

    def __repr__(self):
        return f"AlgebraicNumber({self.rep} mod {self.ext.m}, ext #{self.ext.index})"


def delta_via_roots(center: AlgebraicNumber, delta: Value, f: Poly) -> Value:
    """max over roots r of f of min(delta, v(a - r)) for the pair center a.

    Works at multiset level through the difference resultant of the center's
    minimal polynomial and f; the maximum is the same for every conjugate
    center, which makes this an independent oracle for the chain invariant.
    """
    f = Poly.of(f)
    if not f.is_monic():
        raise ValueError("oracle expects a monic polynomial")
    mc = center.minimal_polynomial()
    res = difference_resultant(mc, f)
    order = 0
    while res[order] == 0:
        order += 1
    best = delta if order > 0 else None  # shared roots contribute min(delta, inf)
    for lam in NewtonPolygon.of_poly(res, p=center.ext.p).root_valuations():
        cand = delta if Value(lam) >= delta else Value(lam)
        if best is None or cand > best:
            best = cand
    if best is None:
        raise ValueError("no root differences available")
    return best
