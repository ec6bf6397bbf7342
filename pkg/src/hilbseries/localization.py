"""Equivariant fixed-point oracle on toric surfaces.

Computes tautological Segre and Chern integrals over Hilbert schemes of
points, and holomorphic Euler characteristics of tautological line
bundles, by summation over torus-fixed points.  Fixed points of the
Hilbert scheme are tuples of partitions, one monomial ideal per chart of
the surface; everything reduces to exact rational arithmetic in the two
torus characters.

Conventions (fixed once, validated by anchors in the test suite): at the
chart of a smooth cone spanned by rays v, v' the coordinate characters
u1, u2 are the dual basis (so the lattice-point generating function of a
polytope is the sum of vertex terms x^m / prod(1 - x^(u_i))), tangent
characters are -u1, -u2, and the equivariant lift of O(sum d_i D_i) is
the character m with <m, v_i> = -d_i.  A box in column c, row s of a
partition carries the monomial character c u1 + s u2.

Integrals are evaluated at two independent generic integer
specializations of the characters and must agree; Euler characteristics
additionally require all sub-leading Laurent coefficients to cancel
across fixed points and the result to be an integer.  Any violation
raises, loudly, instead of returning data.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from fractions import Fraction as F
from functools import lru_cache

from .series import Series

__all__ = [
    "DEFAULT_SEED",
    "EqKClass",
    "HilbFixedPoint",
    "ToricSurface",
    "chern_integral",
    "enumerate_fixed_points",
    "get_surface",
    "parse_class",
    "partitions",
    "segre_integral",
    "surface_names",
    "tangent_weights",
    "taut_weights",
    "verlinde_chi",
]

DEFAULT_SEED = 20260815


class _BadDraw(Exception):
    """A character specialization annihilated a tangent weight."""


def _dot(vec, q):
    return vec[0] * q[0] + vec[1] * q[1]


def _vadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _vscale(c, a):
    return (c * a[0], c * a[1])


@lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """All partitions of n as weakly decreasing tuples."""
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for head in range(max_part, 0, -1):
        for tail in partitions(n - head, head):
            out.append((head,) + tail)
    return tuple(out)


def _conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > col) for col in range(lam[0]))


@dataclass(frozen=True)
class HilbFixedPoint:
    """One partition per surface chart; the total size is the point count."""

    parts: tuple

    @property
    def n(self):
        return sum(sum(lam) for lam in self.parts)


class ToricSurface:
    """A smooth projective toric surface given by its cyclically ordered fan.

    ``generators`` expresses a basis of line-bundle classes in ray
    divisors; ``pairing`` is their intersection matrix, ``k_dot`` their
    intersections with the canonical class, both validated against
    localization at construction.
    """

    def __init__(self, name, rays, generators, pairing, k_dot, ksq):
        self.name = name
        self.rays = [tuple(v) for v in rays]
        self.generators = [tuple(g) for g in generators]
        self.pairing = [list(row) for row in pairing]
        self.k_dot = list(k_dot)
        self.ksq = ksq
        self.chi_O = 1
        self.charts = []
        count = len(self.rays)
        for i in range(count):
            v = self.rays[i]
            w = self.rays[(i + 1) % count]
            det = v[0] * w[1] - v[1] * w[0]
            if det not in (1, -1):
                raise ValueError("cone (%s, %s) is not smooth" % (v, w))
            u1 = (det * w[1], -det * w[0])
            u2 = (-det * v[1], det * v[0])
            self.charts.append((i, (i + 1) % count, u1, u2))
        self._validate()

    def lift(self, coeffs):
        """Per-chart characters of O(sum coeffs_g G_g); <m, v_i> = -d_i."""
        d = [0] * len(self.rays)
        for c, gen in zip(coeffs, self.generators):
            for i, gi in enumerate(gen):
                d[i] += c * gi
        out = []
        for i, j, u1, u2 in self.charts:
            out.append(_vadd(_vscale(-d[i], u1), _vscale(-d[j], u2)))
        return tuple(out)

    def tangent_chars(self, chart_index):
        _, _, u1, u2 = self.charts[chart_index]
        return _vscale(-1, u1), _vscale(-1, u2)

    def pair(self, a, b):
        return sum(a[i] * self.pairing[i][j] * b[j]
                   for i in range(len(a)) for j in range(len(b)))

    def _surface_integral(self, lift_a, lift_b, q):
        total = F(0)
        for index, (_, _, u1, u2) in enumerate(self.charts):
            k1, k2 = _dot(u1, q), _dot(u2, q)
            if k1 == 0 or k2 == 0:
                raise _BadDraw
            total += F(_dot(lift_a[index], q) * _dot(lift_b[index], q), k1 * k2)
        return total

    def _validate(self):
        rng = random.Random(DEFAULT_SEED)
        k_lift = self.lift_canonical()
        gen_lifts = [self.lift(tuple(1 if j == i else 0 for j in range(len(self.generators))))
                     for i in range(len(self.generators))]
        for _ in range(2):
            q = _draw_direction(rng)
            try:
                for i, la in enumerate(gen_lifts):
                    for j, lb in enumerate(gen_lifts):
                        if self._surface_integral(la, lb, q) != self.pairing[i][j]:
                            raise ArithmeticError(
                                "%s: localized pairing (%d,%d) disagrees" % (self.name, i, j))
                    if self._surface_integral(la, k_lift, q) != self.k_dot[i]:
                        raise ArithmeticError(
                            "%s: localized K pairing %d disagrees" % (self.name, i))
                if self._surface_integral(k_lift, k_lift, q) != self.ksq:
                    raise ArithmeticError("%s: localized K^2 disagrees" % self.name)
            except _BadDraw:
                continue
        if self._chi_trivial() != self.chi_O:
            raise ArithmeticError("%s: localized chi(O) disagrees" % self.name)

    def lift_canonical(self):
        """Lift of the canonical class, minus the sum of all ray divisors."""
        out = []
        for _, _, u1, u2 in self.charts:
            out.append(_vadd(u1, u2))
        return tuple(out)

    def _chi_trivial(self):
        rng = random.Random(DEFAULT_SEED + 1)
        while True:
            q = _draw_direction(rng)
            data = []
            try:
                for index in range(len(self.charts)):
                    ks = [_spec_nonzero(t, q) for t in self.tangent_chars(index)]
                    data.append((0, ks))
            except _BadDraw:
                continue
            return _euler_sum(data, 2)

    def __repr__(self):
        return "ToricSurface(%r)" % self.name


def _draw_direction(rng):
    while True:
        q = (rng.randint(-9, 9), rng.randint(-9, 9))
        if q[0] and q[1] and q[0] != q[1] and q[0] != -q[1]:
            return q


def _spec_nonzero(char, q):
    k = _dot(char, q)
    if k == 0:
        raise _BadDraw
    return k


@lru_cache(maxsize=None)
def _p2():
    return ToricSurface("p2", [(1, 0), (0, 1), (-1, -1)],
                        generators=[(1, 0, 0)], pairing=[[1]], k_dot=[-3], ksq=9)


@lru_cache(maxsize=None)
def _p1xp1():
    return ToricSurface("p1xp1", [(1, 0), (0, 1), (-1, 0), (0, -1)],
                        generators=[(1, 0, 0, 0), (0, 1, 0, 0)],
                        pairing=[[0, 1], [1, 0]], k_dot=[-2, -2], ksq=8)


@lru_cache(maxsize=None)
def _f1():
    # generators: the fiber class and the exceptional (-1)-curve
    return ToricSurface("f1", [(1, 0), (0, 1), (-1, 1), (0, -1)],
                        generators=[(1, 0, 0, 0), (0, 1, 0, 0)],
                        pairing=[[0, 1], [1, -1]], k_dot=[-2, -1], ksq=8)


_SURFACES = {"p2": _p2, "p1xp1": _p1xp1, "f1": _f1}


def surface_names():
    return sorted(_SURFACES)


def get_surface(name):
    try:
        return _SURFACES[name.lower()]()
    except KeyError:
        raise KeyError("unknown surface %r; choose from %s"
                       % (name, ", ".join(surface_names())))


class EqKClass:
    """Signed sum of equivariantly lifted line bundles on a toric surface.

    Terms are (sign, generator coefficients); Chern data of the K-theory
    class is accumulated by the Whitney formula term by term.  Optional
    per-term lift shifts by a global character change the equivariant
    data but no integral, which the tests exploit.
    """

    def __init__(self, surface, terms, lift_shifts=None):
        if not terms:
            raise ValueError("a class needs at least one term")
        self.surface = surface
        self.terms = [(1 if sign >= 0 else -1, tuple(coeffs)) for sign, coeffs in terms]
        if lift_shifts is None:
            lift_shifts = [(0, 0)] * len(self.terms)
        if len(lift_shifts) != len(self.terms):
            raise ValueError("one lift shift per term expected")
        self.lifts = []
        for (sign, coeffs), shift in zip(self.terms, lift_shifts):
            base = surface.lift(coeffs)
            self.lifts.append(tuple(_vadd(m, tuple(shift)) for m in base))
        gens = len(surface.generators)
        c1 = [0] * gens
        c2 = 0
        for sign, coeffs in self.terms:
            if sign > 0:
                c2 += surface.pair(c1, coeffs)
                c1 = [a + b for a, b in zip(c1, coeffs)]
            else:
                c1 = [a - b for a, b in zip(c1, coeffs)]
                c2 += -surface.pair(c1, coeffs)
        self.rank = sum(sign for sign, _ in self.terms)
        self.c1 = tuple(c1)
        self.c1sq = surface.pair(c1, c1)
        self.c2 = c2
        self.c1K = sum(a * k for a, k in zip(c1, surface.k_dot))

    def shifted(self, term_index, char):
        """Same class with one term's lift moved by a global character."""
        shifts = [(0, 0)] * len(self.terms)
        shifts[term_index] = tuple(char)
        return EqKClass(self.surface, self.terms, shifts)

    def spec(self):
        """The parseable form of this class, inverse to parse_class."""
        parts = []
        for i, (sign, coeffs) in enumerate(self.terms):
            text = "O(%s)" % ",".join(str(c) for c in coeffs)
            if sign < 0:
                parts.append("-" + text)
            elif i:
                parts.append("+" + text)
            else:
                parts.append(text)
        return "".join(parts)

    def __repr__(self):
        return "EqKClass(%s, %s)" % (self.surface.name, self.spec())


_TERM_RE = re.compile(r"\s*([+-]?)\s*O\(([^()]*)\)")


def parse_class(surface, text):
    """Parse a signed line-bundle sum like "O(2,1)+O(0,1)-O(1,0)"."""
    terms = []
    pos = 0
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if match is None:
            raise ValueError("cannot parse class spec %r at %r" % (text, text[pos:]))
        sign = -1 if match.group(1) == "-" else 1
        try:
            coeffs = tuple(int(piece) for piece in match.group(2).split(","))
        except ValueError:
            raise ValueError("bad integers in term %r" % match.group(0))
        if len(coeffs) != len(surface.generators):
            raise ValueError("surface %s expects %d-parameter classes, got %r"
                             % (surface.name, len(surface.generators), match.group(0)))
        terms.append((sign, coeffs))
        pos = match.end()
    return EqKClass(surface, terms)


def _compositions(n, parts):
    if parts == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for tail in _compositions(n - head, parts - 1):
            yield (head,) + tail


def enumerate_fixed_points(surface, n):
    """All tuples of partitions of total size n, one per chart."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    charts = len(surface.charts)
    for comp in _compositions(n, charts):
        for tup in itertools.product(*(partitions(k) for k in comp)):
            out.append(HilbFixedPoint(tup))
    return out


def tangent_weights(fp, surface):
    """The 2n tangent characters of the Hilbert scheme at a fixed point.

    Standard arm/leg formula per box, in the tangent characters of the
    chart: a box with arm a and leg l contributes (a+1) chi1 - l chi2
    and -a chi1 + (l+1) chi2.
    """
    out = []
    for index, lam in enumerate(fp.parts):
        chi1, chi2 = surface.tangent_chars(index)
        conj = _conjugate(lam)
        for row, part in enumerate(lam):
            for col in range(part):
                arm = part - col - 1
                leg = conj[col] - row - 1
                w1 = _vadd(_vscale(arm + 1, chi1), _vscale(-leg, chi2))
                w2 = _vadd(_vscale(-arm, chi1), _vscale(leg + 1, chi2))
                if w1 == (0, 0) or w2 == (0, 0):
                    raise ArithmeticError("zero tangent weight: chart data is wrong")
                out.extend((w1, w2))
    return out


def taut_weights(kclass, fp):
    """Signed fiber characters of the tautological class at a fixed point.

    Each term contributes, for every box in column c row s of the
    chart's partition, its lift character plus c u1 + s u2.
    """
    surface = kclass.surface
    out = []
    for (sign, _), lifts in zip(kclass.terms, kclass.lifts):
        for index, lam in enumerate(fp.parts):
            _, _, u1, u2 = surface.charts[index]
            m = lifts[index]
            for row, part in enumerate(lam):
                for col in range(part):
                    out.append((sign, _vadd(m, _vadd(_vscale(col, u1), _vscale(row, u2)))))
    return out


def _char_poly_factor(k, order, inverted):
    if inverted:
        return Series([(-k) ** j for j in range(order + 1)], order, "u")
    return Series([1, k], order, "u")


def _integral_at(surface, kclass, n, q, chern):
    total = F(0)
    order = 2 * n
    for fp in enumerate_fixed_points(surface, n):
        denom = 1
        for weight in tangent_weights(fp, surface):
            denom *= _spec_nonzero(weight, q)
        numer = Series.one(order, "u")
        for sign, char in taut_weights(kclass, fp):
            inverted = (sign > 0) if not chern else (sign < 0)
            numer = numer * _char_poly_factor(_dot(char, q), order, inverted)
        total += numer.coefficient(order) / denom
    return total


def _two_draw_integral(surface, kclass, n, seed, chern):
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    values = []
    draws = []
    while len(values) < 2:
        q = _draw_direction(rng)
        if q in draws:
            continue
        try:
            values.append(_integral_at(surface, kclass, n, q, chern))
        except _BadDraw:
            continue
        draws.append(q)
    if values[0] != values[1]:
        raise ArithmeticError(
            "specializations %s disagree on %r: %s vs %s"
            % (draws, kclass, values[0], values[1]))
    return values[0]


def segre_integral(surface, kclass, n, seed=None):
    """Integral of the degree-2n Segre class of the tautological class."""
    return _two_draw_integral(surface, kclass, n, seed, chern=False)


def chern_integral(surface, kclass, n, seed=None):
    """Integral of the degree-2n Chern class of the tautological class."""
    return _two_draw_integral(surface, kclass, n, seed, chern=True)


@lru_cache(maxsize=None)
def _unit_ratio_inverse(k, order):
    # 1 / [ (1 - (1+e)^(-k)) / (k e) ], a unit series reused across points
    e = Series.gen(order + 1, "e")
    num = 1 - (1 + e) ** (-k)
    return (num.shift(-1) / k).inverse()


def _euler_sum(point_data, order):
    """Sum of (1+e)^a / prod_k (1-(1+e)^(-k)) over points, as an integer.

    Each point contributes a Laurent series with pole order len(ks); the
    poles must cancel across points and the constant term is the Euler
    characteristic.  Both facts are asserted.
    """
    total = Series.zero(order, "e")
    e = Series.gen(order, "e")
    for a, ks in point_data:
        prod = (1 + e) ** a
        scalar = 1
        for k in ks:
            prod = prod * _unit_ratio_inverse(k, order)
            scalar *= k
        total = total + prod / scalar
    for j in range(order):
        if total.coefficient(j) != 0:
            raise ArithmeticError(
                "fixed-point sum has a surviving pole coefficient at order %d" % (j - order))
    value = total.coefficient(order)
    if value.denominator != 1:
        raise ArithmeticError("Euler characteristic %s is not an integer" % value)
    return int(value)


def verlinde_chi(surface, kclass, r, n, seed=None):
    """chi of det(L^[n]) (x) det(O^[n])^(r-1) on the Hilbert scheme.

    kclass must be a single unsigned line bundle.  Computed at two
    generic integer one-parameter directions which must agree.
    """
    if kclass.rank != 1 or len(kclass.terms) != 1:
        raise ValueError("verlinde_chi expects a single line bundle, got %r" % kclass)
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    fps = enumerate_fixed_points(surface, n)
    lifts = kclass.lifts[0]
    values = []
    draws = []
    while len(values) < 2:
        q = _draw_direction(rng)
        if q in draws:
            continue
        data = []
        try:
            for fp in fps:
                ks = [_spec_nonzero(w, q) for w in tangent_weights(fp, surface)]
                a = 0
                for index, lam in enumerate(fp.parts):
                    _, _, u1, u2 = surface.charts[index]
                    m_spec = _dot(lifts[index], q)
                    box_spec = _dot(u1, q)
                    row_spec = _dot(u2, q)
                    for row, part in enumerate(lam):
                        for col in range(part):
                            a += m_spec + r * (col * box_spec + row * row_spec)
                data.append((a, ks))
        except _BadDraw:
            continue
        values.append(_euler_sum(data, 2 * n))
        draws.append(q)
    if values[0] != values[1]:
        raise ArithmeticError(
            "directions %s disagree on chi: %s vs %s" % (draws, values[0], values[1]))
    return values[0]
