"""Catalog of universal series for tautological integrals over S^[n].

Generating functions of tautological integrals over the Hilbert schemes
of points of a surface S factor into universal power series raised to
intersection-number exponents.  For a K-theory class of rank s the Segre
generating function is

    A0(z)^c2 * A1(z)^(c1^2) * A2(z)^chi(O) * A3(z)^(c1.K) * A4(z)^(K^2)

with Chern analogues C0, C1, C2 on K-trivial numerics, and the Euler
characteristic (Verlinde) generating function at twist r is

    B1(w)^chi(c1) * B2(w)^chi(O) * B3(w)^(c1.K - K^2/2) * B4(w)^(K^2).

Each factor this module knows has an algebraic closed form in an
auxiliary variable t with a rational change of variable z(t) or w(t),
and carries a provenance status: "proven", "trivial" (identically 1 for
elementary reasons), or "conjectural".  Nothing here is numeric; every
coefficient is an exact rational.

Supported ranks for the third and fourth Segre factors are -4..2; the
negative ranks -3 and -4 are produced from ranks 1 and 2 by a duality
transport, see ``_segre34_by_duality``.  The third and fourth Verlinde
factors exist for twists |r| <= 3.  Anything else raises
:class:`UnknownSeriesError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F

from .series import Series, solve_algebraic

__all__ = [
    "PROVEN",
    "TRIVIAL",
    "CONJECTURAL",
    "SEGRE_34_RANKS",
    "VERLINDE_34_TWISTS",
    "SeriesEntry",
    "UnknownSeriesError",
    "chern_A",
    "chern_full",
    "segre_A",
    "segre_change_of_var",
    "segre_full",
    "segre_rank2_branch",
    "segre_verlinde_vars",
    "verlinde_B",
    "verlinde_change_of_var",
    "verlinde_full",
    "verlinde_r3_branch",
]

PROVEN = "proven"
TRIVIAL = "trivial"
CONJECTURAL = "conjectural"

SEGRE_34_RANKS = range(-4, 3)
VERLINDE_34_TWISTS = range(-3, 4)


class UnknownSeriesError(LookupError):
    """No closed form is on record for the requested factor."""


@dataclass(frozen=True)
class SeriesEntry:
    """One universal factor: the series in its natural variable plus provenance.

    ``series`` is expanded in the natural variable (z for Segre/Chern, w
    for Verlinde); ``change_of_var`` expresses that variable as a series
    in the auxiliary t, which is how the closed forms are stated.
    """

    family: str
    index: int
    rank: int
    status: str
    series: Series
    change_of_var: Series


def _t(order):
    return Series.gen(order, "t")


def _relabel(s, var):
    return Series(list(s.coeffs), s.order, var)


# polynomial-in-(y, t) helpers for the quartic branch relations

def _pmul(*polys):
    out = {(0, 0): F(1)}
    for p in polys:
        nxt = {}
        for (i, j), a in out.items():
            for (k, l), b in p.items():
                key = (i + k, j + l)
                nxt[key] = nxt.get(key, F(0)) + F(a) * F(b)
        out = {k: v for k, v in nxt.items() if v}
    return out


def _psub(p, q):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, F(0)) - v
    return {k: v for k, v in out.items() if v}


_Y = {(1, 0): 1}
_T = {(0, 1): 1}
_CUBE_LHS = _pmul(_Y, {(0, 0): 1, (1, 0): 1}, {(0, 0): 1, (1, 0): 1})
_CUBE_RHS = _pmul(_T, {(0, 0): 1, (1, 0): -1}, {(0, 0): 1, (3, 0): -1})

# y (1+y)^2 = t (1-y)(1-y^3), branch through the origin
_TWIST3_RELATION = _psub(_CUBE_LHS, _CUBE_RHS)
# y (1+y)^2 (1+3t) = t (1-y)(1-y^3)
_RANK2_RELATION = _psub(_pmul(_CUBE_LHS, {(0, 0): 1, (0, 1): 3}), _CUBE_RHS)


def segre_rank2_branch(order):
    """The algebraic branch y(t) entering the rank-2 Segre factors.

    Unique series solution with y(0) = 0 of
    y (1+y)^2 / ((1-y)(1-y^3)) = t / (1+3t); starts t - 6t^2 + 41t^3 - ...
    """
    return solve_algebraic(_RANK2_RELATION, order)


def verlinde_r3_branch(order):
    """The branch Y(t) entering the twist-3 Verlinde factors.

    Unique series solution with Y(0) = 0 of
    Y (1+Y)^2 / ((1-Y)(1-Y^3)) = t; equals y(t/(1-3t)).
    """
    return solve_algebraic(_TWIST3_RELATION, order)


def segre_change_of_var(r, order):
    """Natural Segre variable z = t (1+rt)^r and its inverse t(z)."""
    t = _t(order)
    z_of_t = t * (1 + r * t) ** r
    return z_of_t, _relabel(z_of_t.revert(), "z")


def verlinde_change_of_var(r, order):
    """Natural Verlinde variable w = t (1+t)^(r^2-1) and its inverse t(w)."""
    t = _t(order)
    w_of_t = t * (1 + t) ** (r * r - 1)
    return w_of_t, _relabel(w_of_t.revert(), "w")


def segre_verlinde_vars(r, order):
    """The change-of-variable pair matching Segre to Verlinde series.

    Returns (z(t), w(t)) with z = t(1-rt)^(-r) and
    w = t (1-(r-1)t)^(r^2-1) / (1-rt)^(r^2), the proposed dictionary
    between the two generating functions at rank shift r = rank - 1.
    """
    t = _t(order)
    z_of_t = t * (1 - r * t) ** (-r)
    w_of_t = t * (1 - (r - 1) * t) ** (r * r - 1) * (1 - r * t) ** (-r * r)
    return z_of_t, w_of_t


def _segre012_in_t(s, index, order):
    r = s + 1
    t = _t(order)
    u = 1 + r * t
    v = 1 + (1 + r) * t
    if index == 0:
        return u ** (-r) * v ** (r - 1)
    if index == 1:
        return u.pow_rational(F(r - 1, 2)) * v.pow_rational(1 - F(r, 2))
    w = 1 + r * (1 + r) * t
    return (u.pow_rational(F(r * r - 1, 2))
            * v.pow_rational(r - F(r * r, 2))
            * w.pow_rational(F(-1, 2)))


def _segre34_in_t(s, index, order):
    t = _t(order)
    if s == 2:
        y = segre_rank2_branch(order + 1)
        y_over_t = y.shift(-1)
        if index == 3:
            return (1 + 3 * t).inverse() * y_over_t.pow_rational(F(-1, 2))
        dy = y.derivative()
        return ((1 + 3 * t) * y_over_t ** 3 * (1 + y.truncate(order)) ** 2
                * (1 - y.truncate(order)).inverse() * dy.inverse())
    if s == 1:
        root2 = (1 + 2 * t).sqrt()
        root6 = (1 + 6 * t).sqrt()
        if index == 3:
            return F(1, 2) * (1 + 2 * t).inverse() * (root2 + root6)
        return 4 * root2 * root6 * (root2 + root6) ** -2
    if s == 0 and index == 3:
        return (1 + t).inverse() * (1 + 2 * t).sqrt()
    if s in (-3, -4):
        return _segre34_by_duality(-s - 2, order)[index - 3]
    # s = 0 index 4, and s = -1, -2: identically 1
    return Series.one(order, "t")


def _duality_pref(r, index, order):
    # bridge between the rank r-1 Segre factor and the twist r Euler
    # characteristic factor, in the shared auxiliary variable; pinned by
    # the proven twist 0, +-1 factors and both printed conjecture pairs
    t = _t(order)
    u = 1 + r * t
    v = 1 + (1 + r) * t
    if index == 3:
        return u.pow_rational(F(r + 1, 2)) * v.pow_rational(F(-r, 2))
    return v.pow_rational(F(r, 4)) * u.pow_rational(F(-(r + 1), 4))


def _segre34_to_verlinde(s, order):
    """Transport the rank-s third/fourth Segre factors to Verlinde twist s+1.

    Returns the pair (third, fourth) as series in the Verlinde auxiliary
    variable tau, where tau = t/(1+rt) links the two closed-form charts.
    """
    r = s + 1
    a3 = _segre34_in_t(s, 3, order)
    a4 = _segre34_in_t(s, 4, order)
    tau = _t(order)
    t_of_tau = tau * (1 - r * tau).inverse()
    b3 = (a3 * _duality_pref(r, 3, order)).compose(t_of_tau)
    b4 = ((a4 * a3.pow_rational(F(-1, 2)) * _duality_pref(r, 4, order))
          .compose(t_of_tau))
    return b3, b4


def _segre34_by_duality(src_rank, order):
    """Conjectural third/fourth Segre factors at rank -src_rank - 2.

    Transport the known rank 1 or 2 factors to the Euler-characteristic
    side, apply the Serre symmetry there (third factor inverts, fourth is
    fixed, the natural variable is blind to the sign of the twist), and
    transport back at the negated twist.
    """
    r = src_rank + 1
    b3, b4 = _segre34_to_verlinde(src_rank, order)
    b3 = b3.inverse()
    t = _t(order)
    tau_of_t = t * (1 - r * t).inverse()
    a3 = b3.compose(tau_of_t) * _duality_pref(-r, 3, order).inverse()
    a4 = (b4.compose(tau_of_t) * _duality_pref(-r, 4, order).inverse()
          * a3.pow_rational(F(1, 2)))
    return a3, a4


def segre_A(s, index, order):
    """The index-th universal Segre factor at rank s, as a series in z.

    Indices 0..2 exist for every integer rank; indices 3 and 4 only for
    ranks -4..2, conjecturally at rank 0 (index 3) and ranks -3, -4.
    """
    if index in (0, 1, 2):
        in_t, status = _segre012_in_t(s, index, order), PROVEN
    elif index in (3, 4):
        if s not in SEGRE_34_RANKS:
            raise UnknownSeriesError(
                "Segre factor %d has no known closed form at rank %d" % (index, s))
        in_t = _segre34_in_t(s, index, order)
        if s in (1, 2):
            status = PROVEN
        elif s in (0,) and index == 3:
            status = CONJECTURAL
        elif s in (-3, -4):
            status = CONJECTURAL
        else:
            status = TRIVIAL
    else:
        raise UnknownSeriesError("Segre factor index must be 0..4, got %r" % (index,))
    z_of_t, t_of_z = segre_change_of_var(s + 1, order)
    return SeriesEntry("segre", index, s, status, in_t.compose(t_of_z), z_of_t)


def chern_A(s, index, order):
    """The index-th universal Chern factor at rank s (indices 0..2).

    Valid on K-trivial numerics, where the Chern generating function
    factors through these three series alone.
    """
    if index not in (0, 1, 2):
        raise UnknownSeriesError("Chern factor index must be 0..2, got %r" % (index,))
    r = s - 1
    t = _t(order)
    u = 1 - r * t
    v = 1 + (1 - r) * t
    if index == 0:
        in_t = u ** (-r) * v ** (r + 1)
    elif index == 1:
        in_t = u.pow_rational(F(r - 1, 2)) * v.pow_rational(F(-r, 2))
    else:
        w = 1 + (r * r - r) * t
        in_t = (w.pow_rational(F(-1, 2)) * u.pow_rational(F(r * r - 1, 2))
                * v.pow_rational(-r - F(r * r, 2)))
    z_of_t, t_of_z = segre_change_of_var(-r, order)
    return SeriesEntry("chern", index, s, PROVEN, in_t.compose(t_of_z), z_of_t)


def _verlinde34_in_t(r, order):
    t = _t(order)
    if r == 2:
        half = (1 + (1 + 4 * t).sqrt()) / 2
        b3 = half * (1 + t).inverse()
        b4 = ((1 + t).sqrt() * (1 + 4 * t).sqrt() * half.pow_rational(F(-5, 2)))
        return b3, b4
    if r == 3:
        yy = verlinde_r3_branch(order + 1)
        y_over_t = yy.shift(-1)
        b3 = (1 + t).pow_rational(F(-3, 2)) * y_over_t.pow_rational(F(-1, 2))
        b4 = ((1 + t).pow_rational(F(3, 4)) * y_over_t.pow_rational(F(13, 4))
              * (1 + yy.truncate(order)) ** 2
              * (1 - yy.truncate(order)).inverse() * yy.derivative().inverse())
        return b3, b4
    one = Series.one(order, "t")
    return one, one


def verlinde_B(r, index, order):
    """The index-th universal Euler-characteristic factor at twist r, in w.

    Indices 1 and 2 are proven for every r.  Indices 3 and 4 are known
    for |r| <= 1 (trivially 1) and conjecturally for |r| in {2, 3}; the
    negative twists come from the positive ones by Serre symmetry, which
    inverts the third factor and fixes the fourth.
    """
    t = _t(order)
    if index == 1:
        in_t, status = 1 + t, PROVEN
    elif index == 2:
        in_t = (1 + t).pow_rational(F(r * r, 2)) * (1 + r * r * t).pow_rational(F(-1, 2))
        status = PROVEN
    elif index in (3, 4):
        if r not in VERLINDE_34_TWISTS:
            raise UnknownSeriesError(
                "Verlinde factor %d has no known closed form at twist %d" % (index, r))
        b3, b4 = _verlinde34_in_t(abs(r), order)
        if r < 0:
            b3 = b3.inverse()
        in_t = b3 if index == 3 else b4
        status = TRIVIAL if abs(r) <= 1 else CONJECTURAL
    else:
        raise UnknownSeriesError("Verlinde factor index must be 1..4, got %r" % (index,))
    w_of_t, t_of_w = verlinde_change_of_var(r, order)
    return SeriesEntry("verlinde", index, r, status, in_t.compose(t_of_w), w_of_t)


def segre_full(s, c2, c1sq, chiO, c1K, Ksq, order):
    """Assembled Segre generating series in z for the given numerics.

    Factors with zero exponent are skipped, so any rank assembles on
    K-trivial numerics even where the last two factors are unknown.
    """
    out = Series.one(order, "z")
    for index, e in enumerate((c2, c1sq, chiO, c1K, Ksq)):
        if e:
            out = out * segre_A(s, index, order).series ** e
    return out


def chern_full(s, c2, c1sq, chiO, order):
    """Assembled Chern generating series in z; K-trivial numerics only."""
    out = Series.one(order, "z")
    for index, e in enumerate((c2, c1sq, chiO)):
        if e:
            out = out * chern_A(s, index, order).series ** e
    return out


def verlinde_full(r, chi_c1, chiO, c1K, Ksq, order):
    """Assembled Euler-characteristic generating series in w.

    The third factor's exponent is c1.K - K^2/2; when that is not an
    integer (odd K^2) the assembly is refused unless the factor is
    trivially 1, rather than silently taking a square root.
    """
    out = Series.one(order, "w")
    for index, e in ((1, chi_c1), (2, chiO), (4, Ksq)):
        if e:
            out = out * verlinde_B(r, index, order).series ** e
    e3 = F(2 * c1K - Ksq, 2)
    if e3:
        b3 = verlinde_B(r, 3, order).series
        if e3.denominator == 1:
            out = out * b3 ** int(e3)
        elif (b3 - 1).is_zero():
            pass
        else:
            raise ValueError(
                "third-factor exponent %s is not an integer (odd K^2) and the "
                "factor at twist %d is nontrivial" % (e3, r))
    return out
