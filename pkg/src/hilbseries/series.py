"""Truncated power series with exact rational coefficients.

Every series carries an explicit truncation order: a :class:`Series` of
order ``n`` stores coefficients ``c_0 .. c_n`` and stands for a power
series known modulo ``x^(n+1)``.  Coefficients are `fractions.Fraction`
values throughout; floats are rejected so nothing ever leaves exact
arithmetic.

Binary operations insist that both operands carry the same truncation
order.  Silently taking the minimum hides bookkeeping bugs in long
computations, so precision drops only at explicit ``truncate`` calls.
Compositional structure follows the same discipline: ``compose`` and
``revert`` demand the substituted series vanish at the origin, rational
powers demand constant term 1, and violations raise typed errors instead
of producing garbage coefficients.

:class:`BiSeries` is the dense bivariate analogue, used where a single
coefficient of a two-variable expansion has to be extracted exactly.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "Series",
    "BiSeries",
    "SeriesError",
    "OrderMismatchError",
    "ConstantTermError",
    "CompositionError",
    "ReversionError",
    "BranchError",
    "solve_algebraic",
]


class SeriesError(ValueError):
    """Base class for truncated-series contract violations."""


class OrderMismatchError(SeriesError):
    """Binary operation attempted on series of different truncation orders."""


class ConstantTermError(SeriesError):
    """Constant term violates the precondition of the requested operation."""


class CompositionError(SeriesError):
    """Inner series of a composition has a nonzero constant term."""


class ReversionError(SeriesError):
    """Series cannot be reverted: needs a(0) = 0 and a'(0) != 0."""


class BranchError(SeriesError):
    """Algebraic equation has no unique simple series branch through the origin."""


def as_fraction(x):
    """Coerce x to Fraction, rejecting floats to keep arithmetic exact."""
    if isinstance(x, float):
        raise TypeError("float coefficients are not allowed; pass Fraction, int or 'p/q'")
    return Fraction(x)


class Series:
    """A power series truncated at a fixed order, over exact rationals.

    >>> t = Series.gen(3)
    >>> (1 + 2 * t).pow_rational(Fraction(1, 2)).truncate(2)
    1 + t - 1/2*t^2 + O(t^3)

    Instances are treated as immutable.  The variable name is carried
    along for readable errors and serialization; it does not participate
    in equality.
    """

    def __init__(self, coeffs, order=None, var="t"):
        coeffs = [as_fraction(c) for c in coeffs]
        if order is None:
            if not coeffs:
                raise ValueError("an empty coefficient list needs an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) > order + 1:
            raise ValueError("got %d coefficients but order %d allows at most %d"
                             % (len(coeffs), order, order + 1))
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self.coeffs = tuple(coeffs)
        self.order = order
        self.var = var

    @classmethod
    def zero(cls, order, var="t"):
        return cls([], order, var)

    @classmethod
    def one(cls, order, var="t"):
        return cls([1], order, var)

    @classmethod
    def constant(cls, value, order, var="t"):
        return cls([value], order, var)

    @classmethod
    def gen(cls, order, var="t"):
        """The variable itself, truncated at ``order``."""
        return cls([0, 1] if order >= 1 else [0], order, var)

    def coefficient(self, n):
        """Coefficient of var^n; n must not exceed the truncation order."""
        if not 0 <= n <= self.order:
            raise IndexError("coefficient %d of a series of order %d" % (n, self.order))
        return self.coeffs[n]

    __getitem__ = coefficient

    def is_zero(self):
        return not any(self.coeffs)

    def valuation(self):
        """Index of the first nonzero coefficient; order + 1 for the zero series."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order + 1

    def truncate(self, order):
        """Drop coefficients above ``order``; extension is never allowed."""
        if order > self.order:
            raise ValueError("cannot extend a series of order %d to order %d"
                             % (self.order, order))
        return Series(list(self.coeffs[:order + 1]), order, self.var)

    def shift(self, k):
        """Multiply by var**k.  Negative k demands the low coefficients vanish.

        The truncation order moves with the shift, so dividing out an
        explicit zero (for instance forming y/t from y with y(0) = 0)
        costs one order of precision, visibly.
        """
        if k >= 0:
            return Series([Fraction(0)] * k + list(self.coeffs), self.order + k, self.var)
        if self.order + k < 0:
            raise ValueError("shift below order 0")
        if any(self.coeffs[:-k]):
            raise ConstantTermError("cannot divide by %s^%d: low-order terms present"
                                    % (self.var, -k))
        return Series(list(self.coeffs[-k:]), self.order + k, self.var)

    def _require_same_order(self, other):
        if self.order != other.order:
            raise OrderMismatchError(
                "order mismatch: %d (%s) vs %d (%s); truncate explicitly"
                % (self.order, self.var, other.order, other.var))

    # arithmetic; scalars act as constant series of the same order

    def __add__(self, other):
        if isinstance(other, Series):
            self._require_same_order(other)
            return Series([a + b for a, b in zip(self.coeffs, other.coeffs)],
                          self.order, self.var)
        c = list(self.coeffs)
        c[0] += as_fraction(other)
        return Series(c, self.order, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order, self.var)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Series) else -as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            x = as_fraction(other)
            return Series([x * c for c in self.coeffs], self.order, self.var)
        self._require_same_order(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return Series(out, n, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        return self * (Fraction(1) / as_fraction(other))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        """Integer powers; rational exponents go through pow_rational."""
        if not isinstance(e, int):
            raise TypeError("use pow_rational for non-integer exponents")
        if e < 0:
            return self.inverse() ** (-e)
        out = Series.one(self.order, self.var)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def inverse(self):
        """Multiplicative inverse; the constant term must be nonzero."""
        a = self.coeffs
        if a[0] == 0:
            raise ConstantTermError("cannot invert a series in %s with zero constant term"
                                    % self.var)
        inv0 = Fraction(1) / a[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if a[k]:
                    acc += a[k] * out[n - k]
            out.append(-inv0 * acc)
        return Series(out, self.order, self.var)

    def derivative(self):
        """Formal derivative; the truncation order drops by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate a series of order 0")
        return Series([k * self.coeffs[k] for k in range(1, self.order + 1)],
                      self.order - 1, self.var)

    def integral(self):
        """Antiderivative with constant term 0; the order grows by one."""
        out = [Fraction(0)]
        out.extend(self.coeffs[k] / (k + 1) for k in range(self.order + 1))
        return Series(out, self.order + 1, self.var)

    def log(self):
        """Series logarithm, integral of a'/a; requires constant term 1."""
        if self.coeffs[0] != 1:
            raise ConstantTermError("log needs constant term 1, got %s" % self.coeffs[0])
        if self.order == 0:
            return Series.zero(0, self.var)
        quot = self.derivative() * self.truncate(self.order - 1).inverse()
        return quot.integral()

    def exp(self):
        """Series exponential; requires constant term 0."""
        if self.coeffs[0] != 0:
            raise ConstantTermError("exp needs constant term 0, got %s" % self.coeffs[0])
        n = self.order
        a = self.coeffs
        out = [Fraction(1)] + [Fraction(0)] * n
        for m in range(n):
            # (m+1) e_{m+1} = sum_k (k+1) a_{k+1} e_{m-k}, from e' = a' e
            acc = Fraction(0)
            for k in range(m + 1):
                if a[k + 1]:
                    acc += (k + 1) * a[k + 1] * out[m - k]
            out[m + 1] = acc / (m + 1)
        return Series(out, n, self.var)

    def pow_rational(self, e):
        """Arbitrary rational power via exp(e*log); constant term must be 1."""
        e = as_fraction(e)
        if self.coeffs[0] != 1:
            raise ConstantTermError("rational power needs constant term 1, got %s"
                                    % self.coeffs[0])
        return (self.log() * e).exp()

    def sqrt(self):
        return self.pow_rational(Fraction(1, 2))

    def compose(self, inner):
        """Substitute ``inner`` for the variable; inner constant term must be 0."""
        if not isinstance(inner, Series):
            raise TypeError("compose expects a Series")
        self._require_same_order(inner)
        if inner.coeffs[0] != 0:
            raise CompositionError("inner series has constant term %s, expected 0"
                                   % inner.coeffs[0])
        out = Series.constant(self.coeffs[self.order], self.order, inner.var)
        for k in range(self.order - 1, -1, -1):
            out = out * inner + self.coeffs[k]
        return out

    def revert(self):
        """Compositional inverse b with self(b(x)) = x, by Newton iteration.

        Requires a(0) = 0 and a'(0) != 0.  The result lives in the same
        variable name; callers relabel if they care.
        """
        n = self.order
        if n < 1 or self.coeffs[0] != 0 or self.coeffs[1] == 0:
            raise ReversionError("reversion needs a(0) = 0 and a'(0) != 0 at order >= 1")
        x = Series.gen(n, self.var)
        # zero-pad the derivative back to order n: the junk top coefficient
        # is always multiplied by a series of valuation >= 1 below, so it
        # cannot reach any retained order
        da = Series(list(self.derivative().coeffs) + [0], n, self.var)
        b = x * (Fraction(1) / self.coeffs[1])
        for _ in range(n.bit_length() + 2):
            err = self.compose(b) - x
            if err.is_zero():
                return b
            b = b - err * da.compose(b).inverse()
        if (self.compose(b) - x).is_zero():
            return b
        raise ReversionError("Newton reversion failed to converge")  # pragma: no cover

    # serialization: exact 'p/q' strings, bit-exact round trip

    def to_json(self):
        return {
            "variable": self.var,
            "order": self.order,
            "coefficients": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data):
        return cls([Fraction(c) for c in data["coefficients"]],
                   data["order"], data["variable"])

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.order == other.order and self.coeffs == other.coeffs
        try:
            x = as_fraction(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coeffs[0] == x and not any(self.coeffs[1:])

    __hash__ = None

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            unit = self.var if k == 1 else "%s^%d" % (self.var, k)
            if c == 1:
                terms.append("+ " + unit)
            elif c == -1:
                terms.append("- " + unit)
            elif c > 0:
                terms.append("+ %s*%s" % (c, unit))
            else:
                terms.append("- %s*%s" % (-c, unit))
        if not terms:
            body = "0"
        else:
            body = " ".join(terms)
            if body.startswith("+ "):
                body = body[2:]
        return "%s + O(%s^%d)" % (body, self.var, self.order + 1)


def solve_algebraic(relation, order, var="t"):
    """Unique series root y with y(0) = 0 of a polynomial P(y, t) = 0.

    ``relation`` maps (i, j) to the rational coefficient of y^i t^j.  The
    branch through the origin must be simple: P(0,0) = 0 and dP/dy(0,0)
    nonzero.  Newton iteration doubles the number of settled coefficients
    per step; the residual is rechecked before returning.
    """
    rel = {k: as_fraction(v) for k, v in relation.items() if v}
    if rel.get((0, 0), Fraction(0)) != 0:
        raise BranchError("P(0,0) must vanish for a branch through the origin")
    if rel.get((1, 0), Fraction(0)) == 0:
        raise BranchError("dP/dy(0,0) vanishes: branch through the origin is not simple")
    ydeg = max(i for i, _ in rel)

    def row(i, weight=1):
        c = [Fraction(0)] * (order + 1)
        for (a, j), v in rel.items():
            if a == i and j <= order:
                c[j] += weight * v
        return Series(c, order, var)

    p = [row(i) for i in range(ydeg + 1)]
    dp = [row(i, weight=i) for i in range(1, ydeg + 1)]

    def horner(cols, y):
        out = Series.zero(order, var)
        for c in reversed(cols):
            out = out * y + c
        return out

    y = Series.zero(order, var)
    for _ in range(order.bit_length() + 3):
        r = horner(p, y)
        if r.is_zero():
            return y
        y = y - r * horner(dp, y).inverse()
    if horner(p, y).is_zero():
        return y
    raise BranchError("Newton failed to reach a root to the requested order")


class BiSeries:
    """Dense bivariate truncated series over exact rationals.

    Coefficients fill the rectangle 0 <= i <= order1, 0 <= j <= order2
    with the row index attached to the first variable.  Arithmetic skips
    zero entries, and ``inverse`` runs a graded convolution over the
    nonzero support only, so sparse inputs stay cheap.
    """

    def __init__(self, rows, orders=None, vars=("x", "y")):
        rows = [[as_fraction(c) for c in row] for row in rows]
        if orders is None:
            if not rows:
                raise ValueError("empty rows need explicit orders")
            orders = (len(rows) - 1, max(len(r) for r in rows) - 1)
        d1, d2 = orders
        if d1 < 0 or d2 < 0:
            raise ValueError("truncation orders must be >= 0")
        if len(rows) > d1 + 1 or any(len(r) > d2 + 1 for r in rows):
            raise ValueError("more coefficients than the truncation orders allow")
        grid = [[Fraction(0)] * (d2 + 1) for _ in range(d1 + 1)]
        for i, r in enumerate(rows):
            for j, c in enumerate(r):
                grid[i][j] = c
        self.rows = tuple(tuple(r) for r in grid)
        self.orders = (d1, d2)
        self.vars = tuple(vars)

    @classmethod
    def zero(cls, orders, vars=("x", "y")):
        return cls([], orders, vars)

    @classmethod
    def one(cls, orders, vars=("x", "y")):
        return cls([[1]], orders, vars)

    @classmethod
    def gens(cls, orders, vars=("x", "y")):
        """The two variables themselves, truncated at ``orders``."""
        d1, d2 = orders
        x = cls([[0], [1]] if d1 >= 1 else [[0]], orders, vars)
        y = cls([[0, 1]] if d2 >= 1 else [[0]], orders, vars)
        return x, y

    def bicoeff(self, i, j):
        """Coefficient of vars[0]^i vars[1]^j."""
        d1, d2 = self.orders
        if not (0 <= i <= d1 and 0 <= j <= d2):
            raise IndexError("coefficient (%d, %d) of a series of orders %s"
                             % (i, j, (d1, d2)))
        return self.rows[i][j]

    def _require_same_orders(self, other):
        if self.orders != other.orders:
            raise OrderMismatchError("order mismatch: %s vs %s; truncate explicitly"
                                     % (self.orders, other.orders))

    def truncate(self, orders):
        d1, d2 = orders
        if d1 > self.orders[0] or d2 > self.orders[1]:
            raise ValueError("cannot extend %s to %s" % (self.orders, orders))
        return BiSeries([list(r[:d2 + 1]) for r in self.rows[:d1 + 1]], orders, self.vars)

    def _support(self):
        return [(i, j, c)
                for i, row in enumerate(self.rows)
                for j, c in enumerate(row) if c]

    def __add__(self, other):
        if isinstance(other, BiSeries):
            self._require_same_orders(other)
            return BiSeries([[a + b for a, b in zip(ra, rb)]
                             for ra, rb in zip(self.rows, other.rows)],
                            self.orders, self.vars)
        grid = [list(r) for r in self.rows]
        grid[0][0] += as_fraction(other)
        return BiSeries(grid, self.orders, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return BiSeries([[-c for c in r] for r in self.rows], self.orders, self.vars)

    def __sub__(self, other):
        return self + (-other if isinstance(other, BiSeries) else -as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            x = as_fraction(other)
            return BiSeries([[x * c for c in r] for r in self.rows],
                            self.orders, self.vars)
        self._require_same_orders(other)
        d1, d2 = self.orders
        out = [[Fraction(0)] * (d2 + 1) for _ in range(d1 + 1)]
        orows = other.rows
        for i, j, a in self._support():
            for k in range(d1 + 1 - i):
                row = orows[k]
                orow = out[i + k]
                for l in range(d2 + 1 - j):
                    b = row[l]
                    if b:
                        orow[j + l] += a * b
        return BiSeries(out, self.orders, self.vars)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("BiSeries powers must be integers")
        if e < 0:
            # raise first: powers of a sparse base stay sparse, and the
            # graded inverse is cheap on sparse input
            return (self ** (-e)).inverse()
        out = BiSeries.one(self.orders, self.vars)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def inverse(self):
        """Multiplicative inverse; the constant term must be nonzero."""
        a00 = self.rows[0][0]
        if a00 == 0:
            raise ConstantTermError("cannot invert a bivariate series with zero constant term")
        d1, d2 = self.orders
        inv0 = Fraction(1) / a00
        support = [(i, j, c) for i, j, c in self._support() if (i, j) != (0, 0)]
        out = [[Fraction(0)] * (d2 + 1) for _ in range(d1 + 1)]
        out[0][0] = inv0
        for i in range(d1 + 1):
            for j in range(d2 + 1):
                if i == j == 0:
                    continue
                acc = Fraction(0)
                for k, l, c in support:
                    if k <= i and l <= j:
                        acc += c * out[i - k][j - l]
                if acc:
                    out[i][j] = -inv0 * acc
        return BiSeries(out, self.orders, self.vars)

    def __truediv__(self, other):
        if isinstance(other, BiSeries):
            return self * other.inverse()
        return self * (Fraction(1) / as_fraction(other))

    def __eq__(self, other):
        if isinstance(other, BiSeries):
            return self.orders == other.orders and self.rows == other.rows
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        u, v = self.vars
        terms = []
        for i, j, c in self._support():
            unit = "*".join(s for s in (
                "" if i == 0 else (u if i == 1 else "%s^%d" % (u, i)),
                "" if j == 0 else (v if j == 1 else "%s^%d" % (v, j))) if s)
            if not unit:
                terms.append(str(c))
            elif c == 1:
                terms.append(unit)
            elif c == -1:
                terms.append("-%s" % unit)
            else:
                terms.append("%s*%s" % (c, unit))
        body = " + ".join(terms) if terms else "0"
        return "%s + O(%s^%d, %s^%d)" % (body, u, self.orders[0] + 1, v, self.orders[1] + 1)
