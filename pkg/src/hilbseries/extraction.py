"""Recovery of the universal series from fixed-point integrals.

The generating functions of tautological integrals factor as products of
universal series raised to geometric exponents (c2, c1^2, chi(O), c1.K,
K^2 on the Segre/Chern side; chi(L), chi(O), c1.K - K^2/2, K^2 on the
Euler-characteristic side).  Taking logarithms turns each coefficient
order into an exact linear system over the exponent vectors of a panel
of (surface, class) pairs.  Because the factorization is exact, every
redundant panel row must be exactly consistent; any disagreement is
raised as an error rather than averaged away.
"""

from __future__ import annotations

import itertools
from fractions import Fraction as F

from . import catalog
from .series import Series
from .localization import (
    EqKClass,
    get_surface,
    segre_integral,
    verlinde_chi,
)

__all__ = [
    "GeometryPanel",
    "PanelError",
    "UniversalityError",
    "build_panel",
    "extract_universal",
    "extract_verlinde",
    "frac_str",
    "matrix_rank",
    "predict_unknown",
    "predict_verlinde",
    "solve_exact",
]


class PanelError(ValueError):
    """The panel's exponent matrix cannot separate the universal series."""


class UniversalityError(ArithmeticError):
    """Redundant panel rows disagree; the factorization failed to hold."""


def frac_str(x):
    x = F(x)
    return "%d/%d" % (x.numerator, x.denominator)


def _eliminate(matrix, rhs):
    """Row-reduce with full pivoting; returns (pivots, rows, rhs, colperm)."""
    rows = [[F(x) for x in row] for row in matrix]
    rhs = [F(x) for x in rhs]
    if len(rows) != len(rhs):
        raise ValueError("matrix and right-hand side sizes differ")
    height = len(rows)
    width = len(rows[0]) if rows else 0
    if any(len(row) != width for row in rows):
        raise ValueError("ragged matrix")
    colperm = list(range(width))
    pivots = 0
    for step in range(min(height, width)):
        best = None
        for i in range(step, height):
            for j in range(step, width):
                if rows[i][j] != 0 and (best is None or abs(rows[i][j]) > abs(rows[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        rows[step], rows[bi] = rows[bi], rows[step]
        rhs[step], rhs[bi] = rhs[bi], rhs[step]
        if bj != step:
            for row in rows:
                row[step], row[bj] = row[bj], row[step]
            colperm[step], colperm[bj] = colperm[bj], colperm[step]
        for i in range(step + 1, height):
            if rows[i][step] == 0:
                continue
            factor = rows[i][step] / rows[step][step]
            rhs[i] -= factor * rhs[step]
            for j in range(step, width):
                rows[i][j] -= factor * rows[step][j]
        pivots = step + 1
    return pivots, rows, rhs, colperm


def matrix_rank(matrix):
    if not matrix:
        return 0
    pivots, _, _, _ = _eliminate(matrix, [0] * len(matrix))
    return pivots


def solve_exact(matrix, rhs):
    """Solve an exactly consistent linear system over the rationals.

    Full-pivot Gaussian elimination; the system may be overdetermined,
    in which case the eliminated extra rows must have exactly zero
    residual (raises UniversalityError otherwise).  Underdetermined
    systems raise ValueError.
    """
    pivots, rows, red, colperm = _eliminate(matrix, rhs)
    width = len(matrix[0]) if matrix else 0
    if pivots < width:
        raise ValueError("system is underdetermined: rank %d < %d unknowns"
                         % (pivots, width))
    for i in range(pivots, len(rows)):
        if red[i] != 0:
            raise UniversalityError(
                "redundant row %d has nonzero residual %s" % (i, red[i]))
    solution = [F(0)] * width
    for i in range(pivots - 1, -1, -1):
        acc = red[i]
        for j in range(i + 1, width):
            acc -= rows[i][j] * solution[j]
        solution[i] = acc / rows[i][i]
    out = [F(0)] * width
    for position, original in enumerate(colperm):
        out[original] = solution[position]
    return out


class GeometryPanel:
    """(surface, class) rows whose exponent vectors span all five series.

    Columns are (c2, c1^2, chi(O), c1.K, K^2); construction asserts the
    matrix has rank 5, which a single surface can never reach since its
    chi(O) and K^2 columns are proportional.
    """

    COLUMNS = ("c2", "c1sq", "chiO", "c1K", "Ksq")

    def __init__(self, s, rows):
        if not rows:
            raise PanelError("empty panel")
        self.s = s
        self.rows = list(rows)
        matrix = []
        for surface, cls in self.rows:
            if cls.rank != s:
                raise PanelError("class %r has rank %d, panel wants %d"
                                 % (cls, cls.rank, s))
            matrix.append([cls.c2, cls.c1sq, surface.chi_O, cls.c1K, surface.ksq])
        self.exponent_matrix = matrix
        rank = matrix_rank(matrix)
        if rank < 5:
            raise PanelError(
                "exponent matrix has rank %d < 5; add geometries or classes" % rank)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


_PROBE_LINES = {
    "p2": [(0,), (1,), (2,), (3,), (-1,), (4,), (-2,), (5,)],
    "p1xp1": [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2),
              (2, 0), (0, 2), (-1, 1), (2, 2)],
    "f1": [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2),
           (2, 0), (0, 2), (1, -1), (2, 2)],
}


def _probe_classes(surface, s):
    """Deterministic stream of rank-s classes with varied Chern data."""
    lines = _PROBE_LINES[surface.name]
    if s >= 1:
        for combo in itertools.combinations_with_replacement(lines, s):
            yield EqKClass(surface, [(1, c) for c in combo])
        for combo in itertools.combinations_with_replacement(lines, s + 1):
            for neg in lines:
                yield EqKClass(surface, [(1, c) for c in combo] + [(-1, neg)])
    else:
        minus = 1 - s
        for pos in lines:
            for combo in itertools.combinations_with_replacement(lines, minus):
                yield EqKClass(surface, [(1, pos)] + [(-1, c) for c in combo])
        for pcombo in itertools.combinations_with_replacement(lines, 2):
            for ncombo in itertools.combinations_with_replacement(lines, minus + 1):
                yield EqKClass(surface, [(1, c) for c in pcombo] + [(-1, c) for c in ncombo])


def build_panel(s, size=6):
    """Assemble a rank-5 panel of small classes over all three surfaces.

    Rows are taken round-robin from per-surface probe streams; a probe
    is kept while it raises the exponent-matrix rank, then extra rows
    are kept as redundancy for the universality check.
    """
    if size < 5:
        raise PanelError("need at least 5 rows, got %d" % size)
    surfaces = [get_surface(name) for name in ("p2", "p1xp1", "f1")]
    streams = [iter(_probe_classes(surface, s)) for surface in surfaces]
    rows = []
    matrix = []
    exhausted = [False] * len(streams)
    while len(rows) < size and not all(exhausted):
        for index, stream in enumerate(streams):
            if len(rows) >= size:
                break
            try:
                cls = next(stream)
            except StopIteration:
                exhausted[index] = True
                continue
            surface = surfaces[index]
            vector = [cls.c2, cls.c1sq, surface.chi_O, cls.c1K, surface.ksq]
            if matrix_rank(matrix + [vector]) > matrix_rank(matrix):
                rows.append((surface, cls))
                matrix.append(vector)
            elif matrix_rank(matrix) == 5:
                rows.append((surface, cls))
                matrix.append(vector)
    if matrix_rank(matrix) < 5:
        raise PanelError("probe streams could not reach exponent rank 5")
    return GeometryPanel(s, rows)


def _log_series(values, order, var):
    total = Series(values, order, var)
    if total.coefficient(0) != 1:
        raise ArithmeticError("n=0 integral should be 1, got %s" % values[0])
    return total.log()


def _solve_log_systems(matrix, logs, order, var):
    """One exact solve per coefficient order; exponentiate the results."""
    width = len(matrix[0])
    columns = [[F(0)] for _ in range(width)]
    for n in range(1, order + 1):
        rhs = [lg.coefficient(n) for lg in logs]
        solution = solve_exact(matrix, rhs)
        for i in range(width):
            columns[i].append(solution[i])
    return [Series(col, order, var).exp() for col in columns]


def extract_universal(s, order, panel=None, seed=None):
    """Recover A0..A4 at rank s from oracle Segre integrals over a panel."""
    if panel is None:
        panel = build_panel(s)
    if panel.s != s:
        raise PanelError("panel was built for rank %d, not %d" % (panel.s, s))
    logs = []
    for surface, cls in panel:
        values = [segre_integral(surface, cls, n, seed) for n in range(order + 1)]
        logs.append(_log_series(values, order, "z"))
    return _solve_log_systems(panel.exponent_matrix, logs, order, "z")


def _default_verlinde_rows():
    p2 = get_surface("p2")
    quadric = get_surface("p1xp1")
    hirzebruch = get_surface("f1")
    specs = [(p2, (0,)), (p2, (1,)), (p2, (2,)),
             (quadric, (0, 0)), (quadric, (1, 1)), (quadric, (1, 2)),
             (hirzebruch, (1, 1))]
    return [(surface, EqKClass(surface, [(1, coeffs)])) for surface, coeffs in specs]


def _verlinde_matrix(rows):
    matrix = []
    for surface, cls in rows:
        chi_L = surface.chi_O + F(cls.c1sq - cls.c1K, 2)
        if chi_L.denominator != 1:
            raise PanelError("chi(L) of %r is not an integer" % cls)
        matrix.append([chi_L, F(surface.chi_O), cls.c1K - F(surface.ksq, 2),
                       F(surface.ksq)])
    if matrix_rank(matrix) < 4:
        raise PanelError("Euler-characteristic rows have exponent rank < 4")
    return matrix


def extract_verlinde(r, order, rows=None, seed=None):
    """Recover B1..B4 at twist r from oracle Euler characteristics."""
    if rows is None:
        rows = _default_verlinde_rows()
    matrix = _verlinde_matrix(rows)
    logs = []
    for surface, cls in rows:
        values = [F(verlinde_chi(surface, cls, r, n, seed)) for n in range(order + 1)]
        logs.append(_log_series(values, order, "w"))
    return _solve_log_systems(matrix, logs, order, "w")


def _agreement_order(a, b, order):
    """Largest m <= order with all coefficients up to m equal, or -1."""
    for n in range(order + 1):
        if a.coefficient(n) != b.coefficient(n):
            return n - 1
    return order


def _series_report(label, extracted, reference, status, order):
    entry = {
        "series": label,
        "extracted": [frac_str(extracted.coefficient(n)) for n in range(order + 1)],
        "status": status,
    }
    if reference is not None:
        entry["reference"] = [frac_str(reference.coefficient(n)) for n in range(order + 1)]
        entry["agreement_order"] = _agreement_order(extracted, reference, order)
    return entry


def predict_unknown(s, order, panel=None, seed=None):
    """Confront extracted A-series with closed forms where any exist.

    The low factors A0..A2 are proven at every rank and act as an
    internal cross-check; A3 and A4 are compared against conjectural
    closed forms when the catalog has them (e.g. rank 0) and otherwise
    emitted as conjecture-grade data (e.g. rank 3).
    """
    extracted = extract_universal(s, order, panel, seed)
    report = {"kind": "segre", "rank": s, "order": order, "series": []}
    for index, series in enumerate(extracted):
        try:
            entry = catalog.segre_A(s, index, order)
            reference, status = entry.series, entry.status
        except catalog.UnknownSeriesError:
            reference, status = None, catalog.CONJECTURAL
        report["series"].append(
            _series_report("A%d" % index, series, reference, status, order))
    return report


def predict_verlinde(r, order, rows=None, seed=None):
    """Confront extracted B-series with printed closed forms at twist r."""
    extracted = extract_verlinde(r, order, rows, seed)
    report = {"kind": "verlinde", "twist": r, "order": order, "series": []}
    for index, series in enumerate(extracted, start=1):
        try:
            entry = catalog.verlinde_B(r, index, order)
            reference, status = entry.series, entry.status
        except catalog.UnknownSeriesError:
            reference, status = None, catalog.CONJECTURAL
        report["series"].append(
            _series_report("B%d" % index, series, reference, status, order))
    return report
