"""Exact rational feasibility for systems of affine inequalities.

A system is a list of ``(coeffs, rhs)`` rows meaning ``sum_j coeffs[j] * x_j >= rhs``.
``coeffs`` is a sequence indexed by variable or a ``{var: coef}`` mapping.
All variables are additionally constrained to be nonnegative.

Two independent methods are provided: a phase-one simplex with Bland's rule
(the default) and Fourier-Motzkin elimination, which blows up quickly and is
meant for small systems and cross-checks. Neither touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

ZERO = Fraction(0)


def _as_dict(coeffs) -> dict:
    if isinstance(coeffs, Mapping):
        return {j: Fraction(c) for j, c in coeffs.items() if c}
    return {j: Fraction(c) for j, c in enumerate(coeffs) if c}


def _nvars(rows) -> int:
    return 1 + max((j for coeffs, _ in rows for j in coeffs), default=-1)


def lp_feasible(constraints: Sequence, nvars: int | None = None, method: str = "simplex"):
    """Return a feasible point as a tuple of ``Fraction``, or ``None``."""
    rows = [(_as_dict(c), Fraction(b)) for c, b in constraints]
    if nvars is None:
        nvars = _nvars(rows)
    if method == "simplex":
        return _simplex_phase1(rows, nvars)
    if method == "fourier_motzkin":
        return _fourier_motzkin(rows, nvars)
    raise ValueError(f"unknown method {method!r}")


def satisfies(constraints, point) -> bool:
    if any(x < 0 for x in point):
        return False
    for coeffs, rhs in constraints:
        c = _as_dict(coeffs)
        if sum((v * point[j] for j, v in c.items()), ZERO) < Fraction(rhs):
            return False
    return True


# ---------------------------------------------------------------------------
# simplex


def _simplex_phase1(rows, nvars):
    m = len(rows)
    # columns: x_0..x_{n-1}, one surplus per row, then artificials
    art_rows = [i for i, (_, b) in enumerate(rows) if b > 0]
    ncols = nvars + m + len(art_rows)
    tab = []
    basis = []
    art_col = {}
    for i, (coeffs, b) in enumerate(rows):
        row = [ZERO] * (ncols + 1)
        if b > 0:
            for j, c in coeffs.items():
                row[j] = c
            row[nvars + i] = Fraction(-1)
            col = nvars + m + len(art_col)
            art_col[i] = col
            row[col] = Fraction(1)
            row[-1] = b
            basis.append(col)
        else:
            # negate so the surplus column starts basic with rhs -b >= 0
            for j, c in coeffs.items():
                row[j] = -c
            row[nvars + i] = Fraction(1)
            row[-1] = -b
            basis.append(nvars + i)
        tab.append(row)

    # reduced costs for minimizing the sum of artificials
    obj = [ZERO] * (ncols + 1)
    for col in art_col.values():
        obj[col] = Fraction(1)
    for i in art_rows:
        r = tab[i]
        for j in range(ncols + 1):
            if r[j]:
                obj[j] -= r[j]

    while True:
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # unbounded cannot happen in phase one
            raise AssertionError("phase-one simplex unbounded")
        _pivot(tab, obj, leave, enter)
        basis[leave] = enter

    if obj[-1] != 0:
        return None
    point = [ZERO] * nvars
    for i, col in enumerate(basis):
        if col < nvars:
            point[col] = tab[i][-1]
    return tuple(point)


def _pivot(tab, obj, r, c):
    prow = tab[r]
    p = prow[c]
    if p != 1:
        inv = 1 / p
        prow[:] = [v * inv if v else v for v in prow]
    nz = [j for j, v in enumerate(prow) if v]
    for i, row in enumerate(tab):
        if i != r:
            f = row[c]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
    f = obj[c]
    if f:
        for j in nz:
            obj[j] -= f * prow[j]


# ---------------------------------------------------------------------------
# Fourier-Motzkin


def _fourier_motzkin(rows, nvars):
    system = [dict(c) for c, _ in rows]
    rhs = [b for _, b in rows]
    # x_j >= 0
    for j in range(nvars):
        system.append({j: Fraction(1)})
        rhs.append(ZERO)
    stages = []
    current = list(zip(system, rhs))
    for j in reversed(range(nvars)):
        lower, upper, rest = [], [], []
        for c, b in current:
            a = c.get(j, ZERO)
            if a > 0:
                lower.append((c, b, a))
            elif a < 0:
                upper.append((c, b, a))
            else:
                rest.append((c, b))
        stages.append((j, lower, upper))
        combined = list(rest)
        seen = set()
        for cl, bl, al in lower:
            for cu, bu, au in upper:
                # (cl x >= bl)/al + (cu x >= bu)/(-au) eliminates x_j
                c = {}
                for k, v in cl.items():
                    c[k] = c.get(k, ZERO) + v / al
                for k, v in cu.items():
                    c[k] = c.get(k, ZERO) + v / (-au)
                c = {k: v for k, v in c.items() if v and k != j}
                b = bl / al + bu / (-au)
                key = (tuple(sorted(c.items())), b)
                if key not in seen:
                    seen.add(key)
                    combined.append((c, b))
        current = combined
    if any(b > 0 for c, b in current if not c):
        return None
    # back substitution, first eliminated variable last
    point = [ZERO] * nvars
    for j, lower, upper in reversed(stages):
        def value(c, b, a):
            rest = sum((v * point[k] for k, v in c.items() if k != j), ZERO)
            return (b - rest) / a

        lo = max((value(c, b, a) for c, b, a in lower), default=None)
        hi = min((value(c, b, a) for c, b, a in upper), default=None)
        if lo is not None:
            point[j] = lo
        elif hi is not None:
            point[j] = min(hi, ZERO) if hi < 0 else ZERO
        if hi is not None and lo is not None and lo > hi:
            return None
    return tuple(point)
