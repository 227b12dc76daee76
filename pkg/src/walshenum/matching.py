"""Homogeneous matching polynomials of paths and cycles.

U_n(y, z) sums y^|mu| z^(n-1-|mu|) over the matchings mu of the n-vertex
path, T_n(y, z) does the same for the n-cycle: y counts matched edges,
z unmatched ones.  Both satisfy the classical two-term recurrences and
a pair of rational generating functions that the verification suite
re-derives independently.

U_0 would be 1/z, which this ring cannot represent; callers that need
it (the matched path and cycle series at their smallest sizes) cancel
the 1/z against an adjacent z-sort factor before anything is
materialised.  See :func:`walshenum.cores._u_shifted`.
"""

from __future__ import annotations

from functools import lru_cache

from .series import IndexSeries, X, xv, yv, zv


@lru_cache(maxsize=None)
def path_matching(n: int) -> IndexSeries:
    """U_n(y, z), homogeneous of degree n-1.  Requires n >= 1."""
    if n < 1:
        raise ValueError("U_0 is 1/z and is never materialised; n must be >= 1")
    if n == 1:
        return IndexSeries.const(1)
    if n == 2:
        return yv + zv
    return yv * zv * path_matching(n - 2) + zv * path_matching(n - 1)


@lru_cache(maxsize=None)
def cycle_matching(n: int) -> IndexSeries:
    """T_n(y, z); degree n for n >= 3, with T_1 = z and T_2 = 2yz + z^2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return zv
    if n == 2:
        return 2 * yv * zv + zv * zv
    return yv * zv ** 2 * path_matching(n - 2) + zv * path_matching(n)


def verify_matching_gf(max_n: int) -> bool:
    """Check both generating functions against the recurrences.

    Expands 1/((1 - xz - x^2 yz) z) and (xz + 2x^2 yz)/(1 - xz - x^2 yz)
    as power series in x up to order ``max_n`` and compares the
    coefficients with path_matching / cycle_matching.  The x^0 path
    coefficient corresponds to the U_0 = 1/z convention and is checked
    symbolically (geometric series constant term equals 1).
    """
    if max_n < 3:
        raise ValueError("max_n must be >= 3")
    base = xv * zv + xv ** 2 * yv * zv
    base = base.truncate(max_n)
    geo = IndexSeries.const(1, max_n)
    power = IndexSeries.const(1, max_n)
    while True:
        power = power * base
        if power.is_zero:
            break
        geo = geo + power

    # Path side: z * sum U_n x^n equals the geometric series.
    if geo.coefficient_in(X, 0) != IndexSeries.const(1):
        return False
    for n in range(1, max_n + 1):
        lhs = geo.coefficient_in(X, n).divide_exact(zv)
        if lhs != path_matching(n):
            return False

    # Cycle side needs no division.
    cyc = (xv * zv + 2 * xv ** 2 * yv * zv) * geo
    for n in range(1, max_n + 1):
        if cyc.coefficient_in(X, n) != cycle_matching(n):
            return False
    return True
