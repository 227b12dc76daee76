"""Edge substitution of networks into cores, and the specializations
that turn Walsh series into labelled or unlabelled generating functions.

The composition rule replaces each cylindrical edge-cycle variable b_k
of a core series by the network series with all indices multiplied by
k (and Moebius c_k by the pole-swapping series, likewise reindexed).
Setting instead a_k -> x^k and the edge variables to bivariate network
counts gives the unlabelled (tilde) generating function directly; that
route and the symbolic one must agree, which the tests exploit.
"""

from __future__ import annotations

from fractions import Fraction

from .series import (A, B, BETA, C, GAMMA, IndexSeries, X, Y,
                     mono_str, xv, yv, zv)


class BivariateSeries:
    """Integer coefficient table keyed by (vertex, edge) exponents.

    The unlabelled generating functions all live here: coefficients
    count isomorphism classes, so they must be nonnegative integers,
    and construction from a symbolic series enforces that.
    """

    __slots__ = ("data",)

    def __init__(self, data=None):
        self.data = {k: int(v) for k, v in (data or {}).items() if v}

    @classmethod
    def from_series(cls, p: IndexSeries) -> "BivariateSeries":
        data = {}
        for mono, coef in p.terms.items():
            n = m = 0
            for (fam, _idx), e in mono:
                if fam == X:
                    n = e
                elif fam == Y:
                    m = e
                else:
                    raise ValueError(
                        f"not a pure (x, y) series: term {mono_str(mono)}")
            if coef.denominator != 1 or coef < 0:
                raise ValueError(
                    f"coefficient {coef} of x^{n} y^{m} is not a count")
            data[(n, m)] = int(coef)
        return cls(data)

    def to_series(self, k: int = 1) -> IndexSeries:
        """The series evaluated at (x^k, y^k)."""
        return IndexSeries(
            {_xy_mono(n * k, m * k): Fraction(v)
             for (n, m), v in self.data.items()})

    def rows(self) -> list[tuple[int, int, int]]:
        return sorted((n, m, v) for (n, m), v in self.data.items())

    def coefficient(self, n: int, m: int) -> int:
        return self.data.get((n, m), 0)

    def by_vertices(self) -> dict[int, int]:
        """Marginal totals: vertex count -> number of structures."""
        out: dict[int, int] = {}
        for (n, _m), v in self.data.items():
            out[n] = out.get(n, 0) + v
        return dict(sorted(out.items()))

    def __eq__(self, other):
        return isinstance(other, BivariateSeries) and self.data == other.data

    def __le__(self, other):
        return all(v <= other.data.get(k, 0) for k, v in self.data.items())

    def __repr__(self):
        return f"<BivariateSeries {len(self.data)} cells>"


def _xy_mono(n: int, m: int):
    mono = []
    if n:
        mono.append(((X, 1), n))
    if m:
        mono.append(((Y, 1), m))
    return tuple(mono)


class NetworkSeriesPair:
    """Unlabelled network counts: all networks and the pole-symmetric ones.

    The pole-symmetric table can never exceed the full one cellwise;
    violating that means the two tables do not describe one class.
    """

    __slots__ = ("plus", "minus")

    def __init__(self, plus: BivariateSeries, minus: BivariateSeries):
        if not (minus <= plus):
            raise ValueError("pole-symmetric counts exceed total counts")
        self.plus = plus
        self.minus = minus


# -- composition ---------------------------------------------------------

def compose_walsh(wg: IndexSeries, wn_plus: IndexSeries,
                  wn_minus: IndexSeries, trunc: int | None = None) -> IndexSeries:
    """Walsh series of cores from wg with networks on every edge."""
    assignment = {}
    for k in wg.support(B):
        assignment[(B, k)] = wn_plus.reindex(k)
    for k in wg.support(C):
        assignment[(C, k)] = wn_minus.reindex(k)
    return wg.substitute(assignment, trunc)


def compose_matched(wgm: IndexSeries, wn_plus: IndexSeries,
                    wn_minus: IndexSeries, trunc: int | None = None) -> IndexSeries:
    """Substitute networks for the non-matching edge sort only:
    beta_k and gamma_k are replaced, b and c stay untouched."""
    assignment = {}
    for k in wgm.support(BETA):
        assignment[(BETA, k)] = wn_plus.reindex(k)
    for k in wgm.support(GAMMA):
        assignment[(GAMMA, k)] = wn_minus.reindex(k)
    return wgm.substitute(assignment, trunc)


def tilde_of_composition(wg: IndexSeries, nets: NetworkSeriesPair,
                         trunc: int | None = None) -> BivariateSeries:
    """Unlabelled counts of the composed class, straight from bivariate
    network counts: a_k -> x^k, b_k -> N(x^k, y^k), c_k -> Ntau(x^k, y^k)."""
    assignment = {}
    for k in wg.support(A):
        assignment[(A, k)] = xv ** k
    for k in wg.support(B):
        assignment[(B, k)] = nets.plus.to_series(k)
    for k in wg.support(C):
        assignment[(C, k)] = nets.minus.to_series(k)
    return BivariateSeries.from_series(wg.substitute(assignment, trunc))


# -- specializations -------------------------------------------------------

def specialize_labelled(w: IndexSeries) -> IndexSeries:
    """Labelled generating function: a1 -> x, b1 -> y, all else -> 0.

    The result is rational (the x^n coefficient is g_n(y)/n!), so it is
    returned as a plain series in x and y rather than a count table.
    """
    zero = IndexSeries.zero()
    assignment = {}
    for fam, image in ((A, xv), (B, yv), (C, None)):
        for k in w.support(fam):
            assignment[(fam, k)] = image if (k == 1 and image is not None) else zero
    for fam in (BETA, GAMMA):
        if w.support(fam):
            raise ValueError("labelled specialization is for plain series; "
                             "substitute the matched sorts first")
    return w.substitute(assignment)


def specialize_tilde(w: IndexSeries) -> BivariateSeries:
    """Unlabelled counts: a_i -> x^i, b_i -> y^i, c_i -> y^i."""
    return BivariateSeries.from_series(_tilde_series(w))


def _tilde_series(w: IndexSeries) -> IndexSeries:
    assignment = {}
    for fam, base in ((A, xv), (B, yv), (C, yv), (BETA, zv), (GAMMA, zv)):
        for k in w.support(fam):
            assignment[(fam, k)] = base ** k
    return w.substitute(assignment)


def specialize_tilde_matched(w: IndexSeries) -> IndexSeries:
    """Matched-class tilde: as specialize_tilde, with the non-matching
    sort counted by z (beta_i, gamma_i -> z^i).  Returns a series in
    x, y, z with integer coefficients (asserted)."""
    out = _tilde_series(w)
    for mono, coef in out.terms.items():
        if coef.denominator != 1 or coef < 0:
            raise ValueError(f"non-count coefficient {coef} at {mono_str(mono)}")
    return out


def labelled_composition_check(gxy: IndexSeries, nxy: IndexSeries,
                               composed: IndexSeries) -> bool:
    """Does G(x, N(x, y)) match the composed labelled series?"""
    trunc = composed.trunc
    for s in (gxy, nxy):
        if s.trunc is not None and (trunc is None or s.trunc < trunc):
            trunc = s.trunc
    lhs = gxy.substitute({(Y, 1): nxy}, trunc)
    return lhs == composed.truncate(trunc)
