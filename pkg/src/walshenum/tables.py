"""Headline pipelines: toroidal crowns, toroidal cores, and the
projective-planar / toroidal count tables.

A toroidal crown is a cycle with K5-minus-an-edge networks substituted
for the edges outside a matching (so no two bare edges are adjacent);
the core classes are K5, M, M* and the crowns.  Substituting strongly
planar networks into the cores, via the bivariate route, produces the
final count tables.  The planar network counts themselves are embedded
as a data file, complete through four internal vertices, which bounds
how far the tables can go; a larger table in the same format can be
swapped in without code changes.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .compose import BivariateSeries, NetworkSeriesPair, compose_matched, \
    specialize_tilde, tilde_of_composition
from .cores import walsh_k5, walsh_k5e, walsh_m, walsh_matched_cycle, walsh_mstar
from .series import IndexSeries

CountTable = list[tuple[int, int, int]]

NETWORK_DATA_HEADER = "network-series v1"

# Factored form of the embedded planar-network counts: total and
# pole-symmetric bracket coefficients of (1+y)[...], plus the leading
# bare-edge term y.  The expanded data file must match this exactly.
_BRACKET_PLUS = {
    1: {2: 1},
    2: {3: 1, 4: 3, 5: 1},
    3: {4: 1, 5: 8, 6: 15, 7: 9, 8: 3},
    4: {5: 1, 6: 16, 7: 66, 8: 112, 9: 97, 10: 47, 11: 9},
}
_BRACKET_MINUS = {
    1: {2: 1},
    2: {3: 1, 4: 1, 5: 1},
    3: {4: 1, 5: 2, 6: 3, 7: 3, 8: 1},
    4: {5: 1, 6: 4, 7: 8, 8: 12, 9: 13, 10: 7, 11: 3},
}


def _expand_factored(bracket: dict[int, dict[int, int]]) -> BivariateSeries:
    data = {(0, 1): 1}
    for n, ms in bracket.items():
        for m, cnt in ms.items():
            data[(n, m)] = data.get((n, m), 0) + cnt
            data[(n, m + 1)] = data.get((n, m + 1), 0) + cnt
    return BivariateSeries(data)


class PlanarNetworkData(NetworkSeriesPair):
    """Strongly planar network counts with a known completeness bound."""

    @property
    def max_internal(self) -> int:
        return max(n for (n, _m) in self.plus.data)

    @classmethod
    def parse(cls, text: str) -> "PlanarNetworkData":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines or lines[0] != NETWORK_DATA_HEADER:
            raise ValueError(f"expected header {NETWORK_DATA_HEADER!r}")
        plus, minus = {}, {}
        for ln in lines[1:]:
            n, m, p, q = (int(tok) for tok in ln.split())
            if p:
                plus[(n, m)] = p
            if q:
                minus[(n, m)] = q
        return cls(BivariateSeries(plus), BivariateSeries(minus))

    @classmethod
    def embedded(cls) -> "PlanarNetworkData":
        """The packaged table, re-checked against its factored form."""
        text = resources.files("walshenum").joinpath(
            "data/planar_networks.txt").read_text()
        data = cls.parse(text)
        if data.plus != _expand_factored(_BRACKET_PLUS):
            raise AssertionError("embedded planar network table does not "
                                 "match its factored form (total counts)")
        if data.minus != _expand_factored(_BRACKET_MINUS):
            raise AssertionError("embedded planar network table does not "
                                 "match its factored form (symmetric counts)")
        return data


def load_network_series(path) -> PlanarNetworkData:
    with open(path, encoding="utf-8") as fh:
        return PlanarNetworkData.parse(fh.read())


# -- crowns ---------------------------------------------------------------

def _max_crown_cycle(trunc: int) -> int:
    """Largest cycle size whose smallest crown still fits the grade.

    A crown on an n-cycle substitutes at least ceil(n/2) edges (the
    bare edges form a matching) and each substitution adds three
    internal vertices.
    """
    n = 3
    while (n + 1) + 3 * ((n + 2) // 2) <= trunc:
        n += 1
    return n


@lru_cache(maxsize=None)
def crown_walsh(trunc: int) -> IndexSeries:
    """Walsh series of all toroidal crowns up to the given vertex weight.

    Sums the matched-cycle series with K5-minus-an-edge networks
    substituted for the non-matching edge sort, in ascending cycle
    size for determinism.  Empty below weight 9.
    """
    wp, wm = walsh_k5e("+"), walsh_k5e("-")
    total = IndexSeries.zero(trunc)
    for n in range(3, _max_crown_cycle(trunc) + 1):
        total = total + compose_matched(walsh_matched_cycle(n), wp, wm, trunc)
    return total


def crown_table(max_n: int) -> CountTable:
    """Unlabelled crowns as (vertices, edges, count) rows."""
    return specialize_tilde(crown_walsh(max_n)).rows()


def toroidal_core_table(max_n: int = 64) -> list[tuple[int, int]]:
    """Unlabelled toroidal cores by vertex count: K5, M, M* and crowns."""
    if not 1 <= max_n <= 64:
        raise ValueError("supported range is 1 <= max_n <= 64")
    cores = (walsh_k5() + walsh_m() + walsh_mstar()).truncate(max_n) \
        + crown_walsh(max_n)
    marginals = specialize_tilde(cores).by_vertices()
    return [(n, marginals.get(n, 0)) for n in range(5, max_n + 1)]


# -- final tables -----------------------------------------------------------

def projective_planar_table(max_n: int = 9,
                            data: PlanarNetworkData | None = None) -> CountTable:
    """Non-planar 2-connected K3,3-free projective-planar graphs:
    planar networks substituted into K5."""
    if data is None:
        data = PlanarNetworkData.embedded()
    bound = 5 + data.max_internal
    if not 1 <= max_n <= bound:
        raise ValueError(
            f"network data covers {data.max_internal} internal vertices, "
            f"so counts are complete only up to {bound} vertices")
    return tilde_of_composition(walsh_k5(), data, max_n).rows()


def toroidal_table(max_n: int = 12,
                   data: PlanarNetworkData | None = None) -> CountTable:
    """Non-projective-planar toroidal graphs: planar networks
    substituted into the non-K5 toroidal cores (M, M*, crowns)."""
    if data is None:
        data = PlanarNetworkData.embedded()
    bound = 8 + data.max_internal
    if not 1 <= max_n <= bound:
        raise ValueError(
            f"network data covers {data.max_internal} internal vertices, "
            f"so counts are complete only up to {bound} vertices")
    cores = (walsh_m() + walsh_mstar()).truncate(max_n) + crown_walsh(max_n)
    return tilde_of_composition(cores, data, max_n).rows()
