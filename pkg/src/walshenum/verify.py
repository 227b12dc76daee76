"""Self-check suites: oracle equivalences, generating-function
identities, and golden-table comparisons.

Each suite returns (name, ok, detail) triples so both the CLI and the
tests can run them; a detail string on failure always carries the two
disagreeing values.
"""

from __future__ import annotations

from . import oracle, reference
from .compose import specialize_tilde
from .cores import (walsh_complete, walsh_cycle, walsh_k5, walsh_k5e,
                    walsh_m, walsh_mstar)
from .matching import verify_matching_gf
from .tables import (crown_table, projective_planar_table,
                     toroidal_core_table, toroidal_table)

Check = tuple[str, bool, str]


def _compare(name: str, got, want) -> Check:
    if got == want:
        return (name, True, "")
    return (name, False, f"computed {got!r} but expected {want!r}")


def check_oracle() -> list[Check]:
    out = []
    for n in range(3, 9):
        got = walsh_cycle(n)
        want = oracle.walsh_bruteforce([oracle.cycle_graph(n)])
        out.append(_compare(f"cycle series matches brute force (n={n})",
                            got, want))
    for n in range(2, 6):
        got = walsh_complete(n)
        want = oracle.walsh_bruteforce([oracle.complete_graph(n)])
        out.append(_compare(f"complete-graph series matches brute force (n={n})",
                            got, want))
    out.append(_compare("K5 series matches brute force",
                        walsh_k5(),
                        oracle.walsh_bruteforce([oracle.complete_graph(5)])))
    out.append(_compare("M series matches brute force",
                        walsh_m(),
                        oracle.walsh_bruteforce([oracle.m_graph()])))
    out.append(_compare("M* series matches brute force",
                        walsh_mstar(),
                        oracle.walsh_bruteforce([oracle.mstar_graph()])))
    net = oracle.k5e_network()
    out.append(_compare("K5\\e network series (+) matches brute force",
                        walsh_k5e("+"),
                        oracle.network_walsh_bruteforce(net, "+")))
    out.append(_compare("K5\\e network series (-) matches brute force",
                        walsh_k5e("-"),
                        oracle.network_walsh_bruteforce(net, "-")))
    return out


def check_gf() -> list[Check]:
    out = [("matching-polynomial generating functions to order 20",
            verify_matching_gf(20), "recurrence and series expansion differ")]
    # All-graph counts through the complete-graph series with trivial
    # networks, against direct Burnside counting.
    expected_totals = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
    for n in range(1, 7):
        from .compose import compose_walsh
        from .series import b, c
        w = compose_walsh(walsh_complete(n), 1 + b(1), 1 + c(1), n)
        got = specialize_tilde(w).by_vertices().get(n, 0)
        out.append(_compare(f"unlabelled simple graphs on {n} vertices",
                            got, expected_totals[n]))
        if n <= 6:
            graphs = _all_graphs(n)
            burn = sum(oracle.burnside_unlabelled_count(graphs, n).values())
            out.append(_compare(
                f"Burnside count agrees on {n} vertices", burn, got))
    return out


def _all_graphs(n: int) -> list[oracle.SmallGraph]:
    import itertools
    slots = list(itertools.combinations(range(1, n + 1), 2))
    out = []
    for bits in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if bits >> i & 1]
        out.append(oracle.SmallGraph(range(1, n + 1), edges))
    return out


def check_tables() -> list[Check]:
    out = []
    got_cores = dict(toroidal_core_table(64))
    for n in range(5, 65):
        out.append(_compare(f"toroidal cores on {n} vertices",
                            got_cores.get(n, 0),
                            reference.TOROIDAL_CORE_COUNTS[n]))
    out.append(_compare("crown generating function to 64 vertices",
                        crown_table(64), reference.crown_rows(64)))
    out.append(_compare("projective-planar table to 9 vertices",
                        projective_planar_table(9),
                        reference.PROJECTIVE_PLANAR_ROWS))
    out.append(_compare("toroidal table to 12 vertices",
                        toroidal_table(12), reference.TOROIDAL_ROWS))
    return out


SUITES = {
    "oracle": check_oracle,
    "gf": check_gf,
    "tables": check_tables,
}
