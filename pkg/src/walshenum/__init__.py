"""Exact Walsh index series and unlabelled enumeration of K3,3-free
toroidal and projective-planar graphs."""

from .compose import (BivariateSeries, NetworkSeriesPair, compose_matched,
                      compose_walsh, labelled_composition_check,
                      specialize_labelled, specialize_tilde,
                      specialize_tilde_matched, tilde_of_composition)
from .cores import (networks_from_biconnected, walsh_complete, walsh_cycle,
                    walsh_k5, walsh_k5e, walsh_m, walsh_matched_cycle,
                    walsh_matched_path, walsh_mstar)
from .matching import cycle_matching, path_matching, verify_matching_gf
from .series import IndexSeries, a, b, beta, c, gamma, xv, yv, zv
from .tables import (PlanarNetworkData, crown_table, crown_walsh,
                     load_network_series, projective_planar_table,
                     toroidal_core_table, toroidal_table)

__all__ = [
    "BivariateSeries", "IndexSeries", "NetworkSeriesPair",
    "PlanarNetworkData", "a", "b", "beta", "c", "compose_matched",
    "compose_walsh", "crown_table", "crown_walsh", "cycle_matching",
    "gamma", "labelled_composition_check", "load_network_series",
    "networks_from_biconnected", "path_matching",
    "projective_planar_table", "specialize_labelled", "specialize_tilde",
    "specialize_tilde_matched", "tilde_of_composition",
    "toroidal_core_table", "toroidal_table", "verify_matching_gf",
    "walsh_complete", "walsh_cycle", "walsh_k5", "walsh_k5e", "walsh_m",
    "walsh_matched_cycle", "walsh_matched_path", "walsh_mstar", "xv",
    "yv", "zv",
]

__version__ = "0.1.0"
