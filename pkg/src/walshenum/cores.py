"""Closed-form Walsh index series for the core graphs.

The complete graph K5, the two glued-K5 graphs M and M*, dihedral
cycles, matched paths and cycles, and arbitrary complete graphs all
have explicit Walsh series; this module builds them.  Every constructor
here is cross-checked against the brute-force oracle by the test suite,
and the oracle wins any disagreement: long hand-typed displays are a
known transcription hazard, so the M/M* series in particular are data
that the oracle validates.

The derivative/division calculus that turns a 2-connected class B into
its four associated network series lives in
:func:`networks_from_biconnected`; the K5-minus-an-edge networks used
by the toroidal crowns are obtained that way rather than hard-coded.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .matching import cycle_matching, path_matching
from .series import (A, B, C, IndexSeries, Y, Z, a, b, beta, c, gamma)


def totient(n: int) -> int:
    """Euler phi by trial division; n stays tiny here."""
    result = n
    p, m = 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


# -- fixed cores --------------------------------------------------------

@lru_cache(maxsize=None)
def walsh_k5() -> IndexSeries:
    """Walsh series of K5: seven terms, prefactor 1/120."""
    s = (a(1) ** 5 * b(1) ** 10
         + 10 * a(1) ** 3 * a(2) * b(1) ** 3 * b(2) ** 3 * c(1)
         + 15 * a(1) * a(2) ** 2 * b(2) ** 4 * c(1) ** 2
         + 20 * a(1) ** 2 * a(3) * b(1) * b(3) ** 3
         + 20 * a(2) * a(3) * b(3) * b(6) * c(1)
         + 30 * a(1) * a(4) * b(4) ** 2 * c(2)
         + 24 * a(5) * b(5) ** 2)
    return s / 120


@lru_cache(maxsize=None)
def walsh_m() -> IndexSeries:
    """Walsh series of the M graph (two K5's sharing a kept edge)."""
    s = (a(1) ** 8 * b(1) ** 19
         + a(1) ** 6 * a(2) * b(1) ** 6 * b(2) ** 6 * c(1)
         + 6 * (a(1) ** 6 * a(2) * b(1) ** 12 * b(2) ** 3 * c(1)
                + a(1) ** 4 * a(2) ** 2 * b(1) ** 3 * b(2) ** 7 * c(1) ** 2)
         + 9 * (a(1) ** 4 * a(2) ** 2 * b(1) ** 5 * b(2) ** 6 * c(1) ** 2
                + a(1) ** 2 * a(2) ** 3 * b(2) ** 8 * c(1) ** 3)
         + 6 * (a(1) ** 2 * a(2) ** 3 * b(1) * b(2) ** 9
                + a(2) ** 4 * b(2) ** 9 * c(1))
         + 4 * (a(1) ** 5 * a(3) * b(1) ** 10 * b(3) ** 3
                + a(1) ** 3 * a(2) * a(3) * b(1) ** 3 * b(2) ** 3 * b(3) * b(6) * c(1))
         + 12 * (a(1) ** 3 * a(2) * a(3) * b(1) ** 3 * b(2) ** 3 * b(3) ** 3 * c(1)
                 + a(1) * a(2) ** 2 * a(3) * b(2) ** 4 * b(3) * b(6) * c(1) ** 2)
         + 4 * (a(1) ** 2 * a(3) ** 2 * b(1) * b(3) ** 6
                + a(2) * a(3) ** 2 * b(3) ** 2 * b(6) ** 2 * c(1))
         + 18 * (a(1) ** 2 * a(2) * a(4) * b(1) * b(2) ** 2 * b(4) ** 3 * c(2)
                 + a(2) ** 2 * a(4) * b(2) ** 2 * b(4) ** 3 * c(1) * c(2))
         + 12 * (a(1) ** 2 * a(6) * b(1) * b(6) ** 3
                 + a(2) * a(6) * b(6) ** 3 * c(1)))
    return s / 144


@lru_cache(maxsize=None)
def walsh_mstar() -> IndexSeries:
    """Walsh series of M*, the M graph with the gluing edge removed."""
    s = (a(1) ** 8 * b(1) ** 18
         + a(1) ** 6 * a(2) * b(1) ** 6 * b(2) ** 6
         + 6 * (a(1) ** 6 * a(2) * b(1) ** 11 * b(2) ** 3 * c(1)
                + a(1) ** 4 * a(2) ** 2 * b(1) ** 3 * b(2) ** 7 * c(1))
         + 9 * (a(1) ** 4 * a(2) ** 2 * b(1) ** 4 * b(2) ** 6 * c(1) ** 2
                + a(1) ** 2 * a(2) ** 3 * b(2) ** 8 * c(1) ** 2)
         + 6 * (a(1) ** 2 * a(2) ** 3 * b(2) ** 9
                + a(2) ** 4 * b(2) ** 9)
         + 4 * (a(1) ** 5 * a(3) * b(1) ** 9 * b(3) ** 3
                + a(1) ** 3 * a(2) * a(3) * b(1) ** 3 * b(2) ** 3 * b(3) * b(6))
         + 12 * (a(1) ** 3 * a(2) * a(3) * b(1) ** 2 * b(2) ** 3 * b(3) ** 3 * c(1)
                 + a(1) * a(2) ** 2 * a(3) * b(2) ** 4 * b(3) * b(6) * c(1))
         + 4 * (a(1) ** 2 * a(3) ** 2 * b(3) ** 6
                + a(2) * a(3) ** 2 * b(3) ** 2 * b(6) ** 2)
         + 18 * (a(1) ** 2 * a(2) * a(4) * b(2) ** 2 * b(4) ** 3 * c(2)
                 + a(2) ** 2 * a(4) * b(2) ** 2 * b(4) ** 3 * c(2))
         + 12 * (a(1) ** 2 * a(6) * b(6) ** 3
                 + a(2) * a(6) * b(6) ** 3))
    return s / 144


# -- parametric families -------------------------------------------------

@lru_cache(maxsize=None)
def walsh_cycle(n: int) -> IndexSeries:
    """Walsh series of the n-cycle under its dihedral group, n >= 3.

    The rotation part averages phi(d) a_d^(n/d) b_d^(n/d) over d | n.
    Reflections split by parity; in the even branch the through-vertex
    reflections pair all n edges into 2-cycles, so their term carries
    b2^(n/2) (edge-count homogeneity and the brute-force oracle both
    force this exponent).
    """
    if n < 3:
        raise ValueError("cycles need n >= 3")
    total = IndexSeries.zero()
    for d in divisors(n):
        total = total + Fraction(totient(d), 2 * n) * a(d) ** (n // d) * b(d) ** (n // d)
    if n % 2:
        refl = a(1) * a(2) ** ((n - 1) // 2) * b(2) ** ((n - 1) // 2) * c(1)
        total = total + refl / 2
    else:
        half = (n - 2) // 2
        refl = (a(2) ** (n // 2) * b(2) ** half * c(1) ** 2
                + a(1) ** 2 * a(2) ** half * b(2) ** (n // 2))
        total = total + refl / 4
    return total


@lru_cache(maxsize=None)
def walsh_complete(n: int) -> IndexSeries:
    """Walsh series of K_n as a sum over cycle types.

    For a permutation of cycle type (n_i): edges between an i-cycle and
    a j-cycle fall into gcd(i,j) orbits of length lcm(i,j); edges inside
    an i-cycle give floor((i-1)/2) full-length orbits, with the diameter
    class of an even cycle forming a Moebius orbit of half length.
    """
    if not 1 <= n <= 12:
        raise ValueError("walsh_complete supports 1 <= n <= 12")
    total = IndexSeries.zero()
    for part in _partitions(n):
        coef = Fraction(1)
        exps: dict = {}
        for i, ni in part.items():
            denom = (i ** ni) * _factorial(ni)
            coef /= denom
            exps[(A, i)] = ni
        for i, ni in part.items():
            within = i * (ni * (ni - 1) // 2) + ((i - 1) // 2) * ni
            if within:
                _bump(exps, (B, i), within)
            if i % 2 == 0:
                _bump(exps, (C, i // 2), ni)
        for (i, ni), (j, nj) in itertools.combinations(sorted(part.items()), 2):
            lcm = i * j // _gcd(i, j)
            _bump(exps, (B, lcm), _gcd(i, j) * ni * nj)
        mono = tuple(sorted(exps.items()))
        total = total + IndexSeries.monomial(coef, mono)
    return total


def _bump(exps, var, e):
    exps[var] = exps.get(var, 0) + e


def _gcd(i, j):
    while j:
        i, j = j, i % j
    return i


def _factorial(n):
    f = 1
    for i in range(2, n + 1):
        f *= i
    return f


def _partitions(n: int, largest: int | None = None):
    """Partitions of n as {part: multiplicity} dicts."""
    if largest is None:
        largest = n
    if n == 0:
        yield {}
        return
    for i in range(min(n, largest), 0, -1):
        for rest in _partitions(n - i, i):
            out = dict(rest)
            out[i] = out.get(i, 0) + 1
            yield out


# -- matched paths and cycles --------------------------------------------

def _u(k: int, ys: IndexSeries, zs: IndexSeries) -> IndexSeries:
    """U_k with (y, z) replaced by the given series; k >= 1."""
    return path_matching(k).substitute({(Y, 1): ys, (Z, 1): zs})


def _t(d: int, ys: IndexSeries, zs: IndexSeries) -> IndexSeries:
    return cycle_matching(d).substitute({(Y, 1): ys, (Z, 1): zs})


def _u_shifted(k: int, ys: IndexSeries, zs: IndexSeries,
               zpow: int) -> IndexSeries:
    """zs^zpow * U_k(ys, zs), with the U_0 = 1/z convention cancelled
    against one zs factor before anything is built.  Needs zpow >= 1."""
    if zpow < 1:
        raise ValueError("the 1/z cancellation needs a z factor to absorb")
    if k == 0:
        return zs ** (zpow - 1)
    return zs ** zpow * _u(k, ys, zs)


@lru_cache(maxsize=None)
def walsh_matched_path(n: int) -> IndexSeries:
    """Extended Walsh series of matched n-paths (families a,b,c,beta,gamma).

    The identity contributes a_1^n U_n(b1, beta1); the reflection term
    folds the path in half, so its matching structure lives in the
    index-2 variables.  At n = 1 and n = 2 the formula runs through the
    U_0 convention; the results agree with the brute-force matched sum,
    which is the defining check.
    """
    if n < 1:
        raise ValueError("paths need n >= 1")
    total = a(1) ** n * _u(n, b(1), beta(1)) / 2
    if n % 2:
        refl = a(1) * a(2) ** ((n - 1) // 2) * _u_shifted(
            (n - 1) // 2, b(2), beta(2), 1)
    else:
        refl = a(2) ** (n // 2) * (
            gamma(1) * _u(n // 2, b(2), beta(2))
            + c(1) * _u_shifted((n - 2) // 2, b(2), beta(2), 1))
    return total + refl / 2


@lru_cache(maxsize=None)
def walsh_matched_cycle(n: int) -> IndexSeries:
    """Extended Walsh series of matched n-cycles, n >= 3.

    Rotations by n/d positions leave T_d(b_{n/d}, beta_{n/d}) worth of
    invariant matchings; reflection terms split by parity as for paths.
    The smallest cases (n = 3 odd, n = 4 even) hit the U_0 convention
    and cancel it against a beta_2 factor.
    """
    if n < 3:
        raise ValueError("cycles need n >= 3")
    total = IndexSeries.zero()
    for d in divisors(n):
        q = n // d
        total = total + Fraction(totient(q), 2 * n) * a(q) ** d * _t(d, b(q), beta(q))
    if n % 2:
        refl = a(1) * a(2) ** ((n - 1) // 2) * (
            gamma(1) * beta(2) * _u((n - 1) // 2, b(2), beta(2))
            + c(1) * _u_shifted((n - 3) // 2, b(2), beta(2), 2))
        total = total + refl / 2
    else:
        refl = (a(1) ** 2 * a(2) ** ((n - 2) // 2) * beta(2) ** 2
                * _u((n - 2) // 2, b(2), beta(2))
                + a(2) ** (n // 2) * (
                    gamma(1) ** 2 * _u(n // 2, b(2), beta(2))
                    + 2 * c(1) * gamma(1) * beta(2) * _u((n - 2) // 2, b(2), beta(2))
                    + c(1) ** 2 * _u_shifted((n - 4) // 2, b(2), beta(2), 2)))
        total = total + refl / 4
    return total


# -- networks from a 2-connected class -----------------------------------

def networks_from_biconnected(wb: IndexSeries):
    """The four network series attached to a 2-connected class B.

    Returns (W+ of B01, W- of B01, W+ of N_B, W- of N_B): rooting an
    oriented cylindrical (resp. Moebius) 1-cycle of edges gives the
    pole pair, so the derivative in b1 (resp. c1) divided by a1^2
    (resp. a2), doubled, yields the series of B-minus-an-edge networks;
    N_B additionally allows the pole edge back in and drops the trivial
    two-isolated-poles network.  Division must be exact; a remainder
    means wb is not the Walsh series of a 2-connected class.
    """
    wb01_plus = (2 * wb.derivative((B, 1))).divide_exact({(A, 1): 2})
    wb01_minus = (2 * wb.derivative((C, 1))).divide_exact({(A, 2): 1})
    wnb_plus = (1 + b(1)) * wb01_plus - 1
    wnb_minus = (1 + c(1)) * wb01_minus - 1
    return wb01_plus, wb01_minus, wnb_plus, wnb_minus


@lru_cache(maxsize=None)
def walsh_k5e(sign: str) -> IndexSeries:
    """Walsh series of the K5-minus-an-edge networks, by the
    derivative/division calculus applied to the K5 series."""
    plus, minus, _, _ = networks_from_biconnected(walsh_k5())
    if sign == "+":
        return plus
    if sign == "-":
        return minus
    raise ValueError("sign must be '+' or '-'")
