"""Exact sparse series over indexed variable families.

Everything in this package computes inside one ring: finite rational
linear combinations of monomials in the indexed families a_k, b_k, c_k,
beta_k, gamma_k and the scalars x, y, z.  Coefficients are exact
``fractions.Fraction`` values; no floating point appears anywhere.

Series are graded by *vertex weight*: a monomial weighs
``sum(k * exp(a_k)) + exp(x)``.  The a-family and x both count vertices
(internal vertices for networks), which is the quantity all target
series are truncated in; the edge counters b, c, beta, gamma, y, z are
weightless.  A series may carry a truncation grade, in which case no
term above that weight is ever stored and products are pruned on the
fly.

``IndexSeries`` values are immutable by convention: no operation
mutates its operands, so results may be shared freely (including across
threads and through the memoising caches in :mod:`walshenum.cores`).
"""

from __future__ import annotations

from fractions import Fraction

# Variable families.  Indexed families carry a positive index; the
# scalar families X, Y, Z only ever use index 1.
A, B, C, BETA, GAMMA, X, Y, Z = range(8)

FAMILY_NAMES = ("a", "b", "c", "beta", "gamma", "x", "y", "z")
SCALAR_FAMILIES = frozenset((X, Y, Z))

# A variable is a (family, index) pair; a monomial is a tuple of
# ((family, index), exponent) pairs sorted by variable, with no zero
# exponents.  Sorted tuples give canonical hashing and a deterministic
# term order.
Var = tuple
Mono = tuple

EMPTY_MONO: Mono = ()


def mono_weight(mono: Mono) -> int:
    """Vertex weight of a monomial (the truncation grade)."""
    w = 0
    for (fam, idx), e in mono:
        if fam == A:
            w += idx * e
        elif fam == X:
            w += e
    return w


def mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_div(m1: Mono, m2: Mono) -> Mono | None:
    """m1 / m2, or None when not divisible."""
    exps = dict(m1)
    for v, e in m2:
        r = exps.get(v, 0) - e
        if r < 0:
            return None
        if r == 0:
            exps.pop(v, None)
        else:
            exps[v] = r
    return tuple(sorted(exps.items()))


def mono_reindex(mono: Mono, k: int) -> Mono:
    """Send every v_i to v_{k*i}; scalars go to their k-th power."""
    out = []
    for (fam, idx), e in mono:
        if fam in SCALAR_FAMILIES:
            out.append(((fam, idx), e * k))
        else:
            out.append(((fam, idx * k), e))
    return tuple(sorted(out))


def mono_str(mono: Mono) -> str:
    parts = []
    for (fam, idx), e in mono:
        name = FAMILY_NAMES[fam]
        if fam not in SCALAR_FAMILIES:
            name = f"{name}{idx}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts)


def _meet_trunc(t1: int | None, t2: int | None) -> int | None:
    if t1 is None:
        return t2
    if t2 is None:
        return t1
    return min(t1, t2)


def _as_var(v) -> Var:
    """Accept a (family, index) pair or a plain single-variable series."""
    if isinstance(v, IndexSeries):
        (mono, coef), = v.terms.items()
        if coef != 1 or len(mono) != 1 or mono[0][1] != 1:
            raise ValueError(f"not a plain variable: {v}")
        return mono[0][0]
    fam, idx = v
    if idx < 1:
        raise ValueError(f"variable index must be >= 1, got {idx}")
    if fam in SCALAR_FAMILIES and idx != 1:
        raise ValueError("scalar families only carry index 1")
    return (fam, idx)


def _as_mono(m) -> Mono:
    """Accept a Mono tuple, an exponent dict, or a monic one-term series."""
    if isinstance(m, IndexSeries):
        if len(m.terms) != 1:
            raise ValueError("expected a single-term series")
        (mono, coef), = m.terms.items()
        if coef != 1:
            raise ValueError("expected a monic monomial")
        return mono
    if isinstance(m, dict):
        return tuple(sorted((v, e) for v, e in m.items() if e))
    return tuple(m)


class IndexSeries:
    """Finite map monomial -> Fraction with an optional truncation grade.

    ``trunc=None`` means the series is exact (no grade bound).  Zero
    coefficients and terms above the truncation grade are never stored.
    Equality compares the term maps only; the truncation grade is
    bookkeeping, not part of the value.
    """

    __slots__ = ("terms", "trunc")

    def __init__(self, terms=None, trunc: int | None = None):
        self.trunc = trunc
        clean: dict[Mono, Fraction] = {}
        if terms:
            for mono, coef in terms.items():
                if not coef:
                    continue
                if trunc is not None and mono_weight(mono) > trunc:
                    continue
                clean[mono] = coef if isinstance(coef, Fraction) else Fraction(coef)
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, trunc: int | None = None) -> "IndexSeries":
        return cls({}, trunc)

    @classmethod
    def const(cls, coef, trunc: int | None = None) -> "IndexSeries":
        return cls({EMPTY_MONO: Fraction(coef)}, trunc)

    @classmethod
    def variable(cls, fam: int, idx: int = 1) -> "IndexSeries":
        return cls({(((fam, idx), 1),): Fraction(1)})

    @classmethod
    def monomial(cls, coef, mono) -> "IndexSeries":
        return cls({_as_mono(mono): Fraction(coef)})

    # -- inspection --------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono) -> Fraction:
        """Coefficient of a monomial (0 when absent)."""
        return self.terms.get(_as_mono(mono), Fraction(0))

    def support(self, fam: int) -> list[int]:
        """Sorted indices k such that some v_{fam,k} occurs."""
        ks = {v[1] for mono in self.terms for v, _ in mono if v[0] == fam}
        return sorted(ks)

    def max_weight(self) -> int:
        return max((mono_weight(m) for m in self.terms), default=0)

    def coefficient_in(self, fam: int, e: int) -> "IndexSeries":
        """Coefficient of (scalar family)^e, as a series in the rest."""
        var = (fam, 1)
        out = {}
        for mono, coef in self.terms.items():
            exps = dict(mono)
            if exps.pop(var, 0) == e:
                out[tuple(sorted(exps.items()))] = coef
        return IndexSeries(out)

    # -- ring operations ---------------------------------------------

    def _coerce(self, other):
        if isinstance(other, IndexSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return IndexSeries.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        trunc = _meet_trunc(self.trunc, other.trunc)
        terms = dict(self.terms)
        for mono, coef in other.terms.items():
            s = terms.get(mono, 0) + coef
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return IndexSeries(terms, trunc)

    __radd__ = __add__

    def __neg__(self):
        return IndexSeries({m: -c for m, c in self.terms.items()}, self.trunc)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return IndexSeries.zero(self.trunc)
            return IndexSeries(
                {m: c * other for m, c in self.terms.items()}, self.trunc)
        if not isinstance(other, IndexSeries):
            return NotImplemented
        trunc = _meet_trunc(self.trunc, other.trunc)
        rhs = [(m, c, mono_weight(m)) for m, c in other.terms.items()]
        acc: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            w1 = mono_weight(m1)
            for m2, c2, w2 in rhs:
                if trunc is not None and w1 + w2 > trunc:
                    continue
                m = mono_mul(m1, m2)
                s = acc.get(m, 0) + c1 * c2
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return IndexSeries(acc, trunc)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return IndexSeries(
                {m: c / scalar for m, c in self.terms.items()}, self.trunc)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not representable")
        result = IndexSeries.const(1, self.trunc)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    # -- structural operations ----------------------------------------

    def truncate(self, trunc: int | None) -> "IndexSeries":
        """Drop every term of vertex weight above ``trunc``."""
        if trunc is None or (self.trunc is not None and self.trunc <= trunc):
            out = IndexSeries.zero(_meet_trunc(self.trunc, trunc))
            out.terms = dict(self.terms)
            return out
        return IndexSeries(self.terms, trunc)

    def reindex(self, k: int) -> "IndexSeries":
        """Replace every v_i by v_{k*i} (scalars: s -> s^k).

        Vertex weights multiply by k, so an input grade bound t becomes
        k*t on the result.
        """
        if k < 1:
            raise ValueError("reindex factor must be >= 1")
        if k == 1:
            return self
        trunc = None if self.trunc is None else self.trunc * k
        return IndexSeries(
            {mono_reindex(m, k): c for m, c in self.terms.items()}, trunc)

    def derivative(self, var) -> "IndexSeries":
        """Formal partial derivative in one variable."""
        var = _as_var(var)
        out: dict[Mono, Fraction] = {}
        for mono, coef in self.terms.items():
            exps = dict(mono)
            e = exps.get(var, 0)
            if not e:
                continue
            if e == 1:
                del exps[var]
            else:
                exps[var] = e - 1
            m = tuple(sorted(exps.items()))
            s = out.get(m, 0) + coef * e
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return IndexSeries(out, self.trunc)

    def divide_exact(self, mono) -> "IndexSeries":
        """Divide every term by a monomial; raise if any term resists."""
        divisor = _as_mono(mono)
        out = {}
        for m, c in self.terms.items():
            q = mono_div(m, divisor)
            if q is None:
                raise ValueError(
                    f"term {mono_str(m)} is not divisible by {mono_str(divisor)}")
            out[q] = c
        return IndexSeries(out, self.trunc)

    def _mul_mono(self, mono: Mono, trunc: int | None) -> "IndexSeries":
        w = mono_weight(mono)
        out = {}
        for m, c in self.terms.items():
            if trunc is not None and mono_weight(m) + w > trunc:
                continue
            out[mono_mul(m, mono)] = c
        return IndexSeries(out, trunc)

    def substitute(self, assignment, trunc: int | None = None) -> "IndexSeries":
        """Replace variables by whole series, expanding to a grade bound.

        ``assignment`` maps variables (pairs or plain-variable series)
        to IndexSeries.  Unassigned variables pass through unchanged.
        Each monomial prod(v^e) becomes prod(assignment(v)^e); the
        expansion is truncated at ``trunc`` (defaulting to the input's
        own grade bound).  Divergence is impossible here: the input is
        a finite sum, so a substituted series with a constant term can
        only contribute finitely many terms per grade.
        """
        amap = {_as_var(v): s for v, s in assignment.items()}
        if trunc is None:
            trunc = self.trunc
        # Powers of assigned series recur across terms; cache them at
        # the requested grade bound.
        cache: dict[tuple[Var, int], IndexSeries] = {}
        acc: dict[Mono, Fraction] = {}
        for mono, coef in self.terms.items():
            prod = IndexSeries.const(coef, trunc)
            passthrough = []
            for var, e in mono:
                if var in amap:
                    f = cache.get((var, e))
                    if f is None:
                        f = amap[var].truncate(trunc) ** e
                        cache[(var, e)] = f
                    prod = prod * f
                    if prod.is_zero:
                        break
                else:
                    passthrough.append((var, e))
            if prod.is_zero:
                continue
            if passthrough:
                prod = prod._mul_mono(tuple(passthrough), trunc)
            for m, c in prod.terms.items():
                s = acc.get(m, 0) + c
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return IndexSeries(acc, trunc)

    # -- presentation --------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: terms sorted by variable then index."""
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            coef = self.terms[mono]
            if mono:
                parts.append(f"{coef} {mono_str(mono)}")
            else:
                parts.append(str(coef))
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self):
        body = self.to_text()
        if len(body) > 120:
            body = body[:117] + "..."
        t = "" if self.trunc is None else f", trunc={self.trunc}"
        return f"<IndexSeries {body}{t}>"


# Plain-variable helpers, so formulas read like the algebra they encode.

def a(k: int) -> IndexSeries:
    return IndexSeries.variable(A, k)


def b(k: int) -> IndexSeries:
    return IndexSeries.variable(B, k)


def c(k: int) -> IndexSeries:
    return IndexSeries.variable(C, k)


def beta(k: int) -> IndexSeries:
    return IndexSeries.variable(BETA, k)


def gamma(k: int) -> IndexSeries:
    return IndexSeries.variable(GAMMA, k)


xv = IndexSeries.variable(X, 1)
yv = IndexSeries.variable(Y, 1)
zv = IndexSeries.variable(Z, 1)
