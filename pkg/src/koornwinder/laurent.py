"""Sparse exact Laurent polynomials over a coefficient domain.

A polynomial is a dict mapping integer exponent vectors (tuples of fixed
length n) to nonzero coefficients.  The module also provides the
exponential map for affine exponents, the action of the affine simple
reflections and q-shifts on polynomials, exact division, and evaluation
at points with nonzero coordinates.
"""

from __future__ import annotations


class ExactDivisionError(ArithmeticError):
    """Division left a nonzero remainder; a divisibility guarantee broke."""


def _grlex(e):
    return (sum(e), e)


class LaurentRing:
    """Factory for Laurent polynomials in n variables over a domain."""

    __slots__ = ("n", "domain")

    def __init__(self, n, domain):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.domain = domain

    def zero(self):
        return LaurentPolynomial(self, {})

    def one(self):
        return LaurentPolynomial(self, {(0,) * self.n: self.domain.one})

    def scalar(self, c):
        return LaurentPolynomial(self, {(0,) * self.n: c} if c else {})

    def monomial(self, exponents, coeff=None):
        e = tuple(int(x) for x in exponents)
        if len(e) != self.n:
            raise ValueError("exponent vector has wrong length")
        c = self.domain.one if coeff is None else coeff
        return LaurentPolynomial(self, {e: c} if c else {})

    def gen(self, i, power=1):
        """The variable x_i (1-indexed) raised to an integer power."""
        if not 1 <= i <= self.n:
            raise ValueError("variable index out of range")
        e = [0] * self.n
        e[i - 1] = int(power)
        return self.monomial(e)

    def from_terms(self, mapping):
        terms = {}
        for e, c in mapping.items():
            e = tuple(int(x) for x in e)
            if len(e) != self.n:
                raise ValueError("exponent vector has wrong length")
            if c:
                terms[e] = c
        return LaurentPolynomial(self, terms)

    def exp_monomial(self, vector, delta=0):
        """x^(v + k*delta) = q^(-k) * x1^v1 ... xn^vn."""
        return self.monomial(vector, self.domain.q_pow(-delta))

    def from_json(self, obj):
        if obj["n"] != self.n:
            raise ValueError("rank mismatch in polynomial JSON")
        return self.from_terms(
            {tuple(t["exp"]): self.domain.decode_scalar(t["coeff"])
             for t in obj["terms"]})


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial tied to a LaurentRing."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _check(self, other):
        if self.ring.n != other.ring.n:
            raise ValueError("polynomials from rings of different rank")

    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            s = c if cur is None else cur + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial(self.ring, out)

    def __neg__(self):
        return LaurentPolynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            a, b = self.terms, other.terms
            if len(a) > len(b):
                a, b = b, a
            out = {}
            for e1, c1 in a.items():
                for e2, c2 in b.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    cur = out.get(e)
                    s = c1 * c2 if cur is None else cur + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        out.pop(e, None)
            return LaurentPolynomial(self.ring, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if isinstance(c, int):
            c = self.ring.domain.from_int(c)
        if not c:
            return self.ring.zero()
        return LaurentPolynomial(self.ring, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            raise ValueError("negative polynomial power")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.ring.n == other.ring.n and self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), self.ring.domain.zero)

    def support(self):
        return sorted(self.terms)

    def abs_degree(self):
        """Largest |e1| + ... + |en| over the support (0 for the zero poly)."""
        if not self.terms:
            return 0
        return max(sum(abs(x) for x in e) for e in self.terms)

    def evaluate(self, point):
        """Exact substitution x_i -> point_i; all coordinates must be nonzero."""
        point = tuple(point)
        if len(point) != self.ring.n:
            raise ValueError("evaluation point has wrong length")
        if any(not p for p in point):
            raise ValueError("evaluation point has a zero coordinate")
        total = self.ring.domain.zero
        pows = [{} for _ in range(self.ring.n)]
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    pk = pows[i].get(k)
                    if pk is None:
                        pk = point[i] ** k
                        pows[i][k] = pk
                    v = v * pk
            total = total + v
        return total

    def to_json(self):
        enc = self.ring.domain.encode_scalar
        return {
            "n": self.ring.n,
            "terms": [{"exp": list(e), "coeff": enc(c)}
                      for e, c in sorted(self.terms.items())],
        }

    def text(self):
        """Human-readable rendering, one term per '+'."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            factors = []
            for i, k in enumerate(e, start=1):
                if k == 1:
                    factors.append("x%d" % i)
                elif k:
                    factors.append("x%d^%d" % (i, k))
            cs = str(c)
            if any(ch in cs for ch in "+-/ ") and not cs.lstrip("-").isdigit():
                cs = "(%s)" % cs
            parts.append(cs if not factors else "%s*%s" % (cs, "*".join(factors)))
        return " + ".join(parts)

    def __repr__(self):
        return "LaurentPolynomial(%s)" % self.text()


# ---------------------------------------------------------------------------
# the affine generator action (algebra homomorphisms of the ring)

def apply_simple_reflection(i, f):
    """Act by the affine simple reflection s_i, 0 <= i <= n.

    s_0 sends x1 to q/x1, s_n inverts x_n, and the middle s_i swap
    adjacent variables.
    """
    ring = f.ring
    n = ring.n
    if i == 0:
        q_pow = ring.domain.q_pow
        out = {}
        for e, c in f.terms.items():
            k = e[0]
            ne = (-k,) + e[1:]
            out[ne] = c * q_pow(k) if k else c
        return LaurentPolynomial(ring, out)
    if i == n:
        return LaurentPolynomial(
            ring, {e[:-1] + (-e[-1],): c for e, c in f.terms.items()})
    if 0 < i < n:
        out = {}
        for e, c in f.terms.items():
            ne = list(e)
            ne[i - 1], ne[i] = ne[i], ne[i - 1]
            out[tuple(ne)] = c
        return LaurentPolynomial(ring, out)
    raise ValueError("reflection index out of range: %r" % (i,))


def apply_translation(i, f, sign=1):
    """The q-shift x_i -> q^sign * x_i (1-indexed i)."""
    ring = f.ring
    if not 1 <= i <= ring.n:
        raise ValueError("variable index out of range")
    q_pow = ring.domain.q_pow
    out = {}
    for e, c in f.terms.items():
        k = e[i - 1]
        out[e] = c * q_pow(sign * k) if k else c
    return LaurentPolynomial(ring, out)


# ---------------------------------------------------------------------------
# exact division

def exact_divide(f, g):
    """Return h with g*h == f, or raise ExactDivisionError.

    Both sides are shifted by monomials into honest polynomials, divided
    with a graded-lex term order, and the zero-remainder condition is
    asserted; a failure signals a broken divisibility guarantee upstream.
    """
    if not g.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    if not f.terms:
        return ring.zero()

    def mins(p):
        return tuple(min(e[i] for e in p.terms) for i in range(ring.n))

    fmin, gmin = mins(f), mins(g)
    work = {tuple(a - b for a, b in zip(e, fmin)): c for e, c in f.terms.items()}
    gshift = {tuple(a - b for a, b in zip(e, gmin)): c for e, c in g.terms.items()}

    lead_g = max(gshift, key=_grlex)
    cg_inv = gshift[lead_g] ** (-1)
    quot = {}
    while work:
        lead_f = max(work, key=_grlex)
        d = tuple(a - b for a, b in zip(lead_f, lead_g))
        if any(x < 0 for x in d):
            raise ExactDivisionError("nonzero remainder in exact division")
        cq = work[lead_f] * cg_inv
        quot[d] = cq
        for e, c in gshift.items():
            key = tuple(a + b for a, b in zip(e, d))
            cur = work.get(key)
            s = -(cq * c) if cur is None else cur - cq * c
            if s:
                work[key] = s
            else:
                work.pop(key, None)
    shift = tuple(a - b for a, b in zip(fmin, gmin))
    return LaurentPolynomial(
        ring, {tuple(a + b for a, b in zip(e, shift)): c for e, c in quot.items()})


def unit_normalize(f):
    """Split f as unit * canonical: returns (shift, lead_coeff, canon).

    canon is an honest polynomial (componentwise minimum exponent zero)
    with graded-lex leading coefficient one, and
    f == lead_coeff * x^shift * canon.
    """
    if not f.terms:
        raise ValueError("cannot unit-normalize the zero polynomial")
    ring = f.ring
    shift = tuple(min(e[i] for e in f.terms) for i in range(ring.n))
    shifted = {tuple(a - b for a, b in zip(e, shift)): c for e, c in f.terms.items()}
    lead = shifted[max(shifted, key=_grlex)]
    lead_inv = lead ** (-1)
    canon = LaurentPolynomial(ring, {e: c * lead_inv for e, c in shifted.items()})
    return shift, lead, canon
