"""Exact arithmetic in the six-parameter coefficient field.

Elements are quotients num/den of integer polynomials in the square roots
of the parameters (q, t, t0, tn, u0, un).  Exponents of the square roots
are stored doubled so that everything stays in plain integer arithmetic:
the stored monomial (1, 0, 0, 0, 0, 0) is q**(1/2) and (2, 0, 0, 0, 0, 0)
is q itself.

Canonical form: no zero coefficients, the integer content and the common
monomial factor of num and den removed, and the lexicographically leading
denominator coefficient positive.  A full multivariate gcd is attempted
only past a size threshold; equality is decided by cross multiplication
and never depends on gcd reduction.
"""

from __future__ import annotations

import math
from fractions import Fraction

import sympy

PARAM_NAMES = ("q", "t", "t0", "tn", "u0", "un")

#: past this many stored terms (in num or den) a full gcd reduction runs
GCD_TERM_THRESHOLD = 64

_N = 6
_ZERO_EXP = (0,) * _N

_SYMPY_GENS = sympy.symbols("r0:6")


class UnluckySpecializationError(ArithmeticError):
    """A denominator vanished at the chosen parameter assignment."""


# ---------------------------------------------------------------------------
# polynomial dictionaries: doubled-exponent tuple -> nonzero int

def _poly_add(p, q):
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _poly_neg(p):
    return {e: -c for e, c in p.items()}


def _poly_mul(p, q):
    if len(p) > len(q):
        p, q = q, p
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _poly_int(k):
    return {_ZERO_EXP: k} if k else {}


# Exponent rewrites for the involutions.  epsilon inverts q, t, tn, u0 and
# trades t0 for un^{-1} (and vice versa); dagger inverts all six; star is
# the composite and just swaps t0 with un.
def _eps_exp(e):
    return (-e[0], -e[1], -e[5], -e[3], -e[4], -e[2])


def _dagger_exp(e):
    return (-e[0], -e[1], -e[2], -e[3], -e[4], -e[5])


def _star_exp(e):
    return (e[0], e[1], e[5], e[3], e[4], e[2])


def _map_exponents(p, fn):
    return {fn(e): c for e, c in p.items()}


# ---------------------------------------------------------------------------
# normalization

def _strip_monomial(num, den):
    mins = [min(e[i] for p in (num, den) for e in p) for i in range(_N)]
    if not any(mins):
        return num, den
    shift = tuple(mins)

    def sub(p):
        return {tuple(a - b for a, b in zip(e, shift)): c for e, c in p.items()}

    return sub(num), sub(den)


def _strip_content(num, den):
    g = 0
    for p in (num, den):
        for c in p.values():
            g = math.gcd(g, c)
            if g == 1:
                return num, den
    return {e: c // g for e, c in num.items()}, {e: c // g for e, c in den.items()}


def _full_reduce(num, den):
    """Divide out the multivariate gcd of num and den (via sympy)."""
    if len(num) == 1 or len(den) == 1:
        # the common monomial factor is already stripped
        return num, den
    pn = sympy.Poly.from_dict(num, *_SYMPY_GENS, domain=sympy.ZZ)
    pd = sympy.Poly.from_dict(den, *_SYMPY_GENS, domain=sympy.ZZ)
    g, qn, qd = pn.cofactors(pd)
    if g.total_degree() == 0:
        return num, den

    def back(poly):
        return {tuple(int(x) for x in e): int(c) for e, c in poly.as_dict().items()}

    return back(qn), back(qd)


def _normalize(num, den):
    num = {e: c for e, c in num.items() if c}
    den = {e: c for e, c in den.items() if c}
    if not den:
        raise ZeroDivisionError("field element with zero denominator")
    if not num:
        return {}, {_ZERO_EXP: 1}
    if max(len(num), len(den)) > GCD_TERM_THRESHOLD:
        num, den = _strip_monomial(num, den)
        num, den = _strip_content(num, den)
        num, den = _full_reduce(num, den)
    num, den = _strip_monomial(num, den)
    num, den = _strip_content(num, den)
    if den[max(den)] < 0:
        num, den = _poly_neg(num), _poly_neg(den)
    if len(num) == len(den):
        if num == den:
            return {_ZERO_EXP: 1}, {_ZERO_EXP: 1}
        if num == _poly_neg(den):
            return {_ZERO_EXP: -1}, {_ZERO_EXP: 1}
    return num, den


# ---------------------------------------------------------------------------

class FieldElement:
    """Immutable exact rational function in the six square roots.

    Equality is decided by cross multiplication, so two structurally
    different representations of the same value compare equal.  Instances
    are deliberately unhashable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = {_ZERO_EXP: 1}
        self.num, self.den = _normalize(num, den)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_int(cls, k):
        return cls(_poly_int(int(k)))

    @classmethod
    def from_fraction(cls, f):
        f = Fraction(f)
        return cls(_poly_int(f.numerator), _poly_int(f.denominator))

    @classmethod
    def monomial(cls, exponents, coeff=1):
        """Monomial with the given doubled exponents of (q, t, t0, tn, u0, un)."""
        e = tuple(int(x) for x in exponents)
        if len(e) != _N:
            raise ValueError("expected 6 doubled exponents")
        return cls({e: int(coeff)} if coeff else {})

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, FieldElement):
            return x
        if isinstance(x, int):
            return FieldElement.from_int(x)
        if isinstance(x, Fraction):
            return FieldElement.from_fraction(x)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return FieldElement(_poly_add(self.num, other.num), self.den)
        num = _poly_add(_poly_mul(self.num, other.den), _poly_mul(other.num, self.den))
        return FieldElement(num, _poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(FieldElement)
        out.num, out.den = _poly_neg(self.num), self.den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        # cheap cross cancellation of identical dictionaries
        if n1 == d2:
            n1 = d2 = {_ZERO_EXP: 1}
        if n2 == d1:
            n2 = d1 = {_ZERO_EXP: 1}
        return FieldElement(_poly_mul(n1, n2), _poly_mul(d1, d2))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero field element")
        return FieldElement(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # cross multiplication; no reliance on canonical gcd reduction
        return _poly_mul(self.num, other.den) == _poly_mul(other.num, self.den)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __bool__(self):
        return bool(self.num)

    # -- involutions ----------------------------------------------------

    def epsilon(self):
        """Invert q, t, tn, u0; send t0 to 1/un and un to 1/t0."""
        return FieldElement(_map_exponents(self.num, _eps_exp),
                            _map_exponents(self.den, _eps_exp))

    def dagger(self):
        """Invert all six parameters (and their square roots)."""
        return FieldElement(_map_exponents(self.num, _dagger_exp),
                            _map_exponents(self.den, _dagger_exp))

    def star(self):
        """Swap t0 and un; the composite of epsilon and dagger."""
        return FieldElement(_map_exponents(self.num, _star_exp),
                            _map_exponents(self.den, _star_exp))

    # -- specialization -------------------------------------------------

    def specialize(self, sqrt_values):
        """Evaluate at rational values of the six square roots.

        Raises UnluckySpecializationError when the denominator vanishes,
        so the caller can re-draw the assignment.
        """
        vals = [Fraction(v) for v in sqrt_values]
        if len(vals) != _N:
            raise ValueError("expected 6 square-root values")
        if any(v == 0 for v in vals):
            raise ValueError("square-root values must be nonzero")
        dv = _eval_poly(self.den, vals)
        if dv == 0:
            raise UnluckySpecializationError(
                "denominator vanishes at this assignment")
        return _eval_poly(self.num, vals) / dv

    # -- canonicalization / serialization --------------------------------

    def canonical(self):
        """Force the full gcd reduction regardless of size."""
        num, den = _strip_monomial(self.num, self.den)
        num, den = _full_reduce(num, den)
        out = object.__new__(FieldElement)
        out.num, out.den = _normalize(num, den)
        return out

    def to_json_obj(self):
        return {
            "num": [[str(c), list(e)] for e, c in sorted(self.num.items())],
            "den": [[str(c), list(e)] for e, c in sorted(self.den.items())],
        }

    def to_json_value(self):
        """Compact form: a bare int when the element is an integer."""
        if self.den == {_ZERO_EXP: 1}:
            if not self.num:
                return 0
            if list(self.num) == [_ZERO_EXP]:
                return self.num[_ZERO_EXP]
        return self.to_json_obj()

    @classmethod
    def from_json_value(cls, obj):
        if isinstance(obj, int):
            return cls.from_int(obj)
        num = {tuple(e): int(c) for c, e in obj["num"]}
        den = {tuple(e): int(c) for c, e in obj["den"]}
        return cls(num, den)

    def __repr__(self):
        if self.den == {_ZERO_EXP: 1}:
            return _poly_str(self.num)
        return "(%s)/(%s)" % (_poly_str(self.num), _poly_str(self.den))


def _eval_poly(p, vals):
    total = Fraction(0)
    for e, c in p.items():
        v = Fraction(c)
        for base, k in zip(vals, e):
            if k:
                v *= base ** k
        total += v
    return total


def _poly_str(p):
    if not p:
        return "0"
    parts = []
    for e, c in sorted(p.items(), reverse=True):
        factors = []
        for name, k in zip(PARAM_NAMES, e):
            if k == 0:
                continue
            if k == 2:
                factors.append(name)
            elif k % 2 == 0:
                factors.append("%s^%d" % (name, k // 2))
            else:
                factors.append("%s^(%d/2)" % (name, k))
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        elif c == -1:
            parts.append("-" + "*".join(factors))
        else:
            parts.append("%d*%s" % (c, "*".join(factors)))
    out = parts[0]
    for part in parts[1:]:
        out += " - " + part[1:] if part.startswith("-") else " + " + part
    return out


def _sqrt_exp(index):
    e = [0] * _N
    e[index] = 1
    return tuple(e)


ZERO = FieldElement.from_int(0)
ONE = FieldElement.from_int(1)
SQRT_Q = FieldElement.monomial(_sqrt_exp(0))
SQRT_T = FieldElement.monomial(_sqrt_exp(1))
SQRT_T0 = FieldElement.monomial(_sqrt_exp(2))
SQRT_TN = FieldElement.monomial(_sqrt_exp(3))
SQRT_U0 = FieldElement.monomial(_sqrt_exp(4))
SQRT_UN = FieldElement.monomial(_sqrt_exp(5))
