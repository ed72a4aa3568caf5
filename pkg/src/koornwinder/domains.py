"""Parameter assignments and the two coefficient domains.

Everything downstream is generic over a *domain*: an object exposing the
six square roots and a handful of derived combinations, either as exact
symbolic field elements ("symbolic" mode) or as exact rationals under a
fixed assignment ("specialized" mode).  Both kinds of scalar support
+, -, *, /, ** and exact equality, so the operator and polynomial code
never needs to know which mode it runs in.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import paramfield
from .paramfield import FieldElement

_PRIME_POOL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)


@dataclass(frozen=True)
class Assignment:
    """Rational values for the six parameter square roots."""

    q_sqrt: Fraction
    t_sqrt: Fraction
    t0_sqrt: Fraction
    tn_sqrt: Fraction
    u0_sqrt: Fraction
    un_sqrt: Fraction

    @classmethod
    def make(cls, values):
        vals = [Fraction(v) for v in values]
        if len(vals) != 6:
            raise ValueError("expected 6 square-root values")
        if any(v == 0 for v in vals):
            raise ValueError("square-root values must be nonzero")
        return cls(*vals)

    @classmethod
    def default(cls):
        # distinct primes: generic enough that small-degree denominators
        # never vanish, and deterministic for tests
        return cls.make((2, 3, 5, 7, 11, 13))

    @classmethod
    def three_parameter(cls):
        """The degeneration u0 = un = 1, t0 = tn."""
        return cls.make((2, 3, 5, 5, 1, 1))

    @classmethod
    def from_seed(cls, seed):
        rng = random.Random(seed)
        return cls.make(rng.sample(_PRIME_POOL, 6))

    @classmethod
    def parse(cls, text):
        return cls.make([Fraction(part) for part in text.split(",")])

    def values(self):
        return (self.q_sqrt, self.t_sqrt, self.t0_sqrt,
                self.tn_sqrt, self.u0_sqrt, self.un_sqrt)

    def star(self):
        """Swap the t0 and un values (the duality involution on assignments)."""
        v = self.values()
        return Assignment.make((v[0], v[1], v[5], v[3], v[4], v[2]))

    def epsilon(self):
        v = self.values()
        return Assignment.make((1 / v[0], 1 / v[1], 1 / v[5],
                                1 / v[3], 1 / v[4], 1 / v[2]))

    def dagger(self):
        return Assignment.make(tuple(1 / x for x in self.values()))

    def as_strings(self):
        return [str(v) for v in self.values()]


class _BaseDomain:
    """Shared derived values; subclasses provide the six square roots."""

    def _derive(self):
        qs, ts = self.q_sqrt, self.t_sqrt
        t0s, tns = self.t0_sqrt, self.tn_sqrt
        u0s, uns = self.u0_sqrt, self.un_sqrt
        self.q = qs * qs
        self.t = ts * ts
        self.t0 = t0s * t0s
        self.tn = tns * tns
        self.u0 = u0s * u0s
        self.un = uns * uns
        # Askey-Wilson parameters and their epsilon transforms
        self.a = tns * uns
        self.b = -(tns / uns)
        self.c = qs * t0s * u0s
        self.d = -(qs * t0s / u0s)
        self.a_eps = (tns * t0s) ** (-1)
        self.b_eps = -(t0s / tns)
        self.c_eps = (qs * uns * u0s) ** (-1)
        self.d_eps = -(u0s / (qs * uns))
        self.s = t0s * tns          # q^{rho_i} = s * t^(n-i)
        self.s_dual = uns * tns     # the t0 <-> un swap of s

    def q_pow(self, k):
        return self.q_sqrt ** (2 * int(k))

    def t_half(self, i, n):
        """Square root of the Hecke parameter attached to generator i."""
        if i == 0:
            return self.t0_sqrt
        if i == n:
            return self.tn_sqrt
        if 0 < i < n:
            return self.t_sqrt
        raise ValueError("generator index out of range: %r" % (i,))


class SymbolicDomain(_BaseDomain):
    """Scalars are exact symbolic field elements."""

    mode = "symbolic"
    assignment = None

    def __init__(self):
        self.zero = paramfield.ZERO
        self.one = paramfield.ONE
        self.q_sqrt = paramfield.SQRT_Q
        self.t_sqrt = paramfield.SQRT_T
        self.t0_sqrt = paramfield.SQRT_T0
        self.tn_sqrt = paramfield.SQRT_TN
        self.u0_sqrt = paramfield.SQRT_U0
        self.un_sqrt = paramfield.SQRT_UN
        self._derive()

    def q_pow(self, k):
        return FieldElement.monomial((2 * int(k), 0, 0, 0, 0, 0))

    def from_int(self, k):
        return FieldElement.from_int(k)

    def compact(self, v):
        return v.canonical()

    def complexity(self, v):
        return len(v.num) + len(v.den)

    def star_domain(self):
        return self

    def star_scalar(self, v):
        return v.star()

    def encode_scalar(self, v):
        return v.to_json_value()

    def decode_scalar(self, obj):
        return FieldElement.from_json_value(obj)

    def describe(self):
        return {"mode": "symbolic", "assignment": None}


class SpecializedDomain(_BaseDomain):
    """Scalars are exact rationals under a fixed square-root assignment."""

    mode = "specialized"

    def __init__(self, assignment=None):
        self.assignment = assignment or Assignment.default()
        (self.q_sqrt, self.t_sqrt, self.t0_sqrt,
         self.tn_sqrt, self.u0_sqrt, self.un_sqrt) = self.assignment.values()
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self._derive()

    def from_int(self, k):
        return Fraction(k)

    def compact(self, v):
        return v

    def complexity(self, v):
        return v.numerator.bit_length() + v.denominator.bit_length()

    def star_domain(self):
        return SpecializedDomain(self.assignment.star())

    def star_scalar(self, v):
        raise RuntimeError(
            "star of a specialized scalar is undefined; recompute under "
            "the star-transformed assignment instead")

    def encode_scalar(self, v):
        v = Fraction(v)
        return v.numerator if v.denominator == 1 else str(v)

    def decode_scalar(self, obj):
        return Fraction(obj)

    def describe(self):
        return {"mode": "specialized", "assignment": self.assignment.as_strings()}


def make_domain(mode, assignment=None):
    if mode == "symbolic":
        return SymbolicDomain()
    if mode == "specialized":
        return SpecializedDomain(assignment)
    raise ValueError("unknown mode: %r" % (mode,))
