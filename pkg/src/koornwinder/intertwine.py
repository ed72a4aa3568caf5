"""Intertwining operators: the eigenspace-shifting commutators.

S_i = [T_i, Y_i] for the finite generators and S_0 = [Y_1, U_n]; applied
to a joint Y-eigenvector for the point alpha they produce one for
s_i . alpha.  The square of each S_i acts on an eigenspace by an explicit
scalar in the eigenvalues, which is what makes the chain construction of
the nonsymmetric polynomials invertible step by step.
"""

from __future__ import annotations

from . import weyl


def apply_intertwiner(rep, i, f):
    """Apply S_i as a literal commutator of representation operators."""
    if i == 0:
        return rep.y(1, rep.un(f)) - rep.un(rep.y(1, f))
    if not 1 <= i <= rep.n:
        raise ValueError("intertwiner index out of range: %r" % (i,))
    return rep.t(i, rep.y(i, f)) - rep.y(i, rep.t(i, f))


def intertwiner_square_scalar(rep, i, spec):
    """The scalar by which S_i^2 acts on the eigenspace with spectrum spec.

    Evaluates the closed form of S_i^2 as a Laurent expression in the Y's
    at the given spectral values.
    """
    dom, n = rep.domain, rep.n
    one = dom.one
    if i == 0:
        y1 = spec[0]
        return (dom.un * dom.q_pow(-1)
                * (one - dom.c_eps / y1) * (one - dom.d_eps / y1)
                * (one - dom.q * dom.c_eps * y1) * (one - dom.q * dom.d_eps * y1))
    if i == n:
        yn = spec[-1]
        return (dom.tn
                * (one - dom.a_eps * yn) * (one - dom.b_eps * yn)
                * (one - dom.a_eps / yn) * (one - dom.b_eps / yn))
    if 0 < i < n:
        yi, yj = spec[i - 1], spec[i]
        return (dom.t * yi * yj
                * (one - yi / (dom.t * yj)) * (one - yj / (dom.t * yi)))
    raise ValueError("intertwiner index out of range: %r" % (i,))


def y_exponential(rep, vector, delta, f):
    """Apply Y^(v + delta*d) = q^delta * Y_1^{v_1} ... Y_n^{v_n}.

    Note the sign asymmetry with the x-side exponential, which carries
    q^{-delta}; both are implemented exactly as defined.
    """
    for j, e in enumerate(vector, start=1):
        sign = 1 if e > 0 else -1
        for _ in range(abs(e)):
            f = rep.y(j, f, sign)
    if delta:
        f = f * rep.domain.q_pow(delta)
    return f


def check_intertwining(rep, i, vector, delta, f):
    """Does Y^(v+delta*d) S_i == S_i Y^(s_i(v+delta*d)) hold on f?"""
    lhs = y_exponential(rep, vector, delta, apply_intertwiner(rep, i, f))
    sv, sd = weyl.functional_action(i, vector, delta)
    rhs = apply_intertwiner(rep, i, y_exponential(rep, sv, sd, f))
    return lhs == rhs
