"""Construction of the nonsymmetric and symmetric Koornwinder polynomials.

The nonsymmetric polynomial attached to a lattice point is built by
applying intertwiners along a generator chain from the origin and then
normalizing the coefficient at its own label to one; the symmetric one
is the symmetrizer image of the nonsymmetric polynomial at a partition.
Raw chain states are cached by the lattice point reached (they are well
defined up to a scalar, which the final normalization removes), so
chains to nearby points share work.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass

from . import weyl
from .intertwine import apply_intertwiner
from .laurent import LaurentRing, LaurentPolynomial, apply_simple_reflection
from .noumi import NoumiRepresentation, monomial_exponents
from .oracle import EigenOracle, matrix_rank


class NonGenericParametersError(ArithmeticError):
    """A normalizing coefficient vanished under the chosen assignment."""


@dataclass
class LabeledPolynomial:
    """A constructed polynomial with its label and Y-spectrum."""

    label: tuple
    poly: LaurentPolynomial
    spectrum: tuple

    def to_json(self):
        enc = self.poly.ring.domain.encode_scalar
        out = self.poly.to_json()
        out["label"] = list(self.label)
        out["spectrum"] = [enc(v) for v in self.spectrum]
        return out


class KoornwinderFamily:
    """Engine computing the polynomial family for one rank and domain."""

    def __init__(self, n, domain, cache_dir=None):
        self.n = n
        self.domain = domain
        self.ring = LaurentRing(n, domain)
        self.rep = NoumiRepresentation(self.ring)
        self.cache_dir = cache_dir
        self._raw = {}            # lattice point -> unnormalized chain state
        self._nonsymmetric = {}
        self._symmetric = {}
        self._oracles = {}

    # -- nonsymmetric family ------------------------------------------------

    def nonsymmetric(self, alpha):
        """The monic joint Y-eigenvector labeled by alpha."""
        alpha = tuple(int(x) for x in alpha)
        if len(alpha) != self.n:
            raise ValueError("label has wrong length")
        cached = self._nonsymmetric.get(alpha)
        if cached is not None:
            return cached
        disk = self._disk_read(alpha)
        if disk is not None:
            self._nonsymmetric[alpha] = disk
            return disk
        raw = self._chain_state(alpha)
        lead = raw.coefficient(alpha)
        if not lead:
            raise NonGenericParametersError(
                "chain output has no x^%r term; parameters are not generic"
                % (alpha,))
        labeled = LabeledPolynomial(
            label=alpha,
            poly=raw * lead ** (-1),
            spectrum=weyl.spectral_vector(alpha, self.domain))
        self._nonsymmetric[alpha] = labeled
        self._disk_write(labeled)
        return labeled

    def _chain_state(self, alpha):
        if not any(alpha):
            return self.ring.one()
        cached = self._raw.get(alpha)
        if cached is not None:
            return cached
        word = weyl.chain_to(alpha)
        points = []
        v = (0,) * self.n
        for i in word:
            v = weyl.affine_action(i, v)
            points.append(v)
        start = 0
        f = self.ring.one()
        for k in range(len(points) - 1, -1, -1):
            hit = self._raw.get(points[k])
            if hit is not None:
                start, f = k + 1, hit
                break
        for k in range(start, len(points)):
            f = apply_intertwiner(self.rep, word[k], f)
            self._raw[points[k]] = f
        return f

    def raw_eigenvector(self, alpha):
        """The unnormalized chain output: a nonzero scalar multiple of the
        nonsymmetric polynomial.  Its coefficients are much smaller than
        the normalized ones in symbolic mode, so eigenspace checks that
        are scalar-multiple invariant should prefer it."""
        return self._chain_state(tuple(int(x) for x in alpha))

    def nonsymmetric_via_chain(self, word, alpha):
        """Chain-independence hook: build the polynomial along an explicit
        word (application order), bypassing every cache."""
        alpha = tuple(alpha)
        f = self.ring.one()
        for i in word:
            f = apply_intertwiner(self.rep, i, f)
        lead = f.coefficient(alpha)
        if not lead:
            raise NonGenericParametersError("chain output misses its label")
        return f * lead ** (-1)

    def verify_spectrum(self, labeled):
        """The defining property: Y_i scales the polynomial by the i-th
        spectral component, for every i.

        The eigen equations are invariant under scalar multiples, so they
        are checked on the raw chain state (whose symbolic coefficients
        are far smaller); the labeled polynomial is then confirmed to be
        its monic multiple.
        """
        alpha = labeled.label
        if tuple(labeled.spectrum) != weyl.spectral_vector(alpha, self.domain):
            return False
        raw = self._chain_state(alpha)
        for i in range(1, self.n + 1):
            if self.rep.y(i, raw) != raw * labeled.spectrum[i - 1]:
                return False
        lead = raw.coefficient(alpha)
        if not lead:
            return False
        return labeled.poly == raw * lead ** (-1)

    # -- symmetric family ----------------------------------------------------

    def symmetric(self, lam):
        """The monic symmetric eigenpolynomial of a partition.

        Verified on construction: invariance under the finite generators
        and the q-difference operator eigenvalue equation.
        """
        lam = tuple(int(x) for x in lam)
        if list(lam) != sorted(lam, reverse=True) or (lam and lam[-1] < 0):
            raise ValueError("expected a weakly decreasing nonnegative label")
        cached = self._symmetric.get(lam)
        if cached is not None:
            return cached
        base = self.nonsymmetric(lam)
        image = self.rep.symmetrizer(base.poly)
        lead = image.coefficient(lam)
        if not lead:
            raise NonGenericParametersError(
                "symmetrizer image has no x^%r term" % (lam,))
        poly = image * lead ** (-1)
        for i in range(1, self.n + 1):
            if apply_simple_reflection(i, poly) != poly:
                raise AssertionError("symmetrizer image is not invariant")
        if self.rep.koornwinder_d(poly) != poly * self.rep.d_eigenvalue(lam):
            raise AssertionError(
                "symmetric polynomial fails its eigenvalue equation")
        labeled = LabeledPolynomial(label=lam, poly=poly, spectrum=base.spectrum)
        self._symmetric[lam] = labeled
        return labeled

    # -- oracle and basis checks ----------------------------------------------

    def eigen_oracle(self, degree):
        oracle = self._oracles.get(degree)
        if oracle is None:
            oracle = EigenOracle(self.rep, degree)
            self._oracles[degree] = oracle
        return oracle

    def basis_check(self, degree):
        """Exact rank of the change of basis to monomials of weight <= degree."""
        exponents = monomial_exponents(self.n, degree)
        index = {e: k for k, e in enumerate(exponents)}
        zero = self.domain.zero
        rows = []
        for alpha in exponents:
            poly = self.nonsymmetric(alpha).poly
            row = [zero] * len(exponents)
            for e, c in poly.terms.items():
                k = index.get(e)
                if k is None:
                    return {"n": self.n, "degree": degree,
                            "size": len(exponents), "rank": 0,
                            "invertible": False,
                            "error": "support escapes the filtration"}
                row[k] = c
            rows.append(row)
        rank = matrix_rank(rows, self.domain)
        return {"n": self.n, "degree": degree, "size": len(exponents),
                "rank": rank, "invertible": rank == len(exponents)}

    # -- disk cache -------------------------------------------------------------

    def _cache_path(self, alpha):
        key = json.dumps({
            "n": self.n,
            "alpha": list(alpha),
            "mode": self.domain.mode,
            "assignment": (self.domain.assignment.as_strings()
                           if self.domain.assignment else None),
        }, sort_keys=True)
        digest = hashlib.sha256(key.encode()).hexdigest()
        return os.path.join(self.cache_dir, digest + ".json")

    def _disk_read(self, alpha):
        if not self.cache_dir:
            return None
        path = self._cache_path(alpha)
        if not os.path.exists(path):
            return None
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        dec = self.domain.decode_scalar
        return LabeledPolynomial(
            label=tuple(data["label"]),
            poly=self.ring.from_json(data),
            spectrum=tuple(dec(v) for v in data["spectrum"]))

    def _disk_write(self, labeled):
        if not self.cache_dir:
            return
        os.makedirs(self.cache_dir, exist_ok=True)
        path = self._cache_path(labeled.label)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(labeled.to_json(), fh, sort_keys=True)
        os.replace(tmp, path)
