"""The spherical Hecke algebra in the bases {c_mu} and {f_mu}, and the
Satake transform to virtual characters of the dual group.

Coefficients live in Z[v, v^-1] with v standing for -q^(1/2); the transform
sends f_mu to v^<2rho,mu> chi_mu, and convolution is computed through the
character ring, where multiplication is a tensor-product decomposition.
Coefficients of c-basis products are asserted to be polynomials in q = v^2
with nonnegative integer coefficients; a violation raises
InternalInconsistency because it signals a wrong normalization, not bad input.
"""

from __future__ import annotations

from typing import Mapping

from .errors import DomainError, InternalInconsistency
from .polynomials import Laurent, QPoly
from .root_datum import RootDatum, Vec
from . import weyl_rep


class _Span:
    """Finitely supported map from dominant coweights to Laurent scalars."""

    __slots__ = ("datum", "coeffs")

    def __init__(self, datum: RootDatum, coeffs: Mapping[Vec, Laurent] = ()):
        self.datum = datum
        clean: dict[Vec, Laurent] = {}
        for mu, c in dict(coeffs).items():
            if not isinstance(c, Laurent):
                c = Laurent.from_int(c)
            if c.is_zero:
                continue
            if not datum.is_dominant(mu):
                raise DomainError(f"support element {mu} is not dominant")
            clean[mu] = c
        self.coeffs = clean

    @property
    def support(self) -> list[Vec]:
        return sorted(self.coeffs)

    def coeff(self, mu: Vec) -> Laurent:
        return self.coeffs.get(mu, Laurent.ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Span):
            return NotImplemented
        return self.datum is other.datum and self.coeffs == other.coeffs

    def __add__(self, other: "_Span"):
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, Laurent.ZERO) + c
        return type(self)(self.datum, out)

    def __sub__(self, other: "_Span"):
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, Laurent.ZERO) - c
        return type(self)(self.datum, out)

    def scale(self, c: "Laurent | int"):
        if not isinstance(c, Laurent):
            c = Laurent.from_int(c)
        return type(self)(self.datum, {mu: x * c for mu, x in self.coeffs.items()})

    def to_json(self) -> list[dict]:
        return [{"coweight": list(mu),
                 "v_low": self.coeffs[mu].low,
                 "coeffs_v": list(self.coeffs[mu].coeffs)}
                for mu in self.support]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        sym = self._symbol
        return " + ".join(f"({c})*{sym}{list(mu)}"
                          for mu, c in sorted(self.coeffs.items()))


class HeckeElement(_Span):
    """Element of the spherical Hecke algebra in the basis {c_mu}."""
    _symbol = "c"


class VirtualCharacter(_Span):
    """Virtual character of the dual group in the basis {chi_mu}."""
    _symbol = "chi"


def c_basis(datum: RootDatum, mu: Vec) -> HeckeElement:
    return HeckeElement(datum, {mu: Laurent.ONE})


def chi_basis(datum: RootDatum, mu: Vec) -> VirtualCharacter:
    return VirtualCharacter(datum, {mu: Laurent.ONE})


def ic_function(datum: RootDatum, mu: Vec) -> HeckeElement:
    """f_mu = c_mu + sum over lam < mu of a_{mu,lam}(q) c_lam, with q = v^2."""
    if not datum.is_dominant(mu):
        raise DomainError(f"mu={mu} is not dominant")
    cache = datum._caches.setdefault("f_basis", {})
    f = cache.get(mu)
    if f is None:
        coeffs = {}
        for lam in datum.dominant_below(mu):
            a = weyl_rep.ic_stalk_polynomial(datum, mu, lam)
            coeffs[lam] = Laurent.from_qpoly(a)
        f = HeckeElement(datum, coeffs)
        cache[mu] = f
    return f


def satake_transform(datum: RootDatum, h: HeckeElement) -> VirtualCharacter:
    """Rewrite h in the basis {f_mu} by unitriangular back-substitution down
    the dominance order, then apply f_mu -> v^<2rho,mu> chi_mu."""
    rest = dict(h.coeffs)
    out: dict[Vec, Laurent] = {}
    while rest:
        mu = max(rest, key=lambda m: (datum.height2(m), m))
        c = rest.pop(mu)
        if c.is_zero:
            continue
        out[mu] = out.get(mu, Laurent.ZERO) + c.shifted(datum.height2(mu))
        for lam, a in ic_function(datum, mu).coeffs.items():
            if lam == mu:
                continue
            rest[lam] = rest.get(lam, Laurent.ZERO) - c * a
    return VirtualCharacter(datum, out)


def inverse_satake(datum: RootDatum, chi: VirtualCharacter) -> HeckeElement:
    """chi_mu -> v^{-<2rho,mu>} f_mu, extended linearly, expanded in {c_mu}."""
    out: dict[Vec, Laurent] = {}
    for mu, c in chi.coeffs.items():
        shift = c.shifted(-datum.height2(mu))
        for lam, a in ic_function(datum, mu).coeffs.items():
            out[lam] = out.get(lam, Laurent.ZERO) + shift * a
    return HeckeElement(datum, out)


def _tensor_cached(datum: RootDatum, lam: Vec, mu: Vec) -> dict[Vec, int]:
    key = (lam, mu) if lam <= mu else (mu, lam)
    cache = datum._caches.setdefault("tensor", {})
    t = cache.get(key)
    if t is None:
        t = weyl_rep.tensor_decompose(datum, key[0], key[1])
        cache[key] = t
    return t


def character_product(datum: RootDatum, x: VirtualCharacter,
                      y: VirtualCharacter) -> VirtualCharacter:
    """Product in the character ring, expanded via tensor decompositions."""
    out: dict[Vec, Laurent] = {}
    for lam, a in x.coeffs.items():
        for mu, b in y.coeffs.items():
            ab = a * b
            for nu, m in _tensor_cached(datum, lam, mu).items():
                out[nu] = out.get(nu, Laurent.ZERO) + ab * m
    return VirtualCharacter(datum, out)


def hecke_convolve(datum: RootDatum, h1: HeckeElement,
                   h2: HeckeElement) -> HeckeElement:
    """Convolution h1 * h2, computed through the character ring.

    Every coefficient of a c-basis product is asserted to be a genuine
    integer polynomial in q = v^2 with positive leading coefficient and
    nonnegative values at prime powers (the values are lattice counts).
    Coefficientwise nonnegativity is NOT asserted: it genuinely fails, e.g.
    the (1,-1)-coefficient of c_(1,-1) * c_(1,-1) in GL(2) is q - 1.
    """
    prod = character_product(datum, satake_transform(datum, h1),
                             satake_transform(datum, h2))
    out = inverse_satake(datum, prod)
    for mu, c in out.coeffs.items():
        p = c.as_qpoly()   # raises on odd v-powers or negative exponents
        if p.coeffs[-1] < 0 or p(2) < 0 or p(3) < 0:
            raise InternalInconsistency(
                f"negative structure constant {p} at {mu}")
    return out


def convolve_basis(datum: RootDatum, lam: Vec, mu: Vec) -> HeckeElement:
    """c_lam * c_mu."""
    return hecke_convolve(datum, c_basis(datum, lam), c_basis(datum, mu))


def evaluate_at(datum: RootDatum, h: HeckeElement, q0: int) -> dict[Vec, int]:
    """Substitute v^2 = q0; defined for elements whose coefficients are
    genuine polynomials in q (products of c-basis elements always are)."""
    if q0 < 2:
        raise DomainError(f"q0={q0} must be a prime power >= 2")
    return {mu: c.as_qpoly()(q0) for mu, c in h.coeffs.items()}


def structure_constants(datum: RootDatum, lam: Vec, mu: Vec) -> dict[Vec, QPoly]:
    """Coefficients of c_lam * c_mu as honest polynomials in q."""
    return {nu: c.as_qpoly()
            for nu, c in convolve_basis(datum, lam, mu).coeffs.items()}
