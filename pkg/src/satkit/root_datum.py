"""Root data, Weyl groups, pairings, and the dominance order on coweights.

Realizations
------------
GL(n) lives on X^* = X_* = Z^n with roots e_i - e_j and the dot-product
pairing, so elementary divisors of lattices land directly in Z^n.

A simple series label (A_r, B_r, C_r, D_r, G_2) is realized in the adjoint
form: X^* = Z^r with simple roots the standard basis vectors, and simple
coroots the columns of the Cartan matrix inside X_* = Z^r.  Coweights are
then indexed by their pairings with the simple roots, and the dual group is
simply connected (for A_1, coweight m >= 0 labels the (m+1)-dimensional
representation of the dual SL_2).
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import ShapeError, UnsupportedType

Vec = tuple[int, ...]

_WEYL_BUDGET = 1_000_000  # refuse to enumerate Weyl groups beyond this order


def _vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def _vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def _vscale(k: int, a: Vec) -> Vec:
    return tuple(k * x for x in a)


class Dominance(enum.Enum):
    """Three-valued outcome of a dominance-order comparison."""

    LE = "le"
    NOT_LE = "not_le"
    INCOMPARABLE_COMPONENTS = "incomparable_components"


class WeylElement:
    """A Weyl group element, stored as a word in simple reflections.

    The word is applied left to right: ``act_coweight`` computes
    s_{word[-1]} ... s_{word[0]} (mu).  Words produced by this module are
    reduced, so ``length`` is the Coxeter length.
    """

    __slots__ = ("datum", "word", "_mat_co", "_mat_wt")

    def __init__(self, datum: "RootDatum", word: Sequence[int] = ()):
        self.datum = datum
        self.word = tuple(word)
        self._mat_co: Optional[tuple[Vec, ...]] = None
        self._mat_wt: Optional[tuple[Vec, ...]] = None

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    def act_coweight(self, mu: Vec) -> Vec:
        for i in self.word:
            mu = self.datum.simple_reflect_coweight(i, mu)
        return mu

    def act_weight(self, chi: Vec) -> Vec:
        for i in self.word:
            chi = self.datum.simple_reflect_weight(i, chi)
        return chi

    def matrix_on_coweights(self) -> tuple[Vec, ...]:
        """Rows r_k with (w mu)_k = sum_j r_k[j] mu_j, cached."""
        if self._mat_co is None:
            n = self.datum.dim
            cols = [self.act_coweight(tuple(int(i == j) for i in range(n)))
                    for j in range(n)]
            self._mat_co = tuple(tuple(cols[j][k] for j in range(n))
                                 for k in range(n))
        return self._mat_co

    def matrix_on_weights(self) -> tuple[Vec, ...]:
        if self._mat_wt is None:
            n = self.datum.dim
            cols = [self.act_weight(tuple(int(i == j) for i in range(n)))
                    for j in range(n)]
            self._mat_wt = tuple(tuple(cols[j][k] for j in range(n))
                                 for k in range(n))
        return self._mat_wt

    def __repr__(self) -> str:
        if not self.word:
            return "e"
        return "*".join(f"s{i}" for i in self.word)


class RootDatum:
    """Immutable root datum with Weyl group access.

    All operations are pure; instances are safe to share across threads.
    """

    def __init__(self, label: str, dim: int,
                 roots: Sequence[Vec], coroots: Sequence[Vec],
                 simple_roots: Sequence[Vec], simple_coroots: Sequence[Vec]):
        self.label = label
        self.dim = dim                      # rank of the (co)weight lattice
        self.roots = tuple(roots)           # all of Phi, paired with coroots
        self.coroots = tuple(coroots)
        self.simple_roots = tuple(simple_roots)
        self.simple_coroots = tuple(simple_coroots)
        self.rank = len(self.simple_roots)  # semisimple rank
        pos = [(a, av) for a, av in zip(self.roots, self.coroots)
               if self._is_positive_root(a)]
        self.positive_roots = tuple(a for a, _ in pos)
        self.positive_coroots = tuple(av for _, av in pos)
        zero = (0,) * dim
        self.two_rho = zero
        for a in self.positive_roots:
            self.two_rho = _vadd(self.two_rho, a)
        self.two_rho_check = zero
        for av in self.positive_coroots:
            self.two_rho_check = _vadd(self.two_rho_check, av)
        self._validate()
        self._coroot_solver = _IntegralSolver(self.simple_coroots, dim)
        self._weyl_cache: Optional[list[WeylElement]] = None
        self._caches: dict = {}   # scratch memo space for higher modules

    # -- construction-time checks ------------------------------------------

    def _is_positive_root(self, a: Vec) -> bool:
        # Roots are +/- nonnegative combinations of simple roots; in both
        # realizations used here the sign is visible coordinatewise.
        for x in a:
            if x > 0:
                return True
            if x < 0:
                return False
        return False

    def _validate(self) -> None:
        if len(self.roots) != len(self.coroots):
            raise ShapeError("root/coroot bijection broken")
        for i, a in enumerate(self.simple_roots):
            for j, av in enumerate(self.simple_coroots):
                c = self.pairing(a, av)
                if i == j and c != 2:
                    raise ShapeError(f"Cartan diagonal {c} != 2")
                if i != j and c > 0:
                    raise ShapeError("positive off-diagonal Cartan entry")
        for av in self.simple_coroots:
            if self.pairing(self.two_rho, av) != 2:
                raise ShapeError("<2rho, alpha_i^vee> != 2")
        root_set = set(self.roots)
        if root_set != {_vneg(a) for a in root_set}:
            raise ShapeError("Phi != -Phi")

    # -- elementary operations ---------------------------------------------

    def pairing(self, chi: Vec, mu: Vec) -> int:
        """Canonical pairing of a weight with a coweight (dot product)."""
        if len(chi) != self.dim or len(mu) != self.dim:
            raise ShapeError(f"expected vectors of length {self.dim}")
        return sum(x * y for x, y in zip(chi, mu))

    def simple_reflect_coweight(self, i: int, mu: Vec) -> Vec:
        c = self.pairing(self.simple_roots[i], mu)
        return _vsub(mu, _vscale(c, self.simple_coroots[i]))

    def simple_reflect_weight(self, i: int, chi: Vec) -> Vec:
        c = self.pairing(chi, self.simple_coroots[i])
        return _vsub(chi, _vscale(c, self.simple_roots[i]))

    def is_dominant(self, mu: Vec) -> bool:
        return all(self.pairing(a, mu) >= 0 for a in self.simple_roots)

    def is_dominant_weight(self, chi: Vec) -> bool:
        return all(self.pairing(chi, av) >= 0 for av in self.simple_coroots)

    def coroot_coordinates(self, delta: Vec) -> Optional[Vec]:
        """Coefficients of delta in the simple-coroot basis, or None.

        Simple coroots are linearly independent, so the coordinates are
        unique whenever they exist over Z.
        """
        if len(delta) != self.dim:
            raise ShapeError(f"expected vector of length {self.dim}")
        return self._coroot_solver.solve(delta)

    def dominance_leq(self, lam: Vec, mu: Vec) -> Dominance:
        """lam <= mu iff mu - lam is a nonnegative integral combination of
        simple coroots; lattices in different coroot cosets are incomparable."""
        coords = self.coroot_coordinates(_vsub(mu, lam))
        if coords is None:
            return Dominance.INCOMPARABLE_COMPONENTS
        if all(c >= 0 for c in coords):
            return Dominance.LE
        return Dominance.NOT_LE

    def leq(self, lam: Vec, mu: Vec) -> bool:
        return self.dominance_leq(lam, mu) is Dominance.LE

    def dominant_representative(self, mu: Vec) -> tuple[Vec, WeylElement]:
        """The dominant W-conjugate mu^+ and a w with w(mu) = mu^+.

        Repeatedly applies any simple reflection with negative pairing; the
        recorded word is reduced.
        """
        word = []
        cur = mu
        while True:
            for i, a in enumerate(self.simple_roots):
                if self.pairing(a, cur) < 0:
                    cur = self.simple_reflect_coweight(i, cur)
                    word.append(i)
                    break
            else:
                return cur, WeylElement(self, word)

    def weyl_orbit(self, mu: Vec) -> frozenset[Vec]:
        seen = {mu}
        frontier = [mu]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    w = self.simple_reflect_coweight(i, v)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return frozenset(seen)

    def weyl_group(self) -> list[WeylElement]:
        """All Weyl group elements with reduced words, by BFS from the identity."""
        if self._weyl_cache is None:
            idmat = tuple(tuple(int(i == j) for j in range(self.dim))
                          for i in range(self.dim))
            seen = {idmat: ()}
            frontier = [(idmat, ())]
            elements = [WeylElement(self, ())]
            while frontier:
                nxt = []
                for mat, word in frontier:
                    for i in range(self.rank):
                        # rows are the images of the basis coweights under
                        # the element, which identifies it uniquely
                        rows = tuple(self.simple_reflect_coweight(i, row)
                                     for row in mat)
                        if rows not in seen:
                            w = word + (i,)
                            seen[rows] = w
                            nxt.append((rows, w))
                            elements.append(WeylElement(self, w))
                            if len(elements) > _WEYL_BUDGET:
                                raise ShapeError("Weyl group too large to enumerate")
                frontier = nxt
            self._weyl_cache = elements
        return self._weyl_cache

    def height2(self, mu: Vec) -> int:
        """<2rho, mu>: twice the dominance height for coroot-lattice elements."""
        return self.pairing(self.two_rho, mu)

    def dominant_below(self, mu: Vec) -> list[Vec]:
        """All dominant lam <= mu, sorted by <2rho, lam> then lexicographically.

        Enumerates coefficient vectors c >= 0 with bounded sum, then keeps
        the dominant results.
        """
        if not self.is_dominant(mu):
            raise ShapeError("dominant_below expects a dominant coweight")
        # <2rho, .> is >= 0 on dominants and drops by exactly 2 per simple
        # coroot, so sum(c) is at most floor(<rho, mu>).
        budget = self.height2(mu) // 2
        found = []
        if self.rank == 0:
            return [mu]

        def rec(idx: int, remaining: int, cur: Vec) -> None:
            if idx == self.rank:
                if self.is_dominant(cur):
                    found.append(cur)
                return
            step = self.simple_coroots[idx]
            v = cur
            for c in range(remaining + 1):
                rec(idx + 1, remaining - c, v)
                v = _vsub(v, step)

        rec(0, budget, mu)
        found.sort(key=lambda lam: (self.height2(lam), lam))
        return found

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "rank": self.rank,
            "simple_roots": [list(a) for a in self.simple_roots],
            "simple_coroots": [list(a) for a in self.simple_coroots],
            "two_rho": list(self.two_rho),
        }

    def __repr__(self) -> str:
        return f"RootDatum({self.label})"


class _IntegralSolver:
    """Solves sum_i c_i b_i = delta for integer c, for a fixed independent
    family (b_i) in Z^dim, via a precomputed rational left inverse."""

    def __init__(self, basis: Sequence[Vec], dim: int):
        self.basis = tuple(basis)
        self.dim = dim
        r = len(basis)
        if r == 0:
            self.pinv = ()
            return
        # Gram = B^T B is invertible since the family is independent.
        gram = [[Fraction(sum(basis[i][k] * basis[j][k] for k in range(dim)))
                 for j in range(r)] for i in range(r)]
        inv = _invert_fraction_matrix(gram)
        # pinv = Gram^{-1} B^T : Z^dim -> Q^r
        self.pinv = tuple(
            tuple(sum(inv[i][j] * basis[j][k] for j in range(r))
                  for k in range(dim))
            for i in range(r))

    def solve(self, delta: Vec) -> Optional[Vec]:
        r = len(self.basis)
        if r == 0:
            return () if all(x == 0 for x in delta) else None
        coords = []
        for i in range(r):
            c = sum(self.pinv[i][k] * delta[k] for k in range(self.dim))
            if c.denominator != 1:
                return None
            coords.append(int(c))
        # membership check: the least-squares solution must reproduce delta
        for k in range(self.dim):
            if sum(coords[i] * self.basis[i][k] for i in range(r)) != delta[k]:
                return None
        return tuple(coords)


def _invert_fraction_matrix(m: list[list[Fraction]]) -> list[list[Fraction]]:
    r = len(m)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(r)]
           for i, row in enumerate(m)]
    for col in range(r):
        piv = next(i for i in range(col, r) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(r):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[r:] for row in aug]


# -- concrete realizations ---------------------------------------------------

def _gl_datum(n: int) -> RootDatum:
    def e(i: int) -> Vec:
        return tuple(int(k == i) for k in range(n))

    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                roots.append(_vsub(e(i), e(j)))
    simple = [_vsub(e(i), e(i + 1)) for i in range(n - 1)]
    return RootDatum(f"GL({n})", n, roots, list(roots), simple, list(simple))


_CARTAN_BUILDERS = {}


def _chain(rank: int) -> list[list[int]]:
    c = [[2 * int(i == j) for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        c[i][i + 1] = -1
        c[i + 1][i] = -1
    return c


def _cartan(series: str, rank: int) -> list[list[int]]:
    if series == "A":
        if rank < 1:
            raise UnsupportedType("A_r needs r >= 1")
        return _chain(rank)
    if series == "B":
        if rank < 2:
            raise UnsupportedType("B_r needs r >= 2")
        c = _chain(rank)
        c[rank - 2][rank - 1] = -2   # last simple root is short
        return c
    if series == "C":
        if rank < 2:
            raise UnsupportedType("C_r needs r >= 2")
        c = _chain(rank)
        c[rank - 1][rank - 2] = -2   # last simple root is long
        return c
    if series == "D":
        if rank < 3:
            raise UnsupportedType("D_r needs r >= 3")
        c = _chain(rank)
        c[rank - 2][rank - 1] = 0
        c[rank - 1][rank - 2] = 0
        c[rank - 3][rank - 1] = -1
        c[rank - 1][rank - 3] = -1
        return c
    if series == "G":
        if rank != 2:
            raise UnsupportedType("G series only exists in rank 2")
        return [[2, -1], [-3, 2]]
    raise UnsupportedType(f"series {series!r} not supported")


def _simple_datum(series: str, rank: int) -> RootDatum:
    cartan = _cartan(series, rank)

    def e(i: int) -> Vec:
        return tuple(int(k == i) for k in range(rank))

    simple_roots = [e(i) for i in range(rank)]
    simple_coroots = [tuple(cartan[i][j] for i in range(rank))
                      for j in range(rank)]

    # close the simple pairs under all simple reflections
    def reflect(pair: tuple[Vec, Vec], k: int) -> tuple[Vec, Vec]:
        a, av = pair
        ca = sum(a[i] * simple_coroots[k][i] for i in range(rank))
        cv = sum(simple_roots[k][i] * av[i] for i in range(rank))
        return (_vsub(a, _vscale(ca, simple_roots[k])),
                _vsub(av, _vscale(cv, simple_coroots[k])))

    seen = {(simple_roots[i], simple_coroots[i]) for i in range(rank)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for pair in frontier:
            for k in range(rank):
                q = reflect(pair, k)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    pairs = sorted(seen)
    roots = [a for a, _ in pairs]
    coroots = [av for _, av in pairs]
    return RootDatum(f"{series}{rank}", rank, roots, coroots,
                     simple_roots, simple_coroots)


def make_root_datum(label: str) -> RootDatum:
    """Build a root datum from a label like 'GL(3)', 'GL3', 'A2', 'C_2', 'G2'."""
    s = label.strip().replace("_", "").replace(" ", "").upper()
    if s.startswith("GL"):
        body = s[2:].strip("()")
        if not body.isdigit() or int(body) < 1:
            raise UnsupportedType(f"bad GL label {label!r}")
        return _gl_datum(int(body))
    if s and s[0] in "ABCDG":
        body = s[1:].strip("()")
        if not body.isdigit():
            raise UnsupportedType(f"bad label {label!r}")
        return _simple_datum(s[0], int(body))
    raise UnsupportedType(f"unsupported label {label!r}")


def dominant_coweights_in_box(datum: RootDatum, lo: int, hi: int) -> Iterator[Vec]:
    """All dominant coweights with every coordinate in [lo, hi]."""
    for v in itertools.product(range(hi, lo - 1, -1), repeat=datum.dim):
        if datum.is_dominant(v):
            yield v
