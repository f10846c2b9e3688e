import itertools
import random

import pytest

from satkit import lattice_oracle as lo
from satkit.errors import (DomainError, NonPolynomialCount, ShapeError,
                           TooLarge, WindowError)
from satkit.finite_field import GF, PolyRing
from satkit.polynomials import QPoly


# -- an independent second oracle: nilpotent-stable subspaces -------------------

def _rref_subspaces(q, m):
    """All subspaces of GF(q)^m as reduced-row-echelon bases."""
    f = GF(q)
    for r in range(m + 1):
        for pivots in itertools.combinations(range(m), r):
            free = [(i, j) for i in range(r) for j in range(m)
                    if j > pivots[i] and j not in pivots]
            for values in itertools.product(range(q), repeat=len(free)):
                rows = [[0] * m for _ in range(r)]
                for i in range(r):
                    rows[i][pivots[i]] = 1
                for (i, j), v in zip(free, values):
                    rows[i][j] = v
                yield [tuple(row) for row in rows], pivots


def _in_span(f, rows, pivots, vec):
    v = list(vec)
    for i, p in enumerate(pivots):
        c = v[p]
        if c:
            for j in range(len(v)):
                v[j] = f.sub(v[j], f.mul(c, rows[i][j]))
    return all(x == 0 for x in v)


def count_shift_stable_subspaces(n, q, N):
    """Subspaces of GF(q)^{2nN} stable under the block-shift nilpotent;
    the classical model for window lattices, independent of Hermite forms."""
    f = GF(q)
    m = 2 * N * n

    def shift(vec):
        out = [0] * m
        for b in range(n):
            for k in range(2 * N - 1):
                out[b * 2 * N + k + 1] = vec[b * 2 * N + k]
        return tuple(out)

    count = 0
    for rows, pivots in _rref_subspaces(q, m):
        if all(_in_span(f, rows, pivots, shift(v)) for v in rows):
            count += 1
    return count


# -- enumeration ----------------------------------------------------------------

def test_rank_one_window():
    lats = list(lo.enumerate_lattices(1, 5, 1))
    assert len(lats) == 3
    exps = sorted(l.diag_exponents() for l in lats)
    assert exps == [(0,), (1,), (2,)]


@pytest.mark.parametrize("n,q,N", [(1, 2, 1), (1, 3, 2), (2, 2, 1), (2, 3, 1)])
def test_enumeration_matches_subspace_oracle(n, q, N):
    ours = sum(1 for _ in lo.enumerate_lattices(n, q, N))
    assert ours == count_shift_stable_subspaces(n, q, N)


def test_enumeration_no_duplicates():
    lats = list(lo.enumerate_lattices(2, 3, 1))
    assert len(set(lats)) == len(lats)


def test_t_power_lattices_are_enumerated():
    lats = set(lo.enumerate_lattices(2, 2, 1))
    for mu in itertools.product((-1, 0, 1), repeat=2):
        assert lo.t_power_lattice(mu, 2, 1) in lats
    with pytest.raises(WindowError):
        lo.t_power_lattice((2, 0), 2, 1)


def test_budget_enforced():
    with pytest.raises(TooLarge):
        list(lo.enumerate_lattices(3, 5, 3, budget=100))
    with pytest.raises(TooLarge):
        lo.count_cell((1, 0, 0), 5, 3, budget=100)


def test_budget_env_var(monkeypatch):
    monkeypatch.setenv(lo.BUDGET_ENV, "10")
    with pytest.raises(TooLarge):
        list(lo.enumerate_lattices(2, 2, 1))
    monkeypatch.delenv(lo.BUDGET_ENV)
    assert sum(1 for _ in lo.enumerate_lattices(2, 2, 1)) == 15


# -- elementary divisors and relative position -----------------------------------

def test_elementary_divisors_basic():
    assert lo.elementary_divisors([[(1,), ()], [(), (1,)]], 3) == (0, 0)
    assert lo.elementary_divisors(
        [[(0, 0, 1), ()], [(), (0, 1)]], 3) == (2, 1)
    assert lo.elementary_divisors(
        [[(), (0, 1)], [(0, 0, 0, 1), ()]], 2) == (3, 1)


def test_elementary_divisors_singular():
    from satkit.errors import SingularMatrix
    with pytest.raises(SingularMatrix):
        lo.elementary_divisors([[(1,), (1,)], [(1,), (1,)]], 2)


def _random_unimodular(ring, n, rng):
    rows = [[ring.one if i == j else () for j in range(n)] for i in range(n)]
    for _ in range(6 * n):
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b:
            continue
        coeff = ring.normalize([rng.randrange(ring.field.q) for _ in range(2)])
        rows[b] = [ring.add(x, ring.mul(coeff, y))
                   for x, y in zip(rows[b], rows[a])]
    return rows


def _matmul(ring, A, B):
    n = len(A)
    return [[_dot(ring, A, B, i, j, n) for j in range(n)] for i in range(n)]


def _dot(ring, A, B, i, j, n):
    acc = ()
    for k in range(n):
        acc = ring.add(acc, ring.mul(A[i][k], B[k][j]))
    return acc


def test_elementary_divisors_unimodular_invariance():
    rng = random.Random(5)
    for q in (2, 3):
        ring = PolyRing(GF(q))
        for _ in range(8):
            n = rng.choice((2, 3))
            exps = sorted((rng.randrange(0, 4) for _ in range(n)),
                          reverse=True)
            M = [[ring.t_power(exps[i]) if i == j else ()
                  for j in range(n)] for i in range(n)]
            base = lo.elementary_divisors(M, q)
            assert base == tuple(exps)
            g = _random_unimodular(ring, n, rng)
            h = _random_unimodular(ring, n, rng)
            assert lo.elementary_divisors(_matmul(ring, _matmul(ring, g, M),
                                                  h), q) == base


def test_relative_position_identity_and_translation():
    for lat in lo.enumerate_lattices(2, 2, 1):
        assert lo.relative_position(lat, lat) == (0, 0)
    std = lo.standard_lattice(2, 3, 2)
    for mu in [(1, 0), (2, -1), (0, -2), (1, 1)]:
        target = lo.t_power_lattice(mu, 3, 2)
        assert lo.relative_position(std, target) == \
            tuple(sorted(mu, reverse=True))


def test_relative_position_duality():
    rng = random.Random(9)
    lats = list(lo.enumerate_lattices(2, 3, 1))
    for _ in range(25):
        l1, l2 = rng.choice(lats), rng.choice(lats)
        fwd = lo.relative_position(l1, l2)
        bwd = lo.relative_position(l2, l1)
        assert bwd == tuple(sorted((-x for x in fwd), reverse=True))


def test_relative_position_window_mismatch():
    a = lo.standard_lattice(2, 2, 1)
    b = lo.standard_lattice(2, 2, 2)
    with pytest.raises(ShapeError):
        lo.relative_position(a, b)
    with pytest.raises(ShapeError):
        lo.relative_position(a, lo.standard_lattice(3, 2, 1))


def test_rewindow_preserves_position():
    for lat in lo.enumerate_lattices(2, 2, 1):
        assert lo.inv_from_standard(lat) == \
            lo.inv_from_standard(lo.rewindow(lat, 3))


# -- counting -------------------------------------------------------------------

def test_count_cell_frozen_values():
    assert lo.count_cell((0, 0), 2, 1) == 1
    assert lo.count_cell((1, 0), 2, 1) == 3      # |P^1(F_2)|
    assert lo.count_cell((1, -1), 2, 1) == 6     # q^2 + q
    assert lo.count_cell((1, 0), 4, 1) == 5
    assert lo.count_cell((1, 0, 0), 3, 1) == 13  # |P^2(F_3)|


def test_count_cell_window_saturation():
    for mu in [(1, 0), (1, -1), (1, 1)]:
        assert lo.count_cell(mu, 2, 1) == lo.count_cell(mu, 2, 2)


def test_count_cell_validation():
    with pytest.raises(WindowError):
        lo.count_cell((2, 0), 3, 1)
    with pytest.raises(DomainError):
        lo.count_cell((0, 1), 3, 1)


def test_census_totality():
    for n, q, N in [(1, 3, 1), (2, 2, 1), (2, 3, 1)]:
        census = lo.cell_census(n, q, N)
        assert sum(census.values()) == \
            sum(1 for _ in lo.enumerate_lattices(n, q, N))
        assert all(mu == tuple(sorted(mu, reverse=True)) for mu in census)


def test_census_parallel_matches_serial():
    assert lo.cell_census(2, 3, 1, workers=2) == lo.cell_census(2, 3, 1)


def test_brute_convolution_frozen_values():
    assert lo.brute_convolution((1, 0), (1, 0), (1, 1), 2) == 3
    assert lo.brute_convolution((1, 0), (1, 0), (2, 0), 2) == 1
    assert lo.brute_convolution((1, 0), (1, 0), (0, 0), 2) == 0
    assert lo.brute_convolution((1, -1), (1, -1), (1, -1), 2) == 1
    assert lo.brute_convolution((1, -1), (1, -1), (1, -1), 3) == 2
    assert lo.brute_convolution((1, -1), (1, -1), (0, 0), 3) == 12


def test_brute_convolution_commutes():
    doms = [(1, 0), (1, 1), (1, -1), (2, 0)]
    for lam, mu in itertools.product(doms, repeat=2):
        total = tuple(a + b for a, b in zip(lam, mu))
        for nu in [total, (total[0] - 1, total[1] + 1)]:
            if nu[0] < nu[1]:
                continue
            assert lo.brute_convolution(lam, mu, nu, 2) == \
                lo.brute_convolution(mu, lam, nu, 2)


def test_brute_convolution_validation():
    with pytest.raises(ShapeError):
        lo.brute_convolution((1, 0), (1, 0, 0), (1, 1), 2)
    with pytest.raises(DomainError):
        lo.brute_convolution((0, 1), (1, 0), (1, 1), 2)


def test_interpolate_count():
    p = lo.interpolate_count(lambda q: lo.count_cell((1, 0), q, 1), [2, 3, 5])
    assert p == QPoly([1, 1])
    p = lo.interpolate_count(lambda q: lo.count_cell((1, -1), q, 1),
                             [2, 3, 5, 7])
    assert p == QPoly([0, 1, 1])
    p = lo.interpolate_count(
        lambda q: lo.brute_convolution((1, 0), (1, 0), (1, 1), q), [2, 3, 5])
    assert p == QPoly([1, 1])


def test_interpolate_count_detects_non_polynomial():
    with pytest.raises(NonPolynomialCount) as info:
        lo.interpolate_count(lambda q: 2 ** q, [2, 3, 5])
    assert info.value.args[1] == 5
    with pytest.raises(DomainError):
        lo.interpolate_count(lambda q: q, [2])


def test_oracle_report_and_csv(tmp_path):
    report = lo.oracle_report(2, 2, 1, conv_bound=1)
    assert report["n"] == 2 and report["q"] == 2 and report["N"] == 1
    assert sum(r["count"] for r in report["cells"]) == 15
    assert any(r["count"] == 3 and r["mu"] == [1, 0]
               for r in report["cells"])
    assert {"lambda": [1, 0], "mu": [1, 0], "nu": [1, 1], "count": 3} in \
        report["convolutions"]
    paths = lo.report_to_csv(report, str(tmp_path / "r"))
    assert len(paths) == 2
    text = (tmp_path / "r_cells.csv").read_text()
    assert "1 0,3" in text
