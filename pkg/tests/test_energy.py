import math
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st
from scipy import integrate as sp_integrate

from matchkit.energy import (
    EnergyResult, log_poly_eval, me_difference, me_eigen, me_quadrature, me_roots,
)
from matchkit.families import g1_mvector, g2_mvector
from matchkit.graph import Graph
from matchkit.matching import MatchVector, match_vector
from matchkit.quadrature import (
    ConvergenceError, GAUSS_WEIGHTS, KRONROD_WEIGHTS, NODES, QuadratureSettings, gk15, integrate,
)
from matchkit.roots import (
    RootError, isolate_real_roots, poly_gcd, root_bound, squarefree_decomposition, sturm_sequence,
)

G10_1 = MatchVector((1, 12, 48, 76, 42, 5), 10)
G10_2 = MatchVector((1, 12, 48, 75, 42, 6), 10)


def scipy_me(mv):
    """Independent oracle: scipy's QUADPACK on the untransformed integral."""
    def f(x):
        return math.log(sum(c * x ** (2 * k) for k, c in enumerate(mv.counts))) / (x * x)
    head = sp_integrate.quad(f, 0, 1, epsabs=1e-13, epsrel=1e-12, limit=200)[0]
    tail = sp_integrate.quad(f, 1, np.inf, epsabs=1e-13, epsrel=1e-12, limit=200)[0]
    return 2 / math.pi * (head + tail)


# -------------------------------------------------------------- quadrature

def test_gk15_rule_constants():
    assert NODES.shape == KRONROD_WEIGHTS.shape == GAUSS_WEIGHTS.shape == (15,)
    assert KRONROD_WEIGHTS.sum() == pytest.approx(2.0, abs=1e-15)
    assert GAUSS_WEIGHTS.sum() == pytest.approx(2.0, abs=1e-15)
    ref_x, ref_w = np.polynomial.legendre.leggauss(7)
    assert np.allclose(np.sort(NODES[GAUSS_WEIGHTS > 0]), ref_x, atol=1e-15)


def test_gk15_exact_for_polynomials():
    # Kronrod 15 is exact through degree 22, Gauss 7 through degree 13.
    value, err = gk15(lambda x: x ** 12 + 3 * x ** 5, 0.0, 1.0)
    assert value == pytest.approx(1 / 13 + 0.5, rel=1e-14)
    assert err < 1e-14


def test_integrate_log_endpoint():
    value, err = integrate(np.log, 0.0, 1.0)
    assert value == pytest.approx(-1.0, abs=1e-9)
    assert err < 1e-8


def test_integrate_nonconvergence_carries_partial_value():
    s = QuadratureSettings(rel_tol=1e-14, abs_tol=1e-300, max_intervals=5)
    with pytest.raises(ConvergenceError) as err:
        integrate(lambda x: 1 / np.sqrt(x), 0.0, 1.0, s)
    assert 1.0 < err.value.value < 2.0


def test_settings_validation():
    with pytest.raises(ValueError):
        QuadratureSettings(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureSettings(abs_tol=-1.0)


# -------------------------------------------------------------------- roots

def test_sturm_matches_sympy():
    p = [-5, 3, -2, 1]          # x^3 - 2x^2 + 3x - 5
    ours = sturm_sequence(p)
    x = sympy.Symbol("x")
    ref = sympy.sturm(sympy.Poly(x ** 3 - 2 * x ** 2 + 3 * x - 5, x))
    assert len(ours) == len(ref)
    for a, b in zip(ours, ref):
        # Same polynomials up to a positive constant.
        ratio = Fraction(a[-1]) / Fraction(int(b.LC() * b.LC().q), b.LC().q)
        assert ratio > 0


def test_isolation_against_numpy():
    rng = random.Random(2)
    for _ in range(50):
        roots = [rng.randint(-20, 20) for _ in range(rng.randint(1, 6))]
        p = [1]
        for r in roots:
            p = list(np.polynomial.polynomial.polymul(p, [-r, 1]).astype(int))
        p = [int(c) for c in p]
        found = []
        for factor, mult in squarefree_decomposition(p):
            for lo, hi in isolate_real_roots(factor, 1e-12):
                found += [float(lo + hi) / 2] * mult
        assert sorted(found) == pytest.approx(sorted(roots), abs=1e-9)


def test_squarefree_and_gcd():
    assert squarefree_decomposition([1, -2, 1]) == [([-1, 1], 2)]
    assert poly_gcd([-1, 0, 1], [1, 1]) in ([1, 1], [-1, -1])
    assert root_bound([-6, 1]) >= 6


def test_isolation_separates_close_roots():
    # (x - 1)(x - 1 - 1e-9) scaled to integers.
    a, b = 10 ** 9, 10 ** 9 + 1
    p = [a * b, -(a + b) * 10 ** 9, 10 ** 18]
    iv = isolate_real_roots(p, 1e-13)
    assert len(iv) == 2 and iv[0][1] <= iv[1][0]


# ------------------------------------------------------------------ energy

def test_me_examples():
    assert me_quadrature(MatchVector((1, 1), 2)).value == pytest.approx(2.0, abs=1e-10)
    assert me_roots(MatchVector((1, 1), 2)).value == pytest.approx(2.0, abs=1e-12)
    assert me_roots(MatchVector((1, 3, 1), 4)).value == pytest.approx(2 * math.sqrt(5), abs=1e-12)
    assert me_quadrature(G10_1).value == pytest.approx(13.8644, abs=2e-3)
    assert me_quadrature(G10_2).value == pytest.approx(13.9042, abs=2e-3)


def test_me_matches_scipy_oracle():
    for mv in [G10_1, G10_2, g1_mvector(15), g2_mvector(11), g2_mvector(13)]:
        assert me_quadrature(mv).value == pytest.approx(scipy_me(mv), abs=1e-8)


def test_result_record():
    r = me_roots(G10_1)
    assert isinstance(r, EnergyResult)
    assert set(r.to_json()) == {"me", "method", "error", "n"}
    assert r.to_json()["method"] == "roots"
    assert len(r.roots) == 5 and all(mu >= 0 for mu in r.roots)
    assert r.value == pytest.approx(2 * sum(r.roots))


def test_zero_roots_are_counted():
    # Star K_{1,3}: alpha = x^4 - 3x^2, so q has a zero root removed and restored.
    r = me_roots(MatchVector((1, 3), 4))
    assert r.roots == pytest.approx((math.sqrt(3), 0.0))


@pytest.mark.parametrize("n", range(1, 13))
def test_path_energy_equals_eigenvalue_energy(n):
    p = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    expected = sum(abs(2 * math.cos(k * math.pi / (n + 1))) for k in range(1, n + 1))
    mv = match_vector(p)
    assert me_roots(mv).value == pytest.approx(expected, abs=1e-9)
    assert me_quadrature(mv).value == pytest.approx(expected, abs=1e-8)


def test_roots_reject_non_graph_vectors():
    with pytest.raises(RootError):
        me_roots(MatchVector((1, 1, 1), 4))     # y^2 - y + 1 has complex roots
    with pytest.raises(RootError):
        me_roots(MatchVector((1, 0, 1), 4))     # y^2 + 1


def test_eigen_crosscheck():
    for mv in [G10_1, G10_2, g2_mvector(20)]:
        assert me_eigen(mv) == pytest.approx(me_roots(mv).value, abs=1e-8)


def test_log_poly_eval_examples():
    assert log_poly_eval(MatchVector((1, 1), 2), 1.0) == pytest.approx(math.log(2))
    assert log_poly_eval(MatchVector((1, 6, 3), 4), 1.0) == pytest.approx(math.log(10))
    x = 1e-5
    assert log_poly_eval(G10_1, x) / x ** 2 == pytest.approx(12, rel=1e-6)
    # Huge counts and extreme arguments stay finite.
    big = g1_mvector(400)
    assert np.isfinite(log_poly_eval(big, 1e150))
    xs = np.array([1e-3, 1.0, 1e3])
    assert log_poly_eval(G10_1, xs).shape == (3,)


def test_me_difference():
    assert me_difference(G10_1, G10_1) == 0.0
    d = me_difference(G10_1, G10_2)
    assert d == pytest.approx(-0.0398, abs=1e-3)
    assert d == pytest.approx(me_quadrature(G10_1).value - me_quadrature(G10_2).value, abs=1e-8)
    assert me_difference(G10_2, G10_1) == pytest.approx(-d, abs=1e-12)
    with pytest.raises(ValueError):
        me_difference(G10_1, g1_mvector(11))


def test_me_difference_with_different_matching_numbers():
    a = MatchVector((1, 3), 4)            # star
    b = MatchVector((1, 3, 1), 4)         # path
    assert me_difference(a, b) == pytest.approx(me_roots(a).value - me_roots(b).value, abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 9), st.data())
def test_padding_never_changes_energy(n, data):
    counts = data.draw(st.lists(st.integers(0, 30), min_size=1, max_size=n // 2))
    mv = MatchVector([1, *counts], n)
    wide = MatchVector(list(mv.counts) + [0, 0], n)
    assert me_quadrature(mv).value == me_quadrature(wide).value
