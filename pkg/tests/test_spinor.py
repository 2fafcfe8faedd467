from fractions import Fraction
from math import comb

import pytest

from spinoriality import ratlin as rl
from spinoriality.catalog import group_by_name, highest_root
from spinoriality.errors import SpecificationError
from spinoriality.repcalc import freudenthal_multiplicities, L_phi, weyl_dim
from spinoriality.rootdata import build_root_datum
from spinoriality.spinor import (OrthRep, adjoint_spinorial, descent_check,
                                 dominant_orthogonal_weights, is_spinorial,
                                 is_spinorial_irreducible, make_regular,
                                 oracle_compare, orth_rep, q_irreducible,
                                 q_rep, q_tensor, q_via_weyl_sum,
                                 scan_periodicity)


def test_pgl2_q_values():
    g = group_by_name("PGL2")
    for j in range(0, 30):
        lam = g.weight_from_coords([j])
        v = is_spinorial_irreducible(g.rd, g.fg, lam)
        expected_q = j * (j + 1) * (2 * j + 1) // 6
        assert v.q_values() == (expected_q,)
        assert v.spinorial == (j % 4 in (0, 3))


def test_so4_pattern():
    g = group_by_name("SO4")
    for a in range(0, 10):
        for b in range(0, 10):
            if (a - b) % 2:
                continue
            lam = g.weight_from_coords([a, b])
            if not g.rd.is_dominant(lam):
                continue
            v = is_spinorial_irreducible(g.rd, g.fg, lam)
            f = (b + 1) * comb(a + 2, 3) + (a + 1) * comb(b + 2, 3)
            assert v.spinorial == (f % 8 == 0), (a, b)


def test_gl2_hyperbolic():
    g = group_by_name("GL2")
    for m in range(0, 8):
        for n in range(0, m + 1):
            lam = (Fraction(m), Fraction(n))
            rep = orth_rep(g.rd, hyperbolic=[lam])
            v = is_spinorial(g.rd, g.fg, rep)
            half = Fraction((m + n) * (m - n + 1), 2)
            assert half.denominator == 1
            assert v.spinorial == (int(half) % 2 == 0), (m, n)


def test_trivial_pi1_always_spinorial():
    g = group_by_name("Spin8")
    lam = g.weight_from_coords([1, 0, 1, 1])
    v = is_spinorial_irreducible(g.rd, g.fg, lam)
    assert v.spinorial and v.certificate == ()


def test_orth_rep_validation():
    g = group_by_name("PGL2")
    with pytest.raises(SpecificationError):
        orth_rep(g.rd, irreducible=[g.weight_from_coords([Fraction(1, 2)])])
    g2 = group_by_name("SL2")
    w = g2.weight_from_coords([1])
    with pytest.raises(SpecificationError):    # symplectic, not orthogonal
        orth_rep(g2.rd, irreducible=[w])
    # a self-dual weight automatically kills the connected center, so the
    # GL2 adjoint weight is a valid irreducible orthogonal summand
    g3 = group_by_name("GL2")
    rep = orth_rep(g3.rd, irreducible=[(Fraction(1), Fraction(-1))])
    assert len(rep.irreducible) == 1


def test_q_rep_additivity():
    g = group_by_name("PGL2")
    nu = g.fg.generators[0]
    l2 = g.weight_from_coords([2])
    l3 = g.weight_from_coords([3])
    q2 = q_rep(g.rd, OrthRep(irreducible=(tuple(l2),)), nu)
    q3 = q_rep(g.rd, OrthRep(irreducible=(tuple(l3),)), nu)
    q23 = q_rep(g.rd, OrthRep(irreducible=(tuple(l2), tuple(l3))), nu)
    assert q23 == q2 + q3


def test_q_tensor():
    assert q_tensor(3, 1, 5, 2) == 3 * 2 + 5 * 1
    # tensor with a trivial factor changes nothing
    assert q_tensor(1, 0, 7, 5) == 5


def test_weyl_sum_matches_closed_form():
    for name, coords in [("PGL2", [4]), ("SO5", [2, 0]), ("G2", [1, 0])]:
        g = group_by_name(name)
        lam = g.weight_from_coords(coords)
        nu = (g.fg.generators or g.rd.simple_coroots)[0]
        reg = make_regular(g.rd, nu)
        assert q_via_weyl_sum(g.rd, lam, reg) == q_irreducible(g.rd, lam, reg)


def test_weyl_sum_rejects_irregular():
    g = group_by_name("SO5")
    # (1, 1) kills the root e1 - e2, so it is not a regular point
    with pytest.raises(SpecificationError):
        q_via_weyl_sum(g.rd, g.weight_from_coords([2, 0]),
                       (Fraction(1), Fraction(1)))


def test_oracle_compare_agrees():
    g = group_by_name("PGL3")
    lam = g.weight_from_coords([1, 1])    # adjoint
    nu = g.fg.generators[0]
    rep = oracle_compare(g.rd, lam, nu)
    assert rep["ok"] and rep["parity_agrees"] and rep["weyl_agrees"]


def test_adjoint_spinorial_criterion():
    # delta integral: SL2 yes (delta = w1), PGL2 no (delta = alpha/2)
    assert adjoint_spinorial(group_by_name("SL2").rd)
    assert not adjoint_spinorial(group_by_name("PGL2").rd)
    assert adjoint_spinorial(group_by_name("SO8").rd)
    assert not adjoint_spinorial(group_by_name("SO7").rd)
    assert adjoint_spinorial(group_by_name("PSO8").rd)


def test_descent_adjoint_sln():
    # descended adjoint of SL_n through mu_d: spinorial iff n/d even
    for n, d in [(4, 2), (6, 2), (8, 2), (8, 4), (6, 3)]:
        if d % 2:
            continue
        g = group_by_name(f"SL{n}")
        lam = g.weight_from_coords([1] + [0] * (n - 3) + [1])
        nu0 = tuple(Fraction(1) for _ in range(n - 1)) + (Fraction(1 - n),)
        ok = descent_check(g.rd, lam, nu0, d)
        assert ok == ((n // d) % 2 == 0), (n, d)


def test_descent_requires_even_order():
    g = group_by_name("SL3")
    with pytest.raises(SpecificationError):
        descent_check(g.rd, g.weight_from_coords([1, 1]),
                      g.rd.simple_coroots[0], 3)


def test_dominant_orthogonal_weights_pgl2():
    g = group_by_name("PGL2")
    pts = list(dominant_orthogonal_weights(g.rd, 5, basis=g.weight_basis))
    assert [c for c, _ in pts] == [(j,) for j in range(6)]


def test_scan_periodicity_pgl2():
    g = group_by_name("PGL2")
    report = scan_periodicity(g.rd, g.fg, box=16, k=2, basis=g.weight_basis)
    assert report["violations"] == []
    assert report["minimal_k"] == 2
    assert not report["vacuous"]
    report1 = scan_periodicity(g.rd, g.fg, box=16, k=1, basis=g.weight_basis)
    assert report1["violations"] != []


def test_highest_root_is_adjoint_weight():
    g = group_by_name("E7adj")
    theta = highest_root(g.rd)
    assert weyl_dim(g.rd, theta) == 133
