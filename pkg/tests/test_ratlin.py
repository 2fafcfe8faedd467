from fractions import Fraction

import pytest

from spinoriality import ratlin as rl


def test_solve_exact():
    a = ((2, 1), (1, 3))
    x = rl.solve(a, (5, 10))
    assert x == (Fraction(1), Fraction(3))


def test_solve_inconsistent_returns_none():
    a = ((1, 1), (2, 2))
    assert rl.solve(a, (1, 3)) is None


def test_mat_inv_roundtrip():
    m = ((Fraction(2), Fraction(1)), (Fraction(1), Fraction(1)))
    inv = rl.mat_inv(m)
    assert rl.mat_mul(m, inv) == rl.identity(2)


def test_mat_inv_singular():
    with pytest.raises(ZeroDivisionError):
        rl.mat_inv(((1, 2), (2, 4)))


def test_rank():
    assert rl.rank(((1, 2, 3), (2, 4, 6), (0, 1, 0))) == 2


def test_smith_normal_form_transforms():
    m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    d, u, v = rl.smith_normal_form(m)
    assert rl.mat_mul(rl.mat_mul(u, m), v) == d
    diag = [d[i][i] for i in range(3)]
    assert diag == [2, 6, 12]
    for i in range(2):
        if diag[i + 1] != 0:
            assert diag[i + 1] % diag[i] == 0


def test_smith_normal_form_nonsquare():
    m = [[2, 0, 0], [0, 3, 0]]
    d, u, v = rl.smith_normal_form(m)
    assert rl.mat_mul(rl.mat_mul(u, m), v) == d
    assert [d[0][0], d[1][1]] == [1, 6]
    assert all(d[i][j] == 0 for i in range(2) for j in range(3) if i != j)


def test_lattice_coords_and_membership():
    basis = ((2, 0), (1, 1))
    assert rl.lattice_coords(basis, (3, 1)) == (Fraction(1), Fraction(1))
    assert rl.in_lattice(basis, (3, 1))
    assert not rl.in_lattice(basis, (1, 0))


def test_frac_gcd():
    assert rl.frac_gcd([Fraction(3, 2), Fraction(9, 2)]) == Fraction(3, 2)
    assert rl.frac_gcd([4, 6]) == 2


def test_row_lattice_basis_halves():
    rows = ((1, 0), (0, 1), (Fraction(1, 2), Fraction(1, 2)))
    basis = rl.row_lattice_basis(rows)
    assert len(basis) == 2
    for r in rows:
        assert rl.in_lattice(basis, r)
    assert rl.in_lattice(basis, (Fraction(1, 2), Fraction(-1, 2)))
    assert not rl.in_lattice(basis, (Fraction(1, 4), Fraction(1, 4)))
