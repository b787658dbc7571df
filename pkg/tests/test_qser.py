"""Exact q-expansions, cross-checked by an independent Newton oracle."""

from fractions import Fraction

import pytest

from bwlab import qser
from bwlab.qser import QSeries

from . import _oracles


def test_eisenstein4_coefficients():
    e4 = qser.eisenstein4(8)
    assert e4.offset_thirds == 0
    assert e4.coeffs == (1, 240, 2160, 6720, 17520, 30240, 60480, 82560)


def test_delta_is_the_ramanujan_tau_series():
    d = qser.delta(12)
    assert d.offset_thirds == 3
    assert d.coeffs == (1, -24, 252, -1472, 4830, -6048, -16744, 84480,
                        -113643, -115920, 534612, -370944)


def test_euler_product_inverse_counts_partitions():
    inv = qser.euler_product(12).inverse()
    assert inv.coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56)


def test_j_series_classical_values():
    j = qser.j_series(6)
    assert j.offset_thirds == -3
    assert j.coeffs[:5] == (1, 744, 196884, 21493760, 864299970)


def test_cube_root_j_coefficients():
    c = qser.cube_root_j(8)
    assert c.offset_thirds == -1
    assert c.coeffs[:4] == (1, 248, 4124, 34752)


def test_cube_root_matches_newton_oracle():
    n = 12
    c = qser.cube_root_j(n)
    # j * q as an offset-free rational series with constant term 1
    y = [Fraction(x) for x in qser.j_series(n).coeffs]
    oracle = _oracles.newton_cube_root(y, n)
    assert all(o.denominator == 1 for o in oracle)
    assert tuple(int(o) for o in oracle) == c.coeffs


def test_cube_root_certification_catches_corruption(monkeypatch):
    good = qser.j_series

    def tainted(n):
        j = good(n)
        return QSeries(j.offset_thirds,
                       j.coeffs[:2] + (j.coeffs[2] + 1,) + j.coeffs[3:])

    monkeypatch.setattr(qser, "j_series", tainted)
    with pytest.raises(RuntimeError):
        qser.cube_root_j(6)


def test_t1_series_values():
    t1 = qser.t1_series(8)
    assert t1.offset_thirds == -4
    assert t1.exponent(0) == Fraction(-4, 3)
    assert t1.coeffs[:3] == (1, 0, 139504)
    assert t1.coefficient(Fraction(2, 3)) == 139504
    assert all(c >= 0 for c in t1.coeffs)


def test_t1_divided_by_cube_root_recovers_j_shift():
    n = 10
    t1 = qser.t1_series(n)
    back = t1.div(qser.cube_root_j(n)).add_scalar(992)
    j = qser.j_series(n)
    assert back.offset_thirds == j.offset_thirds
    assert back.coeffs == j.coeffs[:len(back.coeffs)]


def test_mul_add_and_scalars():
    a = QSeries(0, (1, 2, 3))
    b = QSeries(3, (5, 6))
    assert a.mul(b).coeffs == (5, 16)
    assert a.mul(b).offset_thirds == 3
    assert a.add(b).coeffs == (1, 7, 9)
    assert a.scaled(-2).coeffs == (-2, -4, -6)
    assert a.add_scalar(10).coeffs == (11, 2, 3)


def test_add_requires_aligned_offsets():
    with pytest.raises(ValueError):
        QSeries(0, (1,)).add(QSeries(1, (1,)))
    # far-away addend contributes nothing inside the shared window
    far = QSeries(0, (1, 2)).add(QSeries(30, (1, 2)))
    assert far.offset_thirds == 0
    assert far.coeffs == (1, 2)


def test_inverse_needs_unit_leading_coefficient():
    with pytest.raises(ValueError):
        QSeries(0, (2, 1)).inverse()
    inv = QSeries(-3, (-1, 4)).inverse()
    assert inv.offset_thirds == 3
    assert QSeries(-3, (-1, 4)).mul(inv).coeffs == (1, 0)


def test_power_and_validation():
    a = QSeries(0, (1, 1, 0, 0))
    assert a.power(2).coeffs == (1, 2, 1, 0)
    with pytest.raises(ValueError):
        a.power(0)
    with pytest.raises(ValueError):
        QSeries(0, ())


def test_coefficient_window_errors():
    t1 = qser.t1_series(4)
    with pytest.raises(ValueError):
        t1.coefficient(Fraction(1, 2))  # not a third
    with pytest.raises(ValueError):
        t1.coefficient(0)  # between stored thirds
    with pytest.raises(ValueError):
        t1.coefficient(100)  # past the truncation


def test_terms_listing():
    d = qser.delta(3)
    assert d.terms() == [(Fraction(1), 1), (Fraction(2), -24),
                         (Fraction(3), 252)]
