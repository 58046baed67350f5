import random
from fractions import Fraction

import pytest

from valdiv.errors import (
    FieldConstructionError,
    NotAUnitError,
    NotInvertibleError,
    UnsupportedFieldError,
)
from valdiv.fields import PrimeField
from valdiv.laurent import INFINITE_VALUATION, Tower
from valdiv.ordered import Lattice, quotient
from valdiv.symbol import SymbolAlgebra, quaternion_is_division

from conftest import (
    make_quaternion_f5,
    make_rational_quaternion,
    make_symbol_xy,
    random_algebra_element,
)
from oracles import left_regular_det

F = Fraction


def test_defining_relations():
    alg = make_symbol_xy(3, 7)
    i, j = alg.i(), alg.j()
    omega = alg.scalar(alg.omega)
    assert j * i == omega * (i * j)
    assert i**3 == alg.scalar(alg.a)
    assert j**3 == alg.scalar(alg.b)
    assert i ** (3 - 1) * i == alg.scalar(alg.a)


def test_quaternion_square_example():
    alg = make_quaternion_f5()
    i, j = alg.i(), alg.j()
    # (i+j)^2 = i^2 + ij + ji + j^2 = u + t since ij + ji = 0
    lhs = (i + j) * (i + j)
    rhs = alg.scalar(alg.a) + alg.scalar(alg.b)
    assert lhs == rhs


def test_construction_validation():
    field = PrimeField(5)
    tower = Tower(field, ["t"])
    with pytest.raises(FieldConstructionError):
        SymbolAlgebra(tower, 2, field.element(2), tower.one(), tower.var("t"))
    with pytest.raises(FieldConstructionError):
        # residue characteristic divides the degree
        SymbolAlgebra(tower, 5, field.element(1), tower.one(), tower.var("t"))
    with pytest.raises(FieldConstructionError):
        SymbolAlgebra(tower, 2, field.element(-1), tower.zero(), tower.var("t"))


def test_splitting_representation_relations_and_example():
    alg = make_quaternion_f5()
    alg.verify_splitting_relations()
    rho_i = alg.i().splitting_matrix()
    # rho(i) = diag(alpha, -alpha)
    assert rho_i[0][0][1] == alg.tower.one()
    assert rho_i[1][1][1] == -alg.tower.one()
    assert rho_i[0][1] == [alg.tower.zero()] * 2
    rho_j = alg.j().splitting_matrix()
    # rho(j) = [[0, 1], [t, 0]]
    assert rho_j[0][1][0] == alg.tower.one()
    assert rho_j[1][0][0] == alg.b
    one_mat = alg.one().splitting_matrix()
    assert one_mat[0][0][0] == alg.tower.one()
    assert one_mat[0][1][0].is_zero()


def test_splitting_is_homomorphism_on_samples():
    rng = random.Random(21)
    alg = make_symbol_xy(3, 7)
    from valdiv.symbol import _l_matrix_agrees, _l_matrix_mul

    for _ in range(10):
        e1 = random_algebra_element(alg, rng)
        e2 = random_algebra_element(alg, rng)
        lhs = (e1 * e2).splitting_matrix()
        rhs = _l_matrix_mul(alg, e1.splitting_matrix(), e2.splitting_matrix())
        assert _l_matrix_agrees(lhs, rhs)


def test_quaternion_norm_closed_form():
    rng = random.Random(23)
    alg = make_quaternion_f5()
    tower = alg.tower
    u, t = alg.a, alg.b
    for _ in range(200):
        cs = [
            tower.monomial((rng.randint(-2, 2),), rng.randint(0, 4))
            for _ in range(4)
        ]
        e = (
            alg.scalar(cs[0])
            + alg.monomial(1, 0, cs[1])
            + alg.monomial(0, 1, cs[2])
            + alg.monomial(1, 1, cs[3])
        )
        if e.is_zero():
            continue
        expected = (
            cs[0] * cs[0]
            - u * cs[1] * cs[1]
            - t * cs[2] * cs[2]
            + u * t * cs[3] * cs[3]
        )
        assert e.nrd() == expected


def test_nrd_of_generators():
    for n, p in [(2, 3), (3, 7), (4, 5)]:
        alg = make_symbol_xy(n, p)
        sign = alg.tower.base.one() if n % 2 else -alg.tower.base.one()
        assert alg.i().nrd() == alg.a.scale(sign)
        assert alg.j().nrd() == alg.b.scale(sign)
        assert alg.one().nrd() == alg.tower.one()


def test_nrd_multiplicative_and_unit_criterion():
    rng = random.Random(29)
    for alg in (make_quaternion_f5(), make_symbol_xy(3, 7)):
        for _ in range(100):
            e1 = random_algebra_element(alg, rng)
            e2 = random_algebra_element(alg, rng)
            assert (e1 * e2).nrd().agrees_to_precision(e1.nrd() * e2.nrd())
        for _ in range(25):
            e = random_algebra_element(alg, rng)
            if e.is_zero():
                continue
            nr = e.nrd()
            if nr.indistinguishable_from_zero():
                continue
            inv = e.inv()
            assert (e * inv).agrees_to_precision(alg.one())
            assert (inv * e).agrees_to_precision(alg.one())


def test_unit_criterion_both_directions():
    # nrd = 0 in a split-like algebra means no inverse exists
    field = PrimeField(5)
    tower = Tower(field, ["t"])
    split = SymbolAlgebra(
        tower, 2, field.element(-1), tower.one(), tower.var("t")
    )
    zero_divisor = split.one() + split.i()  # nrd = 1 - a = 0 when a = 1
    assert zero_divisor.nrd().is_zero()
    with pytest.raises(NotInvertibleError):
        zero_divisor.inv()

    # and when nrd != 0, the inverse agrees with the one found by solving
    # the n^2-dimensional linear system e*z = 1 directly
    rng = random.Random(97)
    alg = make_quaternion_f5()
    for _ in range(10):
        e = random_algebra_element(alg, rng)
        if e.is_zero() or e.nrd().indistinguishable_from_zero():
            continue
        z = _solve_right_inverse(e)
        assert (e * z).agrees_to_precision(alg.one())
        assert z.agrees_to_precision(e.inv())


def _solve_right_inverse(e):
    """Independent inverse: Gaussian elimination on the left-regular system."""
    alg = e.algebra
    n = alg.degree
    basis = [(k, l) for k in range(n) for l in range(n)]
    cols = []
    for kl in basis:
        prod = e * alg.monomial(*kl)
        cols.append([prod.coeffs.get(b, alg.tower.zero()) for b in basis])
    size = len(basis)
    mat = [[cols[c][r] for c in range(size)] for r in range(size)]
    rhs = [alg.tower.one() if b == (0, 0) else alg.tower.zero() for b in basis]
    for col in range(size):
        piv = next(
            r for r in range(col, size)
            if not mat[r][col].indistinguishable_from_zero()
        )
        mat[col], mat[piv] = mat[piv], mat[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv = mat[col][col].inv()
        mat[col] = [x * inv for x in mat[col]]
        rhs[col] = rhs[col] * inv
        for r in range(size):
            if r != col and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
                rhs[r] = rhs[r] - f * rhs[col]
    return alg.element({b: rhs[idx] for idx, b in enumerate(basis)})


def test_left_regular_determinant_oracle():
    rng = random.Random(31)
    for alg, samples in [(make_quaternion_f5(8), 8), (make_symbol_xy(3, 7, 6), 4)]:
        n = alg.degree
        for _ in range(samples):
            e = random_algebra_element(alg, rng, terms=2, span=1)
            if e.is_zero():
                continue
            det = left_regular_det(e)
            nrd_power = e.nrd() ** n
            assert det.agrees_to_precision(nrd_power)


def test_trd_and_prd():
    alg = make_symbol_xy(3, 7)
    assert alg.i().trd().is_zero()
    assert alg.j().trd().is_zero()
    # characteristic polynomial of the first generator is X^n - a
    prd_i = alg.i().prd()
    assert prd_i[3] == alg.tower.one()
    assert prd_i[2].is_zero() and prd_i[1].is_zero()
    assert prd_i[0] == -alg.a
    one_prd = alg.one().prd()
    # (X - 1)^3 = X^3 - 3X^2 + 3X - 1 over F7
    tower = alg.tower
    assert one_prd[3] == tower.one()
    assert one_prd[2] == tower.constant(-3)
    assert one_prd[1] == tower.constant(3)
    assert one_prd[0] == tower.constant(-1)

    quat = make_quaternion_f5()
    rng = random.Random(37)
    for _ in range(20):
        e = random_algebra_element(quat, rng)
        poly = e.prd()
        # X^2 - trd X + nrd
        assert poly[2] == quat.tower.one()
        assert (-poly[1]) == e.trd()
        assert poly[0] == e.nrd()


def test_cayley_hamilton_in_the_algebra():
    rng = random.Random(41)
    for alg in (make_quaternion_f5(), make_symbol_xy(3, 7)):
        for _ in range(15):
            e = random_algebra_element(alg, rng)
            poly = e.prd()
            acc = alg.zero()
            power = alg.one()
            for k, c in enumerate(poly):
                if k:
                    power = power * e
                acc = acc + power.scale(c)
            assert acc.indistinguishable_from_zero()


def test_valuation_of_generators():
    for n, p in [(2, 3), (3, 7), (4, 5)]:
        alg = make_symbol_xy(n, p)
        assert alg.i().valuation() == (F(0), F(1, n))
        assert alg.j().valuation() == (F(1, n), F(0))
        assert alg.one().valuation() == (F(0), F(0))
    quat = make_quaternion_f5()
    assert quat.j().valuation() == (F(1, 2),)
    assert quat.i().valuation() == (F(0),)
    with pytest.raises(NotInvertibleError):
        quat.zero().inv()
    assert quat.zero().valuation() is INFINITE_VALUATION


def test_valuation_restricted_to_center_is_field_valuation():
    rng = random.Random(43)
    alg = make_symbol_xy(3, 7)
    for _ in range(40):
        f = alg.tower.monomial(
            (rng.randint(-3, 3), rng.randint(-3, 3)), rng.randint(1, 6)
        )
        assert alg.scalar(f).valuation() == tuple(F(x) for x in f.valuation())


def test_valuation_additive_and_ultrametric():
    rng = random.Random(47)
    for alg in (make_quaternion_f5(), make_symbol_xy(3, 7)):
        zero_vec = tuple(F(0) for _ in range(alg.tower.height))
        for _ in range(150):
            e1 = random_algebra_element(alg, rng)
            e2 = random_algebra_element(alg, rng)
            if e1.is_zero() or e2.is_zero():
                continue
            v1, v2 = e1.valuation(), e2.valuation()
            prod = e1 * e2
            assert prod.valuation() == tuple(a + b for a, b in zip(v1, v2))
            s = e1 + e2
            if not s.is_zero():
                assert s.valuation() >= min(v1, v2)
                if v1 != v2:
                    assert s.valuation() == min(v1, v2)
            assert zero_vec == alg.one().valuation()


def test_value_group_examples():
    for n, p in [(2, 3), (3, 7), (4, 5)]:
        alg = make_symbol_xy(n, p)
        assert alg.value_group() == Lattice.scaled(2, F(1, n))
        q = quotient(alg.value_group(), Lattice.standard(2))
        assert q.order == n * n
        assert q.invariant_factors == (n, n)
    quat = make_quaternion_f5()
    assert quat.value_group() == Lattice.scaled(1, F(1, 2))
    # degenerate split-like algebra: unit a, b give the trivial extension
    field = PrimeField(5)
    tower = Tower(field, ["t"])
    degenerate = SymbolAlgebra(
        tower, 2, field.element(-1), tower.constant(2), tower.constant(3)
    )
    assert degenerate.value_group() == Lattice.standard(1)


def test_classification_totally_ramified_corpus():
    for n, p in [(2, 3), (3, 7), (4, 5)]:
        report = make_symbol_xy(n, p).classify()
        assert report.index == n * n
        assert report.residue_degree == 1
        assert report.defect == 1
        assert report.is_totally_ramified
        assert report.is_tame
        assert not report.is_semiramified
        assert report.is_division is True


def test_classification_quaternion_semiramified():
    report = make_quaternion_f5().classify()
    assert report.dimension == 4
    assert report.index == 2
    assert report.residue_degree == 2
    assert report.is_semiramified
    assert not report.is_totally_ramified
    assert report.is_tame
    assert report.is_division is True
    # oracle: the residue class of i generates a quadratic extension since
    # its square has a non-square residue
    alg = make_quaternion_f5()
    i_sq_res = (alg.i() * alg.i()).residue()
    from valdiv.fields import is_square

    assert not is_square(i_sq_res)


def test_classification_trivial_algebra():
    field = PrimeField(5)
    tower = Tower(field, ["t"])
    triv = SymbolAlgebra(tower, 1, field.one(), tower.constant(2), tower.var("t"))
    report = triv.classify()
    assert report.dimension == 1
    assert report.index == 1
    assert report.residue_degree == 1
    assert report.defect == 1
    assert report.is_division is True


def test_fundamental_equality_on_reports():
    for alg in (make_quaternion_f5(), make_symbol_xy(2, 3), make_symbol_xy(3, 7)):
        r = alg.classify()
        assert r.residue_degree * r.index == r.dimension
        assert r.residue_degree * r.index <= r.dimension


def test_quaternion_division_criterion():
    field = PrimeField(5)
    tower = Tower(field, ["t"])
    t = tower.var("t")
    assert quaternion_is_division(tower.constant(2), t)
    assert not quaternion_is_division(tower.constant(4), t)
    assert not quaternion_is_division(tower.one(), t)
    with pytest.raises(NotAUnitError):
        quaternion_is_division(t, t)
    with pytest.raises(NotAUnitError):
        quaternion_is_division(tower.constant(2), tower.constant(3))
    with pytest.raises(UnsupportedFieldError):
        xy = Tower(field, ["x", "y"])
        quaternion_is_division(xy.constant(2), xy.var("x"))


def test_value_group_is_realized_by_monomials():
    # every generator of the computed value group is hit by some monomial
    for alg in (make_quaternion_f5(), make_symbol_xy(3, 7), make_symbol_xy(4, 5)):
        for row in alg.value_group().fraction_rows():
            d = alg.monomial_with_value(row)
            assert d is not None
            assert d.valuation() == tuple(row)


def test_monomial_with_value():
    alg = make_symbol_xy(3, 7)
    d = alg.monomial_with_value((F(0), F(1, 3)))
    assert d is not None and d.valuation() == (F(0), F(1, 3))
    d2 = alg.monomial_with_value((F(1, 3), F(2, 3)))
    assert d2 is not None and d2.valuation() == (F(1, 3), F(2, 3))
    assert alg.monomial_with_value((F(1, 2), F(0))) is None
    central = alg.monomial_with_value((F(2), F(-1)))
    assert central is not None and central.is_scalar()


def test_rational_quaternion_norms():
    alg = make_rational_quaternion()
    i, j = alg.i(), alg.j()
    assert (i * i) == alg.scalar(-1)
    e = alg.scalar(F(3, 5)) + i.scale(alg.tower.constant(F(4, 5)))
    assert e.nrd() == alg.tower.one()
    assert e.valuation() == ()
    assert (i * j + j * i).is_zero()
