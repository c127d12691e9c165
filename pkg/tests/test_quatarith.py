from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanic.groups import GroupFamily, build_group, identify_family, jordan_constant
from jordanic.quatarith import (
    FieldElem,
    QuaternionArithmeticError,
    QuatElem,
    algebra_units,
    cross_validate,
    element_order,
    field_elem,
    generate_group,
    qconj,
    qinv,
    qmul,
    qnorm,
    qone,
    standard_embedding,
)

ALGEBRAS = [(-1, -1, None), (-1, -3, None), (2, -5, None), (Fraction(3, 2), 7, None), (-1, -1, 2), (-1, -1, 5), (-3, 2, 5)]

small = st.fractions(min_value=-4, max_value=4, max_denominator=4)


def field_strategy(m):
    if m is None:
        return small.map(lambda x: field_elem(x))
    return st.tuples(small, small).map(lambda xy: field_elem(xy[0], xy[1], m))


@st.composite
def quat_in(draw, alg):
    a, b, m = alg
    coords = tuple(draw(field_strategy(m)) for _ in range(4))
    return QuatElem(coords, field_elem(a, 0, m), field_elem(b, 0, m))


@st.composite
def algebra_and_quats(draw, n):
    alg = draw(st.sampled_from(ALGEBRAS))
    return alg, [draw(quat_in(alg)) for _ in range(n)]


# ---------------------------------------------------------------- sympy matrix oracle


def to_sympy(x: FieldElem):
    return sympy.Rational(x.x) + (sympy.Rational(x.y) * sympy.sqrt(x.m) if x.m else 0)


def as_matrix(q: QuatElem):
    """Faithful 2x2 representation over the splitting field: i -> diag(s, -s), j -> [[0, b], [1, 0]]."""
    s = sympy.sqrt(to_sympy(q.alpha))
    b = to_sympy(q.beta)
    one = sympy.eye(2)
    I = sympy.Matrix([[s, 0], [0, -s]])
    J = sympy.Matrix([[0, b], [1, 0]])
    c = [to_sympy(x) for x in q.c]
    return c[0] * one + c[1] * I + c[2] * J + c[3] * I * J


@given(algebra_and_quats(2))
@settings(max_examples=60, deadline=None)
def test_product_matches_matrix_representation(data):
    _, (x, y) = data
    diff = as_matrix(qmul(x, y)) - as_matrix(x) * as_matrix(y)
    assert all(sympy.simplify(e) == 0 for e in diff)


@given(algebra_and_quats(1))
@settings(max_examples=60, deadline=None)
def test_norm_is_determinant(data):
    _, (x,) = data
    assert sympy.simplify(as_matrix(x).det() - to_sympy(qnorm(x))) == 0


def test_hamilton_relations():
    one, i, j, k = algebra_units(-1, -1)
    assert i * i == -one and j * j == -one and k * k == -one
    assert i * j == k and j * i == -k and i * j * k == -one


def test_general_relations():
    one, i, j, k = algebra_units(-1, -3)
    assert i * i == -one and j * j == one * -3 and k * k == one * -3 and j * i == -k


# ---------------------------------------------------------------- algebraic properties


@given(algebra_and_quats(2))
@settings(max_examples=200, deadline=None)
def test_norm_multiplicative(data):
    _, (x, y) = data
    assert qnorm(x * y) == qnorm(x) * qnorm(y)


@given(algebra_and_quats(3))
@settings(max_examples=200, deadline=None)
def test_associative(data):
    _, (x, y, z) = data
    assert (x * y) * z == x * (y * z)


@given(algebra_and_quats(2))
@settings(max_examples=200, deadline=None)
def test_conjugation_reverses_products(data):
    _, (x, y) = data
    assert qconj(x * y) == qconj(y) * qconj(x)
    assert x * qconj(x) == qone(x) * qnorm(x)


@given(algebra_and_quats(1))
@settings(max_examples=200, deadline=None)
def test_inverse(data):
    _, (x,) = data
    if qnorm(x).is_zero():
        with pytest.raises(QuaternionArithmeticError):
            qinv(x)
    else:
        assert x * qinv(x) == qone(x) and qinv(x) * x == qone(x)


@given(st.sampled_from([2, 3, 5, -7]), small, small, small, small)
@settings(max_examples=200, deadline=None)
def test_field_inverse_and_norm(m, a, b, c, d):
    x, y = field_elem(a, b, m), field_elem(c, d, m)
    assert (x * y).norm() == x.norm() * y.norm()
    if not x.is_zero():
        assert x * x.inverse() == field_elem(1, 0, m)


def test_field_mixing_rejected():
    with pytest.raises(QuaternionArithmeticError):
        field_elem(0, 1, 2) + field_elem(0, 1, 5)
    with pytest.raises(QuaternionArithmeticError):
        FieldElem(Fraction(1), Fraction(1), None)


# ---------------------------------------------------------------- groups from generators


@pytest.mark.parametrize("fam,order,jval", [(GroupFamily.quaternion8(), 8, 2), (GroupFamily.dicyclic(3), 12, 2),
                                            (GroupFamily("2T"), 24, 12), (GroupFamily("2O"), 48, 24),
                                            (GroupFamily("2I"), 120, 60)], ids=str)
def test_standard_embeddings_close(fam, order, jval):
    spec = standard_embedding(fam)
    G = generate_group(spec.generators, cap=1000)
    assert G.order == order
    assert identify_family(G) == fam
    assert jordan_constant(G).value == jval
    # same isomorphism type as the abstract presentation: element order statistics agree
    assert sorted(G.element_orders) == sorted(build_group(fam).element_orders)


@pytest.mark.parametrize("fam", [GroupFamily.quaternion8(), GroupFamily.dicyclic(3), GroupFamily("2T"),
                                 GroupFamily("2O"), GroupFamily("2I")], ids=str)
def test_cross_validate(fam):
    r = cross_validate(fam)
    assert r.agree
    assert r.relation == ("bounded" if fam == GroupFamily.quaternion8() else "equal")


def test_generator_checks():
    one, i, j, k = algebra_units(-1, -1)
    with pytest.raises(QuaternionArithmeticError):
        generate_group([one + i])  # norm 2
    with pytest.raises(QuaternionArithmeticError):
        generate_group([])
    with pytest.raises(QuaternionArithmeticError):
        generate_group([i], cap=20_000)
    # norm 1 but infinite order in (-1, 3): j^2 = 3, (2 + j) has norm 1
    one3, i3, j3, k3 = algebra_units(-1, 3)
    with pytest.raises(QuaternionArithmeticError):
        element_order(one3 * 2 + j3, cap=50)
    assert element_order(i, cap=10) == 4


def test_cap_enforced():
    spec = standard_embedding(GroupFamily("2I"))
    with pytest.raises(QuaternionArithmeticError):
        generate_group(spec.generators, cap=60)
