from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import primerange

from jordanic.quadfield import INFINITY, QuadraticField, QuadraticPlace, RationalPlace, infinite_places, is_squarefree, places_above
from jordanic.quatalg import (
    JORDAN_VALUES,
    AlgebraError,
    EndoType,
    QuaternionClass,
    base_change,
    closed_field_surface_jordan,
    congruence_prediction,
    cyclic_profile,
    d_p_infty,
    dp_inf_sqrt_p_prediction,
    embeds_quadratic_field,
    from_structure_constants_over_Q,
    hilbert_symbol,
    is_division,
    isomorphic,
    jordan,
    jordan_over_Q,
    jordan_over_quadratic,
    parse_base,
    parse_ram,
)
from oracles import hilbert_by_search

SMALL_SQUAREFREE = [n for n in range(-15, 16) if n not in (0, 1) and is_squarefree(n)] + [1]
squarefree_m = st.integers(-300, 300).filter(lambda m: m not in (0, 1) and is_squarefree(m))
primes = st.sampled_from(list(primerange(2, 200)))


def P(*ps):
    return frozenset(INFINITY if p == "inf" else RationalPlace(p) for p in ps)


# ---------------------------------------------------------------- Hilbert symbols


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_hilbert_symbol_against_local_solution_search(p):
    for a in SMALL_SQUAREFREE:
        for b in SMALL_SQUAREFREE:
            assert hilbert_symbol(a, b, RationalPlace(p)) == hilbert_by_search(a, b, p), (a, b, p)


@given(st.integers(-10**4, 10**4).filter(bool), st.integers(-10**4, 10**4).filter(bool))
@settings(max_examples=300, deadline=None)
def test_hilbert_product_formula(a, b):
    D = from_structure_constants_over_Q(a, b)
    assert len(D.ram) % 2 == 0


@given(st.integers(-500, 500).filter(bool), st.integers(-500, 500).filter(bool), st.sampled_from([2, 3, 5, 7, 11]))
@settings(max_examples=300, deadline=None)
def test_hilbert_symmetric_and_square_invariant(a, b, p):
    v = RationalPlace(p)
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
    assert hilbert_symbol(a, b, v) == hilbert_symbol(a * 9, b * 4, v)
    assert hilbert_symbol(a, -a, v) == 1


@pytest.mark.parametrize("ab,ram", [((-1, -1), P(2, "inf")), ((-1, -3), P(3, "inf")), ((1, 7), P()),
                                    ((-2, -5), P(5, "inf")), ((3, 5), P(3, 5))])
def test_structure_constants(ab, ram):
    assert from_structure_constants_over_Q(*ab).ram == ram


# ---------------------------------------------------------------- classes, base change


def test_class_invariants():
    with pytest.raises(AlgebraError):
        QuaternionClass(None, P(2))
    with pytest.raises(AlgebraError):
        QuaternionClass(QuadraticField(-1), frozenset({QuadraticPlace("complex"), QuadraticPlace("finite", 3, "inert")}))
    with pytest.raises(AlgebraError):
        # 3 is inert in Q(i), so a split-role place above 3 is foreign
        QuaternionClass(QuadraticField(-1), frozenset({QuadraticPlace("finite", 3, "split_first"),
                                                       QuadraticPlace("finite", 5, "split_first")}))
    assert not is_division(QuaternionClass(None, frozenset()))
    assert is_division(d_p_infty(2))


def test_d_p_infty():
    assert d_p_infty(2).ram == P(2, "inf")
    assert d_p_infty(73).ram == P(73, "inf")
    with pytest.raises(AlgebraError):
        d_p_infty(15)


def test_isomorphic():
    assert isomorphic(d_p_infty(2), d_p_infty(2))
    assert not isomorphic(d_p_infty(2), d_p_infty(3))
    K = QuadraticField(73)
    assert not isomorphic(base_change(d_p_infty(73), K), base_change(d_p_infty(3), K))
    with pytest.raises(AlgebraError):
        isomorphic(d_p_infty(2), base_change(d_p_infty(2), K))


def test_base_change_examples():
    K5 = QuadraticField(5)
    assert base_change(d_p_infty(2), K5).ram == infinite_places(K5)
    K7 = QuadraticField(-7)
    D = base_change(d_p_infty(2), K7)
    assert D.ram == frozenset(places_above(K7, RationalPlace(2))) and D.is_division
    assert not base_change(d_p_infty(3), QuadraticField(-1)).is_division


@given(primes, squarefree_m)
@settings(max_examples=300, deadline=None)
def test_base_change_splits_iff_field_embeds(p, m):
    # D (x) K is a matrix algebra iff K embeds in D, iff no place of D splits in K
    D, K = d_p_infty(p), QuadraticField(m)
    DK = base_change(D, K)
    assert len(DK.ram) % 2 == 0
    assert all(w.kind != "complex" for w in DK.ram)
    assert (not DK.is_division) == embeds_quadratic_field(D, K)


@given(primes, squarefree_m)
@settings(max_examples=300, deadline=None)
def test_jordan_values_in_allowed_set(p, m):
    assert jordan(d_p_infty(p)).value in JORDAN_VALUES
    DK = base_change(d_p_infty(p), QuadraticField(m))
    if DK.is_division:
        assert jordan(DK).value in JORDAN_VALUES


# ---------------------------------------------------------------- Jordan cascade


@pytest.mark.parametrize("pair", list(combinations([2, 3, 5, 7, 11, 13, "inf"], 2)), ids=str)
def test_rational_cascade(pair):
    ram = P(*pair)
    want = 12 if ram == P(2, "inf") else 2 if ram == P(3, "inf") else 1
    assert jordan_over_Q(QuaternionClass(None, ram)).value == want


def test_split_algebra_has_no_answer():
    with pytest.raises(AlgebraError):
        jordan_over_Q(QuaternionClass(None, frozenset()))
    with pytest.raises(AlgebraError):
        jordan(base_change(d_p_infty(3), QuadraticField(-1)))


@pytest.mark.parametrize("m,want", [(5, 60), (2, 24), (17, 2), (73, 1), (3, 12), (13, 12)])
def test_quadratic_cascade_totally_definite(m, want):
    K = QuadraticField(m)
    assert jordan_over_quadratic(QuaternionClass(K, infinite_places(K))).value == want


@pytest.mark.parametrize("fam,m,want", [("D2", -7, 12), ("D3", 33, 2), ("D3", -1, "split"), ("D2", 5, 60),
                                        ("D2", 2, 24), ("D2", -3, "split"), ("D3", -2, 2)])
def test_congruence_examples(fam, m, want):
    got = congruence_prediction(fam, QuadraticField(m))
    assert (got if isinstance(got, str) else got.value) == want


@given(st.integers(2, 500).filter(is_squarefree), st.sampled_from([1, -1]), st.sampled_from(["D2", "D3"]))
@settings(max_examples=400, deadline=None)
def test_congruence_agrees_with_cascade(n, sign, fam):
    K = QuadraticField(sign * n)
    pred = congruence_prediction(fam, K)
    D = base_change(d_p_infty(2 if fam == "D2" else 3), K)
    if pred == "split":
        assert not D.is_division
    else:
        assert jordan_over_quadratic(D).value == pred.value


@pytest.mark.parametrize("p,want", [(5, 60), (2, 24), (3, 12), (13, 12), (17, 2), (97, 1), (73, 1), (41, 2)])
def test_sqrt_p_prediction(p, want):
    assert dp_inf_sqrt_p_prediction(p).value == want


@given(st.sampled_from(list(primerange(2, 3000))))
@settings(max_examples=200, deadline=None)
def test_sqrt_p_prediction_matches_cascade(p):
    D = base_change(d_p_infty(p), QuadraticField(p))
    assert dp_inf_sqrt_p_prediction(p).value == jordan_over_quadratic(D).value


def test_cyclic_profile_spot_values():
    assert (cyclic_profile(11).c4, cyclic_profile(11).c6) == (True, True)
    assert (cyclic_profile(13).c4, cyclic_profile(13).c6) == (False, False)
    assert (cyclic_profile(5).c4, cyclic_profile(5).c6) == (False, True)
    assert (cyclic_profile(7).c4, cyclic_profile(7).c6) == (True, False)
    with pytest.raises(AlgebraError):
        cyclic_profile(3)


def test_closed_field():
    for et in (EndoType.RATIONAL_FIELD, EndoType.REAL_QUADRATIC, EndoType.QUARTIC_CM):
        assert closed_field_surface_jordan(et).value == 1
    assert closed_field_surface_jordan(EndoType.INDEFINITE_QUATERNION_OVER_Q, P(2, 3)).value == 1
    with pytest.raises(AlgebraError):
        closed_field_surface_jordan(EndoType.INDEFINITE_QUATERNION_OVER_Q, P(2, "inf"))


def test_parsing():
    assert parse_base("Q") is None
    K = parse_base("d=5")
    assert K == QuadraticField(5)
    assert parse_ram("inf", K) == infinite_places(K)
    assert parse_ram("2,inf", None) == P(2, "inf")
    Km2 = parse_base("-2")
    assert {str(w) for w in parse_ram("p3a,p3b", Km2)} == {"p3a", "p3b"}
    assert len(parse_ram("3", Km2)) == 2
    with pytest.raises(AlgebraError):
        parse_ram("p5a", Km2)  # 5 is inert in Q(sqrt -2)
    with pytest.raises(AlgebraError):
        parse_ram("inf", Km2)
    with pytest.raises(AlgebraError):
        parse_base("d=4")


def test_json_roundtrip():
    for D in (d_p_infty(2), base_change(d_p_infty(2), QuadraticField(-7)), base_change(d_p_infty(3), QuadraticField(5))):
        assert QuaternionClass.from_json(D.to_json()) == D
