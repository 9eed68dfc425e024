"""Layered scalar arithmetic, order relations, and the dual view."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from laytrop import (COUNTING, INF, INTEGERS, NATURALS, RATIONALS,
                     SUPERTROPICAL, TRIVIAL, DomainError, LayeredScalar,
                     LayeredSemiring, semiring)

from oracles import random_scalar

NAT = LayeredSemiring(COUNTING, RATIONALS)
SUP = LayeredSemiring(SUPERTROPICAL, RATIONALS)
TRIV = LayeredSemiring(TRIVIAL, RATIONALS)

values = st.fractions(min_value=-20, max_value=20, max_denominator=8)
nat_layers = st.one_of(st.integers(min_value=1, max_value=6), st.just(INF))
nat_scalars = st.builds(lambda v, l: NAT.scalar(v, l), values, nat_layers)


def test_addition_selects_larger_value():
    assert NAT.add(NAT.scalar(2), NAT.scalar(3)) == NAT.scalar(3)


def test_addition_tie_adds_layers():
    assert NAT.add(NAT.scalar(3), NAT.scalar(3)) == NAT.scalar(3, 2)


def test_supertropical_tie_jumps_to_inf():
    assert SUP.add(SUP.scalar(3), SUP.scalar(3)) == SUP.scalar(3, INF)


def test_trivial_addition_is_idempotent():
    assert TRIV.add(TRIV.scalar(3), TRIV.scalar(3)) == TRIV.scalar(3)


def test_multiplication_is_componentwise():
    assert NAT.mul(NAT.scalar(2), NAT.scalar(3)) == NAT.scalar(5)
    assert NAT.mul(NAT.scalar(1, 2), NAT.scalar(1, 3)) == NAT.scalar(2, 6)


def test_layer_units():
    assert NAT.e(1) == NAT.one() == LayeredScalar(1, Fraction(0))
    a = NAT.scalar(Fraction(7, 2))
    assert NAT.mul(a, NAT.e(3)) == NAT.scalar(Fraction(7, 2), 3)


@given(st.integers(1, 5), st.integers(1, 5))
def test_layer_unit_identities(k, l):
    assert NAT.mul(NAT.e(k), NAT.e(l)) == NAT.e(k * l)
    assert NAT.add(NAT.e(k), NAT.e(l)) == NAT.e(k + l)


def test_flavor_mismatch_rejected():
    with pytest.raises(DomainError):
        SUP.add(SUP.scalar(1), NAT.scalar(1, 2))
    with pytest.raises(DomainError):
        TRIV.scalar(1, 2)
    with pytest.raises(DomainError):
        LayeredSemiring(COUNTING, NATURALS).scalar(Fraction(-1))


def test_transition_raises_layers_only():
    assert NAT.transition(NAT.scalar(5), 3) == NAT.scalar(5, 3)
    assert NAT.transition(NAT.scalar(5, 2), 2) == NAT.scalar(5, 2)
    with pytest.raises(DomainError):
        NAT.transition(NAT.scalar(5, 3), 2)


def test_sort_of_products_and_self_sums():
    x, y = NAT.scalar(2, 2), NAT.scalar(5, 3)
    assert NAT.sort(NAT.mul(x, y)) == 6
    assert NAT.sort(NAT.add(x, x)) == 4


def test_nu_comparison_ignores_layers():
    assert NAT.nu_compare(NAT.scalar(3, 1), NAT.scalar(3, 5)) == 0
    assert NAT.nu_compare(NAT.scalar(2, 9), NAT.scalar(3, 1)) < 0
    x = NAT.scalar(4, 2)
    assert NAT.nu_compare(x, x) == 0


def test_ghost_sorts():
    assert NAT.is_ghost_over(NAT.scalar(5, 2), 1)
    assert not NAT.is_ghost_over(NAT.scalar(5, 1), 1)
    assert SUP.is_ghost_over(SUP.scalar(5, INF), 1)
    # inf = inf + k, so inf is a ghost sort over itself
    assert NAT.is_ghost_over(NAT.scalar(5, INF), INF)
    assert not NAT.is_ghost_over(NAT.scalar(5, 3), 3)
    assert TRIV.is_ghost_over(TRIV.scalar(5), 1)


def test_surpassing_examples():
    x = NAT.scalar(5, 1)
    assert NAT.surpasses(x, x)
    assert NAT.surpasses(NAT.scalar(5, 2), NAT.scalar(5, 1))
    # values differ and (1,5) carries no ghost surplus over sort 1
    assert not NAT.surpasses(NAT.scalar(5, 1), NAT.scalar(3, 1))


def test_dual_view_selects_smaller_value():
    dual = NAT.dual()
    assert dual.add(NAT.scalar(2), NAT.scalar(3)) == NAT.scalar(2)
    assert dual.add(NAT.scalar(3), NAT.scalar(3)) == NAT.scalar(3, 2)
    assert dual.dual() == NAT


def test_localization():
    assert NAT.localize(NAT.scalar(5, 3), NAT.scalar(2)) == NAT.scalar(3, 3)
    a = NAT.scalar(Fraction(-7, 3), 4)
    assert NAT.localize(a, NAT.one()) == a
    with pytest.raises(DomainError):
        NAT.localize(NAT.scalar(1), NAT.scalar(1, 2))


def test_localization_is_injective_for_a_fixed_denominator():
    rng = random.Random(7)
    u = NAT.scalar(Fraction(5, 3))
    seen = {}
    for _ in range(300):
        a = random_scalar(rng, NAT)
        image = NAT.localize(a, u)
        assert seen.setdefault(image, a) == a


def test_localization_completes_naturals_to_integers():
    nat_values = LayeredSemiring(COUNTING, NATURALS)
    result = nat_values.localize(nat_values.scalar(2), nat_values.scalar(5))
    assert result == LayeredScalar(1, Fraction(-3))
    assert nat_values.localized().values is INTEGERS
    nat_values.localized().check(result)


@given(nat_scalars, nat_scalars, nat_scalars)
def test_semiring_laws(x, y, z):
    add, mul = NAT.add, NAT.mul
    assert add(x, y) == add(y, x)
    assert add(add(x, y), z) == add(x, add(y, z))
    assert mul(x, y) == mul(y, x)
    assert mul(mul(x, y), z) == mul(x, mul(y, z))
    assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
    assert mul(x, NAT.one()) == x


@given(nat_scalars, nat_scalars)
def test_nu_bipotence_and_supertropicality(x, y):
    s = NAT.add(x, y)
    assert s.value in (x.value, y.value)
    assert s.layer in (x.layer, y.layer, COUNTING.add(x.layer, y.layer))
    if x.value == y.value:
        assert s.layer == COUNTING.add(x.layer, y.layer)
        assert NAT.nu_equivalent(s, x)
        if x.layer == INF:
            assert s == x


@given(nat_scalars, nat_scalars)
def test_sort_is_multiplicative(x, y):
    assert NAT.mul(x, y).layer == COUNTING.mul(x.layer, y.layer)


@given(nat_scalars, nat_scalars, st.integers(1, 6))
def test_power_identity_splits_along_nu_equivalence(x, y, m):
    lhs = NAT.pow(NAT.add(x, y), m)
    rhs = NAT.add(NAT.pow(x, m), NAT.pow(y, m))
    if x.value != y.value:
        assert lhs == rhs
    assert NAT.surpasses(lhs, rhs)


@given(nat_scalars, nat_scalars, nat_scalars)
def test_surpassing_respects_multiplication(x, y, c):
    if NAT.surpasses(x, y):
        assert NAT.surpasses(NAT.mul(x, c), NAT.mul(y, c))


sup_layers = st.one_of(st.just(1), st.just(INF))
sup_scalars = st.builds(lambda v, l: SUP.scalar(v, l), values, sup_layers)


@given(sup_scalars, sup_scalars, sup_scalars)
def test_surpassing_respects_operations_supertropically(x, y, c):
    if SUP.surpasses(x, y):
        assert SUP.surpasses(SUP.add(x, c), SUP.add(y, c))
        assert SUP.surpasses(SUP.mul(x, c), SUP.mul(y, c))


def test_addition_can_outrun_finite_ghost_surpluses():
    # Over counting layers the additive half of the monotonicity law fails:
    # a tie on the smaller side accumulates layers faster than the fixed
    # ghost surplus on the larger side.  Pinned so the behavior is explicit.
    x, y, c = NAT.scalar(1, 2), NAT.scalar(0, 1), NAT.scalar(0, 1)
    assert NAT.surpasses(x, y)
    assert NAT.add(x, c) == NAT.scalar(1, 2)
    assert NAT.add(y, c) == NAT.scalar(0, 2)
    assert not NAT.surpasses(NAT.add(x, c), NAT.add(y, c))


@given(values, values)
def test_trivial_flavor_order_bridge(u, v):
    a, b = TRIV.scalar(u), TRIV.scalar(v)
    assert TRIV.le(a, b) == (u <= v)
    assert TRIV.add(a, b) in (a, b)


def test_duality_involution_tables():
    rng = random.Random(5)
    double_dual = NAT.dual().dual()
    for _ in range(300):
        x, y = random_scalar(rng, NAT), random_scalar(rng, NAT)
        assert double_dual.add(x, y) == NAT.add(x, y)
        assert double_dual.mul(x, y) == NAT.mul(x, y)


def test_negative_powers_need_tangible_layers():
    assert NAT.pow(NAT.scalar(3), -2) == NAT.scalar(-6)
    with pytest.raises(DomainError):
        NAT.pow(NAT.scalar(3, 2), -1)


def test_empty_sum_is_rejected():
    with pytest.raises(DomainError):
        NAT.sum([])


def test_semiring_factory_names():
    assert semiring("super").sorts is SUPERTROPICAL
    with pytest.raises(DomainError):
        semiring("octonion")
