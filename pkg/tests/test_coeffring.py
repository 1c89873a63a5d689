from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defshadow.coeffring import (
    CoefficientError,
    GaussianRational,
    Momentum,
    Scalar,
    epsilon,
    metric,
    minkowski_dot,
    momentum_substitute,
    momentum_symbol,
    scalar_conj,
    scalar_mul,
)
from defshadow.models import LorentzMatrix

K0 = momentum_symbol("k0")
K1 = momentum_symbol("k1")
L1 = momentum_symbol("l1")

rationals = st.builds(
    Fraction, st.integers(min_value=-9, max_value=9), st.integers(min_value=1, max_value=4)
)


@st.composite
def scalars(draw):
    out = Scalar.of(GaussianRational(draw(rationals), draw(rationals)))
    for _ in range(draw(st.integers(0, 2))):
        sym = draw(st.sampled_from([Scalar.kappa(), K0, K1, L1]))
        coef = Scalar.of(GaussianRational(draw(rationals), draw(rationals)))
        out = out + coef * sym ** draw(st.integers(1, 2))
    return out


def test_gaussian_norm():
    one_plus = Scalar.one() + Scalar.i()
    one_minus = Scalar.one() - Scalar.i()
    assert scalar_mul(one_plus, one_minus) == Scalar.of(2)


def test_kappa_commutes_with_momenta():
    assert Scalar.kappa() * K0 == K0 * Scalar.kappa()


def test_binomial_expansion():
    got = (Scalar.kappa() + K1) ** 2
    want = Scalar.kappa() ** 2 + Scalar.of(2) * Scalar.kappa() * K1 + K1**2
    assert got == want


def test_conjugation_examples():
    assert scalar_conj(Scalar.i() * Scalar.kappa()) == -Scalar.i() * Scalar.kappa()
    assert scalar_conj(Scalar.rational(3, 4)) == Scalar.rational(3, 4)


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars())
def test_conjugation_is_involutive_homomorphism(a, b):
    assert scalar_conj(scalar_conj(a)) == a
    assert scalar_conj(a * b) == scalar_conj(a) * scalar_conj(b)
    assert scalar_conj(a + b) == scalar_conj(a) + scalar_conj(b)


@settings(max_examples=40, deadline=None)
@given(scalars(), scalars())
def test_substitution_commutes_with_ring_ops(a, b):
    binding = {"k0": K1 + Scalar.one(), "k1": Scalar.of(Fraction(1, 2))}
    assert momentum_substitute(a * b, binding) == momentum_substitute(
        a, binding
    ) * momentum_substitute(b, binding)
    assert momentum_substitute(a + b, binding) == momentum_substitute(
        a, binding
    ) + momentum_substitute(b, binding)


def test_substitute_momentum_to_zero():
    assert momentum_substitute(Scalar.kappa() * K0, {"k0": Scalar.zero()}).is_zero()


def test_substitute_shift():
    got = momentum_substitute(K1**2, {"k1": K1 + L1})
    assert got == K1**2 + Scalar.of(2) * K1 * L1 + L1**2


def test_substitute_rejects_unknown_symbol():
    with pytest.raises(CoefficientError):
        momentum_substitute(K0, {"zz9": Scalar.one()})
    with pytest.raises(CoefficientError):
        momentum_substitute(K0, {"kappa": Scalar.zero()})


def test_boost_image_of_covariant_component():
    # independent oracle: (L k)_0 = k_n (L^{-1})^n_0 with the (5/4, 3/4)
    # boost whose inverse is [[5/4, -3/4], [-3/4, 5/4]] in the 0-1 block
    k = Momentum.symbolic("k")
    moved = LorentzMatrix.boost(axis=1).transform(k)
    assert moved[0] == Scalar.of(Fraction(5, 4)) * k[0] - Scalar.of(Fraction(3, 4)) * k[1]
    assert moved[2] == k[2]


def test_metric_and_epsilon():
    assert metric(0, 0) == Fraction(-1)
    assert metric(1, 1) == metric(2, 2) == metric(3, 3) == Fraction(1)
    assert metric(0, 1) == 0
    assert epsilon(0, 1, 2, 3) == 1
    assert epsilon(1, 0, 2, 3) == -1
    assert epsilon(0, 0, 2, 3) == 0


def test_momentum_arithmetic():
    k = Momentum.symbolic("k")
    l = Momentum.symbolic("l")
    assert (k + l) - l == k
    assert (-k + k).is_zero()
    assert Momentum.zero().is_zero()
    dot = minkowski_dot(k, l)
    assert dot == -k[0] * l[0] + k[1] * l[1] + k[2] * l[2] + k[3] * l[3]
    assert k.raised(0) == -k[0]
    assert k.raised(2) == k[2]


def test_momentum_hashable_label():
    k = Momentum.symbolic("k")
    assert {k: 1}[Momentum.symbolic("k")] == 1


def test_scalar_string_is_canonical():
    s = -Scalar.rational(1, 2) * Scalar.i() * K0 + Scalar.one()
    assert str(s) == "1 - 1/2*i*k0"
