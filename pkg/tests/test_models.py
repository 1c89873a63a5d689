from fractions import Fraction
from random import Random

import pytest

from defshadow.coeffring import METRIC_SIGNATURE, Momentum, Scalar, metric
from defshadow.models import (
    I_PAIRS,
    LorentzMatrix,
    PoincareElement,
    antisym_element,
    casimirs,
    check_casimir_facts,
    check_contraction_family,
    check_coordinate_cocycle_tensor,
    check_derivation_equivariance,
    check_lorentz_tau_compat,
    check_phase_law,
    check_poincare_group_law,
    check_poincare_relations,
    check_tau_first_order,
    epsilon_square_scalar,
    get_fixture,
    poincare_apply,
    quartic_vector_part,
    standard_matrices,
)
from defshadow.ncalg import AlgebraError

I = Scalar.i()
KAPPA = Scalar.kappa()


def test_fixture_registry(so41, dfr):
    assert get_fixture("example-so41") is so41
    assert get_fixture("dfr-limit") is dfr
    with pytest.raises(KeyError):
        get_fixture("nope")


def test_example_generator_census(so41):
    names = so41.family.generator_names()
    assert len(names) == 14
    assert names[:6] == [f"I{a}{b}" for a, b in I_PAIRS]
    assert all(g.hermitian for g in so41.family.generators)
    assert so41.family.validated


def test_example_commutator_table_spot_checks(so41):
    alg = so41.family
    assert alg.commutator(alg.gen("x0"), alg.gen("L1")) == alg.gen("I01") * (I * KAPPA)
    # disjoint index pairs commute: every metric factor vanishes
    assert alg.commutator(alg.gen("I01"), alg.gen("I23")).is_zero()
    # one shared index: evaluate the four metric terms of the I-I rule
    assert alg.commutator(alg.gen("I01"), alg.gen("I12")) == alg.gen("I02") * (-I)
    assert alg.commutator(alg.gen("x2"), alg.gen("L2")).is_zero()


def test_antisym_element_resolution(so41):
    alg = so41.family
    assert antisym_element("I", 1, 0) == -alg.gen("I01")
    assert antisym_element("I", 2, 2).is_zero()


def test_central_candidates(so41):
    alg = so41.family
    for z in so41.center_candidates:
        ok, _ = alg.is_central(z)
        assert ok


def test_casimirs_central(so41):
    alg = so41.family
    c2, c4 = so41.casimir_elements
    assert alg.is_central(c2)[0]
    assert alg.is_central(c4)[0]


def test_quartic_needs_the_pseudoscalar_completion(so41):
    # the bare metric-square of the epsilon-contracted L-I vector is central
    # only in the parameter-zero member; the completed element is central
    # for symbolic parameter
    alg = so41.family
    bare = quartic_vector_part(alg)
    ok, witnesses = alg.is_central(bare)
    assert not ok
    assert all(res.kappa_coefficient(0).is_zero() for _, res in witnesses)
    alg0 = alg.specialize_kappa(0)
    bare0 = bare.map_coefficients(lambda s: s.substitute({"kappa": Scalar.zero()}))
    assert alg0.is_central(bare0)[0]
    e_sq = epsilon_square_scalar(alg)
    completed = bare + (KAPPA * Scalar.of(Fraction(1, 16))) * alg.multiply(e_sq, e_sq)
    assert alg.is_central(completed)[0]
    assert completed == so41.casimir_elements[1]


def test_casimir_quadratic_zero_limit(so41):
    c2, _ = so41.casimir_elements
    alg = so41.family
    at0 = c2.map_coefficients(lambda s: s.substitute({"kappa": Scalar.zero()}))
    want = alg.zero()
    for a in range(4):
        want = want + (2 * metric(a, a)) * alg.multiply(alg.gen(f"L{a}"), alg.gen(f"L{a}"))
    assert at0 == alg.normal_form(want)
    assert all(r.status == "pass" for r in check_casimir_facts(so41))


def test_casimirs_function_matches_fixture(so41):
    c2, c4 = casimirs(so41.family)
    assert (c2, c4) == so41.casimir_elements


def test_contraction_family(so41):
    results = check_contraction_family(so41)
    assert [r.status for r in results] == ["pass"] * 4
    alg0 = so41.family.specialize_kappa(0)
    assert alg0.commutator(alg0.gen("L0"), alg0.gen("L1")).is_zero()
    alg1 = so41.family.specialize_kappa(1)
    assert alg1.commutator(alg1.gen("L0"), alg1.gen("L1")) == alg1.gen("I01") * I
    alg_m = so41.family.specialize_kappa(-1)
    assert alg_m.commutator(alg_m.gen("L0"), alg_m.gen("L1")) == alg_m.gen("I01") * (-I)


def test_lorentz_matrix_utilities():
    b = LorentzMatrix.boost()
    r = LorentzMatrix.rotation()
    assert (b @ b.inverse()) == LorentzMatrix.identity()
    assert (r.inverse() @ r) == LorentzMatrix.identity()
    with pytest.raises(AlgebraError):
        LorentzMatrix([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    for m in standard_matrices():
        assert m._is_lorentz()
    rng = Random(43)
    for _ in range(10):
        assert random_lorentz_ok(rng)


def random_lorentz_ok(rng):
    from defshadow.models import random_lorentz

    return random_lorentz(rng)._is_lorentz()


def test_momentum_transform_is_left_action():
    k = Momentum.symbolic("k")
    b, r = LorentzMatrix.boost(), LorentzMatrix.rotation()
    assert (b @ r).transform(k) == b.transform(r.transform(k))


def test_poincare_translation_example(so41):
    p = PoincareElement.of(LorentzMatrix.identity(), [1, 0, 0, 0])
    alg = so41.family
    got = poincare_apply(p, alg.gen("x0"), so41)
    assert got == alg.gen("x0") - alg.unit()
    rng = Random(47)
    e = alg.random_element(rng, 2, 3)
    assert poincare_apply(PoincareElement.identity(), e, so41) == alg.normal_form(e)


def test_poincare_relation_preservation(so41):
    assert check_poincare_relations(so41, count=8, seed=5).status == "pass"


def test_poincare_group_law(so41):
    assert check_poincare_group_law(so41, count=6, seed=6).status == "pass"


def test_boost_preserves_coordinate_commutator(so41):
    alg = so41.family
    p = PoincareElement.of(LorentzMatrix.boost(), [0, 0, 0, 0])
    a0 = poincare_apply(p, alg.gen("x0"), so41)
    a1 = poincare_apply(p, alg.gen("x1"), so41)
    want = poincare_apply(p, alg.gen("I01"), so41) * (I * KAPPA)
    assert alg.commutator(a0, a1) == want


def test_derivation_and_twist_compat(so41):
    assert check_derivation_equivariance(so41).status == "pass"
    assert check_lorentz_tau_compat(so41).status == "pass"
    assert check_tau_first_order(so41).status == "pass"


def test_coordinate_cocycle_tensor_transform(so41):
    assert check_coordinate_cocycle_tensor(so41).status == "pass"


def test_phase_law(so41):
    assert check_phase_law(so41).status == "pass"


def test_dfr_fixture(dfr):
    alg = dfr.family
    assert alg.validated
    ok, _ = alg.is_central(alg.gen("Q01"))
    assert ok
    for label, elem in dfr.invariant_scalars:
        assert alg.is_central(elem)[0], label
    # the two invariant scalars in explicit form
    qq = dict(dfr.invariant_scalars)["metric-square"]
    assert qq.coefficient(("Q01", "Q01")) == Scalar.of(-2)
    assert qq.coefficient(("Q12", "Q12")) == Scalar.of(2)
    qe = dict(dfr.invariant_scalars)["epsilon-square"]
    assert qe.coefficient(("Q01", "Q23")) == Scalar.of(8)


def test_dfr_poincare_and_tau(dfr):
    assert check_poincare_relations(dfr, count=6, seed=9).status == "pass"
    assert check_lorentz_tau_compat(dfr).status == "pass"
    assert check_tau_first_order(dfr).status == "pass"


def test_metric_signature_constant():
    assert METRIC_SIGNATURE == (Fraction(-1), Fraction(1), Fraction(1), Fraction(1))
