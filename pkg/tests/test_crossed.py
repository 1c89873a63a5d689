from fractions import Fraction
from random import Random

import pytest

from defshadow.coeffring import Momentum, Scalar
from defshadow.crossed import (
    CocycleData,
    CocycleDomainError,
    CrossedElement,
    TauAction,
    assemble_c,
    check_assemble_consistency,
    check_crossed_product,
    check_gamma_reality_equivariance,
    check_group_cocycle,
    check_lambda_relations,
    check_tau_homomorphism,
    crossed_involution,
    crossed_multiply,
    lambda_value,
)
from defshadow.models import standard_matrices

I = Scalar.i()


def test_tau_gate_on_fixture(so41):
    assert all(r.status == "pass" for r in check_tau_homomorphism(so41.tau))


def test_trivial_tau_passes(dfr):
    assert all(r.status == "pass" for r in check_tau_homomorphism(dfr.tau))


def test_corrupted_tau_fails(so41):
    alg0 = so41.invariant0
    table = dict(so41.tau.table)
    table["I01"] = lambda k: alg0.gen("I01") + k.raised(0) * alg0.gen("L1")
    broken = TauAction(alg0, table)
    statuses = {r.check_id: r.status for r in check_tau_homomorphism(broken)}
    assert statuses["tau/automorphism"] == "fail"


def test_crossed_multiply_twists(so41):
    alg0 = so41.invariant0
    k = Momentum.symbolic("k")
    lhs = crossed_multiply(
        CrossedElement.unit_label(alg0, k),
        CrossedElement.term(alg0.gen("I01"), Momentum.zero()),
        so41.tau,
    )
    want = CrossedElement.term(
        alg0.gen("I01") + k.raised(0) * alg0.gen("L1") - k.raised(1) * alg0.gen("L0"), k
    )
    assert lhs == want


def test_exponential_label_laws(so41):
    alg0 = so41.invariant0
    k = Momentum.symbolic("k")
    uk = CrossedElement.unit_label(alg0, k)
    u_minus = CrossedElement.unit_label(alg0, -k)
    unit = CrossedElement.unit_label(alg0, Momentum.zero())
    assert crossed_multiply(uk, u_minus, so41.tau) == unit
    B = CrossedElement.term(alg0.gen("L2") * I, k) + CrossedElement.term(alg0.unit(), -k)
    assert crossed_multiply(unit, B, so41.tau) == B
    assert crossed_involution(uk, so41.tau) == u_minus
    assert crossed_involution(CrossedElement.term(alg0.unit() * I, Momentum.zero()), so41.tau) == CrossedElement.term(
        alg0.unit() * (-I), Momentum.zero()
    )


def test_crossed_involution_involutive(so41):
    rng = Random(31)
    alg0 = so41.invariant0
    k = Momentum.symbolic("k")
    for _ in range(5):
        A = CrossedElement.term(alg0.random_element(rng, 2, 2), k) + CrossedElement.term(
            alg0.random_element(rng, 2, 2), Momentum.zero()
        )
        assert crossed_involution(crossed_involution(A, so41.tau), so41.tau) == A


def test_crossed_product_axioms(so41, dfr):
    assert all(r.status == "pass" for r in check_crossed_product(so41.tau))
    assert all(r.status == "pass" for r in check_crossed_product(dfr.tau))


def test_group_cocycle_identity(so41, dfr):
    assert check_group_cocycle(so41.data, so41.tau).status == "pass"
    assert check_group_cocycle(dfr.data, dfr.tau).status == "pass"


def test_group_cocycle_zero_gamma(so41):
    data = CocycleData(gamma=lambda k, l: so41.invariant0.zero())
    assert check_group_cocycle(data, so41.tau).status == "pass"


def test_group_cocycle_truncation_fails(so41):
    alg0 = so41.invariant0

    def truncated(k, l):
        out = alg0.zero()
        for a, b in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]:
            out = out + (k[a] * l[b] - k[b] * l[a]) * alg0.gen(f"I{a}{b}")
        return out * (I * Fraction(-1, 2))

    res = check_group_cocycle(CocycleData(gamma=truncated), so41.tau)
    assert res.status == "fail" and res.residual


def test_gamma_reality_and_equivariance(so41):
    results = check_gamma_reality_equivariance(
        so41.data, so41.tau, so41.lorentz, standard_matrices()
    )
    assert {r.check_id: r.status for r in results} == {
        "gamma/reality": "pass",
        "gamma/equivariance": "pass",
    }


def test_gamma_reality_needs_the_twist(so41):
    # conjugating and swapping/negating the momenta without applying the
    # translation twist leaves a nonzero residual
    alg0 = so41.invariant0
    k, l = Momentum.symbolic("k"), Momentum.symbolic("l")
    lhs = alg0.involution(so41.data.gamma(k, l))
    assert lhs != so41.data.gamma(-l, -k)


def test_lambda_relations(so41):
    results = check_lambda_relations(so41.data, so41.tau, so41.lorentz, standard_matrices())
    assert all(r.status == "pass" for r in results)


def test_lambda_relations_without_lorentz(so41):
    results = {r.check_id: r.status for r in check_lambda_relations(so41.data, so41.tau)}
    assert results["lambda/equivariance"] == "not-applicable"
    assert results["mixed/gamma-commutator"] == "pass"


def test_lambda_twist_identity_detects_wrong_c_i(so41):
    # the misprint value -1/2 I (instead of i/2 I) cannot satisfy the twist
    # identity on reversed pairs for any extension of lambda
    alg0 = so41.invariant0
    table = {}
    for a in range(4):
        for b in range(4):
            if a == b:
                table[(f"L{a}", f"L{b}")] = alg0.zero()
            else:
                sign = 1 if a < b else -1
                name = f"I{min(a,b)}{max(a,b)}"
                table[(f"L{a}", f"L{b}")] = alg0.gen(name) * Scalar.rational(-sign, 2)
    bad = CocycleData(gamma=so41.data.gamma, lam=so41.data.lam, c_i=table)
    results = {r.check_id: r.status for r in check_lambda_relations(bad, so41.tau)}
    assert results["mixed/invariant-cocycle-twist"] == "fail"


def test_lambda_value_linear_and_normalized(so41):
    alg0 = so41.invariant0
    k = Momentum.symbolic("k")
    assert lambda_value(so41.data, so41.tau, alg0.unit(), k).is_zero()
    l0, l1 = alg0.gen("L0"), alg0.gen("L1")
    s = Scalar.rational(3, 7)
    assert lambda_value(so41.data, so41.tau, l0 * s + l1, k) == lambda_value(
        so41.data, so41.tau, l0, k
    ) * s + lambda_value(so41.data, so41.tau, l1, k)


def test_lambda_value_outside_domain_rejected(so41):
    k = Momentum.symbolic("k")
    with pytest.raises(CocycleDomainError):
        lambda_value(so41.data, so41.tau, so41.invariant0.gen("I01"), k)


def test_assemble_c_degenerate_rows(so41):
    alg0 = so41.invariant0
    k, l = Momentum.symbolic("k"), Momentum.symbolic("l")
    one = alg0.unit()
    got = assemble_c(so41.data, so41.tau, one, k, l, one)
    assert got == CrossedElement.term(so41.data.gamma(k, l), k + l)
    z = Momentum.zero()
    f, g = alg0.gen("L0"), alg0.gen("L3")
    got = assemble_c(so41.data, so41.tau, f, z, z, g)
    assert got == CrossedElement.term(so41.data.c_i_value(f, g, alg0), z)


def test_assemble_c_matches_rearrangement_oracle(so41):
    # independent oracle: expanding the defining identity of the mixed
    # cochain gives c(f u(k), u(l)) = [f gamma + lam(f,k+l) - lam(f,k)] u(k+l)
    alg0 = so41.invariant0
    k, l = Momentum.symbolic("k"), Momentum.symbolic("l")
    f = alg0.gen("L2")
    got = assemble_c(so41.data, so41.tau, f, k, l, alg0.unit())
    expected = (
        alg0.multiply(f, so41.data.gamma(k, l))
        + lambda_value(so41.data, so41.tau, f, k + l)
        - lambda_value(so41.data, so41.tau, f, k)
    )
    assert got == CrossedElement.term(expected, k + l)
    assert check_assemble_consistency(so41.data, so41.tau).status == "pass"


def test_assemble_c_missing_data_rejected(so41):
    k, l = Momentum.symbolic("k"), Momentum.symbolic("l")
    incomplete = CocycleData(gamma=so41.data.gamma)
    with pytest.raises(CocycleDomainError, match="lambda"):
        assemble_c(incomplete, so41.tau, so41.invariant0.unit(), k, l, so41.invariant0.unit())


def test_dfr_crossed_checks_not_applicable(dfr):
    results = {r.check_id: r.status for r in check_lambda_relations(dfr.data, dfr.tau)}
    assert results == {"lambda/relations": "not-applicable"}
    # central-valued gamma with trivial twist: commutators with gamma vanish
    alg0 = dfr.invariant0
    k, l = Momentum.symbolic("k"), Momentum.symbolic("l")
    assert alg0.commutator(alg0.gen("Q01"), dfr.data.gamma(k, l)).is_zero()
