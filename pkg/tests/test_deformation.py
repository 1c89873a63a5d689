from fractions import Fraction
from random import Random

import pytest

from defshadow.coeffring import Scalar
from defshadow.deformation import (
    DeformationError,
    bracket,
    check_center_structure,
    check_extraction_consistency,
    check_hochschild_cocycle,
    check_reality_c,
    extract_c,
    from_symmetric_coords,
    multiply_at_zero,
    symmetric_bracket,
    symmetric_cocycle,
    symmetrized_word,
    to_symmetric_coords,
)

I = Scalar.i()
HALF_I = Scalar.i() * Fraction(1, 2)


def test_extract_c_examples(so41):
    alg = so41.family
    # x0*x1 is already a basis word, so no first-order term appears
    assert extract_c(alg.gen("x0"), alg.gen("x1"), alg).is_zero()
    # x1*x0 = x0*x1 - i kappa I01: the first-order coefficient is -i I01
    assert extract_c(alg.gen("x1"), alg.gen("x0"), alg) == alg.gen("I01") * (-I)


def test_extract_c_normalized_and_bilinear(so41):
    alg = so41.family
    rng = Random(23)
    f = alg.random_element(rng, max_len=2, n_terms=3)
    assert extract_c(alg.unit(), f, alg).is_zero()
    assert extract_c(f, alg.unit(), alg).is_zero()
    g = alg.random_element(rng, max_len=2, n_terms=3)
    h = alg.random_element(rng, max_len=2, n_terms=2)
    s = Scalar.rational(2, 3)
    assert extract_c(f * s + g, h, alg) == extract_c(f, h, alg) * s + extract_c(g, h, alg)


def test_extract_c_rejects_kappa_laden_input(so41):
    alg = so41.family
    with pytest.raises(DeformationError):
        extract_c(alg.gen("x0") * Scalar.kappa(), alg.gen("x1"), alg)


def test_bracket_values(so41):
    alg = so41.family
    assert bracket(alg.gen("x0"), alg.gen("x1"), alg) == -alg.gen("I01")
    f = alg.random_element(Random(5), max_len=2, n_terms=3)
    assert bracket(f, f, alg).is_zero()


def test_bracket_of_central_pair_lands_in_center(so41):
    alg = so41.family
    z0 = alg.gen("x0") - alg.gen("L0")
    z1 = alg.gen("x1") - alg.gen("L1")
    b = bracket(z0, z1, alg)
    ok, _ = alg.specialize_kappa(0).is_central(b)
    assert ok
    # independent oracle: the commutator of these central elements vanishes
    # identically in the family, so the first-order part must be zero
    assert alg.commutator(z0, z1).is_zero()
    assert b.is_zero()


def test_hochschild_cocycle_identity_generators(so41):
    alg = so41.family
    subset = [alg.gen(n) for n in ("x0", "x1", "L0", "I01")]
    assert check_hochschild_cocycle(alg, subset).status == "pass"


def test_hochschild_cocycle_identity_with_unit(so41):
    alg = so41.family
    subset = [alg.unit(), alg.gen("x2"), alg.gen("I12")]
    assert check_hochschild_cocycle(alg, subset).status == "pass"


def test_extraction_consistency(so41):
    assert check_extraction_consistency(so41.family).status == "pass"


def test_center_structure(so41):
    results = check_center_structure(so41.family, so41.center_candidates, so41.probes)
    assert all(r.status == "pass" for r in results)


def test_center_structure_flags_noncentral_candidate(so41):
    alg = so41.family
    results = check_center_structure(alg, [alg.gen("x0")], so41.probes)
    assert results[0].status == "fail"


def test_center_structure_unit_candidate(so41):
    alg = so41.family
    results = check_center_structure(alg, [alg.unit()], [alg.gen("x0"), alg.gen("I01")])
    assert all(r.status == "pass" for r in results)
    assert symmetric_bracket(alg.unit(), alg.gen("x0"), alg).is_zero()


def test_reality(so41):
    alg = so41.family
    elements = [alg.gen(n) for n in ("x0", "x1", "x2", "x3", "L0", "L1", "L2", "L3")]
    assert all(r.status == "pass" for r in check_reality_c(alg, elements))


def test_symmetric_cocycle_values(so41):
    # the involution-compatible identification gives (i/2) I on coordinate
    # and L pairs; the engine derives this, it is not hard-coded
    alg = so41.family
    for a, b in [("x0", "x1"), ("L0", "L1"), ("x2", "x3")]:
        pair = f"I{a[1]}{b[1]}"
        assert symmetric_cocycle(alg.gen(a), alg.gen(b), alg) == alg.gen(pair) * HALF_I
        assert symmetric_cocycle(alg.gen(b), alg.gen(a), alg) == alg.gen(pair) * (-HALF_I)
    assert symmetric_cocycle(alg.gen("x0"), alg.gen("x0"), alg).is_zero()


def test_symmetric_cocycle_is_hochschild_cocycle(so41):
    alg = so41.family
    gens = [alg.gen(n) for n in ("x0", "L1", "I01", "I23")]
    for f in gens:
        for g in gens:
            for h in gens:
                res = (
                    multiply_at_zero(alg, f, symmetric_cocycle(g, h, alg))
                    - symmetric_cocycle(multiply_at_zero(alg, f, g), h, alg)
                    + symmetric_cocycle(f, multiply_at_zero(alg, g, h), alg)
                    - multiply_at_zero(alg, symmetric_cocycle(f, g, alg), h)
                )
                assert res.is_zero()


def test_brackets_agree_on_generator_pairs(so41):
    alg = so41.family
    names = alg.generator_names()
    for a in names[:6]:
        for b in names[6:]:
            fa, fb = alg.gen(a), alg.gen(b)
            assert bracket(fa, fb, alg) == symmetric_bracket(fa, fb, alg)


def test_symmetric_coords_round_trip(so41):
    alg = so41.family
    rng = Random(29)
    for _ in range(6):
        e = alg.random_element(rng, max_len=3, n_terms=3, kappa_free=False)
        e = alg.normal_form(e)
        coords = to_symmetric_coords(alg, e)
        assert from_symmetric_coords(alg, coords) == e
    # leading coefficient of a symmetrized word is the sorted word itself
    w = ("L0", "L1")
    sym = symmetrized_word(alg, w)
    assert sym.coefficient(w) == Scalar.one()


def test_normal_word_cocycle_is_not_star_real(so41):
    # the normal-word identification does not commute with the involution:
    # c(x1, x0)* = +i I01 while c(x0*, x1*) = 0; only the symmetric-basis
    # cocycle satisfies the reality law (see check_reality_c)
    alg = so41.family
    alg0 = alg.specialize_kappa(0)
    lhs = alg0.involution(extract_c(alg.gen("x1"), alg.gen("x0"), alg))
    rhs = extract_c(alg.gen("x0"), alg.gen("x1"), alg)
    assert lhs != rhs
