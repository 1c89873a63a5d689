from pathlib import Path
from random import Random

import pytest

from defshadow.coeffring import Momentum, Scalar
from defshadow.dsl import (
    AlgebraDocument,
    DslError,
    build_fixture,
    parse_document,
    print_document,
)
from defshadow.ncalg import Element

DATA = Path(__file__).resolve().parents[1] / "src" / "defshadow" / "data"
I = Scalar.i()
KAPPA = Scalar.kappa()

MINI = """
algebra mini
generators I01 L0 L1 x0 x1
family I antisym I01 I01 I01 I01 I01 I01
relations
  [x1, x0] = -i*kappa*I01
end
"""


def test_relation_normalizes_to_decreasing_pair():
    doc = parse_document(MINI)
    assert ("x1", "x0") in doc.relations
    # [x1, x0] = -i kappa I01 means [x0, x1] = +i kappa I01
    assert doc.relations[("x1", "x0")] == Element({("I01",): -I * KAPPA})
    fix = build_fixture(doc)
    alg = fix.family
    assert alg.commutator(alg.gen("x0"), alg.gen("x1")) == alg.gen("I01") * (I * KAPPA)


def test_metric_constants_reduce():
    text = """
algebra metric-demo
generators L0 L1 I01
relations
  [L0, I01] = i*(g(0,1)*L0 - g(0,0)*L1)
end
"""
    doc = parse_document(text)
    # stored for the decreasing pair (I01 listed after L0? no: order L0 L1 I01)
    assert doc.relations[("I01", "L0")] == Element({("L1",): -I})
    fix = build_fixture(doc)
    alg = fix.family
    assert alg.commutator(alg.gen("L0"), alg.gen("I01")) == alg.gen("L1") * I


def test_empty_relation_block_is_commutative():
    doc = parse_document("algebra free\ngenerators a b c\nrelations\nend\n")
    fix = build_fixture(doc)
    assert fix.family.check_associativity().ok
    assert fix.family.multiply(fix.family.gen("c"), fix.family.gen("a")) == Element(
        {("a", "c"): Scalar.one()}
    )


def test_parse_errors_carry_positions():
    with pytest.raises(DslError, match="line 4"):
        parse_document("algebra t\ngenerators a b\nrelations\n  [a, b] = $$\nend\n")
    with pytest.raises(DslError, match="unknown symbol"):
        parse_document("algebra t\ngenerators a b\nrelations\n  [a, b] = qq7\nend\n")
    with pytest.raises(DslError, match="duplicate relation"):
        parse_document(
            "algebra t\ngenerators a b c\nrelations\n  [a, b] = c\n  [b, a] = c\nend\n"
        )
    with pytest.raises(DslError, match="swap-plus-lower"):
        parse_document(
            "algebra t\ngenerators a b\nrelations\n  [b, a] = b*b\nend\n"
        )
    with pytest.raises(DslError, match="longer than 2"):
        parse_document(
            "algebra t\ngenerators a b\nrelations\n  [b, a] = a*a*a\nend\n"
        )


def test_foreach_and_sum_expansion():
    text = """
algebra spans
generators q0 q1 q2 q3 p
relations
  foreach a where a < 2 : [p, q{a}] = sum(c: g({a},{c})*kappa*q{c})
end
"""
    doc = parse_document(text)
    assert doc.relations[("p", "q0")] == Element({("q0",): -KAPPA})
    assert doc.relations[("p", "q1")] == Element({("q1",): KAPPA})


def test_shipped_documents_round_trip():
    for name in (
        "example-so41",
        "dfr-limit",
        "corrupted-tau",
        "truncated-gamma",
        "non-jacobi",
    ):
        text = (DATA / f"{name}.alg").read_text()
        doc = parse_document(text)
        printed = print_document(doc)
        doc2 = parse_document(printed)
        assert doc2 == doc, name
        assert print_document(doc2) == printed, name


def _random_document(rng: Random) -> str:
    n = rng.randint(2, 4)
    gens = [f"g{i}" for i in range(n)]
    lines = [f"algebra rnd{rng.randint(0, 999)}", "generators " + " ".join(gens), "relations"]
    for lo in range(n):
        for hi in range(lo + 1, n):
            if rng.random() < 0.5:
                continue
            coef = rng.choice(["1", "-1", "1/2", "i", "-3/4*i", "kappa", "i*kappa"])
            target = rng.choice(gens[:hi] + ["1"])
            rhs = coef if target == "1" else f"{coef}*{target}"
            lines.append(f"  [{gens[hi]}, {gens[lo]}] = {rhs}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def test_randomized_documents_round_trip():
    rng = Random(53)
    for _ in range(25):
        text = _random_document(rng)
        doc = parse_document(text)
        printed = print_document(doc)
        assert parse_document(printed) == doc
        assert print_document(parse_document(printed)) == printed


def test_document_fixture_matches_builtin(so41):
    text = (DATA / "example-so41.alg").read_text()
    fix = build_fixture(parse_document(text))
    assert fix.family.generator_names() == so41.family.generator_names()
    got = {k: v.correction for k, v in fix.family.rules.items()}
    want = {k: v.correction for k, v in so41.family.rules.items()}
    assert got == want
    k, l = Momentum.symbolic("k"), Momentum.symbolic("l")
    for name in so41.invariant0.generator_names():
        assert fix.tau.apply(fix.invariant0.gen(name), k) == so41.tau.apply(
            so41.invariant0.gen(name), k
        )
    assert fix.data.gamma(k, l) == so41.data.gamma(k, l)
    for name, fn in so41.data.lam.items():
        assert fix.data.lam[name](k) == fn(k)
    assert callable(fix.data.c_i)


def test_antisym_reference_resolution():
    doc = parse_document(MINI.replace("-i*kappa*I01", "i*kappa*I10"))
    # I10 resolves to -I01
    assert doc.relations[("x1", "x0")] == Element({("I01",): -I * KAPPA})
    doc = parse_document(MINI.replace("-i*kappa*I01", "i*kappa*I00 + 0"))
    assert doc.relations[("x1", "x0")].is_zero()


def test_conj_in_expressions():
    text = """
algebra conj-demo
generators a b
relations
  [b, a] = conj(i*a)
end
"""
    doc = parse_document(text)
    assert doc.relations[("b", "a")] == Element({("a",): -I})


def test_document_equality_is_structural():
    d1 = parse_document(MINI)
    d2 = parse_document(MINI)
    assert d1 == d2 and isinstance(d1, AlgebraDocument)
