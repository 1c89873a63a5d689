"""Double complex of algebra/momentum cochains.

A :class:`Cochain` of bidegree (r, s) evaluates on r invariant-algebra
elements and s momenta.  Two anticommuting differentials act on them: the
Hochschild differential in the algebra slots and the twisted dual-group
differential in the momentum slots, the latter carrying the sign (-1)^r
calibrated so that on (0,2)-cochains it reproduces the group-cocycle
combination verbatim.  Cochains are evaluator objects, so identities are
verified pointwise on generator tuples with fully symbolic momenta, which
is a proof for the tested arguments because everything is polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .coeffring import Momentum, fresh_momentum_base
from .crossed import CocycleData, CocycleDomainError, TauAction, lambda_value
from .ncalg import Algebra, Element
from .reporting import CheckResult


@dataclass
class Cochain:
    """Evaluable (r, s)-bidegree cochain with values in the invariant algebra."""

    r: int
    s: int
    algebra: Algebra
    tau: TauAction | None
    fn: Callable[[tuple[Element, ...], tuple[Momentum, ...]], Element]

    def __call__(self, elements: Sequence[Element], momenta: Sequence[Momentum]) -> Element:
        elements = tuple(elements)
        momenta = tuple(momenta)
        if len(elements) != self.r or len(momenta) != self.s:
            raise ValueError(
                f"cochain of bidegree ({self.r},{self.s}) called with "
                f"({len(elements)},{len(momenta)}) arguments"
            )
        return self.fn(elements, momenta)


def gamma_cochain(data: CocycleData, tau: TauAction) -> Cochain:
    return Cochain(0, 2, tau.algebra, tau, lambda es, ks: data.gamma(ks[0], ks[1]))


def lambda_cochain(data: CocycleData, tau: TauAction) -> Cochain:
    return Cochain(1, 1, tau.algebra, tau, lambda es, ks: lambda_value(data, tau, es[0], ks[0]))


def c_i_cochain(data: CocycleData, tau: TauAction) -> Cochain:
    return Cochain(
        2, 0, tau.algebra, tau, lambda es, ks: data.c_i_value(es[0], es[1], tau.algebra)
    )


def hochschild_diff(omega: Cochain) -> Cochain:
    """Standard Hochschild differential in the algebra slots (momentum
    slots untouched); products are taken in the cochain's algebra."""
    alg = omega.algebra
    r = omega.r

    def fn(es, ks):
        out = alg.multiply(es[0], omega(es[1:], ks))
        for i in range(r):
            # inner face with sign (-1)^(i+1)
            merged = es[:i] + (alg.multiply(es[i], es[i + 1]),) + es[i + 2 :]
            term = omega(merged, ks)
            out = out - term if i % 2 == 0 else out + term
        tail = alg.multiply(omega(es[:-1], ks), es[r])
        out = out + tail if (r + 1) % 2 == 0 else out - tail
        return out

    return Cochain(r + 1, omega.s, alg, omega.tau, fn)


def _twisted(omega: Cochain, k: Momentum, es, ks) -> Element:
    """(tau_k . omega)(f_1..f_r; ks) = tau_k(omega(tau_{-k} f_i; ks))."""
    tau = omega.tau
    moved = tuple(tau.apply(e, -k) for e in es)
    return tau.apply(omega(moved, ks), k)


def group_diff(omega: Cochain) -> Cochain:
    """Twisted simplicial differential in the momentum slots, with the
    overall sign (-1)^r, so the (0,3) component is the group-cocycle
    combination verbatim."""
    if omega.tau is None:
        raise ValueError("group differential needs a tau action")
    r, s = omega.r, omega.s
    negate = r % 2 == 1

    def fn(es, ks):
        out = _twisted(omega, ks[0], es, ks[1:])
        for i in range(1, s + 1):
            # inner face with sign (-1)^i: adjacent momenta added
            merged = ks[: i - 1] + (ks[i - 1] + ks[i],) + ks[i + 1 :]
            term = omega(es, merged)
            out = out - term if i % 2 == 1 else out + term
        tail = omega(es, ks[:-1])
        out = out + tail if (s + 1) % 2 == 0 else out - tail
        return -out if negate else out

    return Cochain(r, s + 1, omega.algebra, omega.tau, fn)


def _symbolic_momenta(n: int, hint: str) -> tuple[Momentum, ...]:
    return tuple(Momentum.symbolic(fresh_momentum_base(hint)) for _ in range(n))


def _tuple_pool(alg: Algebra, names: Sequence[str], arity: int):
    gens = [alg.gen(n) for n in names]
    return itertools.product(gens, repeat=arity)


def check_bicomplex_axioms(
    samples: Sequence[tuple[str, Cochain, Sequence[str]]],
) -> list[CheckResult]:
    """delta^2 = 0 for both differentials and their anticommutator,
    pointwise on generator tuples drawn from each sample's name pool."""
    results = []
    for label, omega, pool in samples:
        alg = omega.algebra
        checks = [
            ("d10-squared", hochschild_diff(hochschild_diff(omega))),
            ("d01-squared", group_diff(group_diff(omega))),
        ]
        anti_a = hochschild_diff(group_diff(omega))
        anti_b = group_diff(hochschild_diff(omega))
        for name, square in checks:
            residual = ""
            ok = True
            try:
                ks = _symbolic_momenta(square.s, "bx")
                for es in _tuple_pool(alg, pool, square.r):
                    val = square(es, ks)
                    if not val.is_zero():
                        ok = False
                        residual = alg.format(val)
                        break
            except CocycleDomainError as exc:
                results.append(
                    CheckResult.not_applicable(f"bicomplex/{name}[{label}]", str(exc))
                )
                continue
            results.append(
                CheckResult.passed(f"bicomplex/{name}[{label}]")
                if ok
                else CheckResult.failed(f"bicomplex/{name}[{label}]", residual)
            )
        residual = ""
        ok = True
        try:
            ks = _symbolic_momenta(anti_a.s, "ba")
            for es in _tuple_pool(alg, pool, anti_a.r):
                val = anti_a(es, ks) + anti_b(es, ks)
                if not val.is_zero():
                    ok = False
                    residual = alg.format(val)
                    break
        except CocycleDomainError as exc:
            results.append(
                CheckResult.not_applicable(f"bicomplex/anticommutator[{label}]", str(exc))
            )
            continue
        results.append(
            CheckResult.passed(f"bicomplex/anticommutator[{label}]")
            if ok
            else CheckResult.failed(f"bicomplex/anticommutator[{label}]", residual)
        )
    return results


def check_total_cocycle(
    data: CocycleData,
    tau: TauAction,
    invariant_names: Sequence[str],
    lambda_names: Sequence[str] | None = None,
) -> list[CheckResult]:
    """The four bidegree components of the total differential of
    (c^I + lambda + gamma), each an exact identity on generator tuples:

      (3,0)  Hochschild cocycle identity for c^I  (all invariant triples)
      (2,1)  twist identity tying c^I to lambda   (supplied pairs)
      (1,2)  commutator identity tying lambda to gamma (supplied generators)
      (0,3)  group-cocycle identity for gamma     (three symbolic momenta)
    """
    alg = tau.algebra
    if lambda_names is None:
        lambda_names = data.lambda_domain
    results = []

    if not data.has_c_i():
        results.append(CheckResult.not_applicable("total/(3,0)", "no c^I supplied"))
    else:
        d = hochschild_diff(c_i_cochain(data, tau))
        residual = ""
        bad = 0
        total = 0
        try:
            for es in _tuple_pool(alg, invariant_names, 3):
                total += 1
                val = d(es, ())
                if not val.is_zero():
                    bad += 1
                    residual = residual or alg.format(val)
            results.append(
                CheckResult.failed("total/(3,0)", residual, f"{bad}/{total} triples fail")
                if bad
                else CheckResult.passed("total/(3,0)", f"{total} triples")
            )
        except CocycleDomainError as exc:
            results.append(CheckResult.not_applicable("total/(3,0)", str(exc)))

    if not (data.has_c_i() and data.has_lambda()):
        results.append(CheckResult.not_applicable("total/(2,1)", "needs c^I and lambda"))
    else:
        d = group_diff(c_i_cochain(data, tau))
        h = hochschild_diff(lambda_cochain(data, tau))
        residual = ""
        bad = 0
        try:
            ks = _symbolic_momenta(1, "t21")
            for es in _tuple_pool(alg, lambda_names, 2):
                val = d(es, ks) + h(es, ks)
                if not val.is_zero():
                    bad += 1
                    residual = residual or alg.format(val)
            results.append(
                CheckResult.failed("total/(2,1)", residual, f"{bad} pairs fail")
                if bad
                else CheckResult.passed("total/(2,1)")
            )
        except CocycleDomainError as exc:
            results.append(CheckResult.not_applicable("total/(2,1)", str(exc)))

    if not (data.has_lambda() and data.gamma is not None):
        results.append(CheckResult.not_applicable("total/(1,2)", "needs lambda and gamma"))
    else:
        d = group_diff(lambda_cochain(data, tau))
        h = hochschild_diff(gamma_cochain(data, tau))
        residual = ""
        bad = 0
        try:
            ks = _symbolic_momenta(2, "t12")
            for es in _tuple_pool(alg, lambda_names, 1):
                val = d(es, ks) + h(es, ks)
                if not val.is_zero():
                    bad += 1
                    residual = residual or alg.format(val)
            results.append(
                CheckResult.failed("total/(1,2)", residual, f"{bad} generators fail")
                if bad
                else CheckResult.passed("total/(1,2)")
            )
        except CocycleDomainError as exc:
            results.append(CheckResult.not_applicable("total/(1,2)", str(exc)))

    if data.gamma is None:
        results.append(CheckResult.not_applicable("total/(0,3)", "no gamma supplied"))
    else:
        d = group_diff(gamma_cochain(data, tau))
        ks = _symbolic_momenta(3, "t03")
        val = d((), ks)
        results.append(
            CheckResult.passed("total/(0,3)")
            if val.is_zero()
            else CheckResult.failed("total/(0,3)", alg.format(val))
        )
    return results


def check_normalization_preserved(data: CocycleData, tau: TauAction) -> CheckResult:
    """Both differentials keep cochains normalized: inserting the unit in an
    algebra slot or the zero momentum in a group slot kills the value."""
    alg = tau.algebra
    if data.gamma is None or not data.has_lambda():
        return CheckResult.not_applicable("bicomplex/normalization", "incomplete data")
    k = Momentum.symbolic(fresh_momentum_base("nz"))
    lam_names = data.lambda_domain
    f = alg.gen(lam_names[0])
    d_gamma = hochschild_diff(gamma_cochain(data, tau))
    g_lam = group_diff(lambda_cochain(data, tau))
    vals = [
        d_gamma((alg.unit(),), (k, Momentum.zero())),
        d_gamma((alg.unit(),), (Momentum.zero(), k)),
        g_lam((alg.unit(),), (k, -k)),
        g_lam((f,), (Momentum.zero(), k)),
        g_lam((f,), (k, Momentum.zero())),
    ]
    for v in vals:
        if not v.is_zero():
            return CheckResult.failed("bicomplex/normalization", alg.format(v))
    return CheckResult.passed("bicomplex/normalization")
