"""Crossed product of the translation-invariant algebra with its dual group.

Exponential generators are carried as momentum labels: a
:class:`CrossedElement` is a finite sum of (invariant element, label) pairs
subject to u(k) f = tau_k(f) u(k) and u(k) u(l) = u(k+l).  The module also
verifies the closed-form cocycle web attached to such a presentation: the
dual-group 2-cocycle gamma, the mixed 1-cochain lambda, the invariant
2-cochain c^I, and the identities tying them together.

All momentum arguments may be fully symbolic; every check is an exact
polynomial identity in the momentum components.
"""

from __future__ import annotations

import itertools
from typing import Callable, Mapping, Sequence

from .coeffring import Momentum, Scalar, fresh_momentum_base
from .ncalg import Algebra, Element
from .reporting import CheckResult

_I = Scalar.i()


class CocycleDomainError(ValueError):
    """Cocycle data was asked for a value outside its supplied domain."""


class TauAction:
    """Action of the dual translation group on the invariant algebra.

    ``table`` maps each generator of ``algebra`` (the kappa = 0 invariant
    algebra) to its image under tau_k as a function of the momentum k; the
    action extends multiplicatively to words and linearly to elements.
    """

    def __init__(self, algebra: Algebra, table: Mapping[str, Callable[[Momentum], Element]]):
        self.algebra = algebra
        self.table = dict(table)
        missing = [g.name for g in algebra.generators if g.name not in self.table]
        if missing:
            raise CocycleDomainError(f"tau table misses generators: {missing}")

    def apply(self, e: Element, k: Momentum) -> Element:
        out = self.algebra.zero()
        for w, c in e.terms():
            if w:
                img = self.algebra.multiply(*(self.table[name](k) for name in w))
            else:
                img = self.algebra.unit()
            out = out + img * c
        return out


def check_tau_homomorphism(tau: TauAction, check_prefix: str = "tau") -> list[CheckResult]:
    """Gate for a tau action: identity at zero momentum, group law with
    symbolic momenta, product rule on generator pairs, star compatibility."""
    alg = tau.algebra
    results = []
    zero = Momentum.zero()
    k = Momentum.symbolic(fresh_momentum_base("tk"))
    l = Momentum.symbolic(fresh_momentum_base("tl"))

    bad = [
        g.name
        for g in alg.generators
        if tau.apply(alg.gen(g.name), zero) != alg.gen(g.name)
    ]
    results.append(
        CheckResult.failed(f"{check_prefix}/identity-at-zero", "", f"fails on {bad}")
        if bad
        else CheckResult.passed(f"{check_prefix}/identity-at-zero")
    )

    residual = ""
    bad = []
    for g in alg.generators:
        e = alg.gen(g.name)
        lhs = tau.apply(tau.apply(e, l), k)
        rhs = tau.apply(e, k + l)
        if lhs != rhs:
            bad.append(g.name)
            residual = residual or alg.format(lhs - rhs)
    results.append(
        CheckResult.failed(f"{check_prefix}/homomorphism", residual, f"fails on {bad}")
        if bad
        else CheckResult.passed(f"{check_prefix}/homomorphism")
    )

    residual = ""
    bad = []
    for g1, g2 in itertools.product(alg.generators, repeat=2):
        a, b = alg.gen(g1.name), alg.gen(g2.name)
        lhs = tau.apply(alg.multiply(a, b), k)
        rhs = alg.multiply(tau.apply(a, k), tau.apply(b, k))
        if lhs != rhs:
            bad.append(f"({g1.name},{g2.name})")
            residual = residual or alg.format(lhs - rhs)
    results.append(
        CheckResult.failed(f"{check_prefix}/automorphism", residual, f"fails on {bad[:4]}")
        if bad
        else CheckResult.passed(f"{check_prefix}/automorphism")
    )

    residual = ""
    bad = []
    for g in alg.generators:
        e = alg.gen(g.name)
        lhs = tau.apply(alg.involution(e), k)
        rhs = alg.involution(tau.apply(e, k))
        if lhs != rhs:
            bad.append(g.name)
            residual = residual or alg.format(lhs - rhs)
    results.append(
        CheckResult.failed(f"{check_prefix}/star-compatibility", residual, f"fails on {bad}")
        if bad
        else CheckResult.passed(f"{check_prefix}/star-compatibility")
    )
    return results


class CrossedElement:
    """Finite sum of (invariant element) * u(label) with distinct labels."""

    __slots__ = ("_t",)

    def __init__(self, pairs: Mapping[Momentum, Element] | None = None):
        t: dict[Momentum, Element] = {}
        if pairs:
            for k, e in pairs.items():
                if not e.is_zero():
                    t[k] = e
        self._t = t

    @staticmethod
    def term(e: Element, k: Momentum) -> "CrossedElement":
        return CrossedElement({k: e})

    @staticmethod
    def unit_label(alg: Algebra, k: Momentum) -> "CrossedElement":
        return CrossedElement({k: alg.unit()})

    def pairs(self):
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def __add__(self, other: "CrossedElement") -> "CrossedElement":
        t = dict(self._t)
        for k, e in other._t.items():
            s = t.get(k)
            s = e if s is None else s + e
            if s.is_zero():
                t.pop(k, None)
            else:
                t[k] = s
        out = CrossedElement()
        out._t = t
        return out

    def __neg__(self) -> "CrossedElement":
        out = CrossedElement()
        out._t = {k: -e for k, e in self._t.items()}
        return out

    def __sub__(self, other: "CrossedElement") -> "CrossedElement":
        return self + (-other)

    def scale(self, s: Scalar) -> "CrossedElement":
        out = CrossedElement()
        out._t = {k: v for k, e in self._t.items() if not (v := e * s).is_zero()}
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CrossedElement):
            return NotImplemented
        return self._t == other._t

    def __repr__(self) -> str:
        if not self._t:
            return "CrossedElement(0)"
        bits = [f"({e!r})*u({k!r})" for k, e in self._t.items()]
        return " + ".join(bits)


def crossed_multiply(A: CrossedElement, B: CrossedElement, tau: TauAction) -> CrossedElement:
    """(a u(k)) (b u(l)) = (a tau_k(b)) u(k+l), extended bilinearly."""
    alg = tau.algebra
    out = CrossedElement()
    for k, a in A.pairs():
        for l, b in B.pairs():
            out = out + CrossedElement.term(alg.multiply(a, tau.apply(b, k)), k + l)
    return out


def crossed_involution(A: CrossedElement, tau: TauAction) -> CrossedElement:
    """(a u(k))* = tau_{-k}(a*) u(-k), extended antilinearly."""
    alg = tau.algebra
    out = CrossedElement()
    for k, a in A.pairs():
        out = out + CrossedElement.term(tau.apply(alg.involution(a), -k), -k)
    return out


class CocycleData:
    """Closed-form cocycle data on the invariant algebra.

    gamma(k, l) is total in two momenta; lam is supplied on a generator set
    (the keys of ``lam``) and extended linearly, and to products of supplied
    generators by the unique rule compatible with the twist identity (see
    :func:`lambda_value`); c_i is either a callable total 2-cochain or a
    table on supplied generator pairs, extended bilinearly.
    """

    def __init__(
        self,
        gamma: Callable[[Momentum, Momentum], Element] | None = None,
        lam: Mapping[str, Callable[[Momentum], Element]] | None = None,
        c_i=None,
    ):
        self.gamma = gamma
        self.lam = dict(lam) if lam else None
        self.c_i = c_i

    @property
    def lambda_domain(self) -> list[str]:
        return sorted(self.lam) if self.lam else []

    def has_lambda(self) -> bool:
        return bool(self.lam)

    def has_c_i(self) -> bool:
        return self.c_i is not None

    def c_i_value(self, f: Element, g: Element, alg: Algebra) -> Element:
        if self.c_i is None:
            raise CocycleDomainError("no invariant 2-cochain supplied")
        if callable(self.c_i):
            return self.c_i(f, g)
        out = alg.zero()
        for wf, cf in f.terms():
            for wg, cg in g.terms():
                if not wf or not wg:
                    continue  # normalized: unit arguments contribute nothing
                if len(wf) != 1 or len(wg) != 1:
                    raise CocycleDomainError(
                        f"invariant 2-cochain table has no entry for words "
                        f"{'*'.join(wf)} x {'*'.join(wg)}"
                    )
                entry = self.c_i.get((wf[0], wg[0]))
                if entry is None:
                    raise CocycleDomainError(
                        f"invariant 2-cochain table misses pair ({wf[0]}, {wg[0]})"
                    )
                out = out + entry * (cf * cg)
        return out


def lambda_value(data: CocycleData, tau: TauAction, f: Element, k: Momentum) -> Element:
    """Evaluate lam on an element of the span of supplied-generator words.

    On a product word u.v the value is forced by the twist identity
       c^I(u,v) - tau_k(c^I(tau_{-k}u, tau_{-k}v)) = u lam(v,k) - lam(uv,k) + lam(u,k) v,
    applied recursively on the first-generator split; well-definedness of
    that extension is itself checked by check_lambda_relations.
    """
    if not data.has_lambda():
        raise CocycleDomainError("no lambda data supplied")
    alg = tau.algebra
    out = alg.zero()
    for w, c in f.terms():
        out = out + _lambda_word(data, tau, w, k) * c
    return out


def _lambda_word(data: CocycleData, tau: TauAction, w, k: Momentum) -> Element:
    alg = tau.algebra
    if len(w) == 0:
        return alg.zero()  # lam(1, k) = 0
    if len(w) == 1:
        fn = data.lam.get(w[0])
        if fn is None:
            raise CocycleDomainError(f"lambda is not supplied on generator {w[0]!r}")
        return fn(k)
    u = alg.gen(w[0])
    v = Element({tuple(w[1:]): Scalar.one()})
    lu = _lambda_word(data, tau, (w[0],), k)
    lv = _lambda_word(data, tau, tuple(w[1:]), k)
    twist = data.c_i_value(u, v, alg) - tau.apply(
        data.c_i_value(tau.apply(u, -k), tau.apply(v, -k), alg), k
    )
    return alg.multiply(u, lv) + alg.multiply(lu, v) - twist


def check_group_cocycle(data: CocycleData, tau: TauAction) -> CheckResult:
    """tau_k gamma(l,m) - gamma(k+l,m) + gamma(k,l+m) - gamma(k,l) = 0
    with three independent symbolic momenta."""
    if data.gamma is None:
        return CheckResult.not_applicable("gamma/group-cocycle", "no gamma supplied")
    alg = tau.algebra
    k = Momentum.symbolic(fresh_momentum_base("gk"))
    l = Momentum.symbolic(fresh_momentum_base("gl"))
    m = Momentum.symbolic(fresh_momentum_base("gm"))
    res = (
        tau.apply(data.gamma(l, m), k)
        - data.gamma(k + l, m)
        + data.gamma(k, l + m)
        - data.gamma(k, l)
    )
    if res.is_zero():
        return CheckResult.passed("gamma/group-cocycle")
    return CheckResult.failed("gamma/group-cocycle", alg.format(res))


def check_gamma_normalization(data: CocycleData, tau: TauAction) -> CheckResult:
    if data.gamma is None:
        return CheckResult.not_applicable("gamma/normalization", "no gamma supplied")
    alg = tau.algebra
    k = Momentum.symbolic(fresh_momentum_base("gn"))
    zero = Momentum.zero()
    res = data.gamma(k, zero) + data.gamma(zero, k)
    if data.gamma(k, zero).is_zero() and data.gamma(zero, k).is_zero():
        return CheckResult.passed("gamma/normalization")
    return CheckResult.failed("gamma/normalization", alg.format(res))


def check_gamma_reality_equivariance(
    data: CocycleData,
    tau: TauAction,
    lorentz=None,
    matrices: Sequence | None = None,
) -> list[CheckResult]:
    """Reality: gamma(k,l)* = tau_{k+l} gamma(-l,-k); equivariance:
    the Lorentz action on values matches the action on momentum labels."""
    if data.gamma is None:
        return [CheckResult.not_applicable("gamma/reality", "no gamma supplied")]
    alg = tau.algebra
    k = Momentum.symbolic(fresh_momentum_base("rk"))
    l = Momentum.symbolic(fresh_momentum_base("rl"))
    results = []
    lhs = alg.involution(data.gamma(k, l))
    rhs = tau.apply(data.gamma(-l, -k), k + l)
    results.append(
        CheckResult.passed("gamma/reality")
        if lhs == rhs
        else CheckResult.failed("gamma/reality", alg.format(lhs - rhs))
    )
    if lorentz is None or matrices is None:
        results.append(
            CheckResult.not_applicable("gamma/equivariance", "no Lorentz action supplied")
        )
        return results
    residual = ""
    bad = []
    for idx, lam in enumerate(matrices):
        lhs = lorentz.apply(data.gamma(k, l), lam)
        rhs = data.gamma(lam.transform(k), lam.transform(l))
        if lhs != rhs:
            bad.append(f"matrix #{idx}")
            residual = residual or alg.format(lhs - rhs)
    results.append(
        CheckResult.failed("gamma/equivariance", residual, ", ".join(bad))
        if bad
        else CheckResult.passed("gamma/equivariance", f"{len(list(matrices))} matrices")
    )
    return results


def check_lambda_relations(
    data: CocycleData,
    tau: TauAction,
    lorentz=None,
    matrices: Sequence | None = None,
) -> list[CheckResult]:
    """The supplied-generator identities for lam and c^I:

    - normalization lam(f,0) = 0 (and lam(1,k) = 0 by construction);
    - reality lam(f,k)* = -tau_k(lam(tau_{-k}(f*), -k));
    - Lorentz equivariance of lam (when an action is supplied);
    - the commutator identity [f, gamma(k,l)] =
        tau_k(lam(tau_{-k}f, l)) - lam(f, k+l) + lam(f, k);
    - the twist identity for c^I quoted in :func:`lambda_value`, checked on
      all ordered supplied pairs (reversed pairs make it a genuine
      well-definedness constraint on the extension).
    """
    if not data.has_lambda():
        return [CheckResult.not_applicable("lambda/relations", "no lambda data supplied")]
    alg = tau.algebra
    S = data.lambda_domain
    k = Momentum.symbolic(fresh_momentum_base("lk"))
    l = Momentum.symbolic(fresh_momentum_base("ll"))
    results = []

    bad = [g for g in S if not lambda_value(data, tau, alg.gen(g), Momentum.zero()).is_zero()]
    results.append(
        CheckResult.failed("lambda/normalization", "", f"lam(f,0) != 0 on {bad}")
        if bad
        else CheckResult.passed("lambda/normalization")
    )

    residual = ""
    bad = []
    for g in S:
        f = alg.gen(g)
        lhs = alg.involution(lambda_value(data, tau, f, k))
        inner = lambda_value(data, tau, tau.apply(alg.involution(f), -k), -k)
        rhs = -tau.apply(inner, k)
        if lhs != rhs:
            bad.append(g)
            residual = residual or alg.format(lhs - rhs)
    results.append(
        CheckResult.failed("lambda/reality", residual, f"fails on {bad}")
        if bad
        else CheckResult.passed("lambda/reality")
    )

    if lorentz is None or matrices is None:
        results.append(
            CheckResult.not_applicable("lambda/equivariance", "no Lorentz action supplied")
        )
    else:
        residual = ""
        bad = []
        for idx, lam_m in enumerate(matrices):
            for g in S:
                f = alg.gen(g)
                lhs = lorentz.apply(lambda_value(data, tau, f, k), lam_m)
                rhs = lambda_value(data, tau, lorentz.apply(f, lam_m), lam_m.transform(k))
                if lhs != rhs:
                    bad.append(f"({g}, matrix #{idx})")
                    residual = residual or alg.format(lhs - rhs)
        results.append(
            CheckResult.failed("lambda/equivariance", residual, ", ".join(bad[:4]))
            if bad
            else CheckResult.passed("lambda/equivariance")
        )

    if data.gamma is None:
        results.append(
            CheckResult.not_applicable("mixed/gamma-commutator", "no gamma supplied")
        )
    else:
        residual = ""
        bad = []
        try:
            for g in S:
                f = alg.gen(g)
                lhs = alg.commutator(f, data.gamma(k, l))
                rhs = (
                    tau.apply(lambda_value(data, tau, tau.apply(f, -k), l), k)
                    - lambda_value(data, tau, f, k + l)
                    + lambda_value(data, tau, f, k)
                )
                if lhs != rhs:
                    bad.append(g)
                    residual = residual or alg.format(lhs - rhs)
            results.append(
                CheckResult.failed("mixed/gamma-commutator", residual, f"fails on {bad}")
                if bad
                else CheckResult.passed("mixed/gamma-commutator")
            )
        except CocycleDomainError as exc:
            results.append(CheckResult.not_applicable("mixed/gamma-commutator", str(exc)))

    if not data.has_c_i():
        results.append(
            CheckResult.not_applicable("mixed/invariant-cocycle-twist", "no c^I supplied")
        )
    else:
        residual = ""
        bad = []
        try:
            for ga, gb in itertools.product(S, repeat=2):
                f, g = alg.gen(ga), alg.gen(gb)
                lhs = data.c_i_value(f, g, alg) - tau.apply(
                    data.c_i_value(tau.apply(f, -k), tau.apply(g, -k), alg), k
                )
                rhs = (
                    alg.multiply(f, lambda_value(data, tau, g, k))
                    - lambda_value(data, tau, alg.multiply(f, g), k)
                    + alg.multiply(lambda_value(data, tau, f, k), g)
                )
                if lhs != rhs:
                    bad.append(f"({ga},{gb})")
                    residual = residual or alg.format(lhs - rhs)
            results.append(
                CheckResult.failed("mixed/invariant-cocycle-twist", residual, ", ".join(bad[:4]))
                if bad
                else CheckResult.passed("mixed/invariant-cocycle-twist")
            )
        except CocycleDomainError as exc:
            results.append(
                CheckResult.not_applicable("mixed/invariant-cocycle-twist", str(exc))
            )
    return results


def assemble_c(
    data: CocycleData,
    tau: TauAction,
    f: Element,
    k: Momentum,
    l: Momentum,
    g: Element,
) -> CrossedElement:
    """One representative of the full cocycle on (f u(k), u(l) g).

    Mixed restrictions are fixed in the gauge c(h, u(m)) = lam(h, m) u(m),
    c(u(m), h) = 0; the result is well defined modulo the coboundary
    freedom of a translation-invariant 1-cochain.
    """
    if data.gamma is None:
        raise CocycleDomainError("assemble_c needs gamma")
    if not data.has_lambda():
        raise CocycleDomainError("assemble_c needs lambda")
    if not data.has_c_i():
        raise CocycleDomainError("assemble_c needs the invariant 2-cochain c^I")
    alg = tau.algebra
    tg = tau.apply(g, k + l)
    kl = k + l

    def right_mixed(h: Element, m: Momentum) -> CrossedElement:
        # c(h, u(m)) in the chosen gauge
        if m.is_zero():
            return CrossedElement()
        return CrossedElement.term(lambda_value(data, tau, h, m), m)

    out = CrossedElement.term(
        alg.multiply(f, data.gamma(k, l), tg) + data.c_i_value(f, tg, alg), kl
    )
    out = out + right_mixed(alg.multiply(f, tg), kl)
    # c(u(l), g) and c(u(k+l), g) vanish in this gauge; the remaining terms:
    u_l_g = CrossedElement.term(tau.apply(g, l), l)  # u(l) g in crossed form
    out = out - crossed_multiply(right_mixed(f, k), u_l_g, tau)
    out = out - crossed_multiply(
        CrossedElement.term(f, Momentum.zero()), right_mixed(tg, kl), tau
    )
    return out


def check_crossed_product(tau: TauAction, seed: int = 0, samples: int = 8) -> list[CheckResult]:
    """Random exact checks of the crossed-product axioms: associativity,
    unit and inverse labels, involutive involution."""
    from random import Random

    alg = tau.algebra
    rng = Random(seed)
    k = Momentum.symbolic(fresh_momentum_base("ck"))
    l = Momentum.symbolic(fresh_momentum_base("cl"))
    labels = [Momentum.zero(), k, l, -k, k + l]

    def rand_crossed() -> CrossedElement:
        out = CrossedElement()
        for _ in range(rng.randint(1, 2)):
            e = alg.random_element(rng, max_len=2, n_terms=2)
            out = out + CrossedElement.term(e, rng.choice(labels))
        return out

    results = []
    residual = ""
    ok = True
    for _ in range(samples):
        A, B, C = rand_crossed(), rand_crossed(), rand_crossed()
        lhs = crossed_multiply(crossed_multiply(A, B, tau), C, tau)
        rhs = crossed_multiply(A, crossed_multiply(B, C, tau), tau)
        if lhs != rhs:
            ok = False
            residual = "associativity residual"
            break
    results.append(
        CheckResult.passed("crossed/associativity", f"{samples} random triples")
        if ok
        else CheckResult.failed("crossed/associativity", residual)
    )

    unit = CrossedElement.unit_label(alg, Momentum.zero())
    uk = CrossedElement.unit_label(alg, k)
    uminus = CrossedElement.unit_label(alg, -k)
    ok = (
        crossed_multiply(uk, uminus, tau) == unit
        and crossed_multiply(unit, uk, tau) == uk
        and crossed_involution(uk, tau) == uminus
    )
    results.append(
        CheckResult.passed("crossed/unit-inverse")
        if ok
        else CheckResult.failed("crossed/unit-inverse", "exponential label laws fail")
    )

    ok = True
    for _ in range(samples):
        A = rand_crossed()
        if crossed_involution(crossed_involution(A, tau), tau) != A:
            ok = False
            break
    results.append(
        CheckResult.passed("crossed/involution-involutive")
        if ok
        else CheckResult.failed("crossed/involution-involutive", "star is not involutive")
    )
    return results


def check_assemble_consistency(data: CocycleData, tau: TauAction) -> CheckResult:
    """assemble_c against its independent rearrangement oracle:
    c(f u(k), u(l)) must equal [f gamma(k,l) + lam(f,k+l) - lam(f,k)] u(k+l)
    for f in the supplied lambda domain, and the degenerate rows must
    reproduce gamma and c^I."""
    if data.gamma is None or not data.has_lambda() or not data.has_c_i():
        return CheckResult.not_applicable("assemble/eq-consistency", "incomplete data")
    alg = tau.algebra
    k = Momentum.symbolic(fresh_momentum_base("ak"))
    l = Momentum.symbolic(fresh_momentum_base("al"))
    one = alg.unit()

    got = assemble_c(data, tau, one, k, l, one)
    want = CrossedElement.term(data.gamma(k, l), k + l)
    if got != want:
        return CheckResult.failed("assemble/eq-consistency", "unit row does not reduce to gamma")

    for g in data.lambda_domain:
        f = alg.gen(g)
        z = Momentum.zero()
        got = assemble_c(data, tau, f, z, z, alg.gen(g))
        want = CrossedElement.term(data.c_i_value(f, alg.gen(g), alg), z)
        if got != want:
            return CheckResult.failed(
                "assemble/eq-consistency", f"zero-label row differs on {g}"
            )
        got = assemble_c(data, tau, f, k, l, one)
        expected = (
            alg.multiply(f, data.gamma(k, l))
            + lambda_value(data, tau, f, k + l)
            - lambda_value(data, tau, f, k)
        )
        want = CrossedElement.term(expected, k + l)
        if got != want:
            return CheckResult.failed(
                "assemble/eq-consistency", f"rearrangement oracle differs on {g}"
            )
    return CheckResult.passed("assemble/eq-consistency")
