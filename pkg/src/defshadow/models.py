"""Built-in fixtures and rational Lorentz/Poincare utilities.

Two families ship with the engine:

* ``example-so41``: fourteen hermitian generators (four coordinates x,
  four translation-like L, six antisymmetric I) whose commutation rules
  close on an so(4,1)/so(3,2)-type span for fixed parameter sign, with the
  full translation-twist action, dual-group cocycle, mixed cochain data,
  quadratic and quartic central elements, and a rational Poincare action.
* ``dfr-limit``: commuting-center model with antisymmetric central Q
  generators, trivial twist, and the two Lorentz-invariant scalars.

Lorentz matrices are exact rational solutions of L^T g L = g generated
from 3-4-5 rotations and (5/4, 3/4) boosts, so every equivariance check
stays an exact polynomial identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from random import Random
from typing import Callable, Mapping, Sequence

from .coeffring import (
    METRIC_SIGNATURE,
    Momentum,
    Scalar,
    ZERO,
    ONE,
    epsilon,
    fresh_momentum_base,
    metric,
    minkowski_dot,
)
from .crossed import CocycleData, TauAction, check_tau_homomorphism
from .deformation import symmetric_cocycle
from .ncalg import Algebra, AlgebraError, Element
from .reporting import CheckResult

I_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_I = Scalar.i()


def _gen(name: str) -> Element:
    return Element({(name,): ONE})


def antisym_element(base: str, mu: int, nu: int) -> Element:
    """Resolve an antisymmetric pair reference: base(nu,mu) = -base(mu,nu),
    base(mu,mu) = 0; only mu < nu names exist as generators."""
    if mu == nu:
        return Element()
    if mu < nu:
        return _gen(f"{base}{mu}{nu}")
    return -_gen(f"{base}{nu}{mu}")


# ---------------------------------------------------------------------------
# Rational Lorentz and Poincare transformations
# ---------------------------------------------------------------------------


class LorentzMatrix:
    """Exact-rational 4x4 matrix with L^T g L = g."""

    __slots__ = ("rows",)

    def __init__(self, rows, check: bool = True):
        self.rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
        if len(self.rows) != 4 or any(len(r) != 4 for r in self.rows):
            raise AlgebraError("a Lorentz matrix is 4x4")
        if check and not self._is_lorentz():
            raise AlgebraError("matrix does not preserve the metric")

    def _is_lorentz(self) -> bool:
        for m in range(4):
            for n in range(4):
                acc = Fraction(0)
                for a in range(4):
                    acc += self.rows[a][m] * METRIC_SIGNATURE[a] * self.rows[a][n]
                if acc != metric(m, n):
                    return False
        return True

    @staticmethod
    def identity() -> "LorentzMatrix":
        return LorentzMatrix(
            [[1 if i == j else 0 for j in range(4)] for i in range(4)], check=False
        )

    @staticmethod
    def boost(axis: int = 1, ch: Fraction = Fraction(5, 4), sh: Fraction = Fraction(3, 4)) -> "LorentzMatrix":
        """Boost in the (0, axis) plane; (ch, sh) must satisfy ch^2 - sh^2 = 1."""
        rows = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
        rows[0][0] = ch
        rows[0][axis] = sh
        rows[axis][0] = sh
        rows[axis][axis] = ch
        return LorentzMatrix(rows)

    @staticmethod
    def rotation(i: int = 1, j: int = 2, c: Fraction = Fraction(3, 5), s: Fraction = Fraction(4, 5)) -> "LorentzMatrix":
        """Rotation in the spatial (i, j) plane; (c, s) on the unit circle."""
        rows = [[Fraction(int(a == b)) for b in range(4)] for a in range(4)]
        rows[i][i] = c
        rows[i][j] = -s
        rows[j][i] = s
        rows[j][j] = c
        return LorentzMatrix(rows)

    def __matmul__(self, other: "LorentzMatrix") -> "LorentzMatrix":
        rows = [
            [
                sum(self.rows[i][k] * other.rows[k][j] for k in range(4))
                for j in range(4)
            ]
            for i in range(4)
        ]
        return LorentzMatrix(rows, check=False)

    def inverse(self) -> "LorentzMatrix":
        # L^{-1} = g L^T g for metric-preserving L
        rows = [
            [
                METRIC_SIGNATURE[i] * self.rows[j][i] * METRIC_SIGNATURE[j]
                for j in range(4)
            ]
            for i in range(4)
        ]
        return LorentzMatrix(rows, check=False)

    def __getitem__(self, i: int):
        return self.rows[i]

    def transform(self, k: Momentum) -> Momentum:
        """Covariant action on momentum labels: (L k)_m = k_n (L^{-1})^n_m."""
        inv = self.inverse()
        return Momentum(
            [
                sum((k[n] * Scalar.of(inv[n][m]) for n in range(4)), ZERO)
                for m in range(4)
            ]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LorentzMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"LorentzMatrix({[[str(v) for v in r] for r in self.rows]})"


def standard_matrices() -> list[LorentzMatrix]:
    """Identity, the (5/4, 3/4) boost, the 3-4-5 rotation, and products."""
    b = LorentzMatrix.boost()
    r = LorentzMatrix.rotation()
    return [
        LorentzMatrix.identity(),
        b,
        r,
        b @ r,
        r @ b,
        b @ b,
        r @ r @ b,
    ]


def random_lorentz(rng: Random, max_factors: int = 3) -> LorentzMatrix:
    out = LorentzMatrix.identity()
    for _ in range(rng.randint(0, max_factors)):
        kind = rng.randrange(6)
        if kind < 3:
            m = LorentzMatrix.boost(axis=kind + 1)
        else:
            planes = [(1, 2), (1, 3), (2, 3)]
            m = LorentzMatrix.rotation(*planes[kind - 3])
        if rng.random() < 0.5:
            m = m.inverse()
        out = out @ m
    return out


@dataclass(frozen=True)
class PoincareElement:
    matrix: LorentzMatrix
    translation: tuple[Scalar, Scalar, Scalar, Scalar]

    @staticmethod
    def identity() -> "PoincareElement":
        return PoincareElement(LorentzMatrix.identity(), (ZERO, ZERO, ZERO, ZERO))

    @staticmethod
    def of(matrix: LorentzMatrix, translation: Sequence) -> "PoincareElement":
        return PoincareElement(matrix, tuple(Scalar.of(a) for a in translation))

    def compose(self, other: "PoincareElement") -> "PoincareElement":
        """(L, a)(L', a') = (L L', a + L a'); matches action composition."""
        moved = tuple(
            sum(
                (Scalar.of(self.matrix[m][n]) * other.translation[n] for n in range(4)),
                ZERO,
            )
            for m in range(4)
        )
        return PoincareElement(
            self.matrix @ other.matrix,
            tuple(self.translation[m] + moved[m] for m in range(4)),
        )


def random_poincare(rng: Random) -> PoincareElement:
    pool = [0, 1, -1, Fraction(1, 2), 2]
    a = [Scalar.of(rng.choice(pool)) for _ in range(4)]
    return PoincareElement(random_lorentz(rng), tuple(a))


class LorentzAction:
    """Per-generator Lorentz action, extended as a unital homomorphism."""

    def __init__(self, algebra: Algebra, table: Mapping[str, Callable[[LorentzMatrix], Element]]):
        self.algebra = algebra
        self.table = dict(table)

    def apply(self, e: Element, lam: LorentzMatrix, algebra: Algebra | None = None) -> Element:
        alg = algebra or self.algebra
        out = alg.zero()
        for w, c in e.terms():
            img = alg.unit()
            for name in w:
                img = alg.multiply(img, self.table[name](lam))
            out = out + img * c
        return out


def vector_action(base_names: Sequence[str]) -> dict[str, Callable[[LorentzMatrix], Element]]:
    names = list(base_names)

    def image(m: int) -> Callable[[LorentzMatrix], Element]:
        def fn(lam: LorentzMatrix) -> Element:
            inv = lam.inverse()
            out = Element()
            for n in range(4):
                out = out + Scalar.of(inv[m][n]) * _gen(names[n])
            return out

        return fn

    return {names[m]: image(m) for m in range(4)}


def tensor2_action(base: str) -> dict[str, Callable[[LorentzMatrix], Element]]:
    def image(a: int, b: int) -> Callable[[LorentzMatrix], Element]:
        def fn(lam: LorentzMatrix) -> Element:
            inv = lam.inverse()
            out = Element()
            for c in range(4):
                for d in range(4):
                    coef = inv[a][c] * inv[b][d]
                    if coef:
                        out = out + Scalar.of(coef) * antisym_element(base, c, d)
            return out

        return fn

    return {f"{base}{a}{b}": image(a, b) for a, b in I_PAIRS}


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


@dataclass
class Fixture:
    """A family plus every optional structure the verification suites use."""

    name: str
    family: Algebra
    invariant: Algebra | None = None
    invariant0: Algebra | None = None
    tau: TauAction | None = None
    lorentz: LorentzAction | None = None
    data: CocycleData | None = None
    coordinates: list[str] = field(default_factory=list)
    casimir_elements: tuple[Element, Element] | None = None
    center_candidates: list[Element] = field(default_factory=list)
    probes: list[Element] = field(default_factory=list)
    expected_brackets: list[tuple[str, Element, Element, Element]] = field(default_factory=list)
    lie_span: list[str] = field(default_factory=list)
    invariant_scalars: list[tuple[str, Element]] = field(default_factory=list)
    document_text: str | None = None
    _family0: Algebra | None = None

    @property
    def family0(self) -> Algebra:
        if self._family0 is None:
            self._family0 = self.family.specialize_kappa(0)
        return self._family0

    @property
    def target_key(self) -> str:
        return self.document_text if self.document_text is not None else self.name


def _example_relations() -> dict[tuple[str, str], Element]:
    ik = _I * Scalar.kappa()
    rel: dict[tuple[str, str], Element] = {}
    for a, b in I_PAIRS:
        rel[(f"x{a}", f"x{b}")] = antisym_element("I", a, b) * ik
        rel[(f"L{a}", f"L{b}")] = antisym_element("I", a, b) * ik
    for a in range(4):
        for b in range(4):
            v = antisym_element("I", a, b) * ik
            if not v.is_zero():
                rel[(f"x{a}", f"L{b}")] = v
    for c in range(4):
        for a, b in I_PAIRS:
            v = (metric(c, b) * _gen(f"L{a}") - metric(c, a) * _gen(f"L{b}")) * _I
            if not v.is_zero():
                rel[(f"x{c}", f"I{a}{b}")] = v
                rel[(f"L{c}", f"I{a}{b}")] = v
    for cd, ab in itertools.product(I_PAIRS, repeat=2):
        if cd <= ab:
            continue
        c, d = cd
        a, b = ab
        v = (
            metric(c, b) * antisym_element("I", a, d)
            - metric(d, b) * antisym_element("I", a, c)
            + metric(d, a) * antisym_element("I", b, c)
            - metric(c, a) * antisym_element("I", b, d)
        ) * _I
        if not v.is_zero():
            rel[(f"I{c}{d}", f"I{a}{b}")] = v
    return rel


def _so41_gamma(alg0: Algebra) -> Callable[[Momentum, Momentum], Element]:
    def gamma(k: Momentum, l: Momentum) -> Element:
        kl = minkowski_dot(k, l)
        kk = minkowski_dot(k, k)
        ll = minkowski_dot(l, l)
        ipart = alg0.zero()
        for a, b in I_PAIRS:
            ipart = ipart + (k[a] * l[b] - k[b] * l[a]) * alg0.gen(f"I{a}{b}")
        k_l = alg0.zero()
        l_l = alg0.zero()
        for m in range(4):
            k_l = k_l + k[m] * alg0.gen(f"L{m}")
            l_l = l_l + l[m] * alg0.gen(f"L{m}")
        a_coef = Fraction(2, 3) * kl + Fraction(1, 3) * ll
        b_coef = Fraction(1, 3) * kl + Fraction(2, 3) * kk
        return (ipart - a_coef * k_l + b_coef * l_l) * (_I * Fraction(-1, 2))

    return gamma


def _so41_lambda(alg0: Algebra) -> dict[str, Callable[[Momentum], Element]]:
    def lam_for(m: int) -> Callable[[Momentum], Element]:
        def fn(k: Momentum) -> Element:
            out = alg0.zero()
            for n in range(4):
                out = out - k[n] * antisym_element("I", m, n)
            k_l = alg0.zero()
            for n in range(4):
                k_l = k_l + k[n] * alg0.gen(f"L{n}")
            out = out - Fraction(1, 2) * (k.raised(m) * k_l)
            out = out + Fraction(1, 2) * (minkowski_dot(k, k) * alg0.gen(f"L{m}"))
            return out

        return fn

    return {f"L{m}": lam_for(m) for m in range(4)}


def quartic_vector_part(family: Algebra) -> Element:
    """The metric square of the epsilon-contracted L-I vector,
    g^{rr'} (eps_{r l m n} L^l I^{mn}) (eps_{r' l' m' n'} L^{l'} I^{m'n'})."""
    quart = Element()
    perms = list(itertools.permutations(range(4)))
    for p1 in perms:
        s1 = epsilon(*p1)
        r1, l1, m1, n1 = p1
        factor_a = family.multiply(_gen(f"L{l1}"), antisym_element("I", m1, n1))
        for p2 in perms:
            r2, l2, m2, n2 = p2
            g = metric(r1, r2)
            if not g:
                continue
            s2 = epsilon(*p2)
            term = family.multiply(
                factor_a, _gen(f"L{l2}"), antisym_element("I", m2, n2)
            )
            quart = quart + (s1 * s2 * g) * term
    return family.normal_form(quart)


def epsilon_square_scalar(family: Algebra, base: str = "I") -> Element:
    """eps_{a b c d} base^{ab} base^{cd}, the pseudoscalar square."""
    out = Element()
    for p in itertools.permutations(range(4)):
        out = out + epsilon(*p) * family.multiply(
            antisym_element(base, p[0], p[1]), antisym_element(base, p[2], p[3])
        )
    return family.normal_form(out)


def casimirs(family: Algebra) -> tuple[Element, Element]:
    """The quadratic and quartic central elements of the so41 family.

    The quartic one needs the fifth dual component: the bare L-I vector
    square is central only at kappa = 0, and the unique completion central
    for every kappa adds kappa/16 times the squared I-pseudoscalar.
    """
    quad = Element()
    for lam, rho in itertools.product(range(4), repeat=2):
        w = family.multiply(antisym_element("I", lam, rho), antisym_element("I", lam, rho))
        quad = quad + (metric(lam, lam) * metric(rho, rho)) * w
    quad = quad * Scalar.kappa()
    for a in range(4):
        quad = quad + (2 * metric(a, a)) * family.multiply(_gen(f"L{a}"), _gen(f"L{a}"))

    e_sq = epsilon_square_scalar(family)
    quart = quartic_vector_part(family) + (
        Scalar.kappa() * Scalar.of(Fraction(1, 16))
    ) * family.multiply(e_sq, e_sq)
    return family.normal_form(quad), family.normal_form(quart)


@lru_cache(maxsize=None)
def build_example_algebra() -> Fixture:
    """The fourteen-generator example family, fully validated."""
    gens = [f"I{a}{b}" for a, b in I_PAIRS] + [f"L{m}" for m in range(4)] + [
        f"x{m}" for m in range(4)
    ]
    family = Algebra("example-so41", gens, _example_relations()).validate()
    inv_names = [n for n in family.generator_names() if not n.startswith("x")]
    invariant = family.subalgebra("example-so41/invariant", inv_names)
    invariant0 = invariant.specialize_kappa(0)

    table: dict[str, Callable[[Momentum], Element]] = {}
    for m in range(4):
        table[f"L{m}"] = lambda k, m=m: invariant0.gen(f"L{m}")
    for a, b in I_PAIRS:
        def img(k: Momentum, a=a, b=b) -> Element:
            return (
                invariant0.gen(f"I{a}{b}")
                + k.raised(a) * invariant0.gen(f"L{b}")
                - k.raised(b) * invariant0.gen(f"L{a}")
            )

        table[f"I{a}{b}"] = img
    tau = TauAction(invariant0, table)
    for res in check_tau_homomorphism(tau):
        if res.status != "pass":
            raise AlgebraError(f"fixture tau action failed its gate: {res.check_id}")

    lorentz = LorentzAction(
        invariant0, {**vector_action([f"L{m}" for m in range(4)]), **tensor2_action("I")}
    )
    data = CocycleData(
        gamma=_so41_gamma(invariant0),
        lam=_so41_lambda(invariant0),
        c_i=lambda f, g: symmetric_cocycle(f, g, invariant),
    )
    c2, c4 = casimirs(family)
    candidates = [family.gen(f"x{m}") - family.gen(f"L{m}") for m in range(4)]
    probes = [family.gen(n) for n in family.generator_names()]
    expected = []
    for a, b in I_PAIRS:
        expected.append(
            (
                f"{{x{a}, x{b}}}",
                family.gen(f"x{a}"),
                family.gen(f"x{b}"),
                -family.gen(f"I{a}{b}"),
            )
        )
    return Fixture(
        name="example-so41",
        family=family,
        invariant=invariant,
        invariant0=invariant0,
        tau=tau,
        lorentz=lorentz,
        data=data,
        coordinates=[f"x{m}" for m in range(4)],
        casimir_elements=(c2, c4),
        center_candidates=candidates,
        probes=probes,
        expected_brackets=expected,
        lie_span=inv_names,
        invariant_scalars=[("c2", c2), ("c4", c4)],
    )


@lru_cache(maxsize=None)
def build_dfr_model() -> Fixture:
    """Commuting-center model: [x,x] = i kappa Q, Q central, trivial twist."""
    gens = [f"Q{a}{b}" for a, b in I_PAIRS] + [f"x{m}" for m in range(4)]
    ik = _I * Scalar.kappa()
    rel = {
        (f"x{a}", f"x{b}"): antisym_element("Q", a, b) * ik for a, b in I_PAIRS
    }
    family = Algebra("dfr-limit", gens, rel).validate()
    inv_names = [n for n in gens if n.startswith("Q")]
    invariant = family.subalgebra("dfr-limit/invariant", inv_names)
    invariant0 = invariant.specialize_kappa(0)
    tau = TauAction(
        invariant0, {n: (lambda k, n=n: invariant0.gen(n)) for n in inv_names}
    )

    def gamma(k: Momentum, l: Momentum) -> Element:
        out = invariant0.zero()
        for a, b in I_PAIRS:
            out = out + (k[a] * l[b] - k[b] * l[a]) * invariant0.gen(f"Q{a}{b}")
        return out * (_I * Fraction(-1, 2))

    lorentz = LorentzAction(invariant0, tensor2_action("Q"))
    qq = Element()
    for a, b in itertools.product(range(4), repeat=2):
        qq = qq + (metric(a, a) * metric(b, b)) * family.multiply(
            antisym_element("Q", a, b), antisym_element("Q", a, b)
        )
    qeps = Element()
    for p in itertools.permutations(range(4)):
        qeps = qeps + epsilon(*p) * family.multiply(
            antisym_element("Q", p[0], p[1]), antisym_element("Q", p[2], p[3])
        )
    expected = []
    for a, b in I_PAIRS:
        expected.append(
            (
                f"{{x{a}, x{b}}}",
                family.gen(f"x{a}"),
                family.gen(f"x{b}"),
                -family.gen(f"Q{a}{b}"),
            )
        )
    return Fixture(
        name="dfr-limit",
        family=family,
        invariant=invariant,
        invariant0=invariant0,
        tau=tau,
        lorentz=lorentz,
        data=CocycleData(gamma=gamma),
        coordinates=[f"x{m}" for m in range(4)],
        center_candidates=[family.gen(n) for n in inv_names],
        probes=[family.gen(n) for n in gens],
        expected_brackets=expected,
        invariant_scalars=[("metric-square", qq), ("epsilon-square", qeps)],
    )


FIXTURE_BUILDERS = {
    "example-so41": build_example_algebra,
    "dfr-limit": build_dfr_model,
}


def get_fixture(name: str) -> Fixture:
    try:
        return FIXTURE_BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {sorted(FIXTURE_BUILDERS)}")


# ---------------------------------------------------------------------------
# Poincare action and model-level checks
# ---------------------------------------------------------------------------


def poincare_apply(p: PoincareElement, e: Element, fix: Fixture) -> Element:
    """Unital *-homomorphism action: coordinates get the affine image,
    invariant generators the Lorentz table image."""
    alg = fix.family
    inv = p.matrix.inverse()
    images: dict[str, Element] = {}
    for m, name in enumerate(fix.coordinates):
        img = alg.zero()
        for n in range(4):
            coord = alg.gen(fix.coordinates[n]) - p.translation[n] * alg.unit()
            img = img + Scalar.of(inv[m][n]) * coord
        images[name] = img
    if fix.lorentz is not None:
        for name, fn in fix.lorentz.table.items():
            images[name] = fn(p.matrix)
    out = alg.zero()
    for w, c in e.terms():
        img = alg.unit()
        for name in w:
            img = alg.multiply(img, images[name])
        out = out + img * c
    return alg.normal_form(out)


def check_poincare_relations(fix: Fixture, count: int = 20, seed: int = 0) -> CheckResult:
    """Every commutation rule is preserved by random rational Poincare
    elements (exact, fixed seed)."""
    rng = Random(seed)
    elements = [PoincareElement.identity()] + [random_poincare(rng) for _ in range(count)]
    alg = fix.family
    for idx, p in enumerate(elements):
        images = {n: poincare_apply(p, alg.gen(n), fix) for n in alg.generator_names()}
        for (hi, lo), rule in sorted(alg.rules.items()):
            lhs = alg.commutator(images[hi], images[lo])
            rhs = poincare_apply(p, rule.correction, fix)
            if lhs != rhs:
                return CheckResult.failed(
                    "poincare/relation-preservation",
                    alg.format(lhs - rhs),
                    f"element #{idx}, rule [{hi},{lo}]",
                )
    return CheckResult.passed("poincare/relation-preservation", f"{len(elements)} elements")


def check_poincare_group_law(fix: Fixture, count: int = 10, seed: int = 1) -> CheckResult:
    rng = Random(seed)
    alg = fix.family
    for idx in range(count):
        p, q = random_poincare(rng), random_poincare(rng)
        pq = p.compose(q)
        for n in alg.generator_names():
            lhs = poincare_apply(pq, alg.gen(n), fix)
            rhs = poincare_apply(p, poincare_apply(q, alg.gen(n), fix), fix)
            if lhs != rhs:
                return CheckResult.failed(
                    "poincare/group-law", alg.format(lhs - rhs), f"pair #{idx} at {n}"
                )
    return CheckResult.passed("poincare/group-law", f"{count} random pairs")


def _translation_derivation(fix: Fixture, mu: int, e: Element) -> Element:
    """X^mu = ad(x^mu) at kappa = 0, restricted to invariant elements."""
    alg0 = fix.family0
    return alg0.commutator(alg0.gen(fix.coordinates[mu]), e)


def check_derivation_equivariance(
    fix: Fixture, matrices: Sequence[LorentzMatrix] | None = None
) -> CheckResult:
    """Lorentz action intertwines the four translation derivations as a
    vector: alpha_L ad(x^m) = (L^{-1})^m_n ad(x^n) alpha_L on generators."""
    if fix.lorentz is None or not fix.coordinates or fix.invariant0 is None:
        return CheckResult.not_applicable("poincare/derivation-equivariance")
    matrices = matrices or standard_matrices()
    alg0 = fix.invariant0
    for lam in matrices:
        inv = lam.inverse()
        for gname in alg0.generator_names():
            g = alg0.gen(gname)
            for m in range(4):
                lhs = fix.lorentz.apply(_translation_derivation(fix, m, g), lam)
                rhs = alg0.zero()
                for n in range(4):
                    rhs = rhs + Scalar.of(inv[m][n]) * _translation_derivation(
                        fix, n, fix.lorentz.apply(g, lam)
                    )
                if lhs != rhs:
                    return CheckResult.failed(
                        "poincare/derivation-equivariance",
                        alg0.format(lhs - rhs),
                        f"{gname}, component {m}",
                    )
    return CheckResult.passed("poincare/derivation-equivariance")


def check_lorentz_tau_compat(
    fix: Fixture, matrices: Sequence[LorentzMatrix] | None = None
) -> CheckResult:
    """alpha_L tau_k = tau_{L k} alpha_L on generators, symbolic k."""
    if fix.lorentz is None or fix.tau is None:
        return CheckResult.not_applicable("poincare/lorentz-tau-compat")
    matrices = matrices or standard_matrices()
    alg0 = fix.tau.algebra
    k = Momentum.symbolic(fresh_momentum_base("pc"))
    for lam in matrices:
        for gname in alg0.generator_names():
            g = alg0.gen(gname)
            lhs = fix.lorentz.apply(fix.tau.apply(g, k), lam)
            rhs = fix.tau.apply(fix.lorentz.apply(g, lam), lam.transform(k))
            if lhs != rhs:
                return CheckResult.failed(
                    "poincare/lorentz-tau-compat", alg0.format(lhs - rhs), gname
                )
    return CheckResult.passed("poincare/lorentz-tau-compat")


def check_coordinate_cocycle_tensor(
    fix: Fixture, matrices: Sequence[LorentzMatrix] | None = None
) -> CheckResult:
    """The symmetric-basis cocycle on coordinate pairs transforms as a
    rank-2 tensor under the invariant Lorentz action."""
    if fix.lorentz is None or not fix.coordinates:
        return CheckResult.not_applicable("poincare/coordinate-cocycle-tensor")
    matrices = matrices or standard_matrices()
    alg = fix.family
    c = {}
    for m, n in itertools.product(range(4), repeat=2):
        c[(m, n)] = symmetric_cocycle(
            alg.gen(fix.coordinates[m]), alg.gen(fix.coordinates[n]), alg
        )
    for lam in matrices:
        inv = lam.inverse()
        for m, n in itertools.product(range(4), repeat=2):
            lhs = fix.lorentz.apply(c[(m, n)], lam, algebra=fix.invariant0)
            rhs = fix.invariant0.zero()
            for a, b in itertools.product(range(4), repeat=2):
                coef = inv[m][a] * inv[n][b]
                if coef:
                    rhs = rhs + Scalar.of(coef) * c[(a, b)]
            if lhs != rhs:
                return CheckResult.failed(
                    "poincare/coordinate-cocycle-tensor",
                    fix.invariant0.format(lhs - rhs),
                    f"component ({m},{n})",
                )
    return CheckResult.passed("poincare/coordinate-cocycle-tensor")


def check_phase_law(fix: Fixture, count: int = 10, seed: int = 2) -> CheckResult:
    """Action on exponential labels: the label moves by the matrix and the
    unimodular phase exponents add under composition."""
    if not fix.coordinates:
        return CheckResult.not_applicable("poincare/phase-law")
    rng = Random(seed)
    k = Momentum.symbolic(fresh_momentum_base("ph"))
    for idx in range(count):
        p, q = random_poincare(rng), random_poincare(rng)
        lbl_q = q.matrix.transform(k)
        ph_q = ZERO
        for m in range(4):
            ph_q = ph_q - lbl_q[m] * q.translation[m]
        lbl_pq = p.matrix.transform(lbl_q)
        ph_pq = ph_q
        for m in range(4):
            ph_pq = ph_pq - lbl_pq[m] * p.translation[m]
        comp = p.compose(q)
        lbl_c = comp.matrix.transform(k)
        ph_c = ZERO
        for m in range(4):
            ph_c = ph_c - lbl_c[m] * comp.translation[m]
        if lbl_c != lbl_pq or ph_c != ph_pq:
            return CheckResult.failed("poincare/phase-law", str(ph_c - ph_pq), f"pair #{idx}")
    return CheckResult.passed("poincare/phase-law", f"{count} random pairs")


def check_tau_first_order(fix: Fixture) -> CheckResult:
    """The momentum-linear part of the twist matches i k_mu ad(x^mu) on
    invariant generators (exponential-of-derivation consistency)."""
    if fix.tau is None or not fix.coordinates:
        return CheckResult.not_applicable("tau/first-order")
    alg0 = fix.tau.algebra
    k = Momentum.symbolic(fresh_momentum_base("fo"))
    names = sorted({n for c in k.components for n in c.symbols()})

    def linear_part(e: Element) -> Element:
        def pick(s: Scalar) -> Scalar:
            out = Scalar.zero()
            for mono, coef in s.terms():
                deg = sum(e_ for n_, e_ in mono if n_ in names)
                if deg == 1:
                    out = out + Scalar({mono: coef})
            return out

        return e.map_coefficients(pick)

    for gname in alg0.generator_names():
        g = alg0.gen(gname)
        lhs = linear_part(fix.tau.apply(g, k))
        rhs = alg0.zero()
        for m in range(4):
            rhs = rhs + (Scalar.i() * k[m]) * _translation_derivation(fix, m, g)
        if lhs != rhs:
            return CheckResult.failed(
                "tau/first-order", alg0.format(lhs - rhs), gname
            )
    return CheckResult.passed("tau/first-order")


def check_contraction_family(fix: Fixture) -> list[CheckResult]:
    """At parameter +1/-1/0 the designated span closes under commutators
    (every commutator is again a span element); at 0 the L's commute."""
    if not fix.lie_span:
        return [CheckResult.not_applicable("contraction/closure")]
    results = []
    for value in (1, -1, 0):
        alg = fix.family.specialize_kappa(value)
        bad = ""
        for a, b in itertools.combinations(fix.lie_span, 2):
            comm = alg.commutator(alg.gen(a), alg.gen(b))
            if any(len(w) != 1 for w in comm.words()):
                bad = f"[{a},{b}] leaves the span: {alg.format(comm)}"
                break
        results.append(
            CheckResult.failed(f"contraction/closure@{value}", bad)
            if bad
            else CheckResult.passed(f"contraction/closure@{value}")
        )
    alg0 = fix.family0
    l_names = [n for n in fix.lie_span if n.startswith("L")]
    bad = ""
    for a, b in itertools.combinations(l_names, 2):
        comm = alg0.commutator(alg0.gen(a), alg0.gen(b))
        if not comm.is_zero():
            bad = f"[{a},{b}] = {alg0.format(comm)}"
            break
    results.append(
        CheckResult.failed("contraction/abelian-at-0", bad)
        if bad
        else CheckResult.passed("contraction/abelian-at-0")
    )
    return results


def check_casimir_facts(fix: Fixture) -> list[CheckResult]:
    """Centrality of the invariant scalars; for the quadratic one, its
    parameter-zero form is twice the metric square of the L's, whatever
    rational multiple of kappa it is pinned to."""
    results = []
    alg = fix.family
    for label, elem in fix.invariant_scalars:
        ok, wit = alg.is_central(elem)
        results.append(
            CheckResult.passed(f"casimir/{label}-central")
            if ok
            else CheckResult.failed(
                f"casimir/{label}-central", alg.format(wit[0][1]), f"against {wit[0][0]}"
            )
        )
    if fix.casimir_elements is not None:
        c2, _ = fix.casimir_elements
        want = Element()
        for a in range(4):
            want = want + (2 * metric(a, a)) * alg.multiply(_gen(f"L{a}"), _gen(f"L{a}"))
        want = alg.normal_form(want)
        ok = True
        for s in (1, -1, 0):
            pinned = c2 - (Scalar.kappa() * Scalar.of(s)) * alg.unit()
            from .coeffring import KAPPA

            at0 = pinned.map_coefficients(lambda sc: sc.substitute({KAPPA: ZERO}))
            if at0 != want:
                ok = False
                break
        results.append(
            CheckResult.passed("casimir/quadratic-zero-limit")
            if ok
            else CheckResult.failed("casimir/quadratic-zero-limit", "limit form mismatch")
        )
    return results
