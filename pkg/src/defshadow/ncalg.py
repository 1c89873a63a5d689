"""Noncommutative *-algebra core.

Elements are finite linear combinations of words in declared generators with
:class:`~defshadow.coeffring.Scalar` coefficients.  An :class:`Algebra` holds
the generators (listing order = precedence), the kappa-dependent rewrite
rules ``hi*lo = lo*hi + correction`` for precedence-decreasing pairs
(unlisted pairs commute), and the involution table.  Normal forms are
computed by leftmost-inversion rewriting; termination is guaranteed because
every correction word is strictly below the replaced word in the
length-then-lexicographic term order, confluence is checked (not assumed)
by the generator-triple overlap scan of :meth:`Algebra.check_associativity`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Callable, Iterable, Mapping, Sequence, Union

from .coeffring import GaussianRational, Scalar, ZERO, ONE

Word = tuple  # tuple of generator names; () is the unit word


class AlgebraError(ValueError):
    """Malformed algebra input: bad rule shape, unknown generator..."""


class ValidationError(AlgebraError):
    """An algebra failed its associativity/involution validation gate."""


@dataclass(frozen=True)
class Generator:
    name: str
    hermitian: bool = True
    index: int = 0  # precedence; unique within one algebra


class Element:
    """Finite map Word -> Scalar; no explicit zero coefficients.

    Elements are plain linear data, shared between an algebra and its
    subalgebras (words are name tuples).  Products need an Algebra.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Word, Scalar] | None = None):
        t: dict[Word, Scalar] = {}
        if terms:
            for w, c in terms.items():
                c = Scalar.of(c)
                if c:
                    t[tuple(w)] = c
        self._t = t

    @staticmethod
    def zero() -> "Element":
        return Element()

    def terms(self) -> Iterable[tuple[Word, Scalar]]:
        return self._t.items()

    def words(self) -> Iterable[Word]:
        return self._t.keys()

    def coefficient(self, word: Word) -> Scalar:
        return self._t.get(tuple(word), ZERO)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        t = dict(self._t)
        for w, c in other._t.items():
            s = t.get(w)
            s = c if s is None else s + c
            if s:
                t[w] = s
            else:
                t.pop(w, None)
        out = Element()
        out._t = t
        return out

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Element":
        out = Element()
        out._t = {w: -c for w, c in self._t.items()}
        return out

    def __mul__(self, scalar) -> "Element":
        s = scalar if isinstance(scalar, Scalar) else Scalar.of(scalar)
        out = Element()
        if s:
            out._t = {w: v for w, c in self._t.items() if (v := c * s)}
        return out

    __rmul__ = __mul__

    def map_coefficients(self, fn: Callable[[Scalar], Scalar]) -> "Element":
        t: dict[Word, Scalar] = {}
        for w, c in self._t.items():
            v = fn(c)
            if v:
                t[w] = v
        out = Element()
        out._t = t
        return out

    def conjugate_coefficients(self) -> "Element":
        return self.map_coefficients(lambda s: s.conjugate())

    def kappa_coefficient(self, power: int) -> "Element":
        """The Element coefficient of kappa**power."""
        from .coeffring import KAPPA

        return self.map_coefficients(lambda s: s.coefficient_of(KAPPA, power))

    def is_kappa_free(self) -> bool:
        return all(c.is_kappa_free() for _, c in self._t.items())

    def max_word_length(self) -> int:
        return max((len(w) for w in self._t), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __repr__(self) -> str:
        return f"Element({format_element(self)})"


def format_element(e: Element, order_key=None) -> str:
    """Canonical rendering, parseable by the DSL expression grammar."""
    if e.is_zero():
        return "0"
    if order_key is None:
        order_key = lambda w: (len(w), w)
    parts = []
    for w in sorted(e.words(), key=order_key):
        c = e.coefficient(w)
        cs = str(c)
        word = "*".join(w)
        if len(dict(c.terms())) > 1:
            cs = f"({cs})"
        if not word:
            parts.append(cs)
        elif cs == "1":
            parts.append(word)
        elif cs == "-1":
            parts.append(f"-{word}")
        else:
            parts.append(f"{cs}*{word}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


@dataclass(frozen=True)
class RewriteRule:
    """hi*lo = lo*hi + correction, with precedence(hi) > precedence(lo)."""

    hi: str
    lo: str
    correction: Element


@dataclass
class OverlapFailure:
    triple: tuple[str, str, str]
    left: Element
    right: Element


@dataclass
class AssociativityReport:
    generator_triples: int = 0
    random_triples: int = 0
    failures: list[OverlapFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class Algebra:
    """A presented *-algebra family with normal-form rewriting.

    ``generators`` fixes the precedence order (first = lowest).  ``relations``
    maps generator pairs to the commutator value ``[a, b]`` as an Element;
    pairs without a relation commute.  Involution defaults to the identity
    on hermitian generators; non-hermitian generators need an entry in
    ``involution``.
    """

    def __init__(
        self,
        name: str,
        generators: Sequence[Union[str, Generator]],
        relations: Mapping[tuple[str, str], Element] | None = None,
        involution: Mapping[str, Element] | None = None,
    ):
        self.name = name
        self.generators: list[Generator] = []
        for idx, g in enumerate(generators):
            if isinstance(g, Generator):
                g = Generator(g.name, g.hermitian, idx)
            else:
                g = Generator(g, True, idx)
            self.generators.append(g)
        self._prec = {g.name: g.index for g in self.generators}
        if len(self._prec) != len(self.generators):
            raise AlgebraError("duplicate generator names")

        self.rules: dict[tuple[str, str], RewriteRule] = {}
        for (a, b), value in (relations or {}).items():
            self._add_relation(a, b, value)

        self._involution: dict[str, Element] = {}
        for g in self.generators:
            self._involution[g.name] = self.gen(g.name)
        for name_, image in (involution or {}).items():
            if name_ not in self._prec:
                raise AlgebraError(f"involution entry for unknown generator {name_!r}")
            self._involution[name_] = image

        self._nf_cache: dict[Word, dict[Word, Scalar]] = {}
        self._sym_cache: dict[Word, Element] = {}
        self._sym0_cache: dict[Word, Element] = {}
        self._symcoc_cache: dict[tuple[Word, Word], Element] = {}
        self.validated = False

    # -- construction helpers -------------------------------------------

    def _add_relation(self, a: str, b: str, value: Element) -> None:
        """Record [a, b] = value as a rewrite rule for the decreasing pair."""
        for n in (a, b):
            if n not in self._prec:
                raise AlgebraError(f"relation references unknown generator {n!r}")
        if a == b:
            raise AlgebraError(f"relation [{a}, {a}] is not allowed")
        if self._prec[a] > self._prec[b]:
            hi, lo, corr = a, b, value
        else:
            hi, lo, corr = b, a, -value
        key = (hi, lo)
        if key in self.rules:
            if self.rules[key].correction == corr:
                return
            raise AlgebraError(f"duplicate relation for pair ({a}, {b})")
        self._check_rule_shape(hi, lo, corr)
        if corr.is_zero():
            return  # explicit commuting pair; same as no rule
        self.rules[key] = RewriteRule(hi, lo, corr)

    def _check_rule_shape(self, hi: str, lo: str, corr: Element) -> None:
        bound = (2, (self._prec[hi], self._prec[lo]))
        for w, _ in corr.terms():
            if len(w) > 2:
                raise AlgebraError(
                    f"correction word {'*'.join(w)} in [{hi},{lo}] has length > 2"
                )
            if self.word_key(w) >= bound:
                raise AlgebraError(
                    f"correction word {'*'.join(w)} in [{hi},{lo}] is not below "
                    f"{hi}*{lo} in the term order (termination would break)"
                )

    # -- basic accessors --------------------------------------------------

    def generator_names(self) -> list[str]:
        return [g.name for g in self.generators]

    def generator(self, name: str) -> Generator:
        return self.generators[self._prec[name]]

    def precedence(self, name: str) -> int:
        return self._prec[name]

    def word_key(self, word: Word):
        """Length-then-lexicographic term order key."""
        return (len(word), tuple(self._prec[n] for n in word))

    def gen(self, name: str) -> Element:
        if name not in self._prec:
            raise AlgebraError(f"unknown generator {name!r}")
        return Element({(name,): ONE})

    def unit(self) -> Element:
        return Element({(): ONE})

    def zero(self) -> Element:
        return Element()

    def element(self, terms: Mapping[Sequence[str], object]) -> Element:
        return Element({tuple(w): Scalar.of(c) for w, c in terms.items()})

    def format(self, e: Element) -> str:
        return format_element(e, order_key=self.word_key)

    # -- rewriting ---------------------------------------------------------

    def _first_inversion(self, word: Word) -> int:
        prec = self._prec
        for i in range(len(word) - 1):
            if prec[word[i]] > prec[word[i + 1]]:
                return i
        return -1

    def _nf_word(self, word: Word) -> dict[Word, Scalar]:
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        i = self._first_inversion(word)
        if i < 0:
            result = {word: ONE}
        else:
            a, b = word[i], word[i + 1]
            head, tail = word[:i], word[i + 2:]
            acc: dict[Word, Scalar] = {}

            def merge(sub: dict[Word, Scalar], factor: Scalar) -> None:
                for w, c in sub.items():
                    v = c * factor
                    s = acc.get(w)
                    s = v if s is None else s + v
                    if s:
                        acc[w] = s
                    else:
                        acc.pop(w, None)

            merge(self._nf_word(head + (b, a) + tail), ONE)
            rule = self.rules.get((a, b))
            if rule is not None:
                for rw, rc in rule.correction.terms():
                    merge(self._nf_word(head + rw + tail), rc)
            result = acc
        self._nf_cache[word] = result
        return result

    def normal_form(self, e: Element) -> Element:
        """Rewrite every word to the nondecreasing-precedence basis."""
        acc: dict[Word, Scalar] = {}
        for w, c in e.terms():
            for nw, nc in self._nf_word(w).items():
                v = nc * c
                s = acc.get(nw)
                s = v if s is None else s + v
                if s:
                    acc[nw] = s
                else:
                    acc.pop(nw, None)
        out = Element()
        out._t = acc
        return out

    def is_normal(self, e: Element) -> bool:
        return all(self._first_inversion(w) < 0 for w in e.words())

    def multiply(self, *factors: Element) -> Element:
        """Normal form of the concatenation-bilinear product."""
        if not factors:
            return self.unit()
        out = factors[0]
        if not self.is_normal(out):
            out = self.normal_form(out)
        for f in factors[1:]:
            acc: dict[Word, Scalar] = {}
            for w1, c1 in out.terms():
                for w2, c2 in f.terms():
                    c = c1 * c2
                    for nw, nc in self._nf_word(w1 + w2).items():
                        v = nc * c
                        s = acc.get(nw)
                        s = v if s is None else s + v
                        if s:
                            acc[nw] = s
                        else:
                            acc.pop(nw, None)
            out = Element()
            out._t = acc
        return out

    def commutator(self, a: Element, b: Element) -> Element:
        return self.multiply(a, b) - self.multiply(b, a)

    def involution(self, e: Element) -> Element:
        """Word-reversal antihomomorphism with coefficient conjugation."""
        out = self.zero()
        for w, c in e.terms():
            factors = [self._involution[name] for name in reversed(w)]
            img = self.multiply(self.unit(), *factors) if factors else self.unit()
            out = out + img * c.conjugate()
        return self.normal_form(out)

    def is_central(self, e: Element) -> tuple[bool, list[tuple[str, Element]]]:
        """Test centrality; on failure return the offending generators."""
        witnesses = []
        for g in self.generators:
            r = self.commutator(e, self.gen(g.name))
            if not r.is_zero():
                witnesses.append((g.name, r))
        return (not witnesses, witnesses)

    # -- validation ---------------------------------------------------------

    def check_associativity(
        self, degree_bound: int = 3, random_samples: int = 40, seed: int = 0
    ) -> AssociativityReport:
        """Overlap scan: (a*b)*c = a*(b*c) on all generator triples, then on
        random normal monomials up to ``degree_bound``."""
        report = AssociativityReport()
        gens = [self.gen(g.name) for g in self.generators]
        names = self.generator_names()
        for ia, a in enumerate(gens):
            for ib, b in enumerate(gens):
                ab = self.multiply(a, b)
                for ic, c in enumerate(gens):
                    left = self.multiply(ab, c)
                    right = self.multiply(a, self.multiply(b, c))
                    report.generator_triples += 1
                    if left != right:
                        report.failures.append(
                            OverlapFailure((names[ia], names[ib], names[ic]), left, right)
                        )
        rng = Random(seed)
        for _ in range(random_samples):
            ws = [self.random_normal_word(rng, degree_bound) for _ in range(3)]
            a, b, c = (Element({w: ONE}) for w in ws)
            left = self.multiply(self.multiply(a, b), c)
            right = self.multiply(a, self.multiply(b, c))
            report.random_triples += 1
            if left != right:
                report.failures.append(
                    OverlapFailure(tuple("*".join(w) or "1" for w in ws), left, right)
                )
        return report

    def check_involution_table(self) -> list[str]:
        """Generators whose involution image does not square to themselves."""
        bad = []
        for g in self.generators:
            img = self._involution[g.name]
            sq = self.involution(self.gen(g.name))
            sq = self.involution(sq)
            if sq != self.gen(g.name):
                bad.append(g.name)
            if g.hermitian and img != self.gen(g.name):
                bad.append(g.name)
        return bad

    def validate(self, degree_bound: int = 3, random_samples: int = 40, seed: int = 0) -> "Algebra":
        """Run the validation gate; raise on failure, else mark validated."""
        bad = self.check_involution_table()
        if bad:
            raise ValidationError(f"involution table is not involutive on {bad}")
        report = self.check_associativity(degree_bound, random_samples, seed)
        if not report.ok:
            f = report.failures[0]
            raise ValidationError(
                f"associativity fails on {f.triple}: "
                f"{self.format(f.left)} != {self.format(f.right)} "
                f"({len(report.failures)} failing triples)"
            )
        self.validated = True
        return self

    # -- derived algebras ----------------------------------------------------

    def specialize_kappa(self, value) -> "Algebra":
        """The member algebra at a fixed kappa (validity is inherited from the
        symbolic-kappa family; the overlap identities specialize)."""
        from .coeffring import KAPPA

        bind = {KAPPA: Scalar.of(value)}
        relations = {}
        for (hi, lo), rule in self.rules.items():
            relations[(hi, lo)] = rule.correction.map_coefficients(
                lambda s: s.substitute(bind)
            )
        out = Algebra(
            f"{self.name}@kappa={value}",
            [Generator(g.name, g.hermitian) for g in self.generators],
            relations,
            {n: img for n, img in self._involution.items()},
        )
        out.validated = self.validated
        return out

    def subalgebra(self, name: str, generator_names: Sequence[str]) -> "Algebra":
        """The subalgebra on a rule-closed subset of generators."""
        keep = set(generator_names)
        order = [g for g in self.generators if g.name in keep]
        relations = {}
        for (hi, lo), rule in self.rules.items():
            if hi in keep and lo in keep:
                for w, _ in rule.correction.terms():
                    if any(n not in keep for n in w):
                        raise AlgebraError(
                            f"subalgebra {name!r} is not closed: [{hi},{lo}] leaves it"
                        )
                relations[(hi, lo)] = rule.correction
        out = Algebra(
            name,
            [Generator(g.name, g.hermitian) for g in order],
            relations,
            {g.name: self._involution[g.name] for g in order},
        )
        out.validated = self.validated
        return out

    # -- sampling -------------------------------------------------------------

    def random_normal_word(self, rng: Random, max_len: int) -> Word:
        n = rng.randint(0, max_len)
        names = sorted(
            (rng.choice(self.generators).name for _ in range(n)),
            key=lambda nm: self._prec[nm],
        )
        return tuple(names)

    def random_element(
        self, rng: Random, max_len: int = 2, n_terms: int = 3, kappa_free: bool = True
    ) -> Element:
        t: dict[Word, Scalar] = {}
        for _ in range(n_terms):
            w = self.random_normal_word(rng, max_len)
            c = Scalar.of(
                GaussianRational(
                    Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
                    Fraction(rng.randint(-2, 2), rng.randint(1, 2)),
                )
            )
            if not kappa_free and rng.random() < 0.3:
                c = c * Scalar.kappa()
            prev = t.get(w)
            t[w] = c if prev is None else prev + c
        return Element(t)
