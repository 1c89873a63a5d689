"""Exact commutative coefficient arithmetic.

A :class:`Scalar` is a canonical multivariate polynomial over the Gaussian
rationals in the central deformation parameter ``kappa`` and finitely many
commuting momentum-component symbols (``k0..k3``, ``l0..l3``, ...).  All
arithmetic is exact; two scalars are equal iff their canonical forms are
identical, so ``==`` is the only equality test the engine ever needs.

Also hosts the fixed Minkowski metric diag(-1, 1, 1, 1), the totally
antisymmetric epsilon symbol and the :class:`Momentum` 4-vector used as
label space for the dual translation group.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

KAPPA = "kappa"

RationalLike = Union[int, Fraction]


class CoefficientError(ValueError):
    """Raised for malformed scalar/momentum operations (unknown symbols...)."""


class GaussianRational:
    """An exact complex rational a + b*i with a, b fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        return format_gaussian(self)


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_gaussian(z: GaussianRational) -> str:
    """Render a Gaussian rational in the syntax the DSL parses back."""
    if not z.im:
        return _frac_str(z.re)
    if not z.re:
        if z.im == 1:
            return "i"
        if z.im == -1:
            return "-i"
        return f"{_frac_str(z.im)}*i"
    im = format_gaussian(GaussianRational(0, abs(z.im)))
    sign = "+" if z.im > 0 else "-"
    return f"({_frac_str(z.re)} {sign} {im})"


_GR_ZERO = GaussianRational(0)
_GR_ONE = GaussianRational(1)

# A monomial is a tuple of (symbol, exponent) pairs, sorted by symbol name,
# exponents positive.  The empty tuple is the constant monomial.
Monomial = tuple

_momentum_symbols: set[str] = set()
_fresh_counter = 0


def is_momentum_symbol(name: str) -> bool:
    return name in _momentum_symbols


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps: dict[str, int] = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


def _mono_key(m: Monomial):
    return (sum(e for _, e in m), m)


class Scalar:
    """Immutable canonical polynomial over the Gaussian rationals.

    Supports +, -, *, ** with other scalars (and ints/Fractions via
    coercion), conjugation, substitution and coefficient extraction.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[Monomial, GaussianRational] | None = None):
        t: dict[Monomial, GaussianRational] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    t[m] = c
        self._t = t
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def of(value: Union["Scalar", GaussianRational, RationalLike]) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, GaussianRational):
            return Scalar({(): value})
        return Scalar({(): GaussianRational(value)})

    @staticmethod
    def zero() -> "Scalar":
        return _S_ZERO

    @staticmethod
    def one() -> "Scalar":
        return _S_ONE

    @staticmethod
    def i() -> "Scalar":
        return _S_I

    @staticmethod
    def kappa() -> "Scalar":
        return _S_KAPPA

    @staticmethod
    def symbol(name: str) -> "Scalar":
        return Scalar({((name, 1),): _GR_ONE})

    @staticmethod
    def rational(num: int, den: int = 1) -> "Scalar":
        return Scalar.of(Fraction(num, den))

    # -- ring operations ----------------------------------------------

    def _coerce(self, other) -> "Scalar | None":
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return Scalar.of(other)
        return None

    def __add__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self._t)
        for m, c in o._t.items():
            s = t.get(m, _GR_ZERO) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Scalar(t)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "Scalar":
        return Scalar({m: -c for m, c in self._t.items()})

    def __mul__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t: dict[Monomial, GaussianRational] = {}
        for m1, c1 in self._t.items():
            for m2, c2 in o._t.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                s = t.get(m)
                t[m] = c if s is None else s + c
        return Scalar(t)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            raise CoefficientError("negative powers are not defined for scalars")
        out = _S_ONE
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self) -> "Scalar":
        """i -> -i on coefficients; kappa and momentum symbols are real."""
        return Scalar({m: c.conjugate() for m, c in self._t.items()})

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def terms(self) -> Iterable[tuple[Monomial, GaussianRational]]:
        return self._t.items()

    def symbols(self) -> set[str]:
        return {name for m in self._t for name, _ in m}

    def is_kappa_free(self) -> bool:
        return KAPPA not in self.symbols()

    def constant_value(self) -> GaussianRational:
        """The coefficient of the constant monomial."""
        return self._t.get((), _GR_ZERO)

    def substitute(self, bindings: Mapping[str, "Scalar"]) -> "Scalar":
        """Simultaneous substitution of symbols, then canonicalization."""
        out = _S_ZERO
        for m, c in self._t.items():
            term = Scalar.of(c)
            for name, e in m:
                base = bindings.get(name)
                if base is None:
                    base = Scalar.symbol(name)
                term = term * base**e
            out = out + term
        return out

    def coefficient_of(self, name: str, power: int) -> "Scalar":
        """The polynomial coefficient of ``name**power`` (symbol removed)."""
        t: dict[Monomial, GaussianRational] = {}
        for m, c in self._t.items():
            exps = dict(m)
            if exps.pop(name, 0) != power:
                continue
            mm = tuple(sorted(exps.items()))
            s = t.get(mm)
            t[mm] = c if s is None else s + c
        return Scalar(t)

    def degree_in(self, name: str) -> int:
        deg = 0
        for m in self._t:
            for n, e in m:
                if n == name:
                    deg = max(deg, e)
        return deg

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other) if not isinstance(other, Scalar) else other
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for m in sorted(self._t, key=_mono_key):
            c = self._t[m]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in m
            )
            cs = format_gaussian(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


_S_ZERO = Scalar()
_S_ONE = Scalar({(): _GR_ONE})
_S_I = Scalar({(): GaussianRational(0, 1)})
_S_KAPPA = Scalar({((KAPPA, 1),): _GR_ONE})

ZERO = _S_ZERO
ONE = _S_ONE
I = _S_I
KAPPA_SCALAR = _S_KAPPA


def momentum_symbol(name: str) -> Scalar:
    """Register ``name`` in the momentum namespace and return it as a Scalar."""
    if name == KAPPA:
        raise CoefficientError("kappa is not a momentum symbol")
    _momentum_symbols.add(name)
    return Scalar.symbol(name)


def fresh_momentum_base(hint: str = "n") -> str:
    """A momentum base name not used before (for internal symbolic checks)."""
    global _fresh_counter
    _fresh_counter += 1
    return f"{hint}{_fresh_counter}_"


# -- spec-level operation aliases --------------------------------------


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_conj(a: Scalar) -> Scalar:
    return a.conjugate()


def momentum_substitute(s: Scalar, bindings: Mapping[str, Scalar]) -> Scalar:
    """Substitute momentum symbols in ``s``; unknown binding keys are rejected."""
    for name in bindings:
        if not is_momentum_symbol(name):
            raise CoefficientError(f"unknown momentum symbol: {name!r}")
    return s.substitute(bindings)


# -- Minkowski metric and epsilon symbol --------------------------------

METRIC_SIGNATURE = (Fraction(-1), Fraction(1), Fraction(1), Fraction(1))


def metric(mu: int, nu: int) -> Fraction:
    """g^{mu nu} = g_{mu nu} = diag(-1, 1, 1, 1)."""
    if not (0 <= mu <= 3 and 0 <= nu <= 3):
        raise CoefficientError(f"metric index out of range: ({mu}, {nu})")
    return METRIC_SIGNATURE[mu] if mu == nu else Fraction(0)


def epsilon(a: int, b: int, c: int, d: int) -> int:
    """Totally antisymmetric symbol with epsilon(0,1,2,3) = 1."""
    idx = [a, b, c, d]
    if sorted(idx) != [0, 1, 2, 3]:
        return 0
    sign = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if idx[i] > idx[j]:
                sign = -sign
    return sign


class Momentum:
    """A covariant 4-vector of scalars (components k_mu)."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Scalar]):
        comps = tuple(Scalar.of(c) for c in components)
        if len(comps) != 4:
            raise CoefficientError("a momentum has exactly 4 components")
        self.components = comps

    @staticmethod
    def symbolic(base: str) -> "Momentum":
        return Momentum([momentum_symbol(f"{base}{mu}") for mu in range(4)])

    @staticmethod
    def zero() -> "Momentum":
        return Momentum([ZERO] * 4)

    @staticmethod
    def of_rationals(values: Iterable[RationalLike]) -> "Momentum":
        return Momentum([Scalar.of(v) for v in values])

    def __getitem__(self, mu: int) -> Scalar:
        return self.components[mu]

    def raised(self, mu: int) -> Scalar:
        """Contravariant component k^mu = g^{mu mu} k_mu."""
        return METRIC_SIGNATURE[mu] * self.components[mu]

    def __add__(self, other: "Momentum") -> "Momentum":
        return Momentum([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other: "Momentum") -> "Momentum":
        return Momentum([a - b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> "Momentum":
        return Momentum([-a for a in self.components])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Momentum):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return "Momentum(" + ", ".join(str(c) for c in self.components) + ")"


def minkowski_dot(k: Momentum, l: Momentum) -> Scalar:
    """k_mu l^mu with the fixed diagonal metric."""
    out = ZERO
    for mu in range(4):
        out = out + METRIC_SIGNATURE[mu] * (k[mu] * l[mu])
    return out
