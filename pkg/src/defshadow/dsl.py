"""Text format for algebra families (``.alg`` documents).

Line-oriented, ``#`` comments.  Single-line declarations come first, then
keyword blocks terminated by ``end``::

    algebra NAME
    generators NAME ...          # listing order = precedence, lowest first
    nonhermitian NAME ...        # optional
    family BASE vector G0 G1 G2 G3
    family BASE antisym B01 B02 B03 B12 B13 B23
    relations ... end
    tau ... end                  # optional; keys define the invariant part
    lorentz ... end              # optional: BASE = vector|tensor2|coordinate
                                 #           GEN  = invariant
    cocycle ... end              # optional: gamma = expr; lambda GEN = expr;
                                 #           cI GEN GEN = expr

Relation lines read ``[A, B] = expr``; tau lines ``GEN = expr`` (momenta
``k0..k3``); cocycle gamma uses ``k`` and ``l`` symbols, lambda uses ``k``.
Expressions support ``+ - * ^``, rationals ``p/q``, ``i``, ``kappa``,
``conj(...)``, the metric ``g(m,n)`` and ``eps(a,b,c,d)`` constants, and
generator or momentum names.  References into an antisym family resolve
structurally: ``I10`` means ``-I01`` and ``I00`` means ``0``.

Two preprocessor forms expand before parsing:

* ``foreach a b [where cond] : line`` ranges each index variable over
  0..3; conditions are comparisons of variables/digits (also tuple
  comparisons like ``(a,b) < (c,d)``) joined by ``and``;
* ``sum(a: expr)`` expands to the sum of ``expr`` over ``a`` = 0..3.

Index variables appear as ``{a}`` inside the line; ``I{a}{b}`` therefore
names an antisym member after substitution.  Documents print canonically:
``parse(print(parse(text)))`` equals ``parse(text)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping

from .coeffring import Momentum, Scalar, ONE, epsilon, metric, momentum_symbol
from .crossed import CocycleData, TauAction
from .deformation import symmetric_cocycle
from .models import Fixture, LorentzAction, tensor2_action, vector_action
from .ncalg import Algebra, Element, format_element

MOMENTUM_NAMES = tuple(f"{b}{i}" for b in "klm" for i in range(4))
LORENTZ_KINDS = ("vector", "tensor2", "coordinate", "invariant")


class DslError(ValueError):
    """Syntax or semantic error in an algebra document, with position."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        loc = ""
        if line is not None:
            loc = f" at line {line}" + (f", column {col}" if col is not None else "")
        super().__init__(message + loc)
        self.line = line
        self.col = col


@dataclass
class AlgebraDocument:
    """Parsed, macro-expanded document; plain data, compiled separately."""

    name: str
    generators: list[tuple[str, bool]]  # (name, hermitian), precedence order
    families: dict[str, tuple[str, tuple[str, ...]]] = field(default_factory=dict)
    relations: dict[tuple[str, str], Element] = field(default_factory=dict)
    tau: dict[str, Element] | None = None
    lorentz: dict[str, str] | None = None
    gamma: Element | None = None
    lam: dict[str, Element] | None = None
    c_i: dict[tuple[str, str], Element] | None = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraDocument):
            return NotImplemented
        return (
            self.name == other.name
            and self.generators == other.generators
            and self.families == other.families
            and self.relations == other.relations
            and self.tau == other.tau
            and self.lorentz == other.lorentz
            and self.gamma == other.gamma
            and self.lam == other.lam
            and self.c_i == other.c_i
        )


# ---------------------------------------------------------------------------
# Preprocessor: sum(...) and foreach expansion
# ---------------------------------------------------------------------------

_SUM_RE = re.compile(r"\bsum\(")


def _expand_sums(text: str, lineno: int) -> str:
    while True:
        m = _SUM_RE.search(text)
        if m is None:
            return text
        start = m.end()  # position after "sum("
        depth = 1
        colon = -1
        i = start
        while i < len(text):
            ch = text[i]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    break
            elif ch == ":" and depth == 1 and colon < 0:
                colon = i
            i += 1
        if depth != 0 or colon < 0:
            raise DslError("malformed sum(...) macro", lineno)
        var = text[start:colon].strip()
        if not var.isidentifier():
            raise DslError(f"bad sum variable {var!r}", lineno)
        body = text[colon + 1 : i]
        expanded = "(" + "+".join(
            "(" + body.replace("{" + var + "}", str(d)) + ")" for d in range(4)
        ) + ")"
        text = text[: m.start()] + expanded + text[i + 1 :]


_CMP_OPS = ("<=", ">=", "!=", "<", ">", "=")


def _eval_condition(cond: str, env: Mapping[str, int], lineno: int) -> bool:
    def atom(tok: str):
        tok = tok.strip()
        if tok.startswith("(") and tok.endswith(")"):
            return tuple(atom(t) for t in tok[1:-1].split(","))
        if tok.isdigit():
            return int(tok)
        if tok in env:
            return env[tok]
        raise DslError(f"unknown index variable {tok!r} in condition", lineno)

    for clause in cond.split(" and "):
        clause = clause.strip()
        for op in _CMP_OPS:
            if op in clause:
                left, right = clause.split(op, 1)
                a, b = atom(left), atom(right)
                ok = {
                    "<": a < b,
                    "<=": a <= b,
                    ">": a > b,
                    ">=": a >= b,
                    "!=": a != b,
                    "=": a == b,
                }[op]
                if not ok:
                    return False
                break
        else:
            raise DslError(f"cannot parse condition clause {clause!r}", lineno)
    return True


def _expand_foreach(line: str, lineno: int) -> list[str]:
    stripped = line.strip()
    if not stripped.startswith("foreach "):
        return [_expand_sums(line, lineno)]
    head, sep, body = stripped[len("foreach ") :].partition(":")
    if not sep:
        raise DslError("foreach needs ':' before the template line", lineno)
    head = head.strip()
    if " where " in head:
        var_part, cond = head.split(" where ", 1)
    else:
        var_part, cond = head, ""
    variables = [v for v in re.split(r"[,\s]+", var_part.strip()) if v]
    if not variables or not all(v.isidentifier() for v in variables):
        raise DslError(f"bad foreach variables {var_part!r}", lineno)
    out = []
    from itertools import product

    for values in product(range(4), repeat=len(variables)):
        env = dict(zip(variables, values))
        if cond and not _eval_condition(cond, env, lineno):
            continue
        inst = body
        for v, d in env.items():
            inst = inst.replace("{" + v + "}", str(d))
        out.append(_expand_sums(inst, lineno))
    return out


# ---------------------------------------------------------------------------
# Expression parser (over already-expanded text)
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[()+\-*^,\[\]=]))"
)


def _tokenize(text: str, lineno: int) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise DslError(f"cannot tokenize near {rest[:12]!r}", lineno, pos + 1)
        for kind in ("int", "name", "punct"):
            val = m.group(kind)
            if val is not None:
                tokens.append((kind, val, m.start(kind) + 1))
                break
        pos = m.end()
    return tokens


class _ExprParser:
    """Recursive-descent parser producing Elements (free words)."""

    def __init__(self, tokens, lineno: int, symbols: "_SymbolTable"):
        self.tokens = tokens
        self.pos = 0
        self.lineno = lineno
        self.symbols = symbols

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise DslError("unexpected end of expression", self.lineno)
        self.pos += 1
        return tok

    def expect(self, value: str):
        tok = self.next()
        if tok[1] != value:
            raise DslError(f"expected {value!r}, found {tok[1]!r}", self.lineno, tok[2])

    def done(self) -> bool:
        return self.pos >= len(self.tokens)

    def parse(self) -> Element:
        e = self.expr()
        if not self.done():
            tok = self.peek()
            raise DslError(f"trailing input {tok[1]!r}", self.lineno, tok[2])
        return e

    def expr(self) -> Element:
        out = self.term()
        while (tok := self.peek()) is not None and tok[1] in "+-":
            self.next()
            rhs = self.term()
            out = out + rhs if tok[1] == "+" else out - rhs
        return out

    def term(self) -> Element:
        out = self.factor()
        while (tok := self.peek()) is not None and tok[1] == "*":
            self.next()
            out = _free_mul(out, self.factor(), self.lineno)
        return out

    def factor(self) -> Element:
        tok = self.peek()
        if tok is not None and tok[1] in "+-":
            self.next()
            inner = self.factor()
            return inner if tok[1] == "+" else -inner
        return self.power()

    def power(self) -> Element:
        base = self.atom()
        if (tok := self.peek()) is not None and tok[1] == "^":
            self.next()
            exp_tok = self.next()
            if exp_tok[0] != "int":
                raise DslError("exponent must be a nonnegative integer", self.lineno, exp_tok[2])
            out = Element({(): ONE})
            for _ in range(int(exp_tok[1])):
                out = _free_mul(out, base, self.lineno)
            return out
        return base

    def atom(self) -> Element:
        tok = self.next()
        kind, val, col = tok
        if kind == "int":
            return Element({(): Scalar.of(int(val))})
        if kind == "frac":
            p, q = val.split("/")
            return Element({(): Scalar.rational(int(p), int(q))})
        if kind == "punct" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "name":
            return self.named_atom(val, col)
        raise DslError(f"unexpected token {val!r}", self.lineno, col)

    def named_atom(self, name: str, col: int) -> Element:
        if name == "i":
            return Element({(): Scalar.i()})
        if name == "kappa":
            return Element({(): Scalar.kappa()})
        if name == "conj":
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return _free_conj(inner, self.symbols, self.lineno)
        if name in ("g", "eps"):
            self.expect("(")
            idx = [self.next()]
            while (tok := self.peek()) is not None and tok[1] == ",":
                self.next()
                idx.append(self.next())
            self.expect(")")
            if any(t[0] != "int" for t in idx):
                raise DslError(f"{name}(...) takes integer indices", self.lineno, col)
            vals = [int(t[1]) for t in idx]
            if name == "g":
                if len(vals) != 2:
                    raise DslError("g(...) takes two indices", self.lineno, col)
                return Element({(): Scalar.of(metric(*vals))})
            if len(vals) != 4:
                raise DslError("eps(...) takes four indices", self.lineno, col)
            return Element({(): Scalar.of(epsilon(*vals))})
        return self.symbols.resolve(name, self.lineno, col)


def _free_mul(a: Element, b: Element, lineno: int) -> Element:
    out = Element()
    for w1, c1 in a.terms():
        for w2, c2 in b.terms():
            out = out + Element({w1 + w2: c1 * c2})
    return out


def _free_conj(e: Element, symbols: "_SymbolTable", lineno: int) -> Element:
    out = Element()
    for w, c in e.terms():
        for name in w:
            if not symbols.hermitian.get(name, True):
                raise DslError(
                    f"conj(...) over non-hermitian generator {name!r} is not supported",
                    lineno,
                )
        out = out + Element({tuple(reversed(w)): c.conjugate()})
    return out


class _SymbolTable:
    def __init__(self, doc: AlgebraDocument):
        self.gen_names = [n for n, _ in doc.generators]
        self.gen_set = set(self.gen_names)
        self.hermitian = dict(doc.generators)
        self.antisym: dict[str, dict[tuple[int, int], str]] = {}
        for base, (kind, members) in doc.families.items():
            if kind == "antisym":
                pairs = [(a, b) for a in range(4) for b in range(a + 1, 4)]
                self.antisym[base] = dict(zip(pairs, members))

    def resolve(self, name: str, lineno: int, col: int) -> Element:
        if name in self.gen_set:
            return Element({(name,): ONE})
        if name in MOMENTUM_NAMES:
            return Element({(): momentum_symbol(name)})
        for base, mapping in self.antisym.items():
            if name.startswith(base):
                rest = name[len(base) :]
                if len(rest) == 2 and rest.isdigit():
                    a, b = int(rest[0]), int(rest[1])
                    if a == b:
                        return Element()
                    if (a, b) in mapping:
                        return Element({(mapping[(a, b)],): ONE})
                    if (b, a) in mapping:
                        return -Element({(mapping[(b, a)],): ONE})
        raise DslError(f"unknown symbol {name!r}", lineno, col)


# ---------------------------------------------------------------------------
# Document parsing
# ---------------------------------------------------------------------------

_BLOCK_KEYWORDS = ("relations", "tau", "lorentz", "cocycle")


def parse_document(text: str) -> AlgebraDocument:
    """Parse an .alg document with line/column diagnostics."""
    name = None
    generators: list[tuple[str, bool]] = []
    nonhermitian: set[str] = set()
    families: dict[str, tuple[str, tuple[str, ...]]] = {}
    blocks: dict[str, list[tuple[int, str]]] = {}

    current_block: str | None = None
    pending = ""
    pending_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if pending:
            line = pending + " " + line.strip()
            lineno = pending_line
            pending = ""
        if line.endswith("\\"):
            pending = line[:-1].rstrip()
            pending_line = lineno
            continue
        if not line.strip():
            continue
        stripped = line.strip()
        if current_block is not None:
            if stripped == "end":
                current_block = None
            else:
                blocks[current_block].append((lineno, stripped))
            continue
        head, _, rest = stripped.partition(" ")
        if head == "algebra":
            if name is not None:
                raise DslError("duplicate algebra header", lineno)
            name = rest.strip()
            if not name:
                raise DslError("algebra header needs a name", lineno)
        elif head == "generators":
            for g in rest.split():
                generators.append((g, True))
        elif head == "nonhermitian":
            nonhermitian.update(rest.split())
        elif head == "family":
            parts = rest.split()
            if len(parts) < 2 or parts[1] not in ("vector", "antisym"):
                raise DslError("family BASE vector|antisym MEMBERS...", lineno)
            base, kind, *members = parts
            want = 4 if kind == "vector" else 6
            if len(members) != want:
                raise DslError(f"{kind} family needs {want} members", lineno)
            families[base] = (kind, tuple(members))
        elif head in _BLOCK_KEYWORDS:
            if head in blocks:
                raise DslError(f"duplicate block {head!r}", lineno)
            blocks[head] = []
            current_block = head
        else:
            raise DslError(f"unknown declaration {head!r}", lineno)
    if pending:
        raise DslError("unterminated line continuation", pending_line)
    if current_block is not None:
        raise DslError(f"block {current_block!r} is not closed with 'end'", 0)
    if name is None:
        raise DslError("missing 'algebra NAME' header", 1)
    if not generators:
        raise DslError("missing generators", 1)
    generators = [(g, g not in nonhermitian) for g, _ in generators]
    seen = set()
    for g, _ in generators:
        if g in seen:
            raise DslError(f"duplicate generator {g!r}", 1)
        seen.add(g)
    for base, (kind, members) in families.items():
        for m in members:
            if m not in seen:
                raise DslError(f"family {base!r} references unknown generator {m!r}", 1)

    doc = AlgebraDocument(name=name, generators=generators, families=families)
    symbols = _SymbolTable(doc)
    prec = {g: i for i, (g, _) in enumerate(generators)}

    for lineno, line in blocks.get("relations", []):
        for inst in _expand_foreach(line, lineno):
            _parse_relation_line(inst, lineno, doc, symbols, prec)
    if "tau" in blocks:
        doc.tau = {}
        for lineno, line in blocks["tau"]:
            for inst in _expand_foreach(line, lineno):
                _parse_assignment_line(inst, lineno, doc.tau, symbols, "tau")
    if "lorentz" in blocks:
        doc.lorentz = {}
        for lineno, line in blocks["lorentz"]:
            target, _, kind = line.partition("=")
            target, kind = target.strip(), kind.strip()
            if kind not in LORENTZ_KINDS:
                raise DslError(f"lorentz kind must be one of {LORENTZ_KINDS}", lineno)
            if target in doc.lorentz:
                raise DslError(f"duplicate lorentz entry for {target!r}", lineno)
            doc.lorentz[target] = kind
    if "cocycle" in blocks:
        lam: dict[str, Element] = {}
        c_i: dict[tuple[str, str], Element] = {}
        for lineno, line in blocks["cocycle"]:
            for inst in _expand_foreach(line, lineno):
                _parse_cocycle_line(inst, lineno, doc, lam, c_i, symbols)
        doc.lam = lam or None
        doc.c_i = c_i or None
    return doc


def _parse_relation_line(line, lineno, doc, symbols, prec):
    m = re.match(r"\s*\[\s*([A-Za-z_0-9]+)\s*,\s*([A-Za-z_0-9]+)\s*\]\s*=(.*)", line)
    if m is None:
        raise DslError("relation lines read '[A, B] = expr'", lineno)
    a, b, rhs_text = m.group(1), m.group(2), m.group(3)

    def gen_ref(tok: str) -> str:
        e = symbols.resolve(tok, lineno, 1)
        terms = list(e.terms())
        if len(terms) != 1 or len(terms[0][0]) != 1 or terms[0][1] != ONE:
            raise DslError(
                f"relation left side must name plain generators, got {tok!r}", lineno
            )
        return terms[0][0][0]

    a_name = gen_ref(a)
    b_name = gen_ref(b)
    if a_name == b_name:
        raise DslError(f"relation [{a_name}, {a_name}] is not allowed", lineno)
    value = _parse_expr_text(rhs_text, lineno, symbols)
    if prec[a_name] > prec[b_name]:
        key, corr = (a_name, b_name), value
    else:
        key, corr = (b_name, a_name), -value
    if key in doc.relations:
        raise DslError(f"duplicate relation for pair ({a_name}, {b_name})", lineno)
    for w, _c in corr.terms():
        if len(w) > 2:
            raise DslError(
                f"relation value for [{a_name},{b_name}] has a word longer than 2",
                lineno,
            )
        if len(w) == 2 and (prec[w[0]], prec[w[1]]) >= (prec[key[0]], prec[key[1]]):
            raise DslError(
                f"relation value for [{a_name},{b_name}] is not lower in the "
                "term order (swap-plus-lower shape violated)",
                lineno,
            )
    doc.relations[key] = corr


def _parse_assignment_line(line, lineno, table, symbols, what):
    target, sep, rhs = line.partition("=")
    if not sep:
        raise DslError(f"{what} lines read 'GEN = expr'", lineno)
    target = target.strip()
    if target not in symbols.gen_set:
        raise DslError(f"{what} entry for unknown generator {target!r}", lineno)
    if target in table:
        raise DslError(f"duplicate {what} entry for {target!r}", lineno)
    table[target] = _parse_expr_text(rhs, lineno, symbols)


def _parse_cocycle_line(line, lineno, doc, lam, c_i, symbols):
    parts = line.split("=", 1)
    if len(parts) != 2:
        raise DslError("cocycle lines read 'gamma = e', 'lambda G = e', 'cI G H = e'", lineno)
    head, rhs = parts[0].split(), parts[1]
    if head == ["gamma"]:
        if doc.gamma is not None:
            raise DslError("duplicate gamma entry", lineno)
        doc.gamma = _parse_expr_text(rhs, lineno, symbols)
    elif len(head) == 2 and head[0] == "lambda":
        if head[1] not in symbols.gen_set:
            raise DslError(f"lambda entry for unknown generator {head[1]!r}", lineno)
        if head[1] in lam:
            raise DslError(f"duplicate lambda entry for {head[1]!r}", lineno)
        lam[head[1]] = _parse_expr_text(rhs, lineno, symbols)
    elif len(head) == 3 and head[0] == "cI":
        pair = (head[1], head[2])
        for g in pair:
            if g not in symbols.gen_set:
                raise DslError(f"cI entry for unknown generator {g!r}", lineno)
        if pair in c_i:
            raise DslError(f"duplicate cI entry for {pair}", lineno)
        c_i[pair] = _parse_expr_text(rhs, lineno, symbols)
    else:
        raise DslError(f"unknown cocycle entry {' '.join(head)!r}", lineno)


_FRACTION_RE = re.compile(r"(?<![\w^])(\d+)\s*/\s*(\d+)")


def _parse_expr_text(text: str, lineno: int, symbols: _SymbolTable) -> Element:
    # rational literals p/q become (p * 1/q) scalars before tokenizing;
    # '/' appears in no other position of the grammar
    def repl(m: re.Match) -> str:
        return f"__frac_{m.group(1)}_{m.group(2)}__"

    folded = _FRACTION_RE.sub(repl, text)
    if "/" in folded:
        raise DslError("'/' is only allowed inside rational literals p/q", lineno)
    fixed = []
    for kind, val, col in _tokenize(folded, lineno):
        m = re.fullmatch(r"__frac_(\d+)_(\d+)__", val)
        if m:
            fixed.append(("frac", f"{m.group(1)}/{m.group(2)}", col))
        else:
            fixed.append((kind, val, col))
    return _ExprParser(fixed, lineno, symbols).parse()


# ---------------------------------------------------------------------------
# Canonical printing
# ---------------------------------------------------------------------------


def print_document(doc: AlgebraDocument) -> str:
    """Deterministic canonical rendering; reparsing reproduces the document."""
    prec = {g: i for i, (g, _) in enumerate(doc.generators)}

    def render(e: Element) -> str:
        return format_element(e, order_key=lambda w: (len(w), tuple(prec.get(n, 0) for n in w)))

    lines = [f"algebra {doc.name}"]
    lines.append("generators " + " ".join(g for g, _ in doc.generators))
    nh = [g for g, h in doc.generators if not h]
    if nh:
        lines.append("nonhermitian " + " ".join(nh))
    for base in sorted(doc.families):
        kind, members = doc.families[base]
        lines.append(f"family {base} {kind} " + " ".join(members))
    lines.append("relations")
    for hi, lo in sorted(doc.relations, key=lambda p: (prec[p[0]], prec[p[1]])):
        lines.append(f"  [{hi}, {lo}] = {render(doc.relations[(hi, lo)])}")
    lines.append("end")
    if doc.tau is not None:
        lines.append("tau")
        for g in sorted(doc.tau, key=lambda n: prec[n]):
            lines.append(f"  {g} = {render(doc.tau[g])}")
        lines.append("end")
    if doc.lorentz is not None:
        lines.append("lorentz")
        for target in sorted(doc.lorentz):
            lines.append(f"  {target} = {doc.lorentz[target]}")
        lines.append("end")
    if doc.gamma is not None or doc.lam is not None or doc.c_i is not None:
        lines.append("cocycle")
        if doc.gamma is not None:
            lines.append(f"  gamma = {render(doc.gamma)}")
        for g in sorted(doc.lam or (), key=lambda n: prec[n]):
            lines.append(f"  lambda {g} = {render(doc.lam[g])}")
        for a, b in sorted(doc.c_i or (), key=lambda p: (prec[p[0]], prec[p[1]])):
            lines.append(f"  cI {a} {b} = {render(doc.c_i[(a, b)])}")
        lines.append("end")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Compilation to a runnable fixture
# ---------------------------------------------------------------------------


def _momentum_binding(e: Element, bindings: Mapping[str, Momentum]) -> Element:
    """Substitute document momentum symbols by actual momentum components."""
    table: dict[str, Scalar] = {}
    for base, mom in bindings.items():
        for mu in range(4):
            table[f"{base}{mu}"] = mom[mu]
    return e.map_coefficients(lambda s: s.substitute(table))


def build_fixture(doc: AlgebraDocument, document_text: str | None = None) -> Fixture:
    """Compile a document into an unvalidated Fixture (suites run the gates)."""
    from .ncalg import Generator

    gens = [Generator(g, h) for g, h in doc.generators]
    family = Algebra(doc.name, gens, doc.relations)

    coordinates: list[str] = []
    if doc.lorentz:
        for base, kind in doc.lorentz.items():
            if kind == "coordinate":
                fam = doc.families.get(base)
                if fam is None or fam[0] != "vector":
                    raise DslError(f"coordinate entry {base!r} needs a vector family")
                coordinates = list(fam[1])

    fixture = Fixture(name=doc.name, family=family, document_text=document_text)
    fixture.coordinates = coordinates

    if doc.tau is not None:
        inv_names = [g for g, _ in doc.generators if g in doc.tau]
        invariant = family.subalgebra(f"{doc.name}/invariant", inv_names)
        invariant0 = invariant.specialize_kappa(0)
        table = {}
        for g, expr in doc.tau.items():
            def fn(k: Momentum, expr=expr) -> Element:
                return invariant0.normal_form(_momentum_binding(expr, {"k": k}))

            table[g] = fn
        fixture.invariant = invariant
        fixture.invariant0 = invariant0
        fixture.tau = TauAction(invariant0, table)

    if doc.lorentz and fixture.invariant0 is not None:
        table = {}
        for base, kind in doc.lorentz.items():
            if kind == "vector" and base in doc.families:
                members = doc.families[base][1]
                if all(m in fixture.invariant0.generator_names() for m in members):
                    table.update(vector_action(list(members)))
            elif kind == "tensor2" and base in doc.families:
                table.update(tensor2_action(base))
            elif kind == "invariant":
                table[base] = lambda lam, base=base: Element({(base,): ONE})
        if set(table) == set(fixture.invariant0.generator_names()):
            fixture.lorentz = LorentzAction(fixture.invariant0, table)

    if fixture.tau is not None and (doc.gamma is not None or doc.lam or doc.c_i):
        gamma_fn = None
        if doc.gamma is not None:
            inv0 = fixture.invariant0

            def gamma_fn(k: Momentum, l: Momentum, expr=doc.gamma) -> Element:
                return inv0.normal_form(_momentum_binding(expr, {"k": k, "l": l}))

        lam_table = None
        if doc.lam:
            inv0 = fixture.invariant0
            lam_table = {
                g: (lambda k, expr=expr: inv0.normal_form(_momentum_binding(expr, {"k": k})))
                for g, expr in doc.lam.items()
            }
        c_i_data = None
        if doc.c_i:
            c_i_data = _upgrade_c_i(doc.c_i, fixture) or dict(doc.c_i)
        fixture.data = CocycleData(gamma=gamma_fn, lam=lam_table, c_i=c_i_data)
    return fixture


def _upgrade_c_i(table: Mapping[tuple[str, str], Element], fixture: Fixture):
    """If the supplied pair table matches the engine's symmetric-basis
    cocycle of this family, return the total callable (giving the cochain
    machinery values on products); otherwise keep the table."""
    invariant = fixture.invariant
    if invariant is None:
        return None
    try:
        for (a, b), want in table.items():
            got = symmetric_cocycle(invariant.gen(a), invariant.gen(b), invariant)
            if got != invariant.normal_form(want):
                return None
    except ValueError:
        return None
    return lambda f, g: symmetric_cocycle(f, g, invariant)
