"""Script language for declaring rings, elements, modules and checks.

One `.ezd` file is a sequence of statements:

    ring R = GF(101)[x,y] / (x*y, x^2 - y^2);
    elem ex = x in R;
    module M = modx(free(R, 1), ex);
    check ezd(ex, ey, free(R, 1)) bound 10;

'#' starts a line comment.  Parsing is strict with line/column errors,
and pretty_print(parse(text)) reparses to an equal Script.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import Algebra, Element
from .groebner import (
    InfiniteDimensionalError,
    NonLocalError,
    PairBudgetExceeded,
    QuotientPresentation,
)
from .linalg import Field
from .module import (
    Module,
    annihilator_submodule,
    dual_k,
    free_module,
    hom_module,
    is_isomorphic,
    Iso,
    NotIso,
    regular_module,
    scale_quotient,
    tensor_module,
)
from .poly import DEGREVLEX, LEX, PolyRing, Polynomial
from .resolution import ResolutionBudgetExceeded
from .classes import (
    DEFAULT_BOUND,
    CertifiedAll,
    HoldsUpTo,
    NotSemidualizingError,
    in_A_C,
    in_B_C,
    in_G_C,
    is_ezd_pair,
    is_semidualizing,
)

__all__ = [
    "DslError",
    "Script",
    "RingDecl",
    "ElemDecl",
    "ModuleDecl",
    "CheckStmt",
    "ModuleExpr",
    "parse_script",
    "pretty_print",
    "CheckResult",
    "run_script",
]

CHECK_NAMES = (
    "ezd",
    "semidualizing",
    "in_gc",
    "in_ac",
    "in_bc",
    "isomorphic",
    "not_isomorphic",
    "dim",
)

MODULE_OPS = {
    "free": 2,  # free(R, n)
    "quot": -2,  # quot(M, e1, ..., ek): quotient by the elements' images
    "hom": 2,
    "tensor": 2,
    "dualk": 1,
    "ann": 2,  # ann(M, e): annihilator submodule of e
    "modx": 2,  # modx(M, e): M / e.M
    "omega": 1,  # omega(R): dual_k of the regular module
}


class DslError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class RingDecl:
    name: str
    p: Optional[int]  # None means QQ
    variables: tuple
    order: str  # "degrevlex" | "lex"
    generators: tuple  # of poly term-tuples


@dataclass(frozen=True)
class ElemDecl:
    name: str
    poly: tuple
    ring: str


@dataclass(frozen=True)
class ModuleExpr:
    op: str  # one of MODULE_OPS or "name"
    args: tuple  # nested ModuleExpr, str names, or ints


@dataclass(frozen=True)
class ModuleDecl:
    name: str
    expr: ModuleExpr


@dataclass(frozen=True)
class CheckStmt:
    name: str
    args: tuple  # ModuleExpr / str / int per check
    bound: Optional[int]


@dataclass(frozen=True)
class Script:
    statements: tuple


# polynomials are stored as sorted tuples of (monomial, coefficient) with
# integer coefficients, monomials as exponent tuples over the ring variables


# ---------------------------------------------------------------------------
# tokenizer

_SYMBOLS = ("(", ")", "[", "]", ",", ";", "=", "/", "^", "*", "+", "-")


@dataclass(frozen=True)
class _Token:
    kind: str  # "name" | "int" | "sym" | "eof"
    value: str
    line: int
    col: int


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
        elif ch in " \t\r":
            i += 1
            col += 1
        elif ch == "#":
            while i < n and text[i] != "\n":
                i += 1
        elif ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(_Token("int", text[start:i], line, col))
            col += i - start
        elif ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("name", text[start:i], line, col))
            col += i - start
        elif ch in _SYMBOLS:
            tokens.append(_Token("sym", ch, line, col))
            i += 1
            col += 1
        else:
            raise DslError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: Optional[_Token] = None):
        tok = tok or self.peek()
        raise DslError(message, tok.line, tok.col)

    def expect(self, kind: str, value: Optional[str] = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind or (value is not None and tok.value != value):
            want = value if value is not None else kind
            got = tok.value or tok.kind
            self.error(f"expected {want!r}, found {got!r}")
        return self.next()

    def accept(self, kind: str, value: Optional[str] = None) -> Optional[_Token]:
        tok = self.peek()
        if tok.kind == kind and (value is None or tok.value == value):
            return self.next()
        return None

    # -- grammar ------------------------------------------------------
    def script(self) -> Script:
        stmts = []
        while self.peek().kind != "eof":
            stmts.append(self.statement())
        return Script(tuple(stmts))

    def statement(self):
        tok = self.peek()
        if tok.kind != "name":
            self.error("expected a statement keyword")
        if tok.value == "ring":
            return self.ring_decl()
        if tok.value == "elem":
            return self.elem_decl()
        if tok.value == "module":
            return self.module_decl()
        if tok.value == "check":
            return self.check_stmt()
        self.error(f"unknown statement keyword {tok.value!r}")

    def ring_decl(self) -> RingDecl:
        self.expect("name", "ring")
        name = self.expect("name").value
        self.expect("sym", "=")
        p = self.field_spec()
        self.expect("sym", "[")
        variables = [self.expect("name").value]
        while self.accept("sym", ","):
            variables.append(self.expect("name").value)
        self.expect("sym", "]")
        order = "degrevlex"
        if self.peek().kind == "name" and self.peek().value == "order":
            self.next()
            tok = self.expect("name")
            if tok.value not in ("degrevlex", "lex"):
                self.error(f"unknown monomial order {tok.value!r}", tok)
            order = tok.value
        self.expect("sym", "/")
        self.expect("sym", "(")
        gens = []
        if not self.accept("sym", ")"):
            gens.append(self.polynomial(variables))
            while self.accept("sym", ","):
                gens.append(self.polynomial(variables))
            self.expect("sym", ")")
        self.expect("sym", ";")
        return RingDecl(name, p, tuple(variables), order, tuple(gens))

    def field_spec(self) -> Optional[int]:
        tok = self.expect("name")
        if tok.value == "QQ":
            return None
        if tok.value == "GF":
            self.expect("sym", "(")
            ptok = self.expect("int")
            self.expect("sym", ")")
            p = int(ptok.value)
            if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
                self.error(f"{p} is not prime", ptok)
            return p
        self.error(f"expected GF(p) or QQ, found {tok.value!r}", tok)

    def polynomial(self, variables) -> tuple:
        """Sum of signed terms; returns canonical sorted ((monomial, coeff), ...)."""
        coeffs: dict = {}
        sign = 1
        if self.accept("sym", "-"):
            sign = -1
        while True:
            mono, c = self.term(variables)
            coeffs[mono] = coeffs.get(mono, 0) + sign * c
            if self.accept("sym", "+"):
                sign = 1
            elif self.accept("sym", "-"):
                sign = -1
            else:
                break
        items = [(m, c) for m, c in coeffs.items() if c != 0]
        items.sort(key=lambda mc: (sum(mc[0]), mc[0]), reverse=True)
        return tuple(items)

    def term(self, variables):
        """INT? ("*"? var ("^" INT)?)* as one monomial with coefficient."""
        coeff = 1
        expo = [0] * len(variables)
        saw_factor = False
        tok = self.peek()
        if tok.kind == "int":
            coeff = int(self.next().value)
            saw_factor = True
            if not self.accept("sym", "*"):
                return tuple(expo), coeff
        while True:
            tok = self.peek()
            if tok.kind != "name":
                break
            if tok.value not in variables:
                self.error(f"unknown variable {tok.value!r}", tok)
            self.next()
            e = 1
            if self.accept("sym", "^"):
                e = int(self.expect("int").value)
            expo[variables.index(tok.value)] += e
            saw_factor = True
            if not self.accept("sym", "*"):
                break
        if not saw_factor:
            self.error("expected a term")
        return tuple(expo), coeff

    def elem_decl(self) -> ElemDecl:
        self.expect("name", "elem")
        name = self.expect("name").value
        self.expect("sym", "=")
        # the ring name comes after "in", so collect tokens lazily: parse the
        # polynomial once the ring (and its variables) is known.  To keep the
        # grammar one-pass, require the form  elem NAME = <poly> in RING ;
        # and parse the poly against the variables of the named ring at
        # execution time.  Syntactically we capture the raw token span.
        start = self.pos
        depth = 0
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                self.error("unterminated elem declaration")
            if tok.kind == "name" and tok.value == "in" and depth == 0:
                break
            if tok.kind == "sym" and tok.value == "(":
                depth += 1
            if tok.kind == "sym" and tok.value == ")":
                depth -= 1
            self.next()
        span = self.tokens[start : self.pos]
        self.expect("name", "in")
        ring = self.expect("name").value
        self.expect("sym", ";")
        # positions are dropped so pretty-printing reparses to an equal tree
        return ElemDecl(name, _RawPoly(tuple((t.kind, t.value) for t in span)), ring)

    def module_decl(self) -> ModuleDecl:
        self.expect("name", "module")
        name = self.expect("name").value
        self.expect("sym", "=")
        expr = self.module_expr()
        self.expect("sym", ";")
        return ModuleDecl(name, expr)

    def module_expr(self) -> ModuleExpr:
        tok = self.expect("name")
        if tok.value not in MODULE_OPS:
            if self.peek().kind == "sym" and self.peek().value == "(":
                self.error(f"unknown module constructor {tok.value!r}", tok)
            return ModuleExpr("name", (tok.value,))
        op = tok.value
        self.expect("sym", "(")
        args = []
        if not self.accept("sym", ")"):
            args.append(self.module_arg())
            while self.accept("sym", ","):
                args.append(self.module_arg())
            self.expect("sym", ")")
        arity = MODULE_OPS[op]
        if arity >= 0 and len(args) != arity:
            self.error(f"{op} expects {arity} argument(s), got {len(args)}", tok)
        if arity < 0 and len(args) < -arity:
            self.error(f"{op} expects at least {-arity} argument(s)", tok)
        return ModuleExpr(op, tuple(args))

    def module_arg(self):
        tok = self.peek()
        if tok.kind == "int":
            return int(self.next().value)
        return self.module_expr()

    def check_stmt(self) -> CheckStmt:
        self.expect("name", "check")
        tok = self.expect("name")
        if tok.value not in CHECK_NAMES:
            self.error(f"unknown check {tok.value!r}", tok)
        name = tok.value
        self.expect("sym", "(")
        args = []
        if not self.accept("sym", ")"):
            args.append(self.module_arg())
            while self.accept("sym", ","):
                args.append(self.module_arg())
            self.expect("sym", ")")
        bound = None
        if self.peek().kind == "name" and self.peek().value == "bound":
            self.next()
            bound = int(self.expect("int").value)
        self.expect("sym", ";")
        return CheckStmt(name, tuple(args), bound)


@dataclass(frozen=True)
class _RawPoly:
    """Token span of an element polynomial, resolved against its ring later.

    Stored as (kind, value) pairs without source positions."""

    tokens: tuple

    def text(self) -> str:
        out = []
        for kind, value in self.tokens:
            if out and kind in ("name", "int") and out[-1][-1].isalnum():
                out.append(" " + value)
            else:
                out.append(value)
        return "".join(out)


def parse_script(text: str) -> Script:
    return _Parser(text).script()


# ---------------------------------------------------------------------------
# pretty printer


def _format_poly(terms, variables) -> str:
    if isinstance(terms, _RawPoly):
        return terms.text()
    if not terms:
        return "0"
    parts = []
    for mono, coeff in terms:
        factors = []
        for v, e in zip(variables, mono):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append(f"{v}^{e}")
        body = "*".join(factors)
        mag = abs(coeff)
        if not body:
            chunk = str(mag)
        elif mag == 1:
            chunk = body
        else:
            chunk = f"{mag}*{body}"
        if not parts:
            parts.append(chunk if coeff > 0 else f"-{chunk}")
        else:
            parts.append(f"+ {chunk}" if coeff > 0 else f"- {chunk}")
    return " ".join(parts)


def _format_module_expr(expr) -> str:
    if isinstance(expr, int):
        return str(expr)
    if expr.op == "name":
        return expr.args[0]
    inner = ", ".join(_format_module_expr(a) for a in expr.args)
    return f"{expr.op}({inner})"


def pretty_print(script: Script) -> str:
    lines = []
    for stmt in script.statements:
        if isinstance(stmt, RingDecl):
            fld = "QQ" if stmt.p is None else f"GF({stmt.p})"
            order = "" if stmt.order == "degrevlex" else f" order {stmt.order}"
            gens = ", ".join(_format_poly(g, stmt.variables) for g in stmt.generators)
            lines.append(
                f"ring {stmt.name} = {fld}[{','.join(stmt.variables)}]{order} / ({gens});"
            )
        elif isinstance(stmt, ElemDecl):
            lines.append(f"elem {stmt.name} = {stmt.poly.text()} in {stmt.ring};")
        elif isinstance(stmt, ModuleDecl):
            lines.append(f"module {stmt.name} = {_format_module_expr(stmt.expr)};")
        elif isinstance(stmt, CheckStmt):
            args = ", ".join(_format_module_expr(a) for a in stmt.args)
            tail = "" if stmt.bound is None else f" bound {stmt.bound}"
            lines.append(f"check {stmt.name}({args}){tail};")
        else:
            raise TypeError(f"unknown statement {stmt!r}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# interpreter


@dataclass
class CheckResult:
    id: str
    status: str  # "pass" | "fail" | "inconclusive"
    witness: Optional[str]
    tables: Optional[dict]
    millis: int


class _Env:
    def __init__(self):
        self.rings: dict = {}
        self.elems: dict = {}
        self.modules: dict = {}


def _terms_to_polynomial(ring: PolyRing, terms) -> Polynomial:
    coeffs = {}
    for mono, coeff in terms:
        c = Fraction(coeff) if ring.field.p is None else coeff % ring.field.p
        coeffs[mono] = c
    return ring.poly(coeffs)


def _build_ring(decl: RingDecl) -> Algebra:
    field = Field(decl.p)
    order = DEGREVLEX if decl.order == "degrevlex" else LEX
    ring = PolyRing(field, list(decl.variables), order)
    gens = [_terms_to_polynomial(ring, g) for g in decl.generators]
    return Algebra(QuotientPresentation(ring, gens))


def _resolve_elem(env: _Env, decl: ElemDecl) -> Element:
    algebra = env.rings.get(decl.ring)
    if algebra is None:
        raise KeyError(f"undefined ring {decl.ring!r} in elem {decl.name!r}")
    parser = _Parser.__new__(_Parser)
    parser.tokens = [
        _Token(kind, value, 0, 0) for kind, value in decl.poly.tokens
    ] + [_Token("eof", "", 0, 0)]
    parser.pos = 0
    terms = parser.polynomial(list(algebra.ring.names))
    if parser.peek().kind != "eof":
        tok = parser.peek()
        raise DslError("trailing tokens in element polynomial", tok.line, tok.col)
    return algebra.element_from_poly(_terms_to_polynomial(algebra.ring, terms))


def _eval_module(env: _Env, expr) -> Module:
    if isinstance(expr, int):
        raise TypeError("expected a module expression, found an integer")
    op, args = expr.op, expr.args
    if op == "name":
        name = args[0]
        if name in env.modules:
            return env.modules[name]
        if name in env.rings:
            return regular_module(env.rings[name], label=name)
        raise KeyError(f"undefined module {name!r}")
    if op == "free":
        algebra = env.rings[args[0].args[0]]
        return free_module(algebra, args[1])
    if op == "omega":
        algebra = env.rings[args[0].args[0]]
        return dual_k(regular_module(algebra), label=f"omega({args[0].args[0]})")
    m = _eval_module(env, args[0])
    if op == "dualk":
        return dual_k(m)
    if op in ("hom", "tensor"):
        n = _eval_module(env, args[1])
        return hom_module(m, n) if op == "hom" else tensor_module(m, n)
    if op in ("ann", "modx", "quot"):
        elems = [env.elems[a.args[0]] for a in args[1:]]
        if op == "ann":
            return annihilator_submodule(m, elems[0])[0]
        if op == "modx":
            return scale_quotient(m, elems[0])[0]
        out = m
        for e in elems:
            out = scale_quotient(out, e)[0]
        return out
    raise ValueError(f"unknown module constructor {op!r}")


def _table_dict(tables: dict) -> dict:
    return {
        name: {"dims": list(t.dims), "bound": t.bound, "certified": t.certified_all_beyond}
        for name, t in tables.items()
    }


def _run_check(env: _Env, stmt: CheckStmt, default_bound: int, seed: int) -> CheckResult:
    bound = stmt.bound if stmt.bound is not None else default_bound
    label = f"{stmt.name}({', '.join(_format_module_expr(a) for a in stmt.args)})"
    start = time.monotonic()

    def done(status, witness=None, tables=None):
        millis = int((time.monotonic() - start) * 1000)
        return CheckResult(label, status, witness, tables, millis)

    try:
        if stmt.name == "ezd":
            x = env.elems[stmt.args[0].args[0]]
            y = env.elems[stmt.args[1].args[0]]
            m = _eval_module(env, stmt.args[2])
            rep = is_ezd_pair(x, y, m)
            if rep.holds:
                return done("pass")
            return done("fail", witness=", ".join(rep.failing_checks()))
        if stmt.name == "semidualizing":
            c = _eval_module(env, stmt.args[0])
            cert = is_semidualizing(c, bound)
            if cert.holds:
                status = "pass"
                witness = "certified" if cert.certified_all else f"up to bound {bound}"
                tables = _table_dict({"Ext(C,C)": cert.ext_table})
                return done(status, witness, tables)
            return done("fail", witness=cert.failure)
        if stmt.name in ("in_gc", "in_ac", "in_bc"):
            m = _eval_module(env, stmt.args[0])
            c = _eval_module(env, stmt.args[1])
            fn = {"in_gc": in_G_C, "in_ac": in_A_C, "in_bc": in_B_C}[stmt.name]
            rep = fn(m, c, bound)
            tables = _table_dict(rep.tables)
            if isinstance(rep.verdict, CertifiedAll):
                return done("pass", "certified", tables)
            if isinstance(rep.verdict, HoldsUpTo):
                return done("pass", f"up to bound {rep.verdict.bound}", tables)
            return done("fail", rep.verdict.witness, tables)
        if stmt.name in ("isomorphic", "not_isomorphic"):
            m = _eval_module(env, stmt.args[0])
            n = _eval_module(env, stmt.args[1])
            verdict = is_isomorphic(m, n, seed=seed)
            if isinstance(verdict, Iso):
                return done("pass" if stmt.name == "isomorphic" else "fail")
            if isinstance(verdict, NotIso):
                return done(
                    "fail" if stmt.name == "isomorphic" else "pass",
                    witness=verdict.reason,
                )
            return done("inconclusive", witness="isomorphism search exhausted")
        if stmt.name == "dim":
            m = _eval_module(env, stmt.args[0])
            expected = stmt.args[1]
            if m.dim == expected:
                return done("pass")
            return done("fail", witness=f"dim = {m.dim}, expected {expected}")
        raise ValueError(f"unknown check {stmt.name!r}")
    except (ResolutionBudgetExceeded, PairBudgetExceeded) as exc:
        return done("budget", witness=str(exc))
    except NotSemidualizingError as exc:
        return done("fail", witness=f"C is not semidualizing: {exc}")


def run_script(
    script: Script, default_bound: int = DEFAULT_BOUND, seed: int = 0
):
    """Execute a script; returns (environment, list of CheckResult)."""
    env = _Env()
    results = []
    for stmt in script.statements:
        if isinstance(stmt, RingDecl):
            env.rings[stmt.name] = _build_ring(stmt)
        elif isinstance(stmt, ElemDecl):
            env.elems[stmt.name] = _resolve_elem(env, stmt)
        elif isinstance(stmt, ModuleDecl):
            env.modules[stmt.name] = _eval_module(env, stmt.expr)
            env.modules[stmt.name].label = stmt.name
        elif isinstance(stmt, CheckStmt):
            results.append(_run_check(env, stmt, default_bound, seed))
    return env, results
