"""Term syntax, parser, evaluator, and window-based equation checking.

Grammar, loosest to tightest binding (arrow is right associative):

    equation := term ("≈" | "=") term
    term     := join ("->" term)?
    join     := meet ("\\/" meet)*
    meet     := mul ("/\\" mul)*
    mul      := unary ("*" unary)*
    unary    := "~" unary | "!" unary | INT "." unary | postfix
    postfix  := atom ("^" INT)*
    atom     := "bot" | "top" | IDENT | "(" term ")"

"~" is the involution and "!" is negation (x -> bot); the two coincide
on these algebras but both spellings parse.  The dual sum has no
concrete syntax; Oplus nodes render desugared as ~(~l * ~r).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from types import SimpleNamespace

from resilat import core, structure
from resilat.core import AlgebraParams, ApElem


class ParseError(ValueError):
    """Syntax error with the offending input position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class EvalError(ValueError):
    """Evaluation failure, e.g. an unbound variable."""


# ---------------------------------------------------------------------------
# Abstract syntax.

_IDENT_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


@dataclass(frozen=True)
class Term:
    pass


@dataclass(frozen=True)
class Var(Term):
    name: str

    def __post_init__(self) -> None:
        if not _IDENT_RE.match(self.name):
            raise ValueError(f"bad variable name {self.name!r}")


@dataclass(frozen=True)
class Bot(Term):
    pass


@dataclass(frozen=True)
class Top(Term):
    pass


@dataclass(frozen=True)
class Star(Term):
    l: Term
    r: Term


@dataclass(frozen=True)
class Arrow(Term):
    l: Term
    r: Term


@dataclass(frozen=True)
class Meet(Term):
    l: Term
    r: Term


@dataclass(frozen=True)
class Join(Term):
    l: Term
    r: Term


@dataclass(frozen=True)
class Neg(Term):
    t: Term


@dataclass(frozen=True)
class Inv(Term):
    t: Term


@dataclass(frozen=True)
class Oplus(Term):
    l: Term
    r: Term


@dataclass(frozen=True)
class Pow(Term):
    t: Term
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"negative exponent {self.k}")


@dataclass(frozen=True)
class Mult(Term):
    k: int
    t: Term

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"negative multiple {self.k}")


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term


def free_vars(t: Term) -> frozenset[str]:
    """Names of the variables occurring in t."""
    if isinstance(t, Var):
        return frozenset({t.name})
    if isinstance(t, (Bot, Top)):
        return frozenset()
    if isinstance(t, (Star, Arrow, Meet, Join, Oplus)):
        return free_vars(t.l) | free_vars(t.r)
    if isinstance(t, (Neg, Inv)):
        return free_vars(t.t)
    if isinstance(t, (Pow, Mult)):
        return free_vars(t.t)
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# Tokenizer and parser.

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<arrow>->)
      | (?P<join>\\/)
      | (?P<meet>/\\)
      | (?P<star>\*)
      | (?P<inv>~)
      | (?P<neg>!)
      | (?P<dot>\.)
      | (?P<caret>\^)
      | (?P<lpar>\()
      | (?P<rpar>\))
      | (?P<eq>≈|=)
      | (?P<int>\d+)
      | (?P<ident>[a-z][a-z0-9_]*)
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        if kind != "ws":
            tokens.append((kind, match.group(), pos))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> tuple[str, str, int]:
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {what}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def term(self) -> Term:
        left = self.join()
        if self.peek()[0] == "arrow":
            self.take()
            return Arrow(left, self.term())  # right associative
        return left

    def join(self) -> Term:
        out = self.meet()
        while self.peek()[0] == "join":
            self.take()
            out = Join(out, self.meet())
        return out

    def meet(self) -> Term:
        out = self.mul()
        while self.peek()[0] == "meet":
            self.take()
            out = Meet(out, self.mul())
        return out

    def mul(self) -> Term:
        out = self.unary()
        while self.peek()[0] == "star":
            self.take()
            out = Star(out, self.unary())
        return out

    def unary(self) -> Term:
        kind, text, pos = self.peek()
        if kind == "inv":
            self.take()
            return Inv(self.unary())
        if kind == "neg":
            self.take()
            return Neg(self.unary())
        if kind == "int":
            self.take()
            self.expect("dot", "'.' after a multiplier")
            return Mult(int(text), self.unary())
        return self.postfix()

    def postfix(self) -> Term:
        out = self.atom()
        while self.peek()[0] == "caret":
            self.take()
            tok = self.expect("int", "an exponent")
            out = Pow(out, int(tok[1]))
        return out

    def atom(self) -> Term:
        kind, text, pos = self.take()
        if kind == "ident":
            if text == "bot":
                return Bot()
            if text == "top":
                return Top()
            return Var(text)
        if kind == "lpar":
            inner = self.term()
            self.expect("rpar", "')'")
            return inner
        raise ParseError(f"expected a term, found {text or 'end of input'!r}", pos)


def parse_term(text: str) -> Term:
    """Parse one term; raises ParseError with a position on bad input."""
    parser = _Parser(text)
    out = parser.term()
    kind, text_, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected {text_!r} after term", pos)
    return out


def parse_equation(text: str) -> Equation:
    """Parse 'term ≈ term' (or with '=')."""
    parser = _Parser(text)
    lhs = parser.term()
    parser.expect("eq", "'≈' or '='")
    rhs = parser.term()
    kind, text_, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected {text_!r} after equation", pos)
    return Equation(lhs, rhs)


# ---------------------------------------------------------------------------
# Rendering (round-trips through the parser for parser-built trees).

_ARROW, _JOIN, _MEET, _MUL, _UNARY, _POSTFIX, _ATOM = range(7)


def _wrap(t: Term, minimum: int) -> str:
    s, prec = _render(t)
    return f"({s})" if prec < minimum else s


def _render(t: Term) -> tuple[str, int]:
    if isinstance(t, Var):
        return t.name, _ATOM
    if isinstance(t, Bot):
        return "bot", _ATOM
    if isinstance(t, Top):
        return "top", _ATOM
    if isinstance(t, Arrow):
        return f"{_wrap(t.l, _JOIN)} -> {_wrap(t.r, _ARROW)}", _ARROW
    if isinstance(t, Join):
        return f"{_wrap(t.l, _JOIN)} \\/ {_wrap(t.r, _MEET)}", _JOIN
    if isinstance(t, Meet):
        return f"{_wrap(t.l, _MEET)} /\\ {_wrap(t.r, _MUL)}", _MEET
    if isinstance(t, Star):
        return f"{_wrap(t.l, _MUL)} * {_wrap(t.r, _UNARY)}", _MUL
    if isinstance(t, Inv):
        return f"~{_wrap(t.t, _UNARY)}", _UNARY
    if isinstance(t, Neg):
        return f"!{_wrap(t.t, _UNARY)}", _UNARY
    if isinstance(t, Mult):
        return f"{t.k}.{_wrap(t.t, _UNARY)}", _UNARY
    if isinstance(t, Pow):
        return f"{_wrap(t.t, _POSTFIX)}^{t.k}", _POSTFIX
    if isinstance(t, Oplus):
        return _render(Inv(Star(Inv(t.l), Inv(t.r))))
    raise TypeError(f"not a term: {t!r}")


def render_term(t: Term) -> str:
    return _render(t)[0]


def render_equation(eq: Equation) -> str:
    return f"{render_term(eq.lhs)} ≈ {render_term(eq.rhs)}"


# ---------------------------------------------------------------------------
# Evaluation.

_CORE_OPS = SimpleNamespace(
    mul=core.ap_mul,
    inv=core.ap_inv,
    div=core.ap_div,
    neg=core.ap_neg,
    oplus=core.ap_oplus,
    meet=core.ap_meet,
    join=core.ap_join,
    power=core.ap_pow,
    multiple=core.ap_mult,
)


def eval_term(t: Term, env: dict[str, ApElem], params: AlgebraParams, ops=None):
    """Evaluate t under env; ops may substitute an operation bundle."""
    o = _CORE_OPS if ops is None else ops
    return _eval(t, env, params, o)


def _eval(t, env, params, o):
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise EvalError(f"unbound variable {t.name!r}") from None
    if isinstance(t, Bot):
        return core.ap_bot(params)
    if isinstance(t, Top):
        return core.ap_top(params)
    if isinstance(t, Star):
        return o.mul(_eval(t.l, env, params, o), _eval(t.r, env, params, o))
    if isinstance(t, Arrow):
        return o.div(_eval(t.l, env, params, o), _eval(t.r, env, params, o))
    if isinstance(t, Meet):
        return o.meet(_eval(t.l, env, params, o), _eval(t.r, env, params, o))
    if isinstance(t, Join):
        return o.join(_eval(t.l, env, params, o), _eval(t.r, env, params, o))
    if isinstance(t, Neg):
        return o.neg(_eval(t.t, env, params, o))
    if isinstance(t, Inv):
        return o.inv(_eval(t.t, env, params, o))
    if isinstance(t, Oplus):
        return o.oplus(_eval(t.l, env, params, o), _eval(t.r, env, params, o))
    if isinstance(t, Pow):
        return o.power(_eval(t.t, env, params, o), t.k)
    if isinstance(t, Mult):
        return o.multiple(t.k, _eval(t.t, env, params, o))
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# Window-based equation checking.

@dataclass(frozen=True)
class EquationVerdict:
    """Outcome of an exhaustive window check, qualified by the radius."""

    holds: bool
    radius: int
    checked: int
    counterexample: dict[str, ApElem] | None


def check_equation(
    eq: Equation,
    params: AlgebraParams,
    radius: int,
    max_vars: int = 3,
    domain=None,
    ops=None,
) -> EquationVerdict:
    """Test eq over every assignment from the radius-R window.

    Assignments run in a fixed order (variables sorted by name, values in
    window enumeration order), so the first counterexample is canonical.
    domain optionally restricts candidate values (a predicate on elements).
    A True verdict only speaks for the window, hence the radius field.
    """
    if radius < 0:
        raise ValueError(f"window radius must be >= 0, got {radius}")
    names = sorted(free_vars(eq.lhs) | free_vars(eq.rhs))
    if len(names) > max_vars:
        raise ValueError(
            f"{len(names)} free variables exceed the cap of {max_vars}"
        )
    elems = structure.Window(params, radius).elements()
    if domain is not None:
        elems = tuple(e for e in elems if domain(e))
    checked = 0
    for values in itertools.product(elems, repeat=len(names)):
        checked += 1
        env = dict(zip(names, values))
        if eval_term(eq.lhs, env, params, ops) != eval_term(eq.rhs, env, params, ops):
            return EquationVerdict(False, radius, checked, env)
    return EquationVerdict(True, radius, checked, None)


# ---------------------------------------------------------------------------
# Named equation families.

def preset(name: str, m: int | None = None, params: AlgebraParams | None = None) -> Equation:
    """Named equations: E m, EM m, WL m, Bterm, WLwitness.

    E m:  x^(m+1) ≈ x^m           (m >= 1)
    EM m: x \\/ !(x^m) ≈ top       (m >= 1)
    WL m: m.x \\/ m.!x ≈ top       (m >= 1)
    Bterm (needs params): t \\/ !t ≈ top for t = (n+1).x^max(n+1,p)
    WLwitness (needs params): the WL equation at m = n
    """
    if name in ("E", "EM", "WL"):
        if m is None or m < 1:
            raise ValueError(f"preset {name} needs m >= 1, got {m}")
        if name == "E":
            return parse_equation(f"x^{m + 1} ≈ x^{m}")
        if name == "EM":
            return parse_equation(f"x \\/ !(x^{m}) ≈ top")
        return parse_equation(f"{m}.x \\/ {m}.!x ≈ top")
    if name == "Bterm":
        if params is None:
            raise ValueError("preset Bterm needs params")
        t = f"{params.n + 1}.x^{max(params.n + 1, params.p)}"
        return parse_equation(f"{t} \\/ !({t}) ≈ top")
    if name == "WLwitness":
        if params is None:
            raise ValueError("preset WLwitness needs params")
        return preset("WL", params.n)
    raise ValueError(f"unknown preset {name!r}")


def load_equations(text: str) -> list[tuple[int, Equation]]:
    """Parse equations from text, one per line; '#' starts a comment."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        out.append((lineno, parse_equation(stripped)))
    return out
