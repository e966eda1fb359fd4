"""Exact scalar ring for frame computations.

Elements are polynomials with rational coefficients in three kinds of
symbols:

* coordinates ``x1, x2, ...`` (differentiable),
* parameters (``c1``, ``k``, ``t``, ...; derivative zero),
* hyperbolic pairs ``sinh(xi)`` / ``cosh(xi)`` tied by ``cosh^2 = 1 + sinh^2``.

Every element is kept in a canonical form in which no monomial carries
``cosh(xi)`` to a power above one, so equality of elements is equality of
their term dictionaries.
"""

from __future__ import annotations

import ast
import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

import mpmath

__all__ = [
    "HypExpr",
    "Symbol",
    "RingError",
    "coordinate",
    "parameter",
    "sinh",
    "cosh",
    "const",
    "parse",
    "parse_tree",
    "normalize",
    "partial_derivative",
    "evaluate",
]

# kind order fixes the monomial order: parameters, coordinates, sinh, cosh
_KIND_ORDER = {"p": 0, "x": 1, "s": 2, "h": 3}

Scalar = Union[int, Fraction]


class RingError(ValueError):
    """Raised for undeclared symbols, bad syntax, or illegal operations."""


class Symbol(tuple):
    """A ring generator ``(kind, name)``.

    ``kind`` is one of ``"p"`` (parameter), ``"x"`` (coordinate index),
    ``"s"`` (sinh of a coordinate) or ``"h"`` (cosh of a coordinate).
    """

    __slots__ = ()

    def __new__(cls, kind: str, name):
        return super().__new__(cls, (kind, name))

    @property
    def kind(self) -> str:
        return self[0]

    @property
    def name(self):
        return self[1]

    def sort_key(self):
        name = self[1]
        return (_KIND_ORDER[self[0]], isinstance(name, str), name)

    def __str__(self) -> str:
        kind, name = self
        if kind == "p":
            return name
        if kind == "x":
            return f"x{name}"
        if kind == "s":
            return f"sinh(x{name})"
        return f"cosh(x{name})"

    def __repr__(self) -> str:
        return f"Symbol({self[0]!r}, {self[1]!r})"


Monomial = tuple  # sorted tuple of (Symbol, exponent) pairs


def _mono_mul(a: Monomial, b: Monomial) -> dict:
    powers = dict(a)
    for sym, e in b:
        powers[sym] = powers.get(sym, 0) + e
    return powers


def _reduce_powers(powers: dict) -> dict:
    """Expand ``powers`` into ``{monomial: coefficient}`` with cosh degree <= 1."""
    out = {(): Fraction(1)}
    for sym, e in powers.items():
        if sym.kind == "h" and e >= 2:
            s = Symbol("s", sym.name)
            q, r = divmod(e, 2)
            # cosh^e = cosh^r * (1 + sinh^2)^q
            factor = {}
            for j in range(q + 1):
                mono = ((s, 2 * j),) if j else ()
                if r:
                    mono = mono + ((sym, 1),)
                factor[mono] = Fraction(math.comb(q, j))
        else:
            factor = {((sym, e),): Fraction(1)}
        out = _poly_mul_raw(out, factor)
    return out


def _canon(powers: dict) -> Monomial:
    items = [(s, e) for s, e in powers.items() if e]
    items.sort(key=lambda it: it[0].sort_key())
    return tuple(items)


def _poly_mul_raw(a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = _canon(_mono_mul(ma, mb))
            v = out.get(m, 0) + ca * cb
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


class HypExpr:
    """Canonical-form element of the hyperbolic polynomial ring.

    Instances are immutable and hashable. Arithmetic with ``int`` and
    ``Fraction`` operands is supported on both sides.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[mono] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_powers(cls, powers: dict, coeff: Scalar = 1) -> "HypExpr":
        reduced = _reduce_powers(powers)
        return cls({m: c * coeff for m, c in reduced.items()})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def symbols(self) -> set:
        return {sym for mono in self._terms for sym, _ in mono}

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(mono == () for mono in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise RingError(f"{self} is not a rational constant")
        return self._terms.get((), Fraction(0))

    def is_parameter_only(self) -> bool:
        return all(sym.kind == "p" for sym in self.symbols())

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return HypExpr(terms)

    __radd__ = __add__

    def __neg__(self):
        return HypExpr({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HypExpr({m: c * other for m, c in self._terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                for m, c in _reduce_powers(_mono_mul(ma, mb)).items():
                    v = out.get(m, 0) + ca * cb * c
                    if v:
                        out[m] = v
                    else:
                        out.pop(m, None)
        return HypExpr(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, HypExpr):
            other = other.constant_value()
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("division of HypExpr by zero")
        return self * (1 / other)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise RingError("only non-negative integer powers are supported")
        result = HypExpr({(): 1})
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._terms.get((), Fraction(0)))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # display --------------------------------------------------------------

    def sorted_terms(self):
        def key(item):
            mono = item[0]
            return (-sum(e for _, e in mono), [(s.sort_key(), e) for s, e in mono])

        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = []
            for sym, e in mono:
                factors.append(str(sym) if e == 1 else f"{sym}**{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"HypExpr({str(self)!r})"


def _coerce(value):
    if isinstance(value, HypExpr):
        return value
    if isinstance(value, (int, Fraction)):
        return HypExpr({(): value})
    return NotImplemented


def const(value: Scalar | str) -> HypExpr:
    return HypExpr({(): Fraction(value)})


def coordinate(i: int) -> HypExpr:
    return HypExpr({((Symbol("x", i), 1),): 1})


def parameter(name: str) -> HypExpr:
    return HypExpr({((Symbol("p", name), 1),): 1})


def sinh(i: int) -> HypExpr:
    return HypExpr({((Symbol("s", i), 1),): 1})


def cosh(i: int) -> HypExpr:
    return HypExpr({((Symbol("h", i), 1),): 1})


# raw trees ------------------------------------------------------------------
#
# A raw tree is a nested tuple:
#   ("num", Fraction) | ("sym", name) | ("sinh", i) | ("cosh", i)
#   | ("neg", t) | ("add", t1, t2, ...) | ("mul", t1, t2, ...) | ("div", t, t)


def _parse_symbol_name(name: str, coordinates: int, parameters: Iterable[str]):
    params = set(parameters)
    if name in params:
        return ("sym", name)
    if name.startswith("x") and name[1:].isdigit():
        i = int(name[1:])
        if 1 <= i <= coordinates:
            return ("sym", name)
    raise RingError(f"undeclared symbol {name!r}")


def parse_tree(text: str, coordinates: int = 0, parameters: Iterable[str] = ()):
    """Parse an expression string into a raw tree, checking symbols."""
    parameters = tuple(parameters)
    try:
        node = ast.parse(text.strip(), mode="eval").body
    except SyntaxError as exc:
        raise RingError(f"cannot parse {text!r}: {exc.msg}") from None

    def conv(n):
        if isinstance(n, ast.Constant) and isinstance(n.value, int) and not isinstance(n.value, bool):
            return ("num", Fraction(n.value))
        if isinstance(n, ast.Name):
            return _parse_symbol_name(n.id, coordinates, parameters)
        if isinstance(n, ast.UnaryOp) and isinstance(n.op, (ast.USub, ast.UAdd)):
            inner = conv(n.operand)
            return ("neg", inner) if isinstance(n.op, ast.USub) else inner
        if isinstance(n, ast.BinOp):
            left, right = conv(n.left), conv(n.right)
            if isinstance(n.op, ast.Add):
                return ("add", left, right)
            if isinstance(n.op, ast.Sub):
                return ("add", left, ("neg", right))
            if isinstance(n.op, ast.Mult):
                return ("mul", left, right)
            if isinstance(n.op, ast.Div):
                return ("div", left, right)
            if isinstance(n.op, ast.Pow) and isinstance(n.right, ast.Constant) and type(n.right.value) is int:
                return ("mul",) + (left,) * n.right.value if n.right.value else ("num", Fraction(1))
        if (
            isinstance(n, ast.Call)
            and isinstance(n.func, ast.Name)
            and n.func.id in ("sinh", "cosh")
            and len(n.args) == 1
            and not n.keywords
            and isinstance(n.args[0], ast.Name)
        ):
            arg = n.args[0].id
            if arg in parameters or not (arg.startswith("x") and arg[1:].isdigit()):
                raise RingError(f"{n.func.id}() takes a coordinate symbol, got {arg!r}")
            _parse_symbol_name(arg, coordinates, parameters)
            return (n.func.id, int(arg[1:]))
        raise RingError(f"unsupported syntax in {text!r}: {ast.unparse(n)}")

    return conv(node)


def normalize(tree) -> HypExpr:
    """Canonical form of a raw tree (idempotent on ``HypExpr`` input)."""
    if isinstance(tree, HypExpr):
        return HypExpr(tree.terms)
    if isinstance(tree, (int, Fraction)):
        return const(tree)
    op = tree[0]
    if op == "num":
        return const(tree[1])
    if op == "sym":
        name = tree[1]
        if name.startswith("x") and name[1:].isdigit():
            return coordinate(int(name[1:]))
        return parameter(name)
    if op == "sinh":
        return sinh(tree[1])
    if op == "cosh":
        return cosh(tree[1])
    if op == "neg":
        return -normalize(tree[1])
    if op == "add":
        out = HypExpr()
        for t in tree[1:]:
            out = out + normalize(t)
        return out
    if op == "mul":
        out = const(1)
        for t in tree[1:]:
            out = out * normalize(t)
        return out
    if op == "div":
        num, den = normalize(tree[1]), normalize(tree[2])
        if not den.is_constant():
            raise RingError(f"division by non-constant {den}")
        return num / den
    raise RingError(f"unknown node {op!r}")


def parse(text, coordinates: int = 0, parameters: Iterable[str] = ()) -> HypExpr:
    """Parse ``text`` (or pass through a number) into a ``HypExpr``."""
    if isinstance(text, HypExpr):
        return text
    if isinstance(text, (int, Fraction)):
        return const(text)
    if isinstance(text, float):
        raise RingError(f"floating-point value {text!r} is not exact; use 'p/q'")
    return normalize(parse_tree(str(text), coordinates, parameters))


# calculus ---------------------------------------------------------------------


def _symbol_derivative(sym: Symbol, i: int) -> HypExpr:
    if sym.name != i or sym.kind == "p":
        return HypExpr()
    if sym.kind == "x":
        return const(1)
    if sym.kind == "s":
        return cosh(i)
    return sinh(i)


def partial_derivative(expr: HypExpr, i) -> HypExpr:
    """Derivative of ``expr`` with respect to coordinate ``x_i``.

    ``i`` is the coordinate index or a coordinate ``HypExpr`` such as
    ``coordinate(3)``.
    """
    if isinstance(expr, (int, Fraction)):
        return HypExpr()
    if isinstance(i, HypExpr):
        syms = i.symbols()
        if len(i.terms) != 1 or len(syms) != 1 or i.terms.get(((next(iter(syms)), 1),)) != 1:
            raise RingError(f"{i} is not a single symbol")
        sym = next(iter(syms))
        if sym.kind != "x":
            raise RingError(f"cannot differentiate with respect to {sym}")
        i = sym.name
    if not isinstance(i, int) or i < 1:
        raise RingError(f"invalid coordinate index {i!r}")
    out = HypExpr()
    for mono, coeff in expr.terms.items():
        for pos, (sym, e) in enumerate(mono):
            d = _symbol_derivative(sym, i)
            if d.is_zero():
                continue
            rest = dict(mono)
            rest[sym] = e - 1
            out = out + HypExpr._from_powers(rest, coeff * e) * d
    return out


def evaluate(expr: HypExpr, assignment: Mapping, precision: int = 30):
    """Approximate value of ``expr`` as an ``mpmath.mpf``.

    ``assignment`` maps parameter names and coordinate names (``"x3"``) or
    indices (``3``) to rationals. Debug use only.
    """
    values = {}
    for key, val in assignment.items():
        if isinstance(key, int):
            key = f"x{key}"
        values[str(key)] = Fraction(val) if not isinstance(val, float) else val
    with mpmath.workdps(precision + 5):
        total = mpmath.mpf(0)
        for mono, coeff in expr.terms.items():
            term = mpmath.mpf(coeff.numerator) / coeff.denominator
            for sym, e in mono:
                label = sym.name if sym.kind == "p" else f"x{sym.name}"
                if label not in values:
                    raise RingError(f"no value assigned to {label}")
                v = values[label]
                arg = mpmath.mpf(v.numerator) / v.denominator if isinstance(v, Fraction) else mpmath.mpf(v)
                if sym.kind == "s":
                    arg = mpmath.sinh(arg)
                elif sym.kind == "h":
                    arg = mpmath.cosh(arg)
                term *= arg**e
            total += term
        return +total
