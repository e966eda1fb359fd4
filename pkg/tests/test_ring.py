import math
import random
from fractions import Fraction

import mpmath
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from pisoliton.ring import (
    HypExpr,
    RingError,
    const,
    coordinate,
    cosh,
    evaluate,
    normalize,
    parameter,
    parse,
    parse_tree,
    partial_derivative,
    sinh,
)
from exprgen import COORDS, PARAMS, expressions, random_expression


def P(text):
    return parse(text, coordinates=COORDS, parameters=PARAMS)


def test_hyperbolic_identity():
    assert P("cosh(x3)*cosh(x3) - sinh(x3)*sinh(x3)") == 1
    assert P("(cosh(x3) + sinh(x3))*(cosh(x3) - sinh(x3))") == 1


def test_zero_terms_dropped():
    e = parse("c1*x1*cosh(x3) + 0*x2", coordinates=3, parameters=["c1"])
    assert len(e.terms) == 1
    assert e == parameter("c1") * coordinate(1) * cosh(3)


def test_cosh_degree_at_most_one():
    e = cosh(2) ** 5 * sinh(2)
    for mono in e.terms:
        for sym, power in mono:
            if sym.kind == "h":
                assert power == 1


def test_derivative_examples():
    assert partial_derivative(P("sinh(x3)*x1"), 3) == P("cosh(x3)*x1")
    assert partial_derivative(P("c2*x2"), 1) == 0
    # d/dx3 (1 + 2 sinh^2) = 4 sinh cosh = 2 sinh(2 x3)
    assert partial_derivative(P("1 + 2*sinh(x3)*sinh(x3)"), coordinate(3)) == 4 * sinh(3) * cosh(3)


def test_derivative_rejects_non_coordinates():
    with pytest.raises(RingError):
        partial_derivative(P("x1"), parameter("c1"))
    with pytest.raises(RingError):
        partial_derivative(P("x1"), sinh(1))
    with pytest.raises(RingError):
        partial_derivative(P("x1"), 0)


def test_evaluate_examples():
    assert evaluate(cosh(3), {"x3": 0}) == 1
    assert evaluate(sinh(3), {"x3": 0}) == 0
    val = evaluate(P("1 + 2*sinh(x3)*sinh(x3)"), {3: 1})
    with mpmath.workdps(30):
        assert abs(val - mpmath.cosh(2)) < mpmath.mpf("1e-25")
    assert abs(float(val) - 3.7621956911) < 1e-10


def test_evaluate_missing_symbol():
    with pytest.raises(RingError, match="x2"):
        evaluate(P("x1 + x2"), {"x1": 1})


def test_parse_errors():
    with pytest.raises(RingError, match="'y'"):
        parse("x1 + y", coordinates=2)
    with pytest.raises(RingError):
        parse("x4", coordinates=3)
    with pytest.raises(RingError):
        parse("sinh(c1)", coordinates=1, parameters=["c1"])
    with pytest.raises(RingError):
        parse("x1 / x2", coordinates=2)
    with pytest.raises(RingError):
        parse(0.5)
    for bad in ("x1 ** x1", "x1 ** -1", "x1 ** (1/2)"):
        with pytest.raises(RingError):
            parse(bad, coordinates=1)
    assert parse("x1 ** 3", coordinates=1) == parse("x1*x1*x1", coordinates=1)


def test_division_by_constant():
    assert P("(x1 + 2) / 4") == P("x1/4 + 1/2")
    with pytest.raises(ZeroDivisionError):
        P("x1") / 0


def test_printing_round_trip():
    for text in expressions(11, 40):
        e = P(text)
        assert P(str(e)) == e


def test_hash_consistent_with_constants():
    assert hash(const(3)) == hash(Fraction(3))
    assert const(Fraction(1, 2)) == Fraction(1, 2)
    assert {P("x1 + 1"): 1}[P("1 + x1")] == 1


def _sympy(e: HypExpr):
    xs = sp.symbols("x1 x2 x3")
    ps = {name: sp.Symbol(name) for name in PARAMS}
    out = 0
    for mono, coeff in e.terms.items():
        term = sp.Rational(coeff.numerator, coeff.denominator)
        for sym, power in mono:
            if sym.kind == "p":
                base = ps[sym.name]
            elif sym.kind == "x":
                base = xs[sym.name - 1]
            elif sym.kind == "s":
                base = sp.sinh(xs[sym.name - 1])
            else:
                base = sp.cosh(xs[sym.name - 1])
            term *= base**power
        out += term
    return out


def test_normal_form_agrees_with_sympy():
    xs = sp.symbols("x1 x2 x3")
    ns = {f"x{i + 1}": xs[i] for i in range(3)} | {p: sp.Symbol(p) for p in PARAMS}
    ns |= {"sinh": sp.sinh, "cosh": sp.cosh}
    for text in expressions(5, 25):
        ours = _sympy(P(text))
        theirs = sp.sympify(text, locals=ns)
        assert sp.simplify((ours - theirs).rewrite(sp.exp)) == 0, text


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_ring_axioms(s1, s2, s3):
    a = P(random_expression(random.Random(s1)))
    b = P(random_expression(random.Random(s2)))
    c = P(random_expression(random.Random(s3)))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a and a + 0 == a


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6), st.integers(1, 3))
def test_leibniz_rule(s1, s2, i):
    a = P(random_expression(random.Random(s1)))
    b = P(random_expression(random.Random(s2)))
    assert partial_derivative(a * b, i) == partial_derivative(a, i) * b + a * partial_derivative(b, i)
    assert partial_derivative(a + b, i) == partial_derivative(a, i) + partial_derivative(b, i)


def test_normalize_idempotent_on_raw_trees():
    for text in expressions(3, 50):
        tree = parse_tree(text, COORDS, PARAMS)
        once = normalize(tree)
        assert normalize(once) == once
        assert normalize(once).terms == once.terms


def test_parameters_have_zero_derivative():
    e = P("c1*c2 + c1*c1")
    assert all(partial_derivative(e, i) == 0 for i in (1, 2, 3))
    assert e.is_parameter_only()


def test_finite_difference_small_sample():
    rng = random.Random(99)
    h = Fraction(1, 10**4)
    for text in expressions(99, 20):
        e = P(text)
        point = {f"x{k}": Fraction(rng.randint(-8, 8), 8) for k in (1, 2, 3)}
        point |= {p: Fraction(rng.randint(-8, 8), 4) for p in PARAMS}
        i = rng.randint(1, 3)
        up = dict(point, **{f"x{i}": point[f"x{i}"] + h})
        dn = dict(point, **{f"x{i}": point[f"x{i}"] - h})
        fd = (evaluate(e, up) - evaluate(e, dn)) / (2 * mpmath.mpf(h.numerator) / h.denominator)
        exact = evaluate(partial_derivative(e, i), point)
        assert math.isclose(float(fd), float(exact), rel_tol=1e-6, abs_tol=1e-6), text
