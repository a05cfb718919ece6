from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from desargues.dsl import BinaryOp, ParseError, execute, parse, pretty
from desargues.plane import Point
from desargues.scalars import Residue

from conftest import schema_validator

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"

GF5 = """model gf(5)
point O=(0,0)
point I=(1,0)
point A=(2,0)
point C=(4,0)
line l = O I
frame f = l O I
add E = A + C in f
"""


def diagnostics(text):
    with pytest.raises(ParseError) as info:
        parse(text)
    return info.value.diagnostics


def test_parse_add_statement():
    script = parse(GF5)
    adds = [s for s in script.statements if isinstance(s, BinaryOp)]
    assert len(adds) == 1 and adds[0].op == "add" and adds[0].frame == "f"
    assert adds[0].span.line == 8 and adds[0].span.col == 1


def test_non_prime_model():
    (d,) = diagnostics("model gf(4)\n")
    assert d.message == "4 is not prime"
    assert (d.span.line, d.span.col) == (1, 10)


def test_undeclared_frame():
    (d,) = diagnostics(GF5 + "add G = A + C in g\n")
    assert "undeclared name 'g'" in d.message
    assert (d.span.line, d.span.col) == (9, 18)


def test_type_errors():
    (d,) = diagnostics(GF5 + "add G = A + l in f\n")
    assert "'l' is a line" in d.message


def test_syntax_error_reports_expected_and_found():
    (d,) = diagnostics("model rational\npoint P = (1, 2\n")
    assert (d.expected, d.found) == ("')'", "end of line")
    assert (d.span.line, d.span.col) == (2, 16)
    (d,) = diagnostics("model rational\npoint P = (1 2)\n")
    assert d.message.startswith("malformed scalar '1 2'")
    assert (d.span.line, d.span.col) == (2, 12)


def test_errors_collected_across_statements():
    ds = diagnostics("model rational\npoint P = (1, 2\nline m = P Q\npoint P = (0, 0)\nfoo\n")
    assert [d.span.line for d in ds] == [2, 3, 5]


def test_redeclaration():
    (d,) = diagnostics("model rational\npoint P = (1, 2)\npoint P = (0, 0)\n")
    assert "already declared" in d.message and d.span.line == 3


def test_missing_header():
    (d,) = diagnostics("point P = (1, 2)\n")
    assert "model header" in d.message


def test_quaternion_literals():
    script = parse("model quaternion\npoint P = (1+2i+0j+3k, -1/2+0i+0j+1k)\n")
    P = execute(script).bindings["P"]
    assert str(P) == "(1+2i+0j+3k, -1/2+0i+0j+1k)"
    (d,) = diagnostics("model quaternion\npoint P = (i, 0)\n")
    assert "malformed scalar" in d.message


def test_line_forms_and_extensions():
    text = """model rational
point O = (0, 0)
point I = (1, 0)
point A = (2, 3)
point B = (5, 5)
line l : y = 0*x + 0
line v : x = 2
frame f = l O I
point C = (3, 0)
add E = C + C in f using B
translate T = O by A B
project X = A via v onto l
assert eq X C
"""
    result = execute(parse(text))
    assert result.bindings["E"] == Point(Fraction(6), Fraction(0))
    assert result.bindings["T"] == Point(Fraction(3), Fraction(2))
    assert result.traces[0][1].auxiliary_B == Point(Fraction(5), Fraction(5))
    assert not result.passed  # X = (2, 0) is not C
    assert result.assertions[0].detail == "(2, 0) != (3, 0)"


def test_fig4_script_oracle():
    result = execute(parse((SCRIPTS / "fig4.geo").read_text()))
    assert result.passed
    f = result.bindings["f"]
    from desargues.line_algebra import to_parameter

    b = result.bindings
    assert to_parameter(f, b["E"]) == to_parameter(f, b["A"]) + to_parameter(f, b["C"])


def test_fig5_script():
    result = execute(parse((SCRIPTS / "fig5.geo").read_text()))
    assert result.passed
    assert result.bindings["F"] == Point(Residue(5, 7), Residue(0, 7))


def test_assert_eq_self_passes():
    result = execute(parse(GF5 + "assert eq E E\n"))
    assert result.assertions[0].passed


def test_failures_do_not_stop_execution():
    text = GF5 + "assert eq A C\ninv Z = O ^-1 left in f\nassert eq Z Z\nadd W = A + A in f\nassert eq W A\n"
    result = execute(parse(text))
    assert [a.passed for a in result.assertions] == [False, False, False]
    assert "W" in result.bindings
    assert any(d.span.line == 10 for d in result.diagnostics)  # the inverse of O


def test_sign_needs_order():
    result = execute(parse(GF5 + "assert sign A + in f\n"))
    assert not result.passed and "not ordered" in result.diagnostics[0].message


def test_execute_deterministic():
    s = parse((SCRIPTS / "fig4.geo").read_text())
    assert execute(s, seed=3).to_json() == execute(s, seed=3).to_json()


def test_run_result_schema():
    s = parse((SCRIPTS / "fig4.geo").read_text())
    schema_validator("run").validate(execute(s).to_json())


@pytest.mark.parametrize("name", ["fig4.geo", "fig5.geo"])
def test_round_trip_examples(name):
    s = parse((SCRIPTS / name).read_text())
    assert parse(pretty(s)) == s
    assert pretty(parse(pretty(s))) == pretty(s)


def test_round_trip_all_statement_kinds():
    text = """model quaternion
point O = (0, 0)
point I = (1, 0)
point A = (0+1i+0j+0k, 0)
point B = (0, 1)
line l = O I
line m : y = 1/2+0i+0j+0k*x + 0+0i+1j+0k
line v : x = 3
frame f = l O I
add S = A + I in f using B
mul P = A * A in f
neg N = - A in f
inv R = A ^-1 right in f
inv L = A ^-1 left in f using B
project X = B via v onto l
translate T = B by O A
assert between O A I
assert collinear O A I
assert parallel l m
assert eq R L
assert sign A 0 in f
"""
    s = parse(text)
    assert parse(pretty(s)) == s


# --- generated scripts ---------------------------------------------------

names = st.sampled_from(["P", "Q", "R", "S"])
scalars = st.fractions(min_value=-9, max_value=9, max_denominator=5)


@st.composite
def scripts(draw):
    lines = ["model rational"]
    points = []
    for i in range(draw(st.integers(3, 5))):
        lines.append(f"point P{i} = ({draw(scalars)}, {draw(scalars)})")
        points.append(f"P{i}")
    lines.append(f"line l = {points[0]} {points[1]}")
    lines.append(f"frame f = l {points[0]} {points[1]}")
    for k in range(draw(st.integers(0, 4))):
        op = draw(st.sampled_from(["add", "mul", "neg", "inv"]))
        a, c = draw(st.sampled_from(points)), draw(st.sampled_from(points))
        name = f"X{k}"
        if op == "add":
            lines.append(f"add {name} = {a} + {c} in f")
        elif op == "mul":
            lines.append(f"mul {name} = {a} * {c} in f")
        elif op == "neg":
            lines.append(f"neg {name} = - {a} in f")
        else:
            lines.append(f"inv {name} = {a} ^-1 {draw(st.sampled_from(['left', 'right']))} in f")
        points.append(name)
    lines.append(f"assert collinear {' '.join(draw(st.lists(st.sampled_from(points), min_size=3, max_size=3)))}")
    return "\n".join(lines) + "\n"


@given(scripts())
def test_generated_round_trip(text):
    s = parse(text)
    assert parse(pretty(s)) == s


@given(scripts(), st.integers(0, 5))
def test_generated_execution_never_raises(text, seed):
    r = execute(parse(text), seed=seed)
    assert r.to_json() == execute(parse(text), seed=seed).to_json()


@given(st.text(alphabet="modelpintfraqu()=,+*-^1:/ #\nOIABCxyg0123456789", max_size=120))
def test_parser_never_panics(text):
    try:
        parse(text)
    except ParseError as exc:
        assert exc.diagnostics
        for d in exc.diagnostics:
            assert d.span.line >= 1 and d.span.col >= 1
