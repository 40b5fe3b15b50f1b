"""Any two applications with equal heads and equal arguments are proved equal."""
from hypothesis import given, settings, strategies as st

from app.v1_0.helper.proof_shape import compact
from app.v1_0.v1_containers import SolverContainer
from tests.support import Solver


def _chain(name: str, lhs: str, rhs: str, via: str, chained: bool) -> list:
    if not chained:
        return [f"hyp {name} : {lhs} == {rhs}"]
    return [f"hyp {name}l : {lhs} == {via}", f"hyp {name}r : {via} == {rhs}"]


@st.composite
def applications(draw) -> str:
    n = draw(st.integers(1, 3))
    alias = draw(st.booleans())
    fn_type = " -> ".join(["U"] * (n + 1))
    g_type = " -> ".join(["V" if alias else "U"] * (n + 1))
    lines = ["var U : Type"]
    if alias:
        lines.append("def V : Type := U")
    lines += [f"var f : {fn_type}", f"var g : {g_type}", f"var m : {fn_type}"]
    for i in range(1, n + 1):
        lines += [f"var a{i} : U", f"var b{i} : U", f"var c{i} : U"]
    lines += _chain("ef", "f", "g", "m", draw(st.booleans()))
    for i in range(1, n + 1):
        lines += _chain(f"e{i}", f"a{i}", f"b{i}", f"c{i}", draw(st.booleans()))
    lhs = " ".join(["f", *(f"a{i}" for i in range(1, n + 1))])
    rhs = " ".join(["g", *(f"b{i}" for i in range(1, n + 1))])
    lines.append(f"goal {lhs} == {rhs}")
    return "\n".join(lines) + "\n"


@st.composite
def dependent_applications(draw) -> str:
    lines = [
        "var U : Type",
        "var P : U -> Type",
        "var f : Pi (n : U), P n -> U",
        "var g : Pi (n : U), P n -> U",
        "var a1 : U",
        "var b1 : U",
        "var a2 : P a1",
        "var b2 : P b1",
        "hyp ef : f = g",
        "hyp e1 : a1 = b1",
        "hyp e2 : a2 == b2",
    ]
    if draw(st.booleans()):
        lines.append("goal f a1 a2 = g b1 b2")
    else:
        lines.append("goal g b1 b2 == f a1 a2")
    return "\n".join(lines) + "\n"


@settings(max_examples=100, deadline=None)
@given(st.one_of(applications(), dependent_applications()))
def test_equal_heads_and_arguments_are_proved(text):
    solver = Solver(SolverContainer())
    solved = solver.solve(text)
    assert solved.proved
    assert solver.check(solved).ok
    assert "hcongr_" in compact(solved.result.proof, solved.result.ctx)
