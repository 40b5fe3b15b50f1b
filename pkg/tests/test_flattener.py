import pytest

from app.core.errors import UnsupportedGoalError
from app.v1_0.entities import App, Assumption, Const, EqHyp, LocalDef
from tests.support import fixture_text


def _flatten(solver, text, subsingleton=True):
    problem = solver.parse(text)
    theory = solver.container.equality_theory_service()
    if subsingleton:
        for decl in problem.subsingletons:
            theory.register_subsingleton(decl.type, decl.proof, problem.ctx)
    flattener = solver.container.flattener_service(kernel=theory.kernel, theory=theory)
    return problem, theory, flattener.flatten(problem.ctx, problem.goal.statement, subsingletons=subsingleton)


def test_instance_is_flattened_curried(solver):
    _, _, flat = _flatten(solver, fixture_text("instance.hcc"))
    assert [(d.name, d.fn, d.arg) for d in flat.defs.values()] == [
        ("c#1", "f", "N"),
        ("c#2", "c#1", "a"),
        ("c#3", "c#1", "b"),
    ]
    assert (flat.goal.lhs, flat.goal.rhs) == ("c#2", "c#3")
    assert not flat.goal.homogeneous
    assert flat.max_arity == 2
    hyp, = flat.hypotheses
    assert (hyp.name, hyp.lhs, hyp.rhs, hyp.proof) == ("e", "a", "b", Const("e"))


def test_atomic_goal_needs_no_definitions(solver):
    _, _, flat = _flatten(solver, fixture_text("unprovable.hcc"))
    assert flat.defs == {}
    assert (flat.goal.lhs, flat.goal.rhs) == ("a", "b")


def test_nested_applications_are_named_inside_out(solver):
    text = "\n".join([
        "var A : Type", "var f : A -> A", "var g : A -> A", "var a : A", "var b : A",
        "goal g (f a) == g (f b)",
    ])
    problem, theory, flat = _flatten(solver, text)
    assert [(d.name, d.fn, d.arg) for d in flat.defs.values()] == [
        ("c#1", "f", "a"),
        ("c#2", "g", "c#1"),
        ("c#3", "f", "b"),
        ("c#4", "g", "c#3"),
    ]
    kernel = theory.kernel
    # unfolding the generated names gives back the goal sides
    assert kernel.defeq(Const("c#2"), problem.goal.lhs, flat.ctx)
    assert kernel.defeq(Const("c#4"), problem.goal.rhs, flat.ctx)


def test_entries_come_before_their_uses(solver):
    _, _, flat = _flatten(solver, fixture_text("vector.hcc"))
    seen = set()
    for entry in flat.entries:
        if isinstance(entry, LocalDef):
            assert entry.fn in seen and entry.arg in seen
        if isinstance(entry, EqHyp):
            assert entry.lhs in seen and entry.rhs in seen
        else:
            seen.add(entry.name)


def test_homogeneous_hypotheses_are_wrapped(solver):
    _, _, flat = _flatten(solver, fixture_text("partial_unary.hcc"))
    hyp, = flat.hypotheses
    head = hyp.proof
    while isinstance(head, App):
        head = head.fn
    assert head == Const("ofeq")
    assert flat.defs[hyp.rhs] == LocalDef(hyp.rhs, "g", "a", flat.types[hyp.rhs])


def test_homogeneous_goal_is_recorded(solver):
    _, _, flat = _flatten(solver, fixture_text("safe_log.hcc"))
    assert flat.goal.homogeneous


def test_definitions_are_linked_to_their_values(solver):
    _, _, flat = _flatten(solver, fixture_text("definitions.hcc"))
    link = [h for h in flat.hypotheses if h.name is None]
    assert len(link) == 1
    assert link[0].lhs == "fa"
    assert flat.defs[link[0].rhs].fn == "f"


def test_subsingleton_types_are_flattened_before_their_inhabitants(solver):
    _, _, flat = _flatten(solver, fixture_text("safe_log.hcc"))
    order = [e.name for e in flat.entries if not isinstance(e, EqHyp)]
    ha_type = flat.typenodes["ha"]
    assert order.index(ha_type) < order.index("ha")
    assert flat.registered[ha_type] == "hsse<gt a zero>"
    assert flat.typenodes["hb"] != ha_type


def test_subsingleton_types_are_ignored_when_disabled(solver):
    _, _, flat = _flatten(solver, fixture_text("safe_log.hcc"), subsingleton=False)
    assert flat.typenodes == {}
    assert flat.registered == {}


def test_constants_become_assumptions(solver):
    _, _, flat = _flatten(solver, fixture_text("instance.hcc"))
    atoms = [e.name for e in flat.entries if isinstance(e, Assumption)]
    assert atoms == ["N", "a", "b", "f"]


def test_goal_must_be_an_equality(solver):
    problem, theory, _ = _flatten(solver, fixture_text("instance.hcc"))
    flattener = solver.container.flattener_service(kernel=theory.kernel, theory=theory)
    with pytest.raises(UnsupportedGoalError):
        flattener.flatten(problem.ctx, Const("N"))
