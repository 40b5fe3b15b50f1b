import itertools

import pytest

from app.core.errors import NoCommonAncestorError, PathRangeError, ProofConstructionError
from app.v1_0.entities import Const
from tests.support import fixture_text

FIXTURES = ["instance.hcc", "partial_binary.hcc", "partial_unary.hcc", "safe_log.hcc", "vector.hcc", "definitions.hcc"]


@pytest.mark.parametrize("name", FIXTURES)
def test_paths_are_irredundant(solver, name):
    solved = solver.solve(fixture_text(name))
    state, builder = solved.engine.state, solved.engine.builder
    for cls in solved.result.partition:
        for x, y in itertools.combinations(cls, 2):
            path = builder.path_between(state, x, y)
            assert path[0] == x and path[-1] == y
            assert len(path) == len(set(path))


@pytest.mark.parametrize("name", ["instance.hcc", "safe_log.hcc"])
def test_every_pair_in_a_class_gets_a_checked_proof(solver, name):
    solved = solver.solve(fixture_text(name))
    state, builder, theory = solved.engine.state, solved.engine.builder, solved.theory
    ctx = solved.result.ctx
    types = solved.flat.types
    for cls in solved.result.partition:
        for x, y in itertools.combinations(cls, 2):
            proof = builder.mkpr(state, x, y)
            statement = theory.heq_type(types[x], types[y], Const(x), Const(y))
            assert theory.kernel.defeq(theory.kernel.infer_type(proof, ctx), statement, ctx)


def test_common_ancestor_of_separate_classes(solver):
    solved = solver.solve(fixture_text("unprovable.hcc"))
    with pytest.raises(NoCommonAncestorError):
        solved.engine.builder.mkpr(solved.engine.state, "a", "b")


def test_mktrans_past_the_root(solver):
    solved = solver.solve(fixture_text("instance.hcc"))
    state = solved.engine.state
    depth = len(state.path("a")) - 1
    with pytest.raises(PathRangeError):
        solved.engine.builder.mktrans(state, "a", depth + 1)


def test_mkcongr_rejects_unrelated_definitions(solver):
    solved = solver.solve(fixture_text("instance.hcc"))
    defs = solved.flat.defs
    with pytest.raises(ProofConstructionError):
        solved.engine.builder.mkcongr(solved.engine.state, defs["c#1"], defs["c#2"])
