from app.v1_0.entities import App, Const, Context, Declaration
from tests.support import fixture_text


def _checker(solver, solved):
    return solver.container.checker_service(axiom_repository=solved.theory.axioms)


def test_accepts_the_generated_proof(solver):
    solved = solver.solve(fixture_text("instance.hcc"))
    verdict = solver.check(solved)
    assert verdict.ok
    assert verdict.location is None


def test_rejects_a_proof_of_another_statement(solver):
    solved = solver.solve(fixture_text("instance.hcc"))
    theory = solved.theory
    N, a, b = Const("N"), Const("a"), Const("b")
    verdict = _checker(solver, solved).check_proof(
        theory.hrefl(N, a), theory.heq_type(N, N, a, b), solved.result.ctx
    )
    assert not verdict.ok
    assert verdict.location == "proof"
    assert verdict.expected == theory.heq_type(N, N, a, b)
    assert verdict.actual == theory.heq_type(N, N, a, a)


def test_rejects_ill_typed_proofs(solver):
    solved = solver.solve(fixture_text("instance.hcc"))
    verdict = _checker(solver, solved).check_proof(
        App(Const("a"), Const("b")), solved.result.statement, solved.result.ctx
    )
    assert not verdict.ok
    assert verdict.location == "a"


def test_rejects_unknown_names(solver):
    solved = solver.solve(fixture_text("instance.hcc"))
    verdict = _checker(solver, solved).check_proof(Const("nope"), solved.result.statement, solved.result.ctx)
    assert not verdict.ok
    assert "nope" in verdict.notes[0]


def test_rejects_a_tampered_generated_definition(solver):
    solved = solver.solve(fixture_text("instance.hcc"))
    theory = solved.theory
    ctx = solved.result.ctx
    decls = []
    for d in ctx:
        if d.name == "e#1":
            d = Declaration(d.name, d.type, theory.hrefl(Const("N"), Const("a")))
        decls.append(d)
    tampered = Context(decls, env=ctx.env)
    verdict = _checker(solver, solved).check_proof(solved.result.proof, solved.result.statement, tampered)
    assert not verdict.ok
    assert verdict.location == "e#1"


def test_checker_does_not_share_kernel_caches(solver):
    solved = solver.solve(fixture_text("instance.hcc"))
    checker = _checker(solver, solved)
    first = checker.check_proof(solved.result.proof, solved.result.statement, solved.result.ctx)
    second = checker.check_proof(solved.result.proof, solved.result.statement, solved.result.ctx)
    assert first.ok and second.ok
