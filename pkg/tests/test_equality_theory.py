import pytest
from hypothesis import given, settings as hsettings, strategies as st

from app.core.errors import (
    InvalidArityError,
    ProofConstructionError,
    RegistrationError,
    UnsupportedFunctionTypeError,
)
from app.core.settings import settings
from app.v1_0.entities import App, Const, Context, Declaration, Pi, TYPE, Term, Var, arrow, bound, mk_app, mk_lam, mk_pi
from app.v1_0.v1_containers import SolverContainer

N, a, b, f, e = Const("N"), Const("a"), Const("b"), Const("f"), Const("e")
POLY = Pi("A", TYPE, arrow(Var(0), Var(0)))


@pytest.fixture
def ctx(theory) -> Context:
    return Context([
        Declaration("N", TYPE),
        Declaration("a", N),
        Declaration("b", N),
        Declaration("f", POLY),
        Declaration("e", theory.heq_type(N, N, a, b)),
        Declaration("P", TYPE),
        Declaration("irrel", Pi("x", Const("P"), Pi("y", Const("P"), mk_app(Const("eq"), Const("P"), Var(1), Var(0))))),
    ])


def test_fixed_axioms_are_installed(theory):
    assert {"eq", "refl", "erec", "heq", "hrefl", "hsymm", "htrans", "ofeq", "ofheq"} <= set(theory.axioms.names())


def test_match_equation(theory, ctx):
    eq = theory.match_equation(theory.eq_type(N, a, b), ctx)
    assert eq.homogeneous and eq.lhs == a and eq.rhs == b and eq.lhs_type == eq.rhs_type == N
    heq = theory.match_equation(theory.heq_type(N, TYPE, a, N), ctx)
    assert not heq.homogeneous and heq.rhs_type == TYPE
    assert theory.match_equation(N, ctx) is None


@pytest.mark.parametrize("n", range(1, 7))
def test_hcongr_statements_are_well_formed(theory, n):
    name, statement = theory.mk_hcongr(n)
    assert name == f"hcongr_{n}"
    assert theory.axioms.get_axiom(name).type == statement
    # a second request reuses the table entry
    assert theory.mk_hcongr(n) == (name, statement)


@pytest.mark.parametrize("n", [0, -1, settings.MAX_HCONGR_ARITY + 1])
def test_hcongr_arity_bounds(theory, n):
    with pytest.raises(InvalidArityError):
        theory.mk_hcongr(n)


def test_binary_congruence_proves_the_polymorphic_instance(theory, ctx):
    proof = theory.hcongr_app(
        POLY, f, f, theory.refl(POLY, f),
        [(N, N, theory.hrefl(TYPE, N)), (a, b, e)],
        ctx,
    )
    ty = theory.kernel.infer_type(proof, ctx)
    assert theory.kernel.defeq(ty, theory.heq_type(N, N, mk_app(f, N, a), mk_app(f, N, b)), ctx)


def test_hcongr_needs_enough_binders(theory, ctx):
    with pytest.raises(UnsupportedFunctionTypeError):
        theory.hcongr_app(arrow(N, N), f, f, e, [(a, a, e), (b, b, e)], ctx)


def test_register_subsingleton(theory, ctx):
    name = theory.register_subsingleton(Const("P"), Const("irrel"), ctx)
    assert name == "hsse<P>"
    assert theory.axioms.has(name)
    assert theory.register_subsingleton(Const("P"), Const("irrel"), ctx) == name
    assert theory.lookup_subsingleton(Const("P"), ctx).axiom == name
    assert theory.lookup_subsingleton(N, ctx) is None


def test_subsingleton_lemma_typechecks(theory, ctx):
    name = theory.register_subsingleton(Const("P"), Const("irrel"), ctx)
    ctx2 = ctx.extend(Declaration("p", Const("P")), Declaration("q", Const("P")))
    P = Const("P")
    proof = mk_app(Const(name), P, Const("p"), Const("q"), theory.hrefl(TYPE, P))
    ty = theory.kernel.infer_type(proof, ctx2)
    assert theory.kernel.defeq(ty, theory.heq_type(P, P, Const("p"), Const("q")), ctx2)


def test_register_rejects_type(theory, ctx):
    with pytest.raises(RegistrationError):
        theory.register_subsingleton(TYPE, Const("irrel"), ctx)


def test_register_rejects_a_wrong_witness(theory, ctx):
    with pytest.raises(RegistrationError):
        theory.register_subsingleton(N, Const("irrel"), ctx)


def test_register_rejects_ill_formed_types(theory, ctx):
    with pytest.raises(RegistrationError):
        theory.register_subsingleton(App(Const("missing"), a), Const("irrel"), ctx)


def test_proof_steps(theory, ctx):
    k = theory.kernel
    assert k.infer_type(theory.mk_proof_step("hrefl", [a], ctx), ctx) == theory.heq_type(N, N, a, a)
    symm = theory.mk_proof_step("hsymm", [e], ctx)
    assert k.infer_type(symm, ctx) == theory.heq_type(N, N, b, a)
    loop = theory.mk_proof_step("htrans", [e, symm], ctx)
    assert k.infer_type(loop, ctx) == theory.heq_type(N, N, a, a)
    homo = theory.mk_proof_step("ofheq", [e], ctx)
    assert k.infer_type(homo, ctx) == theory.eq_type(N, a, b)
    assert k.infer_type(theory.mk_proof_step("ofeq", [homo], ctx), ctx) == theory.heq_type(N, N, a, b)


@pytest.mark.parametrize(
    "kind,args",
    [
        ("symm", [Const("e")]),
        ("htrans", [Const("e")]),
        ("hsymm", [Const("a")]),
        ("ofeq", [Const("e")]),
    ],
)
def test_bad_proof_steps(theory, ctx, kind, args):
    with pytest.raises(ProofConstructionError):
        theory.mk_proof_step(kind, args, ctx)


def test_reregistering_checks_the_new_witness(theory, ctx):
    assert theory.register_subsingleton(Const("P"), Const("irrel"), ctx) == "hsse<P>"
    with pytest.raises(RegistrationError):
        theory.register_subsingleton(Const("P"), a, ctx)


# ---------- congruence lemmas over simple types ----------
def _simple(n: int) -> Term:
    out = N
    for _ in range(n):
        out = arrow(N, out)
    return out


@hsettings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.data())
def test_hcongr_app_over_simple_function_types(n, data):
    theory = SolverContainer().equality_theory_service()
    T = _simple(n)
    same = data.draw(st.lists(st.booleans(), min_size=n, max_size=n))
    decls = [Declaration("N", TYPE), Declaration("f", T), Declaration("g", T)]
    decls.append(Declaration("efg", theory.eq_type(T, Const("f"), Const("g"))))
    eqs = []
    for i, refl in enumerate(same):
        ai, bi = Const(f"a{i}"), Const(f"a{i}" if refl else f"b{i}")
        decls += [Declaration(f"a{i}", N), Declaration(f"b{i}", N)]
        decls.append(Declaration(f"e{i}", theory.heq_type(N, N, ai, bi)))
        eqs.append((ai, bi, theory.hrefl(N, ai) if refl else Const(f"e{i}")))
    ctx = Context(decls)

    proof = theory.hcongr_app(T, Const("f"), Const("g"), Const("efg"), eqs, ctx)
    lhs = mk_app(Const("f"), *(x for x, _, _ in eqs))
    rhs = mk_app(Const("g"), *(y for _, y, _ in eqs))
    ty = theory.kernel.infer_type(proof, ctx)
    assert theory.kernel.defeq(ty, theory.heq_type(N, N, lhs, rhs), ctx)


@pytest.mark.parametrize("n", range(1, 7))
def test_constant_families_give_the_simply_typed_lemma(theory, n):
    name, _ = theory.mk_hcongr(n)
    xs = [(f"x{j}", N) for j in range(n)]
    families = [mk_lam(xs[:i], N) for i in range(n)]
    lemma = mk_app(Const(name), *families, mk_lam(xs, N))
    ctx = Context([Declaration("N", TYPE)])

    T = _simple(n)
    f, g = bound("f"), bound("g")
    binders = [("f", T), ("g", T), ("efg", theory.eq_type(T, f, g))]
    a_s = [bound(f"a{i}") for i in range(n)]
    b_s = [bound(f"b{i}") for i in range(n)]
    for i in range(n):
        binders += [(f"a{i}", N), (f"b{i}", N), (f"e{i}", theory.heq_type(N, N, a_s[i], b_s[i]))]
    expected = mk_pi(binders, theory.heq_type(N, N, mk_app(f, *a_s), mk_app(g, *b_s)))

    k = theory.kernel
    assert k.defeq(k.infer_type(lemma, ctx), expected, ctx)
