from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from app.core.errors import (
    InvalidArityError,
    KernelError,
    ProofConstructionError,
    RegistrationError,
    UnsupportedFunctionTypeError,
)
from app.core.logger import logger
from app.core.settings import settings
from app.v1_0.entities import (
    App,
    Const,
    Context,
    Declaration,
    Lam,
    Pi,
    Term,
    TYPE,
    arrow,
    bound,
    mk_app,
    mk_pi,
    unfold_apps,
)
from app.v1_0.helper.io.printer import show
from app.v1_0.repositories import AxiomRepository, SubsingletonEntry, SubsingletonRepository
from app.v1_0.services.kernel_service import KernelService

EQ, HEQ = Const("eq"), Const("heq")
REFL, HREFL, HSYMM, HTRANS = Const("refl"), Const("hrefl"), Const("hsymm"), Const("htrans")
OFEQ, OFHEQ, EREC = Const("ofeq"), Const("ofheq"), Const("erec")

PROOF_STEPS = ("refl", "hrefl", "hsymm", "htrans", "ofeq", "ofheq")


@dataclass(frozen=True, slots=True)
class Equation:
    """`lhs == rhs` (or `lhs = rhs` when homogeneous) with its side types."""
    homogeneous: bool
    lhs_type: Term
    rhs_type: Term
    lhs: Term
    rhs: Term


def hcongr_name(n: int) -> str:
    return f"hcongr_{n}"


def _fixed_axioms() -> List[Tuple[str, Term]]:
    A, B, C = bound("A"), bound("B"), bound("C")
    a, b, c = bound("a"), bound("b"), bound("c")
    eq = lambda T, x, y: mk_app(EQ, T, x, y)
    heq = lambda S, T, x, y: mk_app(HEQ, S, T, x, y)
    return [
        ("eq", mk_pi([("A", TYPE), ("a", A), ("b", A)], TYPE)),
        ("refl", mk_pi([("A", TYPE), ("a", A)], eq(A, a, a))),
        ("erec", mk_pi(
            [("A", TYPE), ("a", A), ("C", arrow(A, TYPE)), ("p", App(C, a)), ("b", A), ("e", eq(A, a, b))],
            App(C, b),
        )),
        ("heq", mk_pi([("A", TYPE), ("B", TYPE), ("a", A), ("b", B)], TYPE)),
        ("hrefl", mk_pi([("A", TYPE), ("a", A)], heq(A, A, a, a))),
        ("hsymm", mk_pi(
            [("A", TYPE), ("B", TYPE), ("a", A), ("b", B), ("h", heq(A, B, a, b))],
            heq(B, A, b, a),
        )),
        ("htrans", mk_pi(
            [("A", TYPE), ("B", TYPE), ("C", TYPE), ("a", A), ("b", B), ("c", C),
             ("h1", heq(A, B, a, b)), ("h2", heq(B, C, b, c))],
            heq(A, C, a, c),
        )),
        ("ofeq", mk_pi([("A", TYPE), ("a", A), ("b", A), ("h", eq(A, a, b))], heq(A, A, a, b))),
        ("ofheq", mk_pi([("A", TYPE), ("a", A), ("b", A), ("h", heq(A, A, a, b))], eq(A, a, b))),
    ]


class EqualityTheoryService:
    """Equality constants, the `hcongr_n` family and subsingleton lemmas.

    Every statement is type-checked by the kernel before it enters the axiom
    table; nothing is ever removed from it.
    """

    def __init__(self, kernel: KernelService, subsingleton_repository: SubsingletonRepository) -> None:
        self.kernel = kernel
        self.axioms: AxiomRepository = kernel.axioms
        self.subsingletons = subsingleton_repository
        self._empty = Context()
        for name, statement in _fixed_axioms():
            if not self.axioms.has(name):
                self._install(name, statement, self._empty)

    def _install(self, name: str, statement: Term, ctx: Context) -> None:
        self.kernel.ensure_sort(statement, ctx)
        self.axioms.add_axiom(Declaration(name, statement))
        logger.debug("[EqualityTheoryService] axiom %s installed", name)

    # ---------- statement builders ----------
    @staticmethod
    def eq_type(A: Term, a: Term, b: Term) -> Term:
        return mk_app(EQ, A, a, b)

    @staticmethod
    def heq_type(A: Term, B: Term, a: Term, b: Term) -> Term:
        return mk_app(HEQ, A, B, a, b)

    @staticmethod
    def refl(A: Term, a: Term) -> Term:
        return mk_app(REFL, A, a)

    @staticmethod
    def hrefl(A: Term, a: Term) -> Term:
        return mk_app(HREFL, A, a)

    @staticmethod
    def hsymm(A: Term, B: Term, a: Term, b: Term, p: Term) -> Term:
        return mk_app(HSYMM, A, B, a, b, p)

    @staticmethod
    def htrans(A: Term, B: Term, C: Term, a: Term, b: Term, c: Term, p: Term, q: Term) -> Term:
        return mk_app(HTRANS, A, B, C, a, b, c, p, q)

    @staticmethod
    def ofeq(A: Term, a: Term, b: Term, p: Term) -> Term:
        return mk_app(OFEQ, A, a, b, p)

    @staticmethod
    def ofheq(A: Term, a: Term, b: Term, p: Term) -> Term:
        return mk_app(OFHEQ, A, a, b, p)

    def match_equation(self, t: Term, ctx: Context) -> Optional[Equation]:
        """Decompose `heq A B a b` or `eq A a b` (after head reduction)."""
        head, args = unfold_apps(self.kernel.whnf(t, ctx))
        if head == HEQ and len(args) == 4:
            return Equation(False, args[0], args[1], args[2], args[3])
        if head == EQ and len(args) == 3:
            return Equation(True, args[0], args[0], args[1], args[2])
        return None

    # ---------- hcongr ----------
    def mk_hcongr(self, n: int) -> Tuple[str, Term]:
        """Name and statement of the n-ary congruence lemma.

        Parameters come in the order A1..An B f g (f = g) then, per argument,
        a_i b_i (a_i == b_i); each A_i and B is abstracted over all preceding
        arguments. Statements are checked once and cached in the axiom table.

        Raises:
            InvalidArityError: n < 1 or n above the configured maximum.
        """
        if n < 1:
            raise InvalidArityError(f"hcongr arity must be positive, got {n}")
        if n > settings.MAX_HCONGR_ARITY:
            raise InvalidArityError(f"hcongr arity {n} exceeds MAX_HCONGR_ARITY={settings.MAX_HCONGR_ARITY}")
        name = hcongr_name(n)
        found = self.axioms.get_axiom(name)
        if found is not None:
            return name, found.type
        statement = self._hcongr_statement(n)
        self._install(name, statement, self._empty)
        return name, statement

    @staticmethod
    def _hcongr_statement(n: int) -> Term:
        As = [bound(f"A{i}") for i in range(1, n + 1)]
        Bp = bound("B")
        xs = [bound(f"x{i}") for i in range(1, n + 1)]

        def telescope(upto: int) -> List[Tuple[str, Term]]:
            return [(f"x{j + 1}", mk_app(As[j], *xs[:j])) for j in range(upto)]

        binders: List[Tuple[str, Term]] = []
        for i in range(n):
            binders.append((f"A{i + 1}", mk_pi(telescope(i), TYPE)))
        binders.append(("B", mk_pi(telescope(n), TYPE)))
        fn_type = mk_pi(telescope(n), mk_app(Bp, *xs))
        f, g = bound("f"), bound("g")
        binders += [("f", fn_type), ("g", fn_type), ("efg", mk_app(EQ, fn_type, f, g))]
        a_s = [bound(f"a{i}") for i in range(1, n + 1)]
        b_s = [bound(f"b{i}") for i in range(1, n + 1)]
        for i in range(n):
            Aa, Ab = mk_app(As[i], *a_s[:i]), mk_app(As[i], *b_s[:i])
            binders += [
                (f"a{i + 1}", Aa),
                (f"b{i + 1}", Ab),
                (f"e{i + 1}", mk_app(HEQ, Aa, Ab, a_s[i], b_s[i])),
            ]
        conclusion = mk_app(HEQ, mk_app(Bp, *a_s), mk_app(Bp, *b_s), mk_app(f, *a_s), mk_app(g, *b_s))
        return mk_pi(binders, conclusion)

    def prepare(self, max_arity: int) -> None:
        for n in range(1, min(max_arity, settings.MAX_HCONGR_ARITY) + 1):
            self.mk_hcongr(n)

    def hcongr_arity(self, fn_type: Term, ctx: Context) -> int:
        """Number of leading Pi binders of the normal form of `fn_type`."""
        cur = self.kernel.normalize(fn_type, ctx)
        n = 0
        while isinstance(cur, Pi):
            n += 1
            cur = cur.body
        return n

    def hcongr_app(
        self,
        fn_type: Term,
        f: Term,
        g: Term,
        p_fg: Term,
        eqs: Sequence[Tuple[Term, Term, Term]],
        ctx: Context,
    ) -> Term:
        """Instantiate `hcongr_n` for `f, g : fn_type`, `p_fg : f = g` and argument proofs.

        The telescope parameters are read off the normal form of `fn_type`:
        A_i abstracts the i-th domain over the earlier ones and B the
        codomain over all n.

        Raises:
            UnsupportedFunctionTypeError: `fn_type` has fewer than n binders.
        """
        n = len(eqs)
        name, _ = self.mk_hcongr(n)
        cur = self.kernel.normalize(fn_type, ctx)
        doms: List[Pi] = []
        for _ in range(n):
            if not isinstance(cur, Pi):
                raise UnsupportedFunctionTypeError(
                    f"'{show(fn_type)}' does not take {n} arguments; cannot instantiate {name}"
                )
            doms.append(cur)
            cur = cur.body

        def close(body: Term, upto: int) -> Term:
            for p in reversed(doms[:upto]):
                body = Lam(p.name, p.domain, body)
            return body

        params: List[Term] = [close(doms[i].domain, i) for i in range(n)]
        params.append(close(cur, n))
        params += [f, g, p_fg]
        for a, b, e in eqs:
            params += [a, b, e]
        return mk_app(Const(name), *params)

    # ---------- subsingletons ----------
    def register_subsingleton(self, A: Term, proof: Term, ctx: Context) -> str:
        """Record `A` as a subsingleton witnessed by `proof : Pi (x y : A), x = y`.

        Returns the name of the generated `hsse` lemma. Registering a type
        definitionally equal to an earlier one returns the earlier name once
        the new witness has been checked too.

        Raises:
            RegistrationError: `A` is not a type or `proof` has the wrong type.
        """
        try:
            self.kernel.ensure_sort(A, ctx)
            key = self.kernel.normalize(A, ctx)
        except KernelError as e:
            raise RegistrationError(f"subsingleton type '{show(A)}' is ill-formed: {e.detail}") from e
        if key == TYPE:
            raise RegistrationError("Type cannot be registered as a subsingleton")

        x, y = bound("x"), bound("y")
        expected = mk_pi([("x", A), ("y", A)], mk_app(EQ, A, x, y))
        try:
            self.kernel.check(proof, expected, ctx)
        except KernelError as e:
            raise RegistrationError(f"'{show(proof)}' does not prove that '{show(A)}' is a subsingleton: {e.detail}") from e

        found = self.subsingletons.lookup(key)
        if found is not None:
            return found.axiom

        name = f"hsse<{show(key)}>"
        C, c, a = bound("C"), bound("c"), bound("a")
        statement = mk_pi(
            [("C", TYPE), ("c", C), ("a", A), ("h", mk_app(HEQ, TYPE, TYPE, C, A))],
            mk_app(HEQ, C, A, c, a),
        )
        try:
            self._install(name, statement, ctx)
        except KernelError as e:
            raise RegistrationError(f"cannot state {name}: {e.detail}") from e
        self.subsingletons.add(key, SubsingletonEntry(A, proof, name))
        logger.info("[EqualityTheoryService] subsingleton %s registered as %s", show(A), name)
        return name

    def lookup_subsingleton(self, T: Term, ctx: Context) -> Optional[SubsingletonEntry]:
        if not self.subsingletons.count():
            return None
        return self.subsingletons.lookup(self.kernel.normalize(T, ctx))

    # ---------- generic proof steps ----------
    def mk_proof_step(self, kind: str, args: Sequence[Term], ctx: Context) -> Term:
        """Fully applied equality step with its implicit arguments inferred.

        `kind` is one of refl, hrefl (one term), hsymm, ofeq, ofheq (one proof)
        or htrans (two proofs).

        Raises:
            ProofConstructionError: unknown kind, wrong arity or ill-typed arguments.
        """
        arity = 2 if kind == "htrans" else 1
        if kind not in PROOF_STEPS:
            raise ProofConstructionError(f"unknown proof step '{kind}'")
        if len(args) != arity:
            raise ProofConstructionError(f"{kind} expects {arity} argument(s), got {len(args)}")
        try:
            out = self._proof_step(kind, list(args), ctx)
            self.kernel.infer_type(out, ctx)
        except KernelError as e:
            raise ProofConstructionError(f"{kind}: {e.detail}") from e
        return out

    def _proof_step(self, kind: str, args: List[Term], ctx: Context) -> Term:
        if kind in ("refl", "hrefl"):
            T = self.kernel.infer_type(args[0], ctx)
            return (self.refl if kind == "refl" else self.hrefl)(T, args[0])
        eqs = [self._equation_of(p, ctx) for p in args]
        e = eqs[0]
        if kind == "hsymm":
            self._require(not e.homogeneous, kind, args[0])
            return self.hsymm(e.lhs_type, e.rhs_type, e.lhs, e.rhs, args[0])
        if kind == "ofeq":
            self._require(e.homogeneous, kind, args[0])
            return self.ofeq(e.lhs_type, e.lhs, e.rhs, args[0])
        if kind == "ofheq":
            self._require(not e.homogeneous and self.kernel.defeq(e.lhs_type, e.rhs_type, ctx), kind, args[0])
            return self.ofheq(e.lhs_type, e.lhs, e.rhs, args[0])
        q = eqs[1]
        self._require(not e.homogeneous and not q.homogeneous, kind, args[1])
        return self.htrans(e.lhs_type, e.rhs_type, q.rhs_type, e.lhs, e.rhs, q.rhs, args[0], args[1])

    def _equation_of(self, p: Term, ctx: Context) -> Equation:
        eq = self.match_equation(self.kernel.infer_type(p, ctx), ctx)
        if eq is None:
            raise ProofConstructionError(f"'{show(p)}' is not an equality proof")
        return eq

    @staticmethod
    def _require(ok: bool, kind: str, p: Term) -> None:
        if not ok:
            raise ProofConstructionError(f"{kind} cannot be applied to '{show(p)}'")
