from typing import List, Sequence, Tuple

from app.core.errors import NoCommonAncestorError, PathRangeError, ProofConstructionError
from app.v1_0.entities import CCState, Const, LocalDef, Term
from app.v1_0.services.equality_theory_service import EqualityTheoryService

ArgProof = Tuple[Term, Term, Term]


class ProofBuilderService:
    """Congruence and transitivity proofs read off a solver state.

    All proofs are heterogeneous equalities with every type argument written
    out, so the checker never has to guess.
    """

    def __init__(self, theory: EqualityTheoryService) -> None:
        self.theory = theory

    def mkcongr(self, state: CCState, d: LocalDef, e: LocalDef) -> Term:
        """Proof of `var(d) == var(e)` for congruent definitions.

        The spines of `d` and `e` are peeled while their function parts are
        congruent definitions. The lemma is then taken at the deepest level
        whose function parts share a type with enough binders for all the
        arguments peeled so far; shallower levels are used when instantiation
        only exposes the binders later. Function parts of a shallower level
        that are not merged yet are proved equal by congruence one level down.

        Raises:
            ProofConstructionError: the definitions are not congruent.
        """
        flat = state.flat
        levels: List[Tuple[LocalDef, LocalDef]] = []
        while True:
            if not state.same(d.arg, e.arg):
                raise ProofConstructionError(f"{d.name} and {e.name} have unrelated arguments")
            levels.append((d, e))
            df, dg = flat.defs.get(d.fn), flat.defs.get(e.fn)
            if df is None or dg is None or not state.congruent(df, dg):
                break
            d, e = df, dg

        fallback = None
        for depth in range(len(levels) - 1, -1, -1):
            f, g = levels[depth][0].fn, levels[depth][1].fn
            if flat.ntypes[f] != flat.ntypes[g]:
                continue
            if state.same(f, g):
                head_proof = lambda f=f, g=g: self.mkpr(state, f, g)
            elif depth + 1 < len(levels):
                head_proof = lambda depth=depth: self.mkcongr(state, *levels[depth + 1])
            else:
                continue
            if self.theory.hcongr_arity(flat.types[f], flat.ctx) > depth:
                return self._close(state, f, g, head_proof(), levels[: depth + 1])
            if fallback is None:
                fallback = (f, g, head_proof, depth)
        if fallback is None:
            top_d, top_e = levels[0]
            raise ProofConstructionError(f"{top_d.name} and {top_e.name} are not congruent")
        # raises UnsupportedFunctionTypeError for the offending head
        f, g, head_proof, depth = fallback
        return self._close(state, f, g, head_proof(), levels[: depth + 1])

    def _close(
        self, state: CCState, f: str, g: str, p_fg: Term, levels: Sequence[Tuple[LocalDef, LocalDef]]
    ) -> Term:
        flat = state.flat
        T = flat.types[f]
        eqs: List[ArgProof] = [
            (Const(d.arg), Const(e.arg), self.mkpr(state, d.arg, e.arg)) for d, e in reversed(levels)
        ]
        homogeneous = self.theory.ofheq(T, Const(f), Const(g), p_fg)
        return self.theory.hcongr_app(T, Const(f), Const(g), homogeneous, eqs, flat.ctx)

    def common_ancestor(self, state: CCState, a: str, b: str) -> Tuple[int, int]:
        """Smallest n, m with target^n[a] = target^m[b]."""
        pa, pb = state.path(a), state.path(b)
        index_b = {x: i for i, x in enumerate(pb)}
        for n, x in enumerate(pa):
            m = index_b.get(x)
            if m is not None:
                return n, m
        raise NoCommonAncestorError(f"{a} and {b} are not in the same class")

    def path_between(self, state: CCState, a: str, b: str) -> List[str]:
        """Variables visited by `mkpr(a, b)`, in order."""
        if a == b:
            return [a]
        n, m = self.common_ancestor(state, a, b)
        pa, pb = state.path(a), state.path(b)
        return pa[: n + 1] + list(reversed(pb[:m]))

    def mkpr(self, state: CCState, a: str, b: str) -> Term:
        """Proof of `a == b` through the proof forest.

        Raises:
            NoCommonAncestorError: a and b are in different classes.
        """
        types = state.flat.types
        if a == b:
            return self.theory.hrefl(types[a], Const(a))
        n, m = self.common_ancestor(state, a, b)
        c = state.path(a)[n]
        e_a = self.mktrans(state, a, n)
        e_b = self.mktrans(state, b, m)
        Ta, Tb, Tc = types[a], types[b], types[c]
        back = self.theory.hsymm(Tb, Tc, Const(b), Const(c), e_b)
        return self.theory.htrans(Ta, Tc, Tb, Const(a), Const(c), Const(b), e_a, back)

    def mktrans(self, state: CCState, a: str, n: int) -> Term:
        """Proof of `a == target^n[a]`.

        Raises:
            PathRangeError: the path from `a` has fewer than n edges.
        """
        types = state.flat.types
        steps = []
        x = a
        for _ in range(n):
            edge = state.pr[x]
            if edge.target == x:
                raise PathRangeError(f"path from {a} has fewer than {n} edges")
            steps.append((x, edge))
            x = edge.target
        end = x
        proof = self.theory.hrefl(types[end], Const(end))
        for x, edge in reversed(steps):
            y, eq = edge.target, edge.eq
            if eq.lhs == x and eq.rhs == y:
                step = eq.proof
            else:
                step = self.theory.hsymm(types[eq.lhs], types[eq.rhs], Const(eq.lhs), Const(eq.rhs), eq.proof)
            proof = self.theory.htrans(
                types[x], types[y], types[end], Const(x), Const(y), Const(end), step, proof
            )
        return proof
