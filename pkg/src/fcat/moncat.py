"""Monoidal categories and w-monoidal functors with full coherence checking.

Variance is a runtime tag w in {s, p, l, c}.  Constraint tables for the
s and p flavours are stored in the lax orientation (pointing into the
functor); the checker dispatches each coherence diagram on orientation so
that the lax and colax cases share one code path per diagram.
"""
from __future__ import annotations

from dataclasses import dataclass

from .report import (
    LAW,
    STRUCTURAL,
    BoundaryError,
    Report,
    VarianceError,
    require,
)
from .fincat import (
    FinCategory,
    Functor,
    NatTransformation,
    compose_functors,
    identity_functor,
    opposite_category,
    opposite_functor,
    validate_category,
    validate_functor,
    validate_nat_trans,
)

VARIANCE_ORDER = {"s": 0, "p": 1, "l": 2, "c": 2}


@dataclass
class MonoidalCategory:
    base: FinCategory
    tensor_obj: dict[tuple[str, str], str]
    tensor_mor: dict[tuple[str, str], str]
    unit: str
    associator: dict[tuple[str, str, str], str]   # (a⊗b)⊗c -> a⊗(b⊗c)
    left_unitor: dict[str, str]                   # i⊗a -> a
    right_unitor: dict[str, str]                  # a⊗i -> a

    @property
    def name(self) -> str:
        return self.base.name

    def tobj(self, a: str, b: str) -> str:
        return self.tensor_obj[(a, b)]

    def tmor(self, f: str, g: str) -> str:
        return self.tensor_mor[(f, g)]


@dataclass
class WMonoidalFunctor:
    variance: str
    dom: MonoidalCategory
    cod: MonoidalCategory
    functor: Functor
    constraints: dict[tuple[str, str], str]
    unit_constraint: str

    @property
    def name(self) -> str:
        return self.functor.name

    def table(self) -> tuple:
        return (self.variance, self.functor.table(),
                tuple(sorted(self.constraints.items())), self.unit_constraint)

    def same_as(self, other: "WMonoidalFunctor") -> bool:
        return self.table() == other.table()


@dataclass
class MonoidalTransformation:
    source: WMonoidalFunctor
    target: WMonoidalFunctor
    nat: NatTransformation


def lax_oriented(variance: str) -> bool:
    """True when constraints point into the functor (s, p and l)."""
    if variance in ("s", "p", "l"):
        return True
    if variance == "c":
        return False
    raise VarianceError(f"unknown variance {variance}")


# ---------------------------------------------------------------------------
# validators


def validate_monoidal_category(M: MonoidalCategory) -> Report:
    rep = Report(f"monoidal_category:{M.name}")
    base_rep = validate_category(M.base)
    rep.merge(base_rep, "base.")
    if not rep.ok:
        return rep
    c = M.base
    objs = list(c.objects)

    for a in objs:
        for b in objs:
            if (a, b) not in M.tensor_obj or M.tensor_obj[(a, b)] not in set(objs):
                rep.fail("structural.tensor_obj", STRUCTURAL,
                         f"tensor of objects ({a},{b}) missing or dangling", (a, b))
    for f in c.mors():
        for g in c.mors():
            if (f, g) not in M.tensor_mor or M.tensor_mor[(f, g)] not in c.morphisms:
                rep.fail("structural.tensor_mor", STRUCTURAL,
                         f"tensor of morphisms ({f},{g}) missing or dangling", (f, g))
    if M.unit not in set(objs):
        rep.fail("structural.unit", STRUCTURAL, "unit object missing", (M.unit,))
    for a in objs:
        for b in objs:
            for d in objs:
                if (a, b, d) not in M.associator or M.associator[(a, b, d)] not in c.morphisms:
                    rep.fail("structural.associator", STRUCTURAL,
                             f"associator component ({a},{b},{d}) missing", (a, b, d))
    for a in objs:
        for tab, nm in ((M.left_unitor, "left_unitor"), (M.right_unitor, "right_unitor")):
            if a not in tab or tab[a] not in c.morphisms:
                rep.fail(f"structural.{nm}", STRUCTURAL,
                         f"{nm} component at {a} missing", (a,))
    if not rep.ok:
        return rep

    # bifunctoriality
    for f in c.mors():
        for g in c.mors():
            fg = M.tmor(f, g)
            want = (M.tobj(c.src(f), c.src(g)), M.tobj(c.tgt(f), c.tgt(g)))
            if c.morphisms[fg] != want:
                rep.fail("law.tensor_boundary", LAW,
                         f"tensor of ({f},{g}) has wrong endpoints", (f, g, fg))
    if not rep.ok:
        return rep
    for a in objs:
        for b in objs:
            if M.tmor(c.id_(a), c.id_(b)) != c.id_(M.tobj(a, b)):
                rep.fail("law.tensor_identities", LAW,
                         f"tensor of identities at ({a},{b}) is not an identity", (a, b))
    for f2 in c.mors():
        for f1 in c.mors():
            if c.src(f2) != c.tgt(f1):
                continue
            for g2 in c.mors():
                for g1 in c.mors():
                    if c.src(g2) != c.tgt(g1):
                        continue
                    lhs = M.tmor(c.compose(f2, f1), c.compose(g2, g1))
                    rhs = c.compose(M.tmor(f2, g2), M.tmor(f1, g1))
                    if lhs != rhs:
                        rep.fail("law.tensor_interchange", LAW,
                                 "tensor does not respect composition",
                                 (f2, f1, g2, g1))

    # naturality and invertibility of the structure isomorphisms
    for a in objs:
        for b in objs:
            for d in objs:
                comp = M.associator[(a, b, d)]
                want = (M.tobj(M.tobj(a, b), d), M.tobj(a, M.tobj(b, d)))
                if c.morphisms[comp] != want:
                    rep.fail("law.associator_boundary", LAW,
                             f"associator at ({a},{b},{d}) has wrong endpoints",
                             (a, b, d))
                elif not c.is_iso(comp):
                    rep.fail("law.associator_invertible", LAW,
                             f"associator at ({a},{b},{d}) is not invertible",
                             (a, b, d))
    for a in objs:
        lu, ru = M.left_unitor[a], M.right_unitor[a]
        if c.morphisms[lu] != (M.tobj(M.unit, a), a):
            rep.fail("law.left_unitor_boundary", LAW,
                     f"left unitor at {a} has wrong endpoints", (a,))
        elif not c.is_iso(lu):
            rep.fail("law.left_unitor_invertible", LAW,
                     f"left unitor at {a} is not invertible", (a,))
        if c.morphisms[ru] != (M.tobj(a, M.unit), a):
            rep.fail("law.right_unitor_boundary", LAW,
                     f"right unitor at {a} has wrong endpoints", (a,))
        elif not c.is_iso(ru):
            rep.fail("law.right_unitor_invertible", LAW,
                     f"right unitor at {a} is not invertible", (a,))
    if not rep.ok:
        return rep
    for f in c.mors():
        for g in c.mors():
            for h in c.mors():
                a0, a1 = c.morphisms[f]
                b0, b1 = c.morphisms[g]
                d0, d1 = c.morphisms[h]
                lhs = c.compose(M.tmor(f, M.tmor(g, h)), M.associator[(a0, b0, d0)])
                rhs = c.compose(M.associator[(a1, b1, d1)], M.tmor(M.tmor(f, g), h))
                if lhs != rhs:
                    rep.fail("law.associator_naturality", LAW,
                             f"associator not natural at ({f},{g},{h})", (f, g, h))
    for f in c.mors():
        a0, a1 = c.morphisms[f]
        if c.compose(f, M.left_unitor[a0]) != c.compose(M.left_unitor[a1],
                                                        M.tmor(c.id_(M.unit), f)):
            rep.fail("law.left_unitor_naturality", LAW,
                     f"left unitor not natural at {f}", (f,))
        if c.compose(f, M.right_unitor[a0]) != c.compose(M.right_unitor[a1],
                                                         M.tmor(f, c.id_(M.unit))):
            rep.fail("law.right_unitor_naturality", LAW,
                     f"right unitor not natural at {f}", (f,))

    # pentagon and triangle
    for a in objs:
        for b in objs:
            for d in objs:
                for e in objs:
                    top = c.compose(M.associator[(a, b, M.tobj(d, e))],
                                    M.associator[(M.tobj(a, b), d, e)])
                    bot = c.compose(
                        M.tmor(c.id_(a), M.associator[(b, d, e)]),
                        c.compose(M.associator[(a, M.tobj(b, d), e)],
                                  M.tmor(M.associator[(a, b, d)], c.id_(e))))
                    if top != bot:
                        rep.fail("law.pentagon", LAW,
                                 f"pentagon fails at ({a},{b},{d},{e})", (a, b, d, e))
    for a in objs:
        for b in objs:
            lhs = M.tmor(M.right_unitor[a], c.id_(b))
            rhs = c.compose(M.tmor(c.id_(a), M.left_unitor[b]),
                            M.associator[(a, M.unit, b)])
            if lhs != rhs:
                rep.fail("law.triangle", LAW, f"triangle fails at ({a},{b})", (a, b))
    return rep


def _constraint_wanted_endpoints(F: WMonoidalFunctor, a: str, b: str) -> tuple[str, str]:
    A, B = F.dom, F.cod
    u = F.functor
    fab = B.tobj(u.on_obj(a), u.on_obj(b))
    fa_b = u.on_obj(A.tobj(a, b))
    return (fab, fa_b) if lax_oriented(F.variance) else (fa_b, fab)


def validate_monoidal_functor(F: WMonoidalFunctor) -> Report:
    rep = Report(f"monoidal_functor:{F.name}:{F.variance}")
    if F.variance not in ("s", "p", "l", "c"):
        rep.fail("structural.variance", STRUCTURAL,
                 f"unknown variance {F.variance}", (F.variance,))
        return rep
    require(validate_monoidal_category(F.dom))
    require(validate_monoidal_category(F.cod))
    rep.merge(validate_functor(F.functor), "functor.")
    if not rep.ok:
        return rep
    A, B = F.dom, F.cod
    u = F.functor
    cod = B.base

    # orientation of the constraint family
    for a in A.base.objects:
        for b in A.base.objects:
            m = F.constraints.get((a, b))
            if m is None or m not in cod.morphisms:
                rep.fail("structural.constraint", STRUCTURAL,
                         f"constraint at ({a},{b}) missing", (a, b))
                continue
            if cod.morphisms[m] != _constraint_wanted_endpoints(F, a, b):
                rep.fail("orientation.constraint", LAW,
                         f"constraint at ({a},{b}) points the wrong way", (a, b, m))
    m0 = F.unit_constraint
    if m0 not in cod.morphisms:
        rep.fail("structural.unit_constraint", STRUCTURAL,
                 "unit constraint missing", (m0,))
    else:
        want = ((B.unit, u.on_obj(A.unit)) if lax_oriented(F.variance)
                else (u.on_obj(A.unit), B.unit))
        if cod.morphisms[m0] != want:
            rep.fail("orientation.unit_constraint", LAW,
                     "unit constraint points the wrong way", (m0,))
    if not rep.ok:
        return rep
    if F.variance == "s":
        for (a, b), m in sorted(F.constraints.items()):
            if not cod.is_identity(m):
                rep.fail("orientation.strict", LAW,
                         f"strict functor has non-identity constraint at ({a},{b})",
                         (a, b, m))
        if not cod.is_identity(m0):
            rep.fail("orientation.strict_unit", LAW,
                     "strict functor has non-identity unit constraint", (m0,))
    if F.variance == "p":
        for (a, b), m in sorted(F.constraints.items()):
            if not cod.is_iso(m):
                rep.fail("orientation.pseudo", LAW,
                         f"strong functor has non-invertible constraint at ({a},{b})",
                         (a, b, m))
        if not cod.is_iso(m0):
            rep.fail("orientation.pseudo_unit", LAW,
                     "strong functor has non-invertible unit constraint", (m0,))
    if not rep.ok:
        return rep

    lax = lax_oriented(F.variance)

    # naturality of the constraint family
    for f in A.base.mors():
        for g in A.base.mors():
            a0, a1 = A.base.morphisms[f]
            b0, b1 = A.base.morphisms[g]
            img_pair = cod.composition  # alias
            through = u.on_mor(A.tmor(f, g))
            apart = B.tmor(u.on_mor(f), u.on_mor(g))
            if lax:
                lhs = img_pair[(through, F.constraints[(a0, b0)])]
                rhs = img_pair[(F.constraints[(a1, b1)], apart)]
            else:
                lhs = img_pair[(apart, F.constraints[(a0, b0)])]
                rhs = img_pair[(F.constraints[(a1, b1)], through)]
            if lhs != rhs:
                rep.fail("law.constraint_naturality", LAW,
                         f"constraint not natural at ({f},{g})", (f, g))
    if not rep.ok:
        return rep

    compose = cod.composition
    for a in A.base.objects:
        for b in A.base.objects:
            for d in A.base.objects:
                fa, fb, fd = u.on_obj(a), u.on_obj(b), u.on_obj(d)
                if lax:
                    # F(assoc) ∘ f_{a⊗b,d} ∘ (f_{a,b} ⊗ 1) =
                    #   f_{a,b⊗d} ∘ (1 ⊗ f_{b,d}) ∘ assoc_B
                    lhs = compose[(u.on_mor(A.associator[(a, b, d)]),
                                   compose[(F.constraints[(A.tobj(a, b), d)],
                                            B.tmor(F.constraints[(a, b)],
                                                   cod.id_(fd)))])]
                    rhs = compose[(F.constraints[(a, A.tobj(b, d))],
                                   compose[(B.tmor(cod.id_(fa),
                                                   F.constraints[(b, d)]),
                                            B.associator[(fa, fb, fd)])])]
                else:
                    # assoc_B ∘ (f_{a,b} ⊗ 1) ∘ f_{a⊗b,d} =
                    #   (1 ⊗ f_{b,d}) ∘ f_{a,b⊗d} ∘ F(assoc)
                    lhs = compose[(B.associator[(fa, fb, fd)],
                                   compose[(B.tmor(F.constraints[(a, b)],
                                                   cod.id_(fd)),
                                            F.constraints[(A.tobj(a, b), d)])])]
                    rhs = compose[(B.tmor(cod.id_(fa), F.constraints[(b, d)]),
                                   compose[(F.constraints[(a, A.tobj(b, d))],
                                            u.on_mor(A.associator[(a, b, d)]))])]
                if lhs != rhs:
                    rep.fail("law.associativity_condition", LAW,
                             f"associativity condition fails at ({a},{b},{d})",
                             (a, b, d))
    for a in A.base.objects:
        fa = u.on_obj(a)
        if lax:
            left = compose[(u.on_mor(A.left_unitor[a]),
                            compose[(F.constraints[(A.unit, a)],
                                     B.tmor(m0, cod.id_(fa)))])]
            right = compose[(u.on_mor(A.right_unitor[a]),
                             compose[(F.constraints[(a, A.unit)],
                                      B.tmor(cod.id_(fa), m0))])]
            if left != B.left_unitor[fa]:
                rep.fail("law.left_unit_condition", LAW,
                         f"left unit condition fails at {a}", (a,))
            if right != B.right_unitor[fa]:
                rep.fail("law.right_unit_condition", LAW,
                         f"right unit condition fails at {a}", (a,))
        else:
            left = compose[(B.left_unitor[fa],
                            compose[(B.tmor(m0, cod.id_(fa)),
                                     F.constraints[(A.unit, a)])])]
            right = compose[(B.right_unitor[fa],
                             compose[(B.tmor(cod.id_(fa), m0),
                                      F.constraints[(a, A.unit)])])]
            if left != u.on_mor(A.left_unitor[a]):
                rep.fail("law.left_unit_condition", LAW,
                         f"left unit condition fails at {a}", (a,))
            if right != u.on_mor(A.right_unitor[a]):
                rep.fail("law.right_unit_condition", LAW,
                         f"right unit condition fails at {a}", (a,))
    return rep


def validate_monoidal_transformation(t: MonoidalTransformation) -> Report:
    rep = Report("monoidal_transformation")
    F, G = t.source, t.target
    if lax_oriented(F.variance) != lax_oriented(G.variance):
        rep.fail("structural.variance_mismatch", STRUCTURAL,
                 f"variances {F.variance} and {G.variance} are not compatible",
                 (F.variance, G.variance))
        return rep
    rep.merge(validate_nat_trans(t.nat), "nat.")
    if not rep.ok:
        return rep
    cod = F.cod.base
    compose = cod.composition
    lax = lax_oriented(F.variance)
    for a in F.dom.base.objects:
        for b in F.dom.base.objects:
            pair = F.cod.tmor(t.nat.at(a), t.nat.at(b))
            at_tensor = t.nat.at(F.dom.tobj(a, b))
            if lax:
                lhs = compose[(G.constraints[(a, b)], pair)]
                rhs = compose[(at_tensor, F.constraints[(a, b)])]
            else:
                lhs = compose[(pair, F.constraints[(a, b)])]
                rhs = compose[(G.constraints[(a, b)], at_tensor)]
            if lhs != rhs:
                rep.fail("law.tensor_condition", LAW,
                         f"tensor condition fails at ({a},{b})", (a, b))
    if lax:
        if compose[(t.nat.at(F.dom.unit), F.unit_constraint)] != G.unit_constraint:
            rep.fail("law.unit_condition", LAW, "unit condition fails", ())
    else:
        if compose[(G.unit_constraint, t.nat.at(F.dom.unit))] != F.unit_constraint:
            rep.fail("law.unit_condition", LAW, "unit condition fails", ())
    return rep


# ---------------------------------------------------------------------------
# composition, coercion, duality


def join_variance(w1: str, w2: str) -> str:
    if {w1, w2} == {"l", "c"}:
        raise VarianceError("non-composable variances: lax with colax")
    return w1 if VARIANCE_ORDER[w1] >= VARIANCE_ORDER[w2] else w2


def _invert_constraints(F: WMonoidalFunctor) -> tuple[dict, str]:
    cod = F.cod.base
    inv = {}
    for key, m in F.constraints.items():
        n = cod.inverse(m)
        if n is None:
            raise VarianceError(f"constraint {m} is not invertible")
        inv[key] = n
    n0 = cod.inverse(F.unit_constraint)
    if n0 is None:
        raise VarianceError(f"unit constraint {F.unit_constraint} is not invertible")
    return inv, n0


def oriented_constraints(F: WMonoidalFunctor, lax: bool) -> tuple[dict, str]:
    """Constraint tables of F in the requested orientation.

    Tables of s and p functors invert on demand; l and c refuse to flip.
    """
    if lax_oriented(F.variance) == lax:
        return dict(F.constraints), F.unit_constraint
    if F.variance in ("s", "p"):
        return _invert_constraints(F)
    raise VarianceError(f"a {F.variance}-monoidal functor cannot reverse orientation")


def coerce_variance(F: WMonoidalFunctor, w: str) -> WMonoidalFunctor:
    """View F along an inclusion s <= p <= l or s <= p <= c."""
    if F.variance == w:
        return F
    if VARIANCE_ORDER[F.variance] > VARIANCE_ORDER[w] or {F.variance, w} == {"l", "c"}:
        raise VarianceError(f"cannot view a {F.variance}-functor as {w}")
    cons, unit_c = oriented_constraints(F, lax_oriented(w))
    return WMonoidalFunctor(variance=w, dom=F.dom, cod=F.cod, functor=F.functor,
                            constraints=cons, unit_constraint=unit_c)


def identity_monoidal_functor(M: MonoidalCategory, variance: str = "s") -> WMonoidalFunctor:
    base = M.base
    F = WMonoidalFunctor(
        variance="s", dom=M, cod=M, functor=identity_functor(base),
        constraints={(a, b): base.id_(M.tobj(a, b))
                     for a in base.objects for b in base.objects},
        unit_constraint=base.id_(M.unit))
    return F if variance == "s" else coerce_variance(F, variance)


def compose_monoidal_functors(G: WMonoidalFunctor, F: WMonoidalFunctor) -> WMonoidalFunctor:
    """Composite with the pasted constraint family, in the joined variance."""
    if F.cod.name != G.dom.name:
        raise BoundaryError(f"monoidal functors do not compose: {G.name} after {F.name}")
    w = join_variance(G.variance, F.variance)
    lax = lax_oriented(w)
    f_cons, f0 = oriented_constraints(F, lax)
    g_cons, g0 = oriented_constraints(G, lax)
    u, v = F.functor, G.functor
    cod = G.cod.base
    cons = {}
    for a in F.dom.base.objects:
        for b in F.dom.base.objects:
            inner = v.on_mor(f_cons[(a, b)])
            outer = g_cons[(u.on_obj(a), u.on_obj(b))]
            cons[(a, b)] = (cod.compose(inner, outer) if lax
                            else cod.compose(outer, inner))
    unit_c = (cod.compose(v.on_mor(f0), g0) if lax
              else cod.compose(g0, v.on_mor(f0)))
    return WMonoidalFunctor(variance=w, dom=F.dom, cod=G.cod,
                            functor=compose_functors(v, u),
                            constraints=cons, unit_constraint=unit_c)


def op_dualize(x):
    """The lax/colax-swapping duality, realised by opposite categories."""
    if isinstance(x, MonoidalCategory):
        base = opposite_category(x.base)
        inv = {m: x.base.inverse(m) for m in
               set(x.associator.values())
               | set(x.left_unitor.values()) | set(x.right_unitor.values())}
        return MonoidalCategory(
            base=base,
            tensor_obj=dict(x.tensor_obj),
            tensor_mor=dict(x.tensor_mor),
            unit=x.unit,
            associator={k: inv[m] for k, m in x.associator.items()},
            left_unitor={k: inv[m] for k, m in x.left_unitor.items()},
            right_unitor={k: inv[m] for k, m in x.right_unitor.items()})
    if isinstance(x, WMonoidalFunctor):
        swap = {"l": "c", "c": "l", "s": "s", "p": "p"}
        if x.variance in ("s", "p"):
            # invert so the dual stores its tables lax-oriented again;
            # identities are self-inverse, so s is untouched
            cons, unit_c = _invert_constraints(x)
        else:
            cons, unit_c = dict(x.constraints), x.unit_constraint
        return WMonoidalFunctor(
            variance=swap[x.variance],
            dom=op_dualize(x.dom), cod=op_dualize(x.cod),
            functor=opposite_functor(x.functor),
            constraints=cons,
            unit_constraint=unit_c)
    if isinstance(x, MonoidalTransformation):
        from .fincat import opposite_nat
        return MonoidalTransformation(
            source=op_dualize(x.target),
            target=op_dualize(x.source),
            nat=opposite_nat(x.nat))
    raise TypeError(f"op_dualize does not apply to {type(x).__name__}")
