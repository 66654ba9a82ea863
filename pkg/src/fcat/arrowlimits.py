"""Limits of arrows in finite categories: comma apexes and their span calculus.

For a functor f and variance w in {l, p, c} the construction builds the
matching limit flavour: the comma category over f for w = l, its
invertible-component subcategory for w = p, and the comma category under
f for w = c.  Apex objects are canonical triples (x,m,a) with the
codomain component first; morphisms are canonical pairs (r,s).

The factorisation of a morphism through its limit apex, composition of
the resulting spans via strict table pullbacks, and the representation of
2-cells as span maps follow, each certified by exhaustive evaluation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .caps import guard
from .report import (
    LAW,
    BoundaryError,
    ConsistencyError,
    InvalidStructureError,
    Report,
    VarianceError,
    require,
)
from .fincat import (
    CatAdjunction,
    FinCategory,
    Functor,
    NatTransformation,
    compose_functors,
    enumerate_functors,
    enumerate_nat_trans,
    identity_functor,
    identity_nat,
    mate_of_cat_square,
    validate_adjunction,
    validate_category,
    validate_functor,
    validate_nat_trans,
    vertical_compose,
    whisker_left,
    whisker_right,
)
from .moncat import (
    MonoidalCategory,
    MonoidalTransformation,
    WMonoidalFunctor,
    compose_monoidal_functors,
    identity_monoidal_functor,
    lax_oriented,
    validate_monoidal_category,
    validate_monoidal_functor,
    validate_monoidal_transformation,
)


def obj_name(x: str, m: str, a: str) -> str:
    return f"({x},{m},{a})"


def mor_name(r: str, s: str) -> str:
    return f"({r},{s})"


@dataclass
class ArrowLimit:
    w: str                     # morphism variance; the limit is the w-bar flavour
    f: Functor
    apex: FinCategory
    p: Functor                 # apex -> dom(f)
    q: Functor                 # apex -> cod(f)
    lam: NatTransformation     # q => f∘p for l/p, f∘p => q for c
    objects: dict[str, tuple[str, str, str]] = None  # apex object -> (x, m, a)

    def cone_ok(self) -> Report:
        rep = Report(f"arrow_limit:{self.f.name}:{self.w}")
        rep.merge(validate_category(self.apex), "apex.")
        rep.merge(validate_functor(self.p), "p.")
        rep.merge(validate_functor(self.q), "q.")
        rep.merge(validate_nat_trans(self.lam), "lam.")
        fp = compose_functors(self.f, self.p)
        if self.w in ("l", "p"):
            good = self.lam.source.same_as(self.q) and self.lam.target.same_as(fp)
        else:
            good = self.lam.source.same_as(fp) and self.lam.target.same_as(self.q)
        if not good:
            rep.fail("cone.frame", LAW, "structure cell has the wrong frame", ())
        if self.w == "p":
            for o in self.apex.objects:
                if not self.f.cod.is_iso(self.lam.at(o)):
                    rep.fail("cone.invertible", LAW,
                             f"pseudo-cone component at {o} is not invertible", (o,))
        return rep


def limit_of_arrow(w: str, f: Functor) -> ArrowLimit:
    """Build the w-bar limit of f with its universal cone."""
    if w not in ("l", "p", "c"):
        raise VarianceError(f"arrow limits exist for l, p, c; got {w}")
    require(validate_functor(f))
    A, B = f.dom, f.cod

    triples = []
    for a in sorted(A.objects):
        for x in sorted(B.objects):
            if w in ("l", "p"):
                homset = B.hom(x, f.on_obj(a))
            else:
                homset = B.hom(f.on_obj(a), x)
            for m in homset:
                if w == "p" and not B.is_iso(m):
                    continue
                triples.append((x, m, a))
    objects = tuple(obj_name(*t) for t in sorted(triples))
    by_name = {obj_name(*t): t for t in triples}

    mors: dict[str, tuple[str, str]] = {}
    pieces: dict[str, tuple[str, str]] = {}
    for o1, (x1, m1, a1) in sorted(by_name.items()):
        for o2, (x2, m2, a2) in sorted(by_name.items()):
            for r in B.hom(x1, x2):
                for s in A.hom(a1, a2):
                    if w in ("l", "p"):
                        ok = B.compose(m2, r) == B.compose(f.on_mor(s), m1)
                    else:
                        ok = B.compose(r, m1) == B.compose(m2, f.on_mor(s))
                    if ok:
                        nm = mor_name(r, s)
                        mors[f"{nm}:{o1}>{o2}"] = (o1, o2)
                        pieces[f"{nm}:{o1}>{o2}"] = (r, s)

    identities = {}
    for o, (x, m, a) in by_name.items():
        identities[o] = f"{mor_name(B.id_(x), A.id_(a))}:{o}>{o}"
    composition = {}
    for n2, (o2a, o2b) in mors.items():
        for n1, (o1a, o1b) in mors.items():
            if o2a != o1b:
                continue
            r2, s2 = pieces[n2]
            r1, s1 = pieces[n1]
            nm = mor_name(B.compose(r2, r1), A.compose(s2, s1))
            composition[(n2, n1)] = f"{nm}:{o1a}>{o2b}"

    apex = FinCategory(f"W[{f.name}:{w}]", objects, mors, identities, composition)
    p = Functor(f"p[{f.name}:{w}]", apex, A,
                {o: by_name[o][2] for o in objects},
                {n: pieces[n][1] for n in mors})
    q = Functor(f"q[{f.name}:{w}]", apex, B,
                {o: by_name[o][0] for o in objects},
                {n: pieces[n][0] for n in mors})
    fp = compose_functors(f, p)
    if w in ("l", "p"):
        lam = NatTransformation(q, fp, {o: by_name[o][1] for o in objects})
    else:
        lam = NatTransformation(fp, q, {o: by_name[o][1] for o in objects})
    lim = ArrowLimit(w=w, f=f, apex=apex, p=p, q=q, lam=lam, objects=by_name)
    require(lim.cone_ok())
    return lim


# ---------------------------------------------------------------------------
# cones and factorisation


def enumerate_cat_cones(lim: ArrowLimit, X: FinCategory,
                        cap: int | None = None):
    """All w-bar cones (r, s, alpha) over lim.f with vertex X."""
    f = lim.f
    out = []
    for r in enumerate_functors(X, f.dom, cap):
        fr = compose_functors(f, r)
        for s in enumerate_functors(X, f.cod, cap):
            if lim.w in ("l", "p"):
                cells = enumerate_nat_trans(s, fr, cap)
            else:
                cells = enumerate_nat_trans(fr, s, cap)
            for alpha in cells:
                if lim.w == "p" and not all(
                        f.cod.is_iso(alpha.at(o)) for o in X.objects):
                    continue
                out.append((r, s, alpha))
    return out


def factor_cone(lim: ArrowLimit, r: Functor, s: Functor,
                alpha: NatTransformation) -> Functor:
    """The canonical factorisation of a cone through the comma apex."""
    X = r.dom
    omap = {}
    for o in X.objects:
        omap[o] = obj_name(s.on_obj(o), alpha.at(o), r.on_obj(o))
    mmap = {}
    for m in X.mors():
        a, b = X.morphisms[m]
        mmap[m] = f"{mor_name(s.on_mor(m), r.on_mor(m))}:{omap[a]}>{omap[b]}"
    t = Functor(f"factor[{r.name},{s.name}]", X, lim.apex, omap, mmap)
    require(validate_functor(t))
    return t


def check_arrow_limit_universal(lim: ArrowLimit, X: FinCategory,
                                cap: int | None = None) -> Report:
    """Certify the one- and two-dimensional universal properties against X."""
    rep = Report(f"universal:{lim.f.name}:{lim.w}:{X.name}")
    factored = {}
    for i, (r, s, alpha) in enumerate(enumerate_cat_cones(lim, X, cap)):
        ts = []
        for t in enumerate_functors(X, lim.apex, cap):
            if not compose_functors(lim.p, t).same_as(r):
                continue
            if not compose_functors(lim.q, t).same_as(s):
                continue
            if not whisker_right(lim.lam, t).same_as(alpha):
                continue
            ts.append(t)
        if len(ts) != 1:
            rep.fail("limit.one_dimensional", LAW,
                     f"cone #{i} has {len(ts)} factorisations", (i, len(ts)))
            continue
        factored[i] = ((r, s, alpha), ts[0])
    for i, ((r1, s1, a1), t1) in sorted(factored.items()):
        for j, ((r2, s2, a2), t2) in sorted(factored.items()):
            for th_r in enumerate_nat_trans(r1, r2, cap):
                for th_s in enumerate_nat_trans(s1, s2, cap):
                    if lim.w in ("l", "p"):
                        lhs = vertical_compose(a2, th_s)
                        rhs = vertical_compose(whisker_left(lim.f, th_r), a1)
                    else:
                        lhs = vertical_compose(th_s, a1)
                        rhs = vertical_compose(a2, whisker_left(lim.f, th_r))
                    if not lhs.same_as(rhs):
                        continue
                    phis = [phi for phi in enumerate_nat_trans(t1, t2, cap)
                            if whisker_left(lim.p, phi).same_as(th_r)
                            and whisker_left(lim.q, phi).same_as(th_s)]
                    if len(phis) != 1:
                        rep.fail("limit.two_dimensional", LAW,
                                 f"cone pair ({i},{j}) has {len(phis)} cell fillers",
                                 (i, j, len(phis)))
    return rep


@dataclass
class SpanFactorization:
    limit: ArrowLimit
    r: Functor                    # dom(f) -> apex
    eta: NatTransformation        # unit for l/p, counit for c
    reflection: CatAdjunction

    def certify(self) -> Report:
        """The factorisation equations and the reflection structure."""
        rep = Report(f"span_factorisation:{self.limit.f.name}:{self.limit.w}")
        lim = self.limit
        if not compose_functors(lim.p, self.r).same_as(identity_functor(lim.f.dom)):
            rep.fail("factor.projection_retract", LAW, "p∘r is not the identity", ())
        if not compose_functors(lim.q, self.r).same_as(lim.f):
            rep.fail("factor.loose_recovery", LAW, "q∘r does not recover f", ())
        collapsed = whisker_right(lim.lam, self.r)
        if not all(lim.f.cod.is_identity(collapsed.at(o))
                   for o in lim.f.dom.objects):
            rep.fail("factor.cone_collapse", LAW, "lam·r is not the identity", ())
        if lim.w in ("l", "p"):
            if not whisker_left(lim.p, self.eta).same_as(identity_nat(lim.p)):
                rep.fail("factor.unit_projection", LAW, "p·eta is not the identity", ())
            if not whisker_left(lim.q, self.eta).same_as(lim.lam):
                rep.fail("factor.unit_cone", LAW, "q·eta is not lam", ())
        else:
            if not whisker_left(lim.p, self.eta).same_as(identity_nat(lim.p)):
                rep.fail("factor.counit_projection", LAW, "p·eps is not the identity", ())
            if not whisker_left(lim.q, self.eta).same_as(lim.lam):
                rep.fail("factor.counit_cone", LAW, "q·eps is not lam", ())
        adj_rep = validate_adjunction(self.reflection)
        rep.merge(adj_rep, "reflection.")
        flag = {"l": "is_l_reflection", "p": "is_p_reflection",
                "c": "is_c_reflection"}[lim.w]
        if adj_rep.ok and not adj_rep.flags[flag]:
            rep.fail("factor.reflection_flavour", LAW,
                     f"the factorisation adjunction is not a {lim.w}-reflection", ())
        return rep


def factor_loose_morphism(lim: ArrowLimit) -> SpanFactorization:
    """The canonical section of p and the reflection it generates."""
    f = lim.f
    A, B = f.dom, f.cod
    omap, mmap = {}, {}
    for a in A.objects:
        omap[a] = obj_name(f.on_obj(a), B.id_(f.on_obj(a)), a)
    for m in A.mors():
        a, b = A.morphisms[m]
        mmap[m] = f"{mor_name(f.on_mor(m), m)}:{omap[a]}>{omap[b]}"
    r = Functor(f"r[{f.name}:{lim.w}]", A, lim.apex, omap, mmap)
    require(validate_functor(r))

    rp = compose_functors(r, lim.p)
    comps = {}
    for o, (x, m, a) in lim.objects.items():
        comps[o] = f"{mor_name(m, A.id_(a))}:{o}>{omap[a]}" if lim.w in ("l", "p") \
            else f"{mor_name(m, A.id_(a))}:{omap[a]}>{o}"
    if lim.w in ("l", "p"):
        eta = NatTransformation(identity_functor(lim.apex), rp, comps)
        refl = CatAdjunction(left=lim.p, right=r, unit=eta,
                             counit=identity_nat(identity_functor(A)))
    else:
        eta = NatTransformation(rp, identity_functor(lim.apex), comps)
        refl = CatAdjunction(left=r, right=lim.p,
                             unit=identity_nat(identity_functor(A)), counit=eta)
    fac = SpanFactorization(limit=lim, r=r, eta=eta, reflection=refl)
    require(fac.certify())
    return fac


# ---------------------------------------------------------------------------
# tight pullbacks along projections


@dataclass
class ProjectionPullback:
    limit_fg: ArrowLimit          # the limit of f∘g, serving as the pullback
    t: Functor                    # comparison into the limit of f
    g: Functor

    def certify(self, battery: list[FinCategory], lim_f: ArrowLimit,
                cap: int | None = None) -> Report:
        rep = Report(f"projection_pullback:{lim_f.f.name}:{self.g.name}")
        if not compose_functors(lim_f.p, self.t).same_as(
                compose_functors(self.g, self.limit_fg.p)):
            rep.fail("pullback.square", LAW, "the comparison square does not commute", ())
        if not compose_functors(lim_f.q, self.t).same_as(self.limit_fg.q):
            rep.fail("pullback.cone_leg", LAW, "q∘t does not match", ())
        if not whisker_right(lim_f.lam, self.t).same_as(self.limit_fg.lam):
            rep.fail("pullback.cone_cell", LAW, "lam·t does not match", ())
        for X in battery:
            for u in enumerate_functors(X, lim_f.apex, cap):
                for v in enumerate_functors(X, self.g.dom, cap):
                    if not compose_functors(lim_f.p, u).same_as(
                            compose_functors(self.g, v)):
                        continue
                    hs = [h for h in enumerate_functors(X, self.limit_fg.apex, cap)
                          if compose_functors(self.t, h).same_as(u)
                          and compose_functors(self.limit_fg.p, h).same_as(v)]
                    if len(hs) != 1:
                        rep.fail("pullback.universal", LAW,
                                 f"pullback cone from {X.name} has {len(hs)} fillers",
                                 (X.name, u.name, v.name, len(hs)))
        return rep


def tight_pullback_along_projection(lim_f: ArrowLimit, g: Functor) -> ProjectionPullback:
    """Pull the limit projection back along g; the apex is the limit of f∘g."""
    require(validate_functor(g))
    if g.cod.name != lim_f.f.dom.name:
        raise BoundaryError("the map must land in the domain foot of the limit")
    fg = compose_functors(lim_f.f, g)
    lim_fg = limit_of_arrow(lim_f.w, fg)
    omap, mmap = {}, {}
    for o, (x, m, c) in lim_fg.objects.items():
        target = obj_name(x, m, g.on_obj(c))
        omap[o] = target
    for n in lim_fg.apex.mors():
        o1, o2 = lim_fg.apex.morphisms[n]
        r, s = n.split(":")[0][1:-1].split(",")
        mmap[n] = f"{mor_name(r, g.on_mor(s))}:{omap[o1]}>{omap[o2]}"
    t = Functor(f"t[{fg.name}:{lim_f.w}]", lim_fg.apex, lim_f.apex, omap, mmap)
    require(validate_functor(t))
    return ProjectionPullback(limit_fg=lim_fg, t=t, g=g)


# ---------------------------------------------------------------------------
# span composition


@dataclass
class SpanComposite:
    fac_f: SpanFactorization
    fac_g: SpanFactorization
    apex: FinCategory             # pullback of p_g along q_f
    p_gf: Functor                 # apex -> apex of f
    q_gf: Functor                 # apex -> apex of g
    r_gf: Functor                 # lifted section
    eta_gf: NatTransformation
    composite_reflection: CatAdjunction
    fac_comp: SpanFactorization   # factorisation of g∘f
    k: Functor                    # comparison apex -> apex of g∘f


def _strict_pullback(C1: FinCategory, F1: Functor, C2: FinCategory,
                     F2: Functor, name: str) -> tuple[FinCategory, Functor, Functor]:
    """Strict pullback of F1 : C1 -> D and F2 : C2 -> D in tables."""
    objs = []
    for a in sorted(C1.objects):
        for b in sorted(C2.objects):
            if F1.on_obj(a) == F2.on_obj(b):
                objs.append((a, b))
    names = {ab: f"({ab[0]}|{ab[1]})" for ab in objs}
    mors, first, second = {}, {}, {}
    for (a1, b1) in objs:
        for (a2, b2) in objs:
            for m1 in C1.hom(a1, a2):
                for m2 in C2.hom(b1, b2):
                    if F1.on_mor(m1) != F2.on_mor(m2):
                        continue
                    nm = f"({m1}|{m2}):{names[(a1, b1)]}>{names[(a2, b2)]}"
                    mors[nm] = (names[(a1, b1)], names[(a2, b2)])
                    first[nm] = m1
                    second[nm] = m2
    idents = {names[(a, b)]: f"({C1.id_(a)}|{C2.id_(b)}):{names[(a, b)]}>{names[(a, b)]}"
              for (a, b) in objs}
    comp = {}
    for n2, (s2, t2) in mors.items():
        for n1, (s1, t1) in mors.items():
            if s2 != t1:
                continue
            m1 = C1.compose(first[n2], first[n1])
            m2 = C2.compose(second[n2], second[n1])
            comp[(n2, n1)] = f"({m1}|{m2}):{s1}>{t2}"
    P = FinCategory(name, tuple(names[ab] for ab in objs), mors, idents, comp)
    proj1 = Functor(f"pr1[{name}]", P, C1,
                    {names[ab]: ab[0] for ab in objs}, dict(first))
    proj2 = Functor(f"pr2[{name}]", P, C2,
                    {names[ab]: ab[1] for ab in objs}, dict(second))
    return P, proj1, proj2


def compose_w_spans(fac_f: SpanFactorization, fac_g: SpanFactorization) -> SpanComposite:
    """Compose two span presentations and compare with the composite's own."""
    lim_f, lim_g = fac_f.limit, fac_g.limit
    if lim_f.w != lim_g.w:
        raise VarianceError("span flavours do not match")
    w = lim_f.w
    f, g = lim_f.f, lim_g.f
    if f.cod.name != g.dom.name:
        raise BoundaryError("spans do not compose: feet do not meet")

    P, pr_f, pr_g = _strict_pullback(lim_f.apex, lim_f.q, lim_g.apex, lim_g.p,
                                     f"WW[{g.name}∘{f.name}:{w}]")

    # lift the reflection on p_g through the pullback
    rg_omap = {o: f"({o}|{fac_g.r.on_obj(lim_f.q.on_obj(o))})"
               for o in lim_f.apex.objects}
    rg_mmap = {}
    for m in lim_f.apex.mors():
        o1, o2 = lim_f.apex.morphisms[m]
        inner = fac_g.r.on_mor(lim_f.q.on_mor(m))
        rg_mmap[m] = f"({m}|{inner}):{rg_omap[o1]}>{rg_omap[o2]}"
    r_gf = Functor(f"r[{g.name},{f.name}:{w}]", lim_f.apex, P, rg_omap, rg_mmap)
    require(validate_functor(r_gf))

    comps = {}
    rp = compose_functors(r_gf, pr_f)
    for o in P.objects:
        u = pr_f.on_obj(o)
        v = pr_g.on_obj(o)
        inner = fac_g.eta.at(v)
        outer = lim_f.apex.id_(u)
        if w in ("l", "p"):
            comps[o] = f"({outer}|{inner}):{o}>{rp.on_obj(o)}"
        else:
            comps[o] = f"({outer}|{inner}):{rp.on_obj(o)}>{o}"
    if w in ("l", "p"):
        eta_gf = NatTransformation(identity_functor(P), rp, comps)
        refl_gf = CatAdjunction(left=pr_f, right=r_gf, unit=eta_gf,
                                counit=identity_nat(identity_functor(lim_f.apex)))
    else:
        eta_gf = NatTransformation(rp, identity_functor(P), comps)
        refl_gf = CatAdjunction(left=r_gf, right=pr_f,
                                unit=identity_nat(identity_functor(lim_f.apex)),
                                counit=eta_gf)
    require(validate_adjunction(refl_gf))

    # composite reflection p_f∘p_{g,f} -| r_{g,f}∘r_f
    left = compose_functors(lim_f.p, pr_f)
    right = compose_functors(r_gf, fac_f.r)
    if w in ("l", "p"):
        unit = vertical_compose(
            whisker_right(whisker_left(r_gf, fac_f.eta), pr_f), eta_gf)
        comp_refl = CatAdjunction(left=left, right=right, unit=unit,
                                  counit=identity_nat(identity_functor(f.dom)))
    else:
        counit = vertical_compose(
            eta_gf, whisker_right(whisker_left(r_gf, fac_f.eta), pr_f))
        comp_refl = CatAdjunction(left=right, right=left,
                                  unit=identity_nat(identity_functor(f.dom)),
                                  counit=counit)
    require(validate_adjunction(comp_refl))

    # comparison with the composite's own factorisation
    gf = compose_functors(g, f)
    lim_gf = limit_of_arrow(w, gf)
    fac_comp = factor_loose_morphism(lim_gf)
    r_cone = compose_functors(lim_f.p, pr_f)
    s_cone = compose_functors(lim_g.q, pr_g)
    inner = whisker_left(g, whisker_right(lim_f.lam, pr_f))
    outer = whisker_right(lim_g.lam, pr_g)
    if w in ("l", "p"):
        # q_g∘pr_g => g∘q_f∘pr_f = g∘p_g∘pr_g ... assemble q => gf∘p cone
        alpha = vertical_compose(inner, outer)
    else:
        alpha = vertical_compose(outer, inner)
    k = factor_cone(lim_gf, r_cone, s_cone, alpha)

    return SpanComposite(fac_f=fac_f, fac_g=fac_g, apex=P, p_gf=pr_f, q_gf=pr_g,
                         r_gf=r_gf, eta_gf=eta_gf,
                         composite_reflection=comp_refl,
                         fac_comp=fac_comp, k=k)


def certify_span_composite(sc: SpanComposite, cap: int | None = None) -> Report:
    """The composition equations, the reflection-morphism facts and the
    identity mate of the comparison square."""
    rep = Report(f"span_composite:{sc.fac_comp.limit.f.name}")
    lim_f, lim_g = sc.fac_f.limit, sc.fac_g.limit
    lim_gf = sc.fac_comp.limit
    w = lim_f.w

    # composite-comparison equations
    if not compose_functors(lim_gf.p, sc.k).same_as(
            compose_functors(lim_f.p, sc.p_gf)):
        rep.fail("span.comparison_p", LAW, "p∘k mismatch", ())
    if not compose_functors(lim_gf.q, sc.k).same_as(
            compose_functors(lim_g.q, sc.q_gf)):
        rep.fail("span.comparison_q", LAW, "q∘k mismatch", ())
    inner = whisker_left(lim_g.f, whisker_right(lim_f.lam, sc.p_gf))
    outer = whisker_right(lim_g.lam, sc.q_gf)
    paste = vertical_compose(inner, outer) if w in ("l", "p") \
        else vertical_compose(outer, inner)
    if not whisker_right(lim_gf.lam, sc.k).same_as(paste):
        rep.fail("span.comparison_cell", LAW, "lam·k mismatch", ())

    # (q_{g,f}, q_f) commutes with the lifted reflections and their units
    sq_left = compose_functors(lim_g.p, sc.q_gf)
    sq_right = compose_functors(lim_f.q, sc.p_gf)
    if not sq_left.same_as(sq_right):
        rep.fail("span.pullback_square", LAW, "the central square does not commute", ())
    if not compose_functors(sc.q_gf, sc.r_gf).same_as(
            compose_functors(sc.fac_g.r, lim_f.q)):
        rep.fail("span.reflection_morphism_adjoints", LAW,
                 "right adjoints do not commute over the pullback", ())
    lhs = whisker_left(sc.q_gf, sc.eta_gf)
    rhs = whisker_right(sc.fac_g.eta, sc.q_gf)
    if not lhs.same_as(rhs):
        rep.fail("span.reflection_morphism_units", LAW,
                 "structure cells do not commute over the pullback", ())

    # the mate of the comparison square is an identity
    if w in ("l", "p"):
        mate = _mate_for_comparison(sc, sc.composite_reflection,
                                    sc.fac_comp.reflection)
    else:
        mate = _mate_for_comparison_dual(sc)
    if not all(sc.fac_comp.limit.apex.is_identity(m)
               for m in mate.components.values()):
        rep.fail("span.comparison_mate", LAW,
                 "the mate of the comparison square is not an identity", ())
    return rep


def _mate_for_comparison(sc: SpanComposite, refl_comp: CatAdjunction,
                         refl_gf: CatAdjunction) -> NatTransformation:
    """Mate of (k, 1): p_f∘p_{g,f} -> p_{gf} through the two reflections."""
    lim_gf = sc.fac_comp.limit
    A = lim_gf.f.dom
    return mate_of_cat_square(sc.k, identity_functor(A), refl_comp, refl_gf)


def _mate_for_comparison_dual(sc: SpanComposite) -> NatTransformation:
    """Dual computation for the c flavour: mate through the co-reflections."""
    from .fincat import opposite_functor, opposite_adjunction
    lim_gf = sc.fac_comp.limit
    A = lim_gf.f.dom
    mate_op = mate_of_cat_square(
        opposite_functor(sc.k), opposite_functor(identity_functor(A)),
        opposite_adjunction(sc.composite_reflection),
        opposite_adjunction(sc.fac_comp.reflection))
    from .fincat import opposite_nat
    return opposite_nat(mate_op)


# ---------------------------------------------------------------------------
# representing 2-cells as span maps


@dataclass
class LaxTwoCellRep:
    alpha: NatTransformation
    c: Functor                    # comparison between the two apexes
    mate: NatTransformation       # c∘r_f => r_g

    def certify(self, fac_f: SpanFactorization, fac_g: SpanFactorization) -> Report:
        rep = Report(f"two_cell_rep:l:{self.c.name}")
        lim_f, lim_g = fac_f.limit, fac_g.limit
        if not compose_functors(lim_g.p, self.c).same_as(lim_f.p):
            rep.fail("rep.projection_left", LAW, "p_g∘c is not p_f", ())
        if not compose_functors(lim_g.q, self.c).same_as(lim_f.q):
            rep.fail("rep.projection_right", LAW, "q_g∘c is not q_f", ())
        lhs = vertical_compose(whisker_right(self.alpha, lim_f.p), lim_f.lam)
        rhs = whisker_right(lim_g.lam, self.c)
        if not lhs.same_as(rhs):
            rep.fail("rep.cone_compatibility", LAW,
                     "(alpha·p)∘lam does not match lam·c", ())
        recovered = whisker_left(lim_g.q, self.mate)
        if not recovered.same_as(self.alpha):
            rep.fail("rep.recovery", LAW, "q·mate does not recover the 2-cell", ())
        return rep


@dataclass
class PseudoTwoCellRep:
    alpha: NatTransformation
    apex: FinCategory             # pullback of the two projections
    s: Functor                    # apex -> limit of f
    t: Functor                    # apex -> limit of g
    u: Functor                    # diagonal
    v: Functor                    # section
    theta: NatTransformation      # invertible unit 1 => v∘u
    reflection: CatAdjunction
    rho: NatTransformation        # q_f∘s => q_g∘t

    def certify(self, fac_f: SpanFactorization, fac_g: SpanFactorization) -> Report:
        rep = Report(f"two_cell_rep:p:{self.u.name}")
        lim_f, lim_g = fac_f.limit, fac_g.limit
        adj_rep = validate_adjunction(self.reflection)
        rep.merge(adj_rep, "reflection.")
        if adj_rep.ok and not adj_rep.flags["is_p_reflection"]:
            rep.fail("rep.reflection_flavour", LAW,
                     "the diagonal does not carry a p-reflection", ())
        if not compose_functors(self.s, self.v).same_as(fac_f.r):
            rep.fail("rep.section_left", LAW, "s∘v is not the section of f", ())
        if not compose_functors(self.t, self.v).same_as(fac_g.r):
            rep.fail("rep.section_right", LAW, "t∘v is not the section of g", ())
        for (proj, fac, code) in ((self.s, fac_f, "left"), (self.t, fac_g, "right")):
            mate = mate_of_cat_square(proj, identity_functor(lim_f.f.dom),
                                      self.reflection, fac.reflection)
            if not all(fac.limit.apex.is_identity(m) for m in mate.components.values()):
                rep.fail(f"rep.projection_morphism_{code}", LAW,
                         f"(({proj.name},1)) is not a morphism of p-reflections", ())
        if not whisker_right(self.rho, self.v).same_as(self.alpha):
            rep.fail("rep.recovery", LAW, "rho·v does not recover the 2-cell", ())
        return rep


def represent_2cell(w: str, alpha: NatTransformation,
                    fac_f: SpanFactorization, fac_g: SpanFactorization,
                    cap: int | None = None):
    """Represent a 2-cell between loose morphisms by a span transformation."""
    if w not in ("l", "p"):
        raise VarianceError("2-cell representations are built for l and p")
    require(validate_nat_trans(alpha))
    lim_f, lim_g = fac_f.limit, fac_g.limit
    f, g = lim_f.f, lim_g.f
    if not (alpha.source.same_as(f) and alpha.target.same_as(g)):
        raise BoundaryError("the 2-cell does not run between the two spans")

    if w == "l":
        cone_cell = vertical_compose(whisker_right(alpha, lim_f.p), lim_f.lam)
        c = factor_cone(lim_g, lim_f.p, lim_f.q, cone_cell)
        mate = mate_of_cat_square(c, identity_functor(f.dom),
                                  fac_f.reflection, fac_g.reflection)
        rep = LaxTwoCellRep(alpha=alpha, c=c, mate=mate)
        require(rep.certify(fac_f, fac_g))
        return rep

    P, s, t = _strict_pullback(lim_f.apex, lim_f.p, lim_g.apex, lim_g.p,
                               f"K[{f.name},{g.name}]")
    u = compose_functors(lim_f.p, s)
    A = f.dom
    v_omap = {a: f"({fac_f.r.on_obj(a)}|{fac_g.r.on_obj(a)})" for a in A.objects}
    v_mmap = {}
    for m in A.mors():
        a, b = A.morphisms[m]
        v_mmap[m] = (f"({fac_f.r.on_mor(m)}|{fac_g.r.on_mor(m)})"
                     f":{v_omap[a]}>{v_omap[b]}")
    v = Functor(f"v[{f.name},{g.name}]", A, P, v_omap, v_mmap)
    require(validate_functor(v))
    vu = compose_functors(v, u)
    theta = NatTransformation(identity_functor(P), vu, {
        o: (f"({fac_f.eta.at(s.on_obj(o))}|{fac_g.eta.at(t.on_obj(o))})"
            f":{o}>{vu.on_obj(o)}")
        for o in P.objects})
    require(validate_nat_trans(theta))
    reflection = CatAdjunction(left=u, right=v, unit=theta,
                               counit=identity_nat(identity_functor(A)))
    require(validate_adjunction(reflection))

    qs, qt = compose_functors(lim_f.q, s), compose_functors(lim_g.q, t)
    candidates = [rho for rho in enumerate_nat_trans(qs, qt, cap)
                  if whisker_right(rho, v).same_as(alpha)]
    if len(candidates) != 1:
        raise ConsistencyError(
            f"expected a unique transported 2-cell, found {len(candidates)}")
    rep = PseudoTwoCellRep(alpha=alpha, apex=P, s=s, t=t, u=u, v=v,
                           theta=theta, reflection=reflection,
                           rho=candidates[0])
    require(rep.certify(fac_f, fac_g))
    return rep


# ---------------------------------------------------------------------------
# the monoidal lift of an arrow limit


@dataclass
class MonoidalArrowLimit:
    limit: ArrowLimit
    functor: WMonoidalFunctor
    apex: MonoidalCategory
    p: WMonoidalFunctor
    q: WMonoidalFunctor
    lam: MonoidalTransformation


def _lift_step_fail(step: str, witness: tuple) -> InvalidStructureError:
    rep = Report(f"monoidal_lift:{step}")
    rep.fail(f"lift.{step}", LAW,
             f"the {step} of the apex fails to be a morphism of the comma", witness)
    return InvalidStructureError(rep)


def lift_limit_monoidal(w: str, F: WMonoidalFunctor) -> MonoidalArrowLimit:
    """Equip the arrow-limit apex with its unique monoidal structure.

    Tensors of comma objects pair the component tensors with the pasted
    comparison morphism; associators and unitors are componentwise pairs.
    Each lift step checks membership in the comma category, so an
    incoherent input functor fails at exactly the step whose coherence
    axiom it violates.
    """
    if w != F.variance:
        raise VarianceError(
            f"variance mismatch: requested {w} on a {F.variance}-monoidal functor")
    require(validate_monoidal_category(F.dom))
    require(validate_monoidal_category(F.cod))
    lim = limit_of_arrow(w, F.functor)
    A, B = F.dom, F.cod
    lax = lax_oriented(w)
    u = F.functor

    def tensor_triple(t1, t2) -> tuple[str, str, str]:
        (x1, m1, a1), (x2, m2, a2) = t1, t2
        if lax:
            m = B.base.compose(F.constraints[(a1, a2)], B.tmor(m1, m2))
        else:
            m = B.base.compose(B.tmor(m1, m2), F.constraints[(a1, a2)])
        return (B.tobj(x1, x2), m, A.tobj(a1, a2))

    tobj, tmor = {}, {}
    members = set(lim.apex.objects)
    for o1, t1 in lim.objects.items():
        for o2, t2 in lim.objects.items():
            res = obj_name(*tensor_triple(t1, t2))
            if res not in members:
                raise _lift_step_fail("tensor-object", (o1, o2, res))
            tobj[(o1, o2)] = res
    for n1 in lim.apex.mors():
        for n2 in lim.apex.mors():
            (d1, c1), (d2, c2) = lim.apex.morphisms[n1], lim.apex.morphisms[n2]
            r1, s1 = n1.split(":")[0][1:-1].split(",")
            r2, s2 = n2.split(":")[0][1:-1].split(",")
            nm = f"{mor_name(B.tmor(r1, r2), A.tmor(s1, s2))}" \
                 f":{tobj[(d1, d2)]}>{tobj[(c1, c2)]}"
            if nm not in lim.apex.morphisms:
                raise _lift_step_fail("tensor-morphism", (n1, n2, nm))
            tmor[(n1, n2)] = nm

    unit_obj = obj_name(B.unit, F.unit_constraint, A.unit)
    if unit_obj not in members:
        raise _lift_step_fail("unit-object", (unit_obj,))

    assoc, lun, run = {}, {}, {}
    for o1, (x1, m1, a1) in lim.objects.items():
        for o2, (x2, m2, a2) in lim.objects.items():
            for o3, (x3, m3, a3) in lim.objects.items():
                src = tobj[(tobj[(o1, o2)], o3)]
                tgt = tobj[(o1, tobj[(o2, o3)])]
                nm = f"{mor_name(B.associator[(x1, x2, x3)], A.associator[(a1, a2, a3)])}" \
                     f":{src}>{tgt}"
                if nm not in lim.apex.morphisms:
                    raise _lift_step_fail("associator", (o1, o2, o3, nm))
                assoc[(o1, o2, o3)] = nm
    for o, (x, m, a) in lim.objects.items():
        nl = f"{mor_name(B.left_unitor[x], A.left_unitor[a])}:{tobj[(unit_obj, o)]}>{o}"
        if nl not in lim.apex.morphisms:
            raise _lift_step_fail("left-unitor", (o, nl))
        lun[o] = nl
        nr = f"{mor_name(B.right_unitor[x], A.right_unitor[a])}:{tobj[(o, unit_obj)]}>{o}"
        if nr not in lim.apex.morphisms:
            raise _lift_step_fail("right-unitor", (o, nr))
        run[o] = nr

    apex_mon = MonoidalCategory(base=lim.apex, tensor_obj=tobj, tensor_mor=tmor,
                                unit=unit_obj, associator=assoc,
                                left_unitor=lun, right_unitor=run)
    require(validate_monoidal_category(apex_mon))

    def strict_on(proj: Functor, cod: MonoidalCategory) -> WMonoidalFunctor:
        cons = {(o1, o2): cod.base.id_(proj.on_obj(tobj[(o1, o2)]))
                for o1 in lim.apex.objects for o2 in lim.apex.objects}
        return WMonoidalFunctor(variance="s", dom=apex_mon, cod=cod,
                                functor=proj, constraints=cons,
                                unit_constraint=cod.base.id_(proj.on_obj(unit_obj)))

    p_mon = strict_on(lim.p, A)
    q_mon = strict_on(lim.q, B)
    require(validate_monoidal_functor(p_mon))
    require(validate_monoidal_functor(q_mon))

    from .moncat import coerce_variance
    fp = compose_monoidal_functors(F, coerce_variance(p_mon, w))
    qv = coerce_variance(q_mon, w)
    lam_mon = MonoidalTransformation(source=qv, target=fp, nat=lim.lam) if lax \
        else MonoidalTransformation(source=fp, target=qv, nat=lim.lam)
    require(validate_monoidal_transformation(lam_mon))

    return MonoidalArrowLimit(limit=lim, functor=F, apex=apex_mon,
                              p=p_mon, q=q_mon, lam=lam_mon)


def enumerate_monoidal_lift_structures(w: str, F: WMonoidalFunctor,
                                       cap: int | None = None) -> list[MonoidalCategory]:
    """Search for every monoidal structure on the apex that makes the
    projections strict and the cone cell monoidal.

    Strictness of the projections pins everything except the comparison
    component of each object-pair tensor and of the unit.  Those are
    assigned by backtracking: a partial assignment is pruned as soon as a
    tensor-of-morphisms membership, a unitor membership or the cone
    cell's tensor condition fails on assigned pairs.  Survivors are then
    validated in full.
    """
    lim = limit_of_arrow(w, F.functor)
    A, B = F.dom, F.cod
    lax = lax_oriented(w)
    members = set(lim.apex.objects)
    pairs = [(o1, o2) for o1 in sorted(lim.objects) for o2 in sorted(lim.objects)]

    def candidates_for(o1: str, o2: str) -> list[str]:
        (x1, m1, a1), (x2, m2, a2) = lim.objects[o1], lim.objects[o2]
        xx, aa = B.tobj(x1, x2), A.tobj(a1, a2)
        homset = B.base.hom(xx, F.functor.on_obj(aa)) if lax \
            else B.base.hom(F.functor.on_obj(aa), xx)
        if w == "p":
            homset = [m for m in homset if B.base.is_iso(m)]
        out = []
        for m in homset:
            if obj_name(xx, m, aa) not in members:
                continue
            # tensor condition of the cone cell at this pair of objects
            if lax:
                want = B.base.compose(F.constraints[(a1, a2)], B.tmor(m1, m2))
            else:
                want = B.base.compose(B.tmor(m1, m2), F.constraints[(a1, a2)])
            if m != want:
                continue
            out.append(m)
        return out

    per_pair = {pr: candidates_for(*pr) for pr in pairs}
    size = 1
    for cands in per_pair.values():
        size *= max(len(cands), 1)
    unit_choices = [m for m in
                    (B.base.hom(B.unit, F.functor.on_obj(A.unit)) if lax
                     else B.base.hom(F.functor.on_obj(A.unit), B.unit))
                    if obj_name(B.unit, m, A.unit) in members]
    guard(size * max(len(unit_choices), 1), cap,
          "monoidal structures on the comma apex")

    mors_between: dict[tuple[str, str], list[str]] = {}
    for n, (d, c) in lim.apex.morphisms.items():
        mors_between.setdefault((d, c), []).append(n)

    def tensor_obj_of(assign: dict, o1: str, o2: str) -> str:
        (x1, _, a1), (x2, _, a2) = lim.objects[o1], lim.objects[o2]
        return obj_name(B.tobj(x1, x2), assign[(o1, o2)], A.tobj(a1, a2))

    def consistent(assign: dict, new_pair: tuple[str, str]) -> bool:
        # tensor of morphisms into/out of the new pair must stay in the comma
        for (d_pair, c_pair) in ((p1, p2) for p1 in assign for p2 in assign):
            (d1, d2), (c1, c2) = d_pair, c_pair
            for n1 in mors_between.get((d1, c1), ()):
                for n2 in mors_between.get((d2, c2), ()):
                    r1, s1 = n1.split(":")[0][1:-1].split(",")
                    r2, s2 = n2.split(":")[0][1:-1].split(",")
                    nm = (f"{mor_name(B.tmor(r1, r2), A.tmor(s1, s2))}"
                          f":{tensor_obj_of(assign, d1, d2)}"
                          f">{tensor_obj_of(assign, c1, c2)}")
                    if nm not in lim.apex.morphisms:
                        return False
        return True

    found = []
    for unit_m in unit_choices:
        unit_obj = obj_name(B.unit, unit_m, A.unit)

        def extend(i: int, assign: dict):
            if i == len(pairs):
                cand = _assemble_candidate(lim, A, B,
                                           {pr: tensor_obj_of(assign, *pr)
                                            for pr in pairs}, unit_obj)
                if cand is None or not validate_monoidal_category(cand).ok:
                    return
                if _projections_strict_and_cell_monoidal(lim, F, cand, w):
                    found.append(cand)
                return
            pr = pairs[i]
            for m in per_pair[pr]:
                assign[pr] = m
                if consistent(assign, pr):
                    extend(i + 1, assign)
                del assign[pr]

        extend(0, {})
    return found


def _assemble_candidate(lim: ArrowLimit, A, B, tobj, unit_obj):
    tmor = {}
    for n1 in lim.apex.mors():
        for n2 in lim.apex.mors():
            (d1, c1), (d2, c2) = lim.apex.morphisms[n1], lim.apex.morphisms[n2]
            r1, s1 = n1.split(":")[0][1:-1].split(",")
            r2, s2 = n2.split(":")[0][1:-1].split(",")
            nm = f"{mor_name(B.tmor(r1, r2), A.tmor(s1, s2))}" \
                 f":{tobj[(d1, d2)]}>{tobj[(c1, c2)]}"
            if nm not in lim.apex.morphisms:
                return None
            tmor[(n1, n2)] = nm
    assoc, lun, run = {}, {}, {}
    for o1, (x1, _, a1) in lim.objects.items():
        for o2, (x2, _, a2) in lim.objects.items():
            for o3, (x3, _, a3) in lim.objects.items():
                nm = f"{mor_name(B.associator[(x1, x2, x3)], A.associator[(a1, a2, a3)])}" \
                     f":{tobj[(tobj[(o1, o2)], o3)]}>{tobj[(o1, tobj[(o2, o3)])]}"
                if nm not in lim.apex.morphisms:
                    return None
                assoc[(o1, o2, o3)] = nm
    for o, (x, _, a) in lim.objects.items():
        nl = f"{mor_name(B.left_unitor[x], A.left_unitor[a])}:{tobj[(unit_obj, o)]}>{o}"
        nr = f"{mor_name(B.right_unitor[x], A.right_unitor[a])}:{tobj[(o, unit_obj)]}>{o}"
        if nl not in lim.apex.morphisms or nr not in lim.apex.morphisms:
            return None
        lun[o], run[o] = nl, nr
    return MonoidalCategory(base=lim.apex, tensor_obj=tobj, tensor_mor=tmor,
                            unit=unit_obj, associator=assoc,
                            left_unitor=lun, right_unitor=run)


def _projections_strict_and_cell_monoidal(lim: ArrowLimit, F: WMonoidalFunctor,
                                          cand: MonoidalCategory, w: str) -> bool:
    from .moncat import coerce_variance
    A, B = F.dom, F.cod

    def strict_on(proj: Functor, cod: MonoidalCategory):
        cons = {(o1, o2): cod.base.id_(proj.on_obj(cand.tobj(o1, o2)))
                for o1 in lim.apex.objects for o2 in lim.apex.objects}
        if any(proj.on_obj(cand.tobj(o1, o2))
               != cod.tobj(proj.on_obj(o1), proj.on_obj(o2))
               for o1 in lim.apex.objects for o2 in lim.apex.objects):
            return None
        if proj.on_obj(cand.unit) != cod.unit:
            return None
        return WMonoidalFunctor(variance="s", dom=cand, cod=cod, functor=proj,
                                constraints=cons,
                                unit_constraint=cod.base.id_(proj.on_obj(cand.unit)))

    p_mon = strict_on(lim.p, A)
    q_mon = strict_on(lim.q, B)
    if p_mon is None or q_mon is None:
        return False
    if not (validate_monoidal_functor(p_mon).ok and validate_monoidal_functor(q_mon).ok):
        return False
    fp = compose_monoidal_functors(F, coerce_variance(p_mon, w))
    qv = coerce_variance(q_mon, w)
    lam = MonoidalTransformation(source=qv, target=fp, nat=lim.lam) \
        if lax_oriented(w) else MonoidalTransformation(source=fp, target=qv, nat=lim.lam)
    return validate_monoidal_transformation(lam).ok
