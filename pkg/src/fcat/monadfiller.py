"""2-monads on finite 2-categories, their algebra F-categories, the
orthogonality filler, Eilenberg-Moore extensions and monadicity checks.

Strict algebras only.  Weak morphisms carry a structure 2-cell oriented
by variance; the two coherence conditions on it are the standard pair:
the cell collapses on the monad unit, and pasting it against the
multiplication agrees with its own double-application.  All colax-variance
behaviour is obtained by round-tripping through the 2-cell duality; there
is no separate colax code path.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .caps import guard
from .report import (
    LAW,
    STRUCTURAL,
    BoundaryError,
    ConsistencyError,
    Report,
    UnsatisfiedHypothesis,
    VarianceError,
    require,
)
from .f2cat import (
    ArrowLimitData,
    DoctrinalityReport,
    FCategory,
    FFunctor,
    Fin2Category,
    TwoAdjunction,
    WReflection,
    all_tight,
    co_dual,
    compose_ffunctors,
    enumerate_ffunctors,
    enumerate_w_reflections,
    find_arrow_limits,
    identity_ffunctor,
    is_isomorphism_of_fcategories,
    is_w_doctrinal,
    check_f_equivalence,
    mate_of_square,
    tight_inclusion,
    tight_part,
    validate_2adjunction,
    validate_2category,
    validate_fcategory,
    validate_ffunctor,
    validate_loose_limit_data,
    validate_w_reflection,
)


# ---------------------------------------------------------------------------
# 2-monads


@dataclass
class Fin2Monad:
    base: Fin2Category
    obj_map: dict[str, str]
    one_map: dict[str, str]
    two_map: dict[str, str]
    eta: dict[str, str]          # object -> 1-cell A -> TA
    mu: dict[str, str]           # object -> 1-cell TTA -> TA

    def endo(self) -> FFunctor:
        b = all_tight(self.base)
        return FFunctor("T", b, b, dict(self.obj_map),
                        dict(self.one_map), dict(self.two_map))

    def t_obj(self, x: str) -> str:
        return self.obj_map[x]

    def t_one(self, f: str) -> str:
        return self.one_map[f]

    def t_two(self, a: str) -> str:
        return self.two_map[a]


def identity_2monad(base: Fin2Category) -> Fin2Monad:
    return Fin2Monad(
        base=base,
        obj_map={x: x for x in base.objects},
        one_map={f: f for f in base.one_src},
        two_map={a: a for a in base.two_src},
        eta={x: base.one_id[x] for x in base.objects},
        mu={x: base.one_id[x] for x in base.objects})


def co_dual_monad(T: Fin2Monad) -> Fin2Monad:
    return Fin2Monad(base=co_dual(T.base), obj_map=dict(T.obj_map),
                     one_map=dict(T.one_map), two_map=dict(T.two_map),
                     eta=dict(T.eta), mu=dict(T.mu))


def validate_2monad(T: Fin2Monad) -> Report:
    rep = Report("2monad")
    base_rep = validate_2category(T.base)
    rep.merge(base_rep, "base.")
    if not rep.ok:
        return rep
    c = T.base
    rep.merge(validate_ffunctor(T.endo()), "endo.")
    if not rep.ok:
        return rep

    def nat_check(comp: dict, pre_obj, label: str, post_one, post_two):
        """2-naturality of a family of 1-cells against maps post_one/two."""
        for x in c.objects:
            cell = comp.get(x)
            if cell is None or cell not in c.one_src:
                rep.fail(f"structural.{label}", STRUCTURAL,
                         f"component of {label} at {x} missing", (x,))
        if not rep.ok:
            return
        for f in c.one_cells():
            x, y = c.one_src[f], c.one_tgt[f]
            if c.one_comp[(comp[y], pre_obj(f))] != c.one_comp[(post_one(f), comp[x])]:
                rep.fail(f"law.{label}_naturality", LAW,
                         f"{label} fails naturality at {f}", (f,))
        for a in c.two_cells():
            x, y = c.frame_objects(a)
            if c.wl[(comp[y], pre_obj_two(a, pre_obj))] != c.wr[(post_two(a), comp[x])]:
                rep.fail(f"law.{label}_2naturality", LAW,
                         f"{label} fails 2-naturality at {a}", (a,))

    def pre_obj_two(a, pre_obj):
        return a

    # eta : 1 => T
    for x in c.objects:
        cell = T.eta.get(x)
        if cell is None or cell not in c.one_src:
            rep.fail("structural.unit", STRUCTURAL, f"unit at {x} missing", (x,))
        elif (c.one_src[cell] != x or c.one_tgt[cell] != T.t_obj(x)):
            rep.fail("law.unit_boundary", LAW, f"unit at {x} has wrong endpoints", (x,))
    for x in c.objects:
        cell = T.mu.get(x)
        if cell is None or cell not in c.one_src:
            rep.fail("structural.mult", STRUCTURAL, f"multiplication at {x} missing", (x,))
        elif (c.one_src[cell] != T.t_obj(T.t_obj(x)) or c.one_tgt[cell] != T.t_obj(x)):
            rep.fail("law.mult_boundary", LAW,
                     f"multiplication at {x} has wrong endpoints", (x,))
    if not rep.ok:
        return rep
    for f in c.one_cells():
        x, y = c.one_src[f], c.one_tgt[f]
        if c.one_comp[(T.eta[y], f)] != c.one_comp[(T.t_one(f), T.eta[x])]:
            rep.fail("law.unit_naturality", LAW, f"unit fails naturality at {f}", (f,))
        tf = T.t_one(f)
        if c.one_comp[(T.mu[y], T.t_one(tf))] != c.one_comp[(tf, T.mu[x])]:
            rep.fail("law.mult_naturality", LAW,
                     f"multiplication fails naturality at {f}", (f,))
    for a in c.two_cells():
        x, y = c.frame_objects(a)
        if c.wl[(T.eta[y], a)] != c.wr[(T.t_two(a), T.eta[x])]:
            rep.fail("law.unit_2naturality", LAW, f"unit fails 2-naturality at {a}", (a,))
        ta = T.t_two(a)
        if c.wl[(T.mu[y], T.t_two(ta))] != c.wr[(ta, T.mu[x])]:
            rep.fail("law.mult_2naturality", LAW,
                     f"multiplication fails 2-naturality at {a}", (a,))
    for x in c.objects:
        tx = T.t_obj(x)
        if c.one_comp[(T.mu[x], T.t_one(T.eta[x]))] != c.one_id[tx]:
            rep.fail("law.unit_right", LAW, f"mu∘T(eta) != 1 at {x}", (x,))
        if c.one_comp[(T.mu[x], T.eta[tx])] != c.one_id[tx]:
            rep.fail("law.unit_left", LAW, f"mu∘eta != 1 at {x}", (x,))
        if c.one_comp[(T.mu[x], T.t_one(T.mu[x]))] != c.one_comp[(T.mu[x], T.mu[tx])]:
            rep.fail("law.associativity", LAW, f"mu is not associative at {x}", (x,))
    return rep


# ---------------------------------------------------------------------------
# algebras and weak morphisms


@dataclass(frozen=True)
class TAlgebra:
    carrier: str
    action: str

    def name(self) -> str:
        return f"alg({self.carrier};{self.action})"


@dataclass(frozen=True)
class WAlgebraMorphism:
    variance: str
    src: TAlgebra
    tgt: TAlgebra
    f: str
    fbar: str    # 2-cell b∘Tf => f∘a for s/p/l, f∘a => b∘Tf for c

    def name(self) -> str:
        return f"mor({self.f};{self.fbar})"


def enumerate_algebras(T: Fin2Monad, cap: int | None = None) -> list[TAlgebra]:
    c = T.base
    out = []
    for x in sorted(c.objects):
        for a in c.hom1(T.t_obj(x), x):
            if c.one_comp[(a, T.eta[x])] != c.one_id[x]:
                continue
            if c.one_comp[(a, T.mu[x])] != c.one_comp[(a, T.t_one(a))]:
                continue
            out.append(TAlgebra(carrier=x, action=a))
    return out


def _fbar_frames(T: Fin2Monad, A: TAlgebra, B: TAlgebra, f: str,
                 variance: str) -> tuple[str, str]:
    c = T.base
    upper = c.one_comp[(B.action, T.t_one(f))]   # b∘Tf
    lower = c.one_comp[(f, A.action)]            # f∘a
    if variance == "c":
        return lower, upper
    return upper, lower


def _coherent(T: Fin2Monad, m: WAlgebraMorphism) -> bool:
    """The two coherence conditions on the structure 2-cell."""
    c = T.base
    A, B = m.src, m.tgt
    x = A.carrier
    if m.variance == "c":
        return _coherent(co_dual_monad(T), WAlgebraMorphism(
            "l", m.src, m.tgt, m.f, m.fbar))

    # unit condition: fbar whiskered onto the monad unit is an identity
    if not c.is_identity_two(c.wr[(m.fbar, T.eta[x])]):
        return False
    # multiplication condition: fbar against mu equals the pasting of
    # fbar beside its own image under T
    lhs = c.wr[(m.fbar, T.mu[x])]
    rhs = c.vcompose(c.wr[(m.fbar, T.t_one(A.action))],
                     c.wl[(B.action, T.t_two(m.fbar))])
    return lhs == rhs


def enumerate_w_morphisms(T: Fin2Monad, A: TAlgebra, B: TAlgebra, w: str,
                          cap: int | None = None) -> list[WAlgebraMorphism]:
    if w == "c":
        duals = enumerate_w_morphisms(co_dual_monad(T), A, B, "l", cap)
        return [WAlgebraMorphism("c", A, B, m.f, m.fbar) for m in duals]
    c = T.base
    out = []
    for f in c.hom1(A.carrier, B.carrier):
        upper, lower = _fbar_frames(T, A, B, f, w)
        if w == "s":
            if upper == lower:
                out.append(WAlgebraMorphism("s", A, B, f, c.two_id[upper]))
            continue
        for fbar in c.cells_between(upper, lower):
            if w == "p" and c.inverse_two(fbar) is None:
                continue
            cand = WAlgebraMorphism(w, A, B, f, fbar)
            if _coherent(T, cand):
                out.append(cand)
    return out


def validate_algebra_2cell(T: Fin2Monad, alpha: str,
                           m1: WAlgebraMorphism, m2: WAlgebraMorphism) -> Report:
    """The pasting equation making an ambient 2-cell an algebra 2-cell."""
    rep = Report(f"algebra_2cell:{alpha}")
    if m1.variance != m2.variance:
        rep.fail("structural.variance", STRUCTURAL, "morphism variances differ", ())
        return rep
    if (m1.src, m1.tgt) != (m2.src, m2.tgt):
        rep.fail("structural.parallel", STRUCTURAL,
                 "morphisms are not parallel", ())
        return rep
    if m1.variance == "c":
        dual = validate_algebra_2cell(
            co_dual_monad(T), alpha,
            WAlgebraMorphism("l", m2.src, m2.tgt, m2.f, m2.fbar),
            WAlgebraMorphism("l", m1.src, m1.tgt, m1.f, m1.fbar))
        rep.failures = dual.failures
        return rep
    c = T.base
    if c.two_src.get(alpha) != m1.f or c.two_tgt.get(alpha) != m2.f:
        rep.fail("structural.frame", STRUCTURAL,
                 f"2-cell {alpha} does not run {m1.f} => {m2.f}", (alpha,))
        return rep
    A, B = m1.src, m1.tgt
    lhs = c.vcompose(c.wr[(alpha, A.action)], m1.fbar)
    rhs = c.vcompose(m2.fbar, c.wl[(B.action, T.t_two(alpha))])
    if lhs != rhs:
        rep.fail("law.pasting", LAW,
                 f"the pasting equation fails for {alpha}", (alpha, lhs, rhs))
    return rep


# ---------------------------------------------------------------------------
# the F-category of algebras


@dataclass
class TAlgWorld:
    T: Fin2Monad
    w: str
    fcat: FCategory
    U: FFunctor
    talg_s: FCategory
    j_w: FFunctor
    algebras: list[TAlgebra]
    morphisms: dict[str, WAlgebraMorphism]
    limit_data: dict[str, ArrowLimitData] | None = None
    base_limits: dict[str, ArrowLimitData] | None = None
    doctrinality: DoctrinalityReport | None = None

    def object_of(self, alg: TAlgebra) -> str:
        return alg.name()

    def morphism_of(self, m: WAlgebraMorphism) -> str:
        return m.name()


def _compose_w_morphisms(T: Fin2Monad, m2: WAlgebraMorphism,
                         m1: WAlgebraMorphism) -> WAlgebraMorphism:
    """(g,gbar)∘(f,fbar) with the pasted structure cell."""
    c = T.base
    w = m1.variance
    if w == "c":
        dual = _compose_w_morphisms(
            co_dual_monad(T),
            WAlgebraMorphism("l", m2.src, m2.tgt, m2.f, m2.fbar),
            WAlgebraMorphism("l", m1.src, m1.tgt, m1.f, m1.fbar))
        return WAlgebraMorphism("c", m1.src, m2.tgt, dual.f, dual.fbar)
    f, g = m1.f, m2.f
    gf = c.one_comp[(g, f)]
    paste = c.vcompose(c.wl[(g, m1.fbar)], c.wr[(m2.fbar, T.t_one(f))])
    return WAlgebraMorphism(w, m1.src, m2.tgt, gf, paste)


def _algebra_2cell_name(alpha: str, src: WAlgebraMorphism,
                        tgt: WAlgebraMorphism) -> str:
    return f"c({alpha}|{src.name()}|{tgt.name()})"


def build_talg(T: Fin2Monad, w: str, cap: int | None = None,
               with_limits: bool = True,
               certify_doctrinal: bool = True) -> TAlgWorld:
    """Assemble the F-category of algebras and w-morphisms over the base.

    Tight cells are the w-morphisms with an identity structure cell; the
    forgetful functor is certified w-doctrinal and, when requested, the
    loose-limit data is created by lifting base arrow limits.
    """
    if w not in ("s", "p", "l", "c"):
        raise VarianceError(f"unknown variance {w}")
    require(validate_2monad(T))
    if w == "c":
        dual = build_talg(co_dual_monad(T), "l", cap, with_limits,
                          certify_doctrinal)
        return _dualize_talg_world(T, dual)

    c = T.base
    algebras = enumerate_algebras(T, cap)
    morphisms: dict[str, WAlgebraMorphism] = {}
    for A in algebras:
        for B in algebras:
            for m in enumerate_w_morphisms(T, A, B, w, cap):
                morphisms[m.name()] = m

    one_src = {nm: m.src.name() for nm, m in morphisms.items()}
    one_tgt = {nm: m.tgt.name() for nm, m in morphisms.items()}
    one_id = {}
    for A in algebras:
        ident = WAlgebraMorphism(w, A, A, c.one_id[A.carrier],
                                 c.two_id[c.one_comp[(A.action, T.t_one(c.one_id[A.carrier]))]])
        if ident.name() not in morphisms:
            raise ConsistencyError(f"identity morphism missing on {A.name()}")
        one_id[A.name()] = ident.name()
    one_comp = {}
    for n2, m2 in morphisms.items():
        for n1, m1 in morphisms.items():
            if m2.src != m1.tgt:
                continue
            comp = _compose_w_morphisms(T, m2, m1)
            if comp.name() not in morphisms:
                raise ConsistencyError("composite morphism left the enumeration")
            one_comp[(n2, n1)] = comp.name()

    two_src, two_tgt = {}, {}
    cell_of: dict[str, tuple[str, str, str]] = {}
    for n1, m1 in morphisms.items():
        for n2, m2 in morphisms.items():
            if (m1.src, m1.tgt) != (m2.src, m2.tgt):
                continue
            for alpha in c.cells_between(m1.f, m2.f):
                if not validate_algebra_2cell(T, alpha, m1, m2).ok:
                    continue
                nm = _algebra_2cell_name(alpha, m1, m2)
                two_src[nm] = n1
                two_tgt[nm] = n2
                cell_of[nm] = (alpha, n1, n2)
    two_id = {}
    for nm, m in morphisms.items():
        ident = _algebra_2cell_name(c.two_id[m.f], m, m)
        if ident not in two_src:
            raise ConsistencyError(f"identity 2-cell missing on {nm}")
        two_id[nm] = ident
    vcomp = {}
    for nb, (beta, b1, b2) in cell_of.items():
        for na, (alpha, a1, a2) in cell_of.items():
            if b1 != a2:
                continue
            res = c.vcompose(beta, alpha)
            vcomp[(nb, na)] = _algebra_2cell_name(
                res, morphisms[a1], morphisms[b2])
    wl, wr = {}, {}
    for na, (alpha, a1, a2) in cell_of.items():
        src_m, tgt_m = morphisms[a1], morphisms[a2]
        for nh, mh in morphisms.items():
            if mh.src == src_m.tgt:
                res = c.wl[(mh.f, alpha)]
                wl[(nh, na)] = _algebra_2cell_name(
                    res, _compose_w_morphisms(T, mh, src_m),
                    _compose_w_morphisms(T, mh, tgt_m))
            if mh.tgt == src_m.src:
                res = c.wr[(alpha, mh.f)]
                wr[(na, nh)] = _algebra_2cell_name(
                    res, _compose_w_morphisms(T, src_m, mh),
                    _compose_w_morphisms(T, tgt_m, mh))

    ambient = Fin2Category(
        name=f"TAlg[{c.name}:{w}]",
        objects=tuple(sorted(A.name() for A in algebras)),
        one_src=one_src, one_tgt=one_tgt, one_id=one_id, one_comp=one_comp,
        two_src=two_src, two_tgt=two_tgt, two_id=two_id,
        vcomp=vcomp, wl=wl, wr=wr)
    tight = frozenset(nm for nm, m in morphisms.items()
                      if c.is_identity_two(m.fbar))
    fcat = FCategory(ambient=ambient, tight=tight)
    require(validate_2category(ambient, cap))
    require(validate_fcategory(fcat))

    U = FFunctor(f"U[{ambient.name}]", fcat, all_tight(c),
                 obj_map={A.name(): A.carrier for A in algebras},
                 one_map={nm: m.f for nm, m in morphisms.items()},
                 two_map={nm: cell_of[nm][0] for nm in two_src})
    require(validate_ffunctor(U))

    talg_s, j_w = _strict_subworld(fcat, morphisms, cell_of, w)
    world = TAlgWorld(T=T, w=w, fcat=fcat, U=U, talg_s=talg_s, j_w=j_w,
                      algebras=algebras, morphisms=morphisms)
    if with_limits and w != "s":
        world.base_limits = find_arrow_limits(all_tight(c), w, cap)
        if world.base_limits is None:
            raise UnsatisfiedHypothesis(
                f"the base {c.name} lacks the required limits of arrows")
        world.limit_data = _lift_limits(world, cap)
        require(validate_loose_limit_data(fcat, world.limit_data, w, cap))
    if certify_doctrinal and w != "s":
        world.doctrinality = is_w_doctrinal(U, w, cap=cap)
        if not world.doctrinality.verdict:
            raise ConsistencyError("the forgetful functor failed its "
                                   "doctrinality certificate")
    return world


def _strict_subworld(fcat: FCategory, morphisms, cell_of, w):
    """The all-tight F-category of strict morphisms with its inclusion."""
    tau = tight_part(fcat)
    talg_s = tau
    j_w = FFunctor(f"j[{fcat.name}:{w}]", tau, fcat,
                   obj_map={x: x for x in tau.ambient.objects},
                   one_map={f: f for f in tau.ambient.one_src},
                   two_map={t: t for t in tau.ambient.two_src})
    return talg_s, j_w


def _dualize_talg_world(T: Fin2Monad, dual: TAlgWorld) -> TAlgWorld:
    """Reinterpret the lax world of the dual monad as the colax world."""
    fcat = co_dual(dual.fcat)
    morphisms = {nm: WAlgebraMorphism("c", m.src, m.tgt, m.f, m.fbar)
                 for nm, m in dual.morphisms.items()}
    U = FFunctor(dual.U.name, fcat, all_tight(T.base),
                 dict(dual.U.obj_map), dict(dual.U.one_map), dict(dual.U.two_map))
    talg_s = co_dual(dual.talg_s)
    j_w = FFunctor(dual.j_w.name, talg_s, fcat, dict(dual.j_w.obj_map),
                   dict(dual.j_w.one_map), dict(dual.j_w.two_map))
    world = TAlgWorld(T=T, w="c", fcat=fcat, U=U, talg_s=talg_s, j_w=j_w,
                      algebras=dual.algebras, morphisms=morphisms,
                      limit_data=dual.limit_data,
                      base_limits=dual.base_limits,
                      doctrinality=dual.doctrinality)
    if world.limit_data is not None:
        require(validate_loose_limit_data(fcat, world.limit_data, "c"))
    return world


def _lift_limits(world: TAlgWorld, cap: int | None = None) -> dict[str, ArrowLimitData]:
    """Create algebra-level limit data over the base's arrow limits."""
    T, w, c = world.T, world.w, world.T.base
    base = world.base_limits
    out: dict[str, ArrowLimitData] = {}
    for nm, m in world.morphisms.items():
        d = base[m.f]
        # induced action on the apex: factor the transported cone
        A, B = m.src, m.tgt
        tw = T.t_obj(d.apex)
        r_leg = c.one_comp[(A.action, T.t_one(d.p))]
        s_leg = c.one_comp[(B.action, T.t_one(d.q))]
        paste = c.vcompose(c.wr[(m.fbar, T.t_one(d.p))],
                           c.wl[(B.action, T.t_two(d.cell))])
        actions = [t for t in c.hom1(tw, d.apex)
                   if c.one_comp[(d.p, t)] == r_leg
                   and c.one_comp[(d.q, t)] == s_leg
                   and c.wr[(d.cell, t)] == paste]
        if len(actions) != 1:
            raise ConsistencyError(
                f"apex action for {nm} is not uniquely induced")
        action = actions[0]
        apex_alg = TAlgebra(carrier=d.apex, action=action)
        if apex_alg not in world.algebras:
            raise ConsistencyError(f"induced apex algebra for {nm} is not an algebra")
        p_m = WAlgebraMorphism(w, apex_alg, A, d.p,
                               c.two_id[c.one_comp[(A.action, T.t_one(d.p))]])
        q_m = WAlgebraMorphism(w, apex_alg, B, d.q,
                               c.two_id[c.one_comp[(B.action, T.t_one(d.q))]])
        for proj in (p_m, q_m):
            if proj.name() not in world.morphisms:
                raise ConsistencyError(f"projection of the lifted limit of {nm} "
                                       "is not a strict morphism")
        cell = _algebra_2cell_name(d.cell, q_m, _compose_w_morphisms(T, m, p_m)) \
            if w in ("l", "p") else \
            _algebra_2cell_name(d.cell, _compose_w_morphisms(T, m, p_m), q_m)
        if cell not in world.fcat.ambient.two_src:
            raise ConsistencyError(f"cone cell of the lifted limit of {nm} "
                                   "is not an algebra 2-cell")
        out[nm] = ArrowLimitData(apex=apex_alg.name(), p=p_m.name(),
                                 q=q_m.name(), cell=cell)
    return out
