"""Finite categories, functors, natural transformations and adjunctions.

Everything is presented by explicit tables over string identifiers.
Equality of functors and transformations is extensional (pointwise on
tables); validation is exhaustive law evaluation with named witnesses.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .caps import guard
from .report import (
    LAW,
    STRUCTURAL,
    BoundaryError,
    Report,
    require,
)
from . import f2cat
from .f2cat import FCategory, Fin2Category, all_tight


# ---------------------------------------------------------------------------
# data types


@dataclass
class FinCategory:
    name: str
    objects: tuple[str, ...]
    morphisms: dict[str, tuple[str, str]]      # name -> (src, tgt)
    identities: dict[str, str]                 # object -> identity morphism
    composition: dict[tuple[str, str], str]    # (g, f) -> g∘f

    def src(self, m: str) -> str:
        return self.morphisms[m][0]

    def tgt(self, m: str) -> str:
        return self.morphisms[m][1]

    def id_(self, o: str) -> str:
        return self.identities[o]

    def compose(self, g: str, f: str) -> str:
        if self.src(g) != self.tgt(f):
            raise BoundaryError(f"{g} after {f} does not compose in {self.name}")
        return self.composition[(g, f)]

    def hom(self, a: str, b: str) -> list[str]:
        return sorted(m for m, (s, t) in self.morphisms.items() if s == a and t == b)

    def mors(self) -> list[str]:
        return sorted(self.morphisms)

    def is_identity(self, m: str) -> bool:
        return self.identities.get(self.src(m)) == m

    def inverse(self, m: str) -> str | None:
        a, b = self.morphisms[m]
        for n in self.hom(b, a):
            if (self.composition.get((n, m)) == self.identities[a]
                    and self.composition.get((m, n)) == self.identities[b]):
                return n
        return None

    def is_iso(self, m: str) -> bool:
        return self.inverse(m) is not None


@dataclass
class Functor:
    name: str
    dom: FinCategory
    cod: FinCategory
    obj_map: dict[str, str]
    mor_map: dict[str, str]

    def on_obj(self, o: str) -> str:
        return self.obj_map[o]

    def on_mor(self, m: str) -> str:
        return self.mor_map[m]

    def table(self) -> tuple:
        return (self.dom.name, self.cod.name,
                tuple(sorted(self.obj_map.items())),
                tuple(sorted(self.mor_map.items())))

    def same_as(self, other: "Functor") -> bool:
        return self.table() == other.table()


@dataclass
class NatTransformation:
    source: Functor
    target: Functor
    components: dict[str, str]   # object of dom -> morphism of cod

    def at(self, o: str) -> str:
        return self.components[o]

    def table(self) -> tuple:
        return (self.source.table(), self.target.table(),
                tuple(sorted(self.components.items())))

    def same_as(self, other: "NatTransformation") -> bool:
        return self.table() == other.table()


@dataclass
class CatAdjunction:
    left: Functor      # F : A -> B
    right: Functor     # G : B -> A
    unit: NatTransformation    # 1_A => G∘F
    counit: NatTransformation  # F∘G => 1_B


# ---------------------------------------------------------------------------
# constructors


def identity_functor(c: FinCategory) -> Functor:
    return Functor(f"1_{c.name}", c, c,
                   {o: o for o in c.objects},
                   {m: m for m in c.morphisms})


def identity_nat(F: Functor) -> NatTransformation:
    return NatTransformation(F, F, {o: F.cod.id_(F.on_obj(o)) for o in F.dom.objects})


def compose_functors(G: Functor, F: Functor) -> Functor:
    if F.cod.name != G.dom.name:
        raise BoundaryError(f"functors do not compose: {G.name} after {F.name}")
    return Functor(
        f"{G.name}∘{F.name}", F.dom, G.cod,
        {o: G.obj_map[x] for o, x in F.obj_map.items()},
        {m: G.mor_map[x] for m, x in F.mor_map.items()})


def _op_name(name: str) -> str:
    return name[:-3] if name.endswith("^op") else f"{name}^op"


def opposite_category(c: FinCategory) -> FinCategory:
    return FinCategory(
        name=_op_name(c.name),
        objects=c.objects,
        morphisms={m: (t, s) for m, (s, t) in c.morphisms.items()},
        identities=dict(c.identities),
        composition={(f, g): h for (g, f), h in c.composition.items()})


def opposite_functor(F: Functor) -> Functor:
    return Functor(_op_name(F.name), opposite_category(F.dom), opposite_category(F.cod),
                   dict(F.obj_map), dict(F.mor_map))


def opposite_nat(t: NatTransformation) -> NatTransformation:
    """Components unchanged; source and target swap under the op duality."""
    return NatTransformation(opposite_functor(t.target), opposite_functor(t.source),
                             dict(t.components))


def opposite_adjunction(adj: CatAdjunction) -> CatAdjunction:
    """F -| G with (eta, eps) turns into G^op -| F^op with (eps^op, eta^op)."""
    return CatAdjunction(
        left=opposite_functor(adj.right),
        right=opposite_functor(adj.left),
        unit=opposite_nat(adj.counit),
        counit=opposite_nat(adj.unit))


# ---------------------------------------------------------------------------
# validators


def validate_category(c: FinCategory) -> Report:
    rep = Report(f"category:{c.name}")
    objs = set(c.objects)
    if len(c.objects) != len(objs):
        rep.fail("structural.duplicate_object", STRUCTURAL, "duplicate object name", ())
    for m, (s, t) in sorted(c.morphisms.items()):
        if s not in objs or t not in objs:
            rep.fail("structural.dangling_endpoint", STRUCTURAL,
                     f"morphism {m} has unknown endpoint", (m, s, t))
    for o in sorted(objs):
        i = c.identities.get(o)
        if i is None or i not in c.morphisms:
            rep.fail("structural.missing_identity", STRUCTURAL,
                     f"object {o} lacks an identity", (o,))
        elif c.morphisms[i] != (o, o):
            rep.fail("structural.identity_endpoints", STRUCTURAL,
                     f"identity of {o} has wrong endpoints", (o, i))
    if not rep.ok:
        return rep
    mors = c.mors()
    for g in mors:
        for f in mors:
            composable = c.src(g) == c.tgt(f)
            defined = (g, f) in c.composition
            if composable and not defined:
                rep.fail("structural.missing_composite", STRUCTURAL,
                         f"no composite for {g} after {f}", (g, f))
            elif defined and not composable:
                rep.fail("structural.spurious_composite", STRUCTURAL,
                         f"composite declared for non-composable pair", (g, f))
            elif defined:
                gf = c.composition[(g, f)]
                if gf not in c.morphisms:
                    rep.fail("structural.dangling_composite", STRUCTURAL,
                             f"composite {gf} is not a morphism", (g, f, gf))
                elif c.morphisms[gf] != (c.src(f), c.tgt(g)):
                    rep.fail("law.composite_boundary", LAW,
                             f"composite of ({g},{f}) has mismatched endpoints",
                             (g, f, gf))
    if not rep.ok:
        return rep
    for f in mors:
        if c.composition[(c.id_(c.tgt(f)), f)] != f:
            rep.fail("law.left_identity", LAW, f"id∘{f} != {f}", (f,))
        if c.composition[(f, c.id_(c.src(f)))] != f:
            rep.fail("law.right_identity", LAW, f"{f}∘id != {f}", (f,))
    for h in mors:
        for g in mors:
            if c.src(h) != c.tgt(g):
                continue
            for f in mors:
                if c.src(g) != c.tgt(f):
                    continue
                if (c.composition[(c.composition[(h, g)], f)]
                        != c.composition[(h, c.composition[(g, f)])]):
                    rep.fail("law.associativity", LAW,
                             f"associativity fails on ({h},{g},{f})", (h, g, f))
    return rep


def validate_functor(F: Functor) -> Report:
    rep = Report(f"functor:{F.name}")
    for o in F.dom.objects:
        if F.obj_map.get(o) not in set(F.cod.objects):
            rep.fail("structural.unmapped_object", STRUCTURAL,
                     f"object {o} has no valid image", (o,))
    for m in F.dom.mors():
        if F.mor_map.get(m) not in F.cod.morphisms:
            rep.fail("structural.unmapped_morphism", STRUCTURAL,
                     f"morphism {m} has no valid image", (m,))
    if not rep.ok:
        return rep
    for m in F.dom.mors():
        s, t = F.dom.morphisms[m]
        if F.cod.morphisms[F.mor_map[m]] != (F.obj_map[s], F.obj_map[t]):
            rep.fail("law.boundary", LAW,
                     f"image of {m} has wrong endpoints", (m, F.mor_map[m]))
    for o in F.dom.objects:
        if F.mor_map[F.dom.id_(o)] != F.cod.id_(F.obj_map[o]):
            rep.fail("law.identity", LAW, f"identity of {o} not preserved", (o,))
    for (g, f), gf in sorted(F.dom.composition.items()):
        if F.mor_map[gf] != F.cod.composition[(F.mor_map[g], F.mor_map[f])]:
            rep.fail("law.composition", LAW,
                     f"composition not preserved on ({g},{f})", (g, f))
    return rep


def validate_nat_trans(t: NatTransformation) -> Report:
    rep = Report("nat_trans")
    F, G = t.source, t.target
    if F.dom.name != G.dom.name or F.cod.name != G.cod.name:
        rep.fail("structural.not_parallel", STRUCTURAL,
                 "source and target functors are not parallel", ())
        return rep
    cod = F.cod
    for o in F.dom.objects:
        m = t.components.get(o)
        if m is None or m not in cod.morphisms:
            rep.fail("structural.missing_component", STRUCTURAL,
                     f"component at {o} missing", (o,))
        elif cod.morphisms[m] != (F.obj_map[o], G.obj_map[o]):
            rep.fail("law.component_boundary", LAW,
                     f"component at {o} has wrong endpoints", (o, m))
    if not rep.ok:
        return rep
    for m in F.dom.mors():
        a, b = F.dom.morphisms[m]
        lhs = cod.composition[(G.mor_map[m], t.components[a])]
        rhs = cod.composition[(t.components[b], F.mor_map[m])]
        if lhs != rhs:
            rep.fail("law.naturality", LAW, f"naturality square at {m} fails", (m,))
    return rep


# ---------------------------------------------------------------------------
# calculus of natural transformations


def vertical_compose(b: NatTransformation, a: NatTransformation) -> NatTransformation:
    if not b.source.same_as(a.target):
        raise BoundaryError("vertical composition: boundaries do not match")
    cod = a.source.cod
    return NatTransformation(a.source, b.target, {
        o: cod.composition[(b.components[o], a.components[o])]
        for o in a.source.dom.objects})


def whisker_left(H: Functor, t: NatTransformation) -> NatTransformation:
    """H·t for H applied after the boundary functors of t."""
    if t.source.cod.name != H.dom.name:
        raise BoundaryError("left whisker: boundaries do not match")
    return NatTransformation(
        compose_functors(H, t.source), compose_functors(H, t.target),
        {o: H.mor_map[t.components[o]] for o in t.source.dom.objects})


def whisker_right(t: NatTransformation, K: Functor) -> NatTransformation:
    """t·K for K applied before the boundary functors of t."""
    if K.cod.name != t.source.dom.name:
        raise BoundaryError("right whisker: boundaries do not match")
    return NatTransformation(
        compose_functors(t.source, K), compose_functors(t.target, K),
        {o: t.components[K.obj_map[o]] for o in K.dom.objects})


def horizontal_compose(b: NatTransformation, a: NatTransformation) -> NatTransformation:
    """b beside a, for a: F=>G: A->B and b: H=>K: B->C."""
    return vertical_compose(whisker_right(b, a.target), whisker_left(b.source, a))


def nat_calculus(mode: str, *args) -> NatTransformation:
    """Dispatcher over the four pasting primitives."""
    if mode == "vertical":
        return vertical_compose(*args)
    if mode == "whisker_left":
        return whisker_left(*args)
    if mode == "whisker_right":
        return whisker_right(*args)
    if mode == "horizontal":
        return horizontal_compose(*args)
    raise BoundaryError(f"unknown pasting mode {mode}")


# ---------------------------------------------------------------------------
# adjunctions


def validate_adjunction(adj: CatAdjunction) -> Report:
    rep = Report("adjunction")
    F, G = adj.left, adj.right
    if F.dom.name != G.cod.name or F.cod.name != G.dom.name:
        rep.fail("structural.boundary", STRUCTURAL, "adjoints are not opposed", ())
        return rep
    rep.merge(validate_functor(F), "left.")
    rep.merge(validate_functor(G), "right.")
    rep.merge(validate_nat_trans(adj.unit), "unit.")
    rep.merge(validate_nat_trans(adj.counit), "counit.")
    if not rep.ok:
        return rep
    gf = compose_functors(G, F)
    fg = compose_functors(F, G)
    if not (adj.unit.source.same_as(identity_functor(F.dom))
            and adj.unit.target.same_as(gf)):
        rep.fail("structural.unit_boundary", STRUCTURAL,
                 "unit is not 1 => G∘F", ())
    if not (adj.counit.source.same_as(fg)
            and adj.counit.target.same_as(identity_functor(F.cod))):
        rep.fail("structural.counit_boundary", STRUCTURAL,
                 "counit is not F∘G => 1", ())
    if not rep.ok:
        return rep
    A, B = F.dom, F.cod
    for a in A.objects:
        tri = B.composition[(adj.counit.at(F.on_obj(a)), F.mor_map[adj.unit.at(a)])]
        if tri != B.id_(F.on_obj(a)):
            rep.fail("law.triangle_left", LAW,
                     f"triangle on the left adjoint fails at {a}", (a,))
    for b in B.objects:
        tri = A.composition[(G.mor_map[adj.counit.at(b)], adj.unit.at(G.on_obj(b)))]
        if tri != A.id_(G.on_obj(b)):
            rep.fail("law.triangle_right", LAW,
                     f"triangle on the right adjoint fails at {b}", (b,))

    counit_identity = all(B.is_identity(adj.counit.at(b)) for b in B.objects) \
        and fg.same_as(identity_functor(B))
    unit_identity = all(A.is_identity(adj.unit.at(a)) for a in A.objects) \
        and gf.same_as(identity_functor(A))
    unit_invertible = all(A.is_iso(adj.unit.at(a)) for a in A.objects)
    counit_invertible = all(B.is_iso(adj.counit.at(b)) for b in B.objects)
    rep.flags["is_l_reflection"] = rep.ok and counit_identity
    rep.flags["is_p_reflection"] = rep.ok and counit_identity and unit_invertible
    rep.flags["is_c_reflection"] = rep.ok and unit_identity
    rep.flags["is_adjoint_equivalence"] = rep.ok and unit_invertible and counit_invertible
    return rep


def mate_of_cat_square(r: Functor, s: Functor,
                       adj1: CatAdjunction, adj2: CatAdjunction) -> NatTransformation:
    """Mate of a commuting square (r, s): left1 -> left2, as r∘G1 => G2∘s.

    Computed as the unit of the second adjunction pasted onto r∘G1
    followed by the second right adjoint's image of the first counit.
    """
    F1, G1 = adj1.left, adj1.right
    F2, G2 = adj2.left, adj2.right
    if not compose_functors(s, F1).same_as(compose_functors(F2, r)):
        raise BoundaryError("square does not commute with the left adjoints")
    rg1 = compose_functors(r, G1)
    first = whisker_right(adj2.unit, rg1)             # r∘G1 => G2∘F2∘r∘G1
    second = whisker_left(compose_functors(G2, s), adj1.counit)  # .. => G2∘s
    # middle equality F2∘r∘G1 = s∘F1∘G1 holds on the nose for a
    # commuting square, so the two whiskered cells compose extensionally
    mid = NatTransformation(first.target, second.target, dict(second.components))
    comp = vertical_compose(mid, first)
    return NatTransformation(rg1, compose_functors(G2, s), comp.components)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_functors(A: FinCategory, B: FinCategory,
                       cap: int | None = None) -> list[Functor]:
    """All functors A -> B in lexicographic table order."""
    objs = list(A.objects)
    size = len(B.objects) ** len(objs) if objs else 1
    guard(size, cap, f"object maps {A.name}->{B.name}")
    out = []
    nonid = [m for m in A.mors()]
    for pick in itertools.product(sorted(B.objects), repeat=len(objs)):
        omap = dict(zip(objs, pick))
        choices = []
        feasible = True
        for m in nonid:
            a, b = A.morphisms[m]
            if A.is_identity(m):
                cands = [B.id_(omap[a])] if omap[a] == omap[b] else []
                cands = [c for c in cands]
            else:
                cands = B.hom(omap[a], omap[b])
            if not cands:
                feasible = False
                break
            choices.append(cands)
        if not feasible:
            continue
        size = 1
        for ch in choices:
            size *= len(ch)
        guard(size, cap, f"morphism maps {A.name}->{B.name}")
        for mpick in itertools.product(*choices):
            mmap = dict(zip(nonid, mpick))
            if all(mmap[gf] == B.composition[(mmap[g], mmap[f])]
                   for (g, f), gf in A.composition.items()):
                out.append(Functor(f"enum{len(out)}", A, B, dict(omap), mmap))
    out.sort(key=lambda F: F.table())
    for i, F in enumerate(out):
        F.name = f"fun[{A.name}>{B.name}]{i}"
    return out


def enumerate_nat_trans(F: Functor, G: Functor,
                        cap: int | None = None) -> list[NatTransformation]:
    """All natural transformations F => G in lexicographic component order."""
    B = F.cod
    objs = list(F.dom.objects)
    choices = [B.hom(F.on_obj(o), G.on_obj(o)) for o in objs]
    size = 1
    for ch in choices:
        size *= len(ch)
    guard(size, cap, f"transformations {F.name}=>{G.name}")
    out = []
    for pick in itertools.product(*choices):
        comp = dict(zip(objs, pick))
        t = NatTransformation(F, G, comp)
        if validate_nat_trans(t).ok:
            out.append(t)
    out.sort(key=lambda t: tuple(sorted(t.components.items())))
    return out


# ---------------------------------------------------------------------------
# the embedding into table 2-categories


@dataclass
class CatWorld:
    """A full sub-2-category of finite categories with name registries."""

    fin2: Fin2Category
    categories: dict[str, FinCategory]
    functors: dict[str, Functor] = field(default_factory=dict)
    nats: dict[str, NatTransformation] = field(default_factory=dict)
    _functor_index: dict[tuple, str] = field(default_factory=dict)
    _nat_index: dict[tuple, str] = field(default_factory=dict)

    def name_of_functor(self, F: Functor) -> str:
        return self._functor_index[F.table()]

    def name_of_nat(self, t: NatTransformation) -> str:
        return self._nat_index[t.table()]

    def as_fcategory(self) -> FCategory:
        return all_tight(self.fin2)


def full_sub_2category(cats: list[FinCategory], cap: int | None = None) -> CatWorld:
    """The 2-category with the given categories as objects, all functors as
    1-cells and all natural transformations as 2-cells."""
    for c in cats:
        require(validate_category(c))
    names = [c.name for c in cats]
    if len(set(names)) != len(names):
        raise BoundaryError("category names must be distinct")
    by_name = {c.name: c for c in cats}

    world = CatWorld(fin2=None, categories=by_name)  # type: ignore[arg-type]
    one_src, one_tgt, one_id, one_comp = {}, {}, {}, {}
    for A in cats:
        for B in cats:
            for i, F in enumerate(enumerate_functors(A, B, cap)):
                nm = F.name
                world.functors[nm] = F
                world._functor_index[F.table()] = nm
                one_src[nm] = A.name
                one_tgt[nm] = B.name
    for A in cats:
        one_id[A.name] = world.name_of_functor(identity_functor(A))
    for gn, G in world.functors.items():
        for fn, F in world.functors.items():
            if G.dom.name == F.cod.name:
                one_comp[(gn, fn)] = world.name_of_functor(compose_functors(G, F))

    two_src, two_tgt, two_id = {}, {}, {}
    for fn, F in sorted(world.functors.items()):
        for gn, G in sorted(world.functors.items()):
            if F.dom.name != G.dom.name or F.cod.name != G.cod.name:
                continue
            for i, t in enumerate(enumerate_nat_trans(F, G, cap)):
                nm = f"t[{fn}>{gn}]{i}"
                world.nats[nm] = t
                world._nat_index[t.table()] = nm
                two_src[nm] = fn
                two_tgt[nm] = gn
    for fn, F in world.functors.items():
        two_id[fn] = world.name_of_nat(identity_nat(F))

    vcomp, wl, wr = {}, {}, {}
    for bn, b in world.nats.items():
        for an, a in world.nats.items():
            if b.source.table() == a.target.table():
                vcomp[(bn, an)] = world.name_of_nat(vertical_compose(b, a))
    for hn, H in world.functors.items():
        for an, a in world.nats.items():
            if H.dom.name == a.source.cod.name:
                wl[(hn, an)] = world.name_of_nat(whisker_left(H, a))
    for an, a in world.nats.items():
        for kn, K in world.functors.items():
            if K.cod.name == a.source.dom.name:
                wr[(an, kn)] = world.name_of_nat(whisker_right(a, K))

    world.fin2 = Fin2Category(
        name="+".join(sorted(names)),
        objects=tuple(sorted(names)),
        one_src=one_src, one_tgt=one_tgt, one_id=one_id, one_comp=one_comp,
        two_src=two_src, two_tgt=two_tgt, two_id=two_id,
        vcomp=vcomp, wl=wl, wr=wr)
    return world
