"""Table-presented finite 2-categories and F-categories.

A 2-category is stored as totally explicit composition tables: 1-cell
composition, vertical composition of 2-cells, and the two whiskering
tables.  Horizontal composition is derived from whiskers, and the
interchange law is a validated property rather than stored data.

An F-category marks a subset of 1-cells as tight; tight cells must
contain the identities and be closed under composition.  2-categories
are treated as all-tight F-categories throughout.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from .caps import guard
from .report import (
    LAW,
    STRUCTURAL,
    BoundaryError,
    ConsistencyError,
    Report,
    VarianceError,
    require,
)

VARIANCES = ("s", "p", "l", "c")
W_VARIANCES = ("l", "p", "c")


# ---------------------------------------------------------------------------
# data types


@dataclass
class Fin2Category:
    name: str
    objects: tuple[str, ...]
    one_src: dict[str, str]
    one_tgt: dict[str, str]
    one_id: dict[str, str]                       # object -> identity 1-cell
    one_comp: dict[tuple[str, str], str]         # (g, f) -> g∘f
    two_src: dict[str, str]                      # 2-cell -> source 1-cell
    two_tgt: dict[str, str]
    two_id: dict[str, str]                       # 1-cell -> identity 2-cell
    vcomp: dict[tuple[str, str], str]            # (b, a) -> b∘a
    wl: dict[tuple[str, str], str]               # (h, a) -> h·a, h applied after
    wr: dict[tuple[str, str], str]               # (a, k) -> a·k, k applied before

    # -- 1-cell helpers ----------------------------------------------------
    def one_cells(self) -> list[str]:
        return sorted(self.one_src)

    def hom1(self, x: str, y: str) -> list[str]:
        return sorted(f for f in self.one_src
                      if self.one_src[f] == x and self.one_tgt[f] == y)

    def comp1(self, g: str, f: str) -> str:
        if self.one_src[g] != self.one_tgt[f]:
            raise BoundaryError(f"1-cells do not compose: {g} after {f}")
        return self.one_comp[(g, f)]

    def comp1_chain(self, *cells: str) -> str:
        """Compose left-to-right application order: chain[0] after chain[1] ..."""
        out = cells[0]
        for f in cells[1:]:
            out = self.comp1(out, f)
        return out

    def is_identity_one(self, f: str) -> bool:
        return self.one_id.get(self.one_src[f]) == f

    def inverse_one(self, f: str) -> str | None:
        x, y = self.one_src[f], self.one_tgt[f]
        for g in self.hom1(y, x):
            if (self.one_comp.get((g, f)) == self.one_id[x]
                    and self.one_comp.get((f, g)) == self.one_id[y]):
                return g
        return None

    # -- 2-cell helpers ----------------------------------------------------
    def two_cells(self) -> list[str]:
        return sorted(self.two_src)

    def cells_between(self, f: str, g: str) -> list[str]:
        return sorted(a for a in self.two_src
                      if self.two_src[a] == f and self.two_tgt[a] == g)

    def vcompose(self, b: str, a: str) -> str:
        if self.two_src[b] != self.two_tgt[a]:
            raise BoundaryError(f"2-cells do not compose vertically: {b} after {a}")
        return self.vcomp[(b, a)]

    def whisker_left(self, h: str, a: str) -> str:
        return self.wl[(h, a)]

    def whisker_right(self, a: str, k: str) -> str:
        return self.wr[(a, k)]

    def hcomp(self, b: str, a: str) -> str:
        """Horizontal composite of b: h=>k (B->C) with a: f=>g (A->B)."""
        f, g = self.two_src[a], self.two_tgt[a]
        h = self.two_src[b]
        return self.vcompose(self.whisker_right(b, g), self.whisker_left(h, a))

    def is_identity_two(self, a: str) -> bool:
        f = self.two_src[a]
        return self.two_tgt[a] == f and self.two_id.get(f) == a

    def inverse_two(self, a: str) -> str | None:
        f, g = self.two_src[a], self.two_tgt[a]
        for b in self.cells_between(g, f):
            if (self.vcomp.get((b, a)) == self.two_id[f]
                    and self.vcomp.get((a, b)) == self.two_id[g]):
                return b
        return None

    def frame_objects(self, a: str) -> tuple[str, str]:
        f = self.two_src[a]
        return self.one_src[f], self.one_tgt[f]


@dataclass
class FCategory:
    ambient: Fin2Category
    tight: frozenset[str]

    @property
    def name(self) -> str:
        return self.ambient.name

    def is_tight(self, f: str) -> bool:
        return f in self.tight

    def tight_cells(self) -> list[str]:
        return sorted(self.tight)


@dataclass
class FFunctor:
    name: str
    dom: FCategory
    cod: FCategory
    obj_map: dict[str, str]
    one_map: dict[str, str]
    two_map: dict[str, str]

    def same_maps(self, other: "FFunctor") -> bool:
        return (self.obj_map == other.obj_map
                and self.one_map == other.one_map
                and self.two_map == other.two_map)


@dataclass
class WReflection:
    """Adjunction presented by a tight leg, its loose adjoint and one 2-cell.

    Variance l: left adjoint ``f`` is tight, counit is an identity and
    ``cell`` is the unit 1 => g∘f.  Variance p additionally has ``cell``
    invertible.  Variance c is the dual: right adjoint ``f`` tight, unit
    an identity and ``cell`` the counit g∘f => 1.
    """

    variance: str
    f: str
    g: str
    cell: str

    def key(self) -> tuple:
        return (self.variance, self.f, self.g, self.cell)


# ---------------------------------------------------------------------------
# validation


def validate_2category(c: Fin2Category, cap: int | None = None) -> Report:
    rep = Report(f"2category:{c.name}")
    objs = set(c.objects)

    def known_one(f: str) -> bool:
        return f in c.one_src

    # structural pass on 1-cells
    for f in c.one_cells():
        for end in (c.one_src[f], c.one_tgt[f]):
            if end not in objs:
                rep.fail("structural.one_cell_endpoint", STRUCTURAL,
                         f"1-cell {f} has unknown endpoint {end}", (f, end))
    for x in sorted(objs):
        i = c.one_id.get(x)
        if i is None or not known_one(i):
            rep.fail("structural.missing_identity", STRUCTURAL,
                     f"object {x} lacks an identity 1-cell", (x,))
        elif not (c.one_src[i] == c.one_tgt[i] == x):
            rep.fail("structural.identity_endpoints", STRUCTURAL,
                     f"identity of {x} has wrong endpoints", (x, i))
    ones = c.one_cells()
    for g in ones:
        for f in ones:
            comp_defined = (g, f) in c.one_comp
            composable = c.one_src[g] == c.one_tgt[f]
            if composable and not comp_defined:
                rep.fail("structural.missing_composite", STRUCTURAL,
                         f"no composite for {g} after {f}", (g, f))
            if comp_defined:
                if not composable:
                    rep.fail("structural.spurious_composite", STRUCTURAL,
                             f"composite declared for non-composable {g}, {f}", (g, f))
                else:
                    gf = c.one_comp[(g, f)]
                    if not known_one(gf):
                        rep.fail("structural.dangling_composite", STRUCTURAL,
                                 f"composite {gf} of ({g},{f}) is not a 1-cell", (g, f, gf))
                    elif (c.one_src[gf] != c.one_src[f] or c.one_tgt[gf] != c.one_tgt[g]):
                        rep.fail("one.composite_boundary", LAW,
                                 f"composite {gf} of ({g},{f}) has wrong endpoints", (g, f, gf))
    if not rep.ok:
        return rep

    # 1-category laws
    for f in ones:
        if c.one_comp[(c.one_id[c.one_tgt[f]], f)] != f:
            rep.fail("one.left_identity", LAW, f"id∘{f} != {f}", (f,))
        if c.one_comp[(f, c.one_id[c.one_src[f]])] != f:
            rep.fail("one.right_identity", LAW, f"{f}∘id != {f}", (f,))
    for h in ones:
        for g in ones:
            if c.one_src[h] != c.one_tgt[g]:
                continue
            for f in ones:
                if c.one_src[g] != c.one_tgt[f]:
                    continue
                if c.one_comp[(c.one_comp[(h, g)], f)] != c.one_comp[(h, c.one_comp[(g, f)])]:
                    rep.fail("one.associativity", LAW,
                             f"({h}∘{g})∘{f} != {h}∘({g}∘{f})", (h, g, f))

    # structural pass on 2-cells
    twos = c.two_cells()
    for a in twos:
        f, g = c.two_src[a], c.two_tgt[a]
        if not (known_one(f) and known_one(g)):
            rep.fail("structural.two_cell_frame", STRUCTURAL,
                     f"2-cell {a} has unknown frame", (a,))
            continue
        if c.one_src[f] != c.one_src[g] or c.one_tgt[f] != c.one_tgt[g]:
            rep.fail("two.frame_parallel", LAW,
                     f"2-cell {a} is not between parallel 1-cells", (a, f, g))
    for f in ones:
        i = c.two_id.get(f)
        if i is None or i not in c.two_src:
            rep.fail("structural.missing_two_identity", STRUCTURAL,
                     f"1-cell {f} lacks an identity 2-cell", (f,))
        elif not (c.two_src[i] == c.two_tgt[i] == f):
            rep.fail("structural.two_identity_frame", STRUCTURAL,
                     f"identity 2-cell of {f} has wrong frame", (f, i))
    if not rep.ok:
        return rep
    for b in twos:
        for a in twos:
            defined = (b, a) in c.vcomp
            composable = c.two_src[b] == c.two_tgt[a]
            if composable and not defined:
                rep.fail("structural.missing_vcomp", STRUCTURAL,
                         f"no vertical composite for {b} after {a}", (b, a))
            if defined:
                if not composable:
                    rep.fail("structural.spurious_vcomp", STRUCTURAL,
                             f"vertical composite declared for {b}, {a}", (b, a))
                else:
                    ba = c.vcomp[(b, a)]
                    if ba not in c.two_src:
                        rep.fail("structural.dangling_vcomp", STRUCTURAL,
                                 f"vertical composite {ba} unknown", (b, a, ba))
                    elif c.two_src[ba] != c.two_src[a] or c.two_tgt[ba] != c.two_tgt[b]:
                        rep.fail("two.vcomp_frame", LAW,
                                 f"vertical composite of ({b},{a}) has wrong frame", (b, a, ba))
    # whisker table domains
    for a in twos:
        x, y = c.frame_objects(a)
        for h in ones:
            if c.one_src[h] == y:
                if (h, a) not in c.wl:
                    rep.fail("structural.missing_wl", STRUCTURAL,
                             f"no left whisker {h}·{a}", (h, a))
            elif (h, a) in c.wl:
                rep.fail("structural.spurious_wl", STRUCTURAL,
                         f"left whisker declared for {h}, {a}", (h, a))
        for k in ones:
            if c.one_tgt[k] == x:
                if (a, k) not in c.wr:
                    rep.fail("structural.missing_wr", STRUCTURAL,
                             f"no right whisker {a}·{k}", (a, k))
            elif (a, k) in c.wr:
                rep.fail("structural.spurious_wr", STRUCTURAL,
                         f"right whisker declared for {a}, {k}", (a, k))
    if not rep.ok:
        return rep

    # hom-category laws
    for a in twos:
        f, g = c.two_src[a], c.two_tgt[a]
        if c.vcomp[(c.two_id[g], a)] != a:
            rep.fail("two.left_identity", LAW, f"id∘{a} != {a}", (a,))
        if c.vcomp[(a, c.two_id[f])] != a:
            rep.fail("two.right_identity", LAW, f"{a}∘id != {a}", (a,))
    for cc in twos:
        for b in twos:
            if c.two_src[cc] != c.two_tgt[b]:
                continue
            for a in twos:
                if c.two_src[b] != c.two_tgt[a]:
                    continue
                if c.vcomp[(c.vcomp[(cc, b)], a)] != c.vcomp[(cc, c.vcomp[(b, a)])]:
                    rep.fail("two.associativity", LAW,
                             f"vertical associativity fails at ({cc},{b},{a})", (cc, b, a))

    # whiskering laws
    for (h, a), res in sorted(c.wl.items()):
        f, g = c.two_src[a], c.two_tgt[a]
        if res not in c.two_src:
            rep.fail("structural.dangling_wl", STRUCTURAL, f"left whisker {res} unknown", (h, a))
            continue
        if (c.two_src[res] != c.one_comp[(h, f)] or c.two_tgt[res] != c.one_comp[(h, g)]):
            rep.fail("whisker.left_frame", LAW,
                     f"left whisker {h}·{a} has wrong frame", (h, a, res))
    for (a, k), res in sorted(c.wr.items()):
        f, g = c.two_src[a], c.two_tgt[a]
        if res not in c.two_src:
            rep.fail("structural.dangling_wr", STRUCTURAL, f"right whisker {res} unknown", (a, k))
            continue
        if (c.two_src[res] != c.one_comp[(f, k)] or c.two_tgt[res] != c.one_comp[(g, k)]):
            rep.fail("whisker.right_frame", LAW,
                     f"right whisker {a}·{k} has wrong frame", (a, k, res))
    if not rep.ok:
        return rep

    for a in twos:
        f = c.two_src[a]
        x, y = c.frame_objects(a)
        if c.wl[(c.one_id[y], a)] != a:
            rep.fail("whisker.left_unit", LAW, f"id·{a} != {a}", (a,))
        if c.wr[(a, c.one_id[x])] != a:
            rep.fail("whisker.right_unit", LAW, f"{a}·id != {a}", (a,))
    for f in ones:
        x, y = c.one_src[f], c.one_tgt[f]
        for h in ones:
            if c.one_src[h] == y and c.wl[(h, c.two_id[f])] != c.two_id[c.one_comp[(h, f)]]:
                rep.fail("whisker.left_preserves_identities", LAW,
                         f"{h}·id_{f} is not an identity", (h, f))
            if c.one_tgt[h] == x and c.wr[(c.two_id[f], h)] != c.two_id[c.one_comp[(f, h)]]:
                rep.fail("whisker.right_preserves_identities", LAW,
                         f"id_{f}·{h} is not an identity", (f, h))
    for b in twos:
        for a in twos:
            if c.two_src[b] != c.two_tgt[a]:
                continue
            _, y = c.frame_objects(a)
            x, _ = c.frame_objects(a)
            for h in ones:
                if c.one_src[h] == y:
                    if c.wl[(h, c.vcomp[(b, a)])] != c.vcomp[(c.wl[(h, b)], c.wl[(h, a)])]:
                        rep.fail("whisker.left_preserves_vcomp", LAW,
                                 f"{h}·({b}∘{a}) mismatch", (h, b, a))
                if c.one_tgt[h] == x:
                    if c.wr[(c.vcomp[(b, a)], h)] != c.vcomp[(c.wr[(b, h)], c.wr[(a, h)])]:
                        rep.fail("whisker.right_preserves_vcomp", LAW,
                                 f"({b}∘{a})·{h} mismatch", (b, a, h))
    for a in twos:
        x, y = c.frame_objects(a)
        for h2 in ones:
            for h1 in ones:
                if c.one_src[h1] == y and c.one_src[h2] == c.one_tgt[h1]:
                    if c.wl[(c.one_comp[(h2, h1)], a)] != c.wl[(h2, c.wl[(h1, a)])]:
                        rep.fail("whisker.left_composition", LAW,
                                 f"({h2}∘{h1})·{a} mismatch", (h2, h1, a))
        for k1 in ones:
            for k2 in ones:
                if c.one_tgt[k1] == x and c.one_tgt[k2] == c.one_src[k1]:
                    if c.wr[(a, c.one_comp[(k1, k2)])] != c.wr[(c.wr[(a, k1)], k2)]:
                        rep.fail("whisker.right_composition", LAW,
                                 f"{a}·({k1}∘{k2}) mismatch", (a, k1, k2))
        for h in ones:
            for k in ones:
                if c.one_src[h] == y and c.one_tgt[k] == x:
                    if c.wr[(c.wl[(h, a)], k)] != c.wl[(h, c.wr[(a, k)])]:
                        rep.fail("whisker.middle_associativity", LAW,
                                 f"({h}·{a})·{k} != {h}·({a}·{k})", (h, a, k))

    # interchange: evaluate horizontal composition both ways
    guard(len(twos) * len(twos), cap, "interchange scan")
    for b in twos:
        for a in twos:
            if c.frame_objects(b)[0] != c.frame_objects(a)[1]:
                continue
            f, g = c.two_src[a], c.two_tgt[a]
            h, k = c.two_src[b], c.two_tgt[b]
            left = c.vcomp[(c.wr[(b, g)], c.wl[(h, a)])]
            right = c.vcomp[(c.wl[(k, a)], c.wr[(b, f)])]
            if left != right:
                rep.fail("two.interchange", LAW,
                         f"interchange fails for {b} beside {a}", (b, a, left, right))
    return rep


def validate_fcategory(a: FCategory, cap: int | None = None) -> Report:
    rep = Report(f"fcategory:{a.name}")
    amb = a.ambient
    for f in sorted(a.tight):
        if f not in amb.one_src:
            rep.fail("structural.tight_unknown", STRUCTURAL,
                     f"tight marking names unknown 1-cell {f}", (f,))
    if not rep.ok:
        return rep
    for x in amb.objects:
        if amb.one_id[x] not in a.tight:
            rep.fail("tight.identities", LAW,
                     f"identity of {x} is not marked tight", (x,))
    for g in sorted(a.tight):
        for f in sorted(a.tight):
            if amb.one_src[g] == amb.one_tgt[f]:
                gf = amb.one_comp[(g, f)]
                if gf not in a.tight:
                    rep.fail("tight.closure", LAW,
                             f"composite {gf} of tight ({g},{f}) is loose", (g, f, gf))
    return rep


def all_tight(c: Fin2Category) -> FCategory:
    """View a 2-category as the F-category where every morphism is tight."""
    return FCategory(ambient=c, tight=frozenset(c.one_src))


def validate_ffunctor(F: FFunctor, cap: int | None = None) -> Report:
    rep = Report(f"ffunctor:{F.name}")
    A, B = F.dom.ambient, F.cod.ambient
    for x in A.objects:
        if F.obj_map.get(x) not in set(B.objects):
            rep.fail("structural.object_image", STRUCTURAL,
                     f"object {x} has no valid image", (x,))
    for f in A.one_cells():
        g = F.one_map.get(f)
        if g not in B.one_src:
            rep.fail("structural.one_image", STRUCTURAL,
                     f"1-cell {f} has no valid image", (f,))
    for a in A.two_cells():
        b = F.two_map.get(a)
        if b not in B.two_src:
            rep.fail("structural.two_image", STRUCTURAL,
                     f"2-cell {a} has no valid image", (a,))
    if not rep.ok:
        return rep

    for f in A.one_cells():
        g = F.one_map[f]
        if (B.one_src[g] != F.obj_map[A.one_src[f]]
                or B.one_tgt[g] != F.obj_map[A.one_tgt[f]]):
            rep.fail("functor.one_boundary", LAW,
                     f"image of {f} has wrong endpoints", (f, g))
    for x in A.objects:
        if F.one_map[A.one_id[x]] != B.one_id[F.obj_map[x]]:
            rep.fail("functor.one_identity", LAW,
                     f"identity of {x} not preserved", (x,))
    for (g, f), gf in sorted(A.one_comp.items()):
        if F.one_map[gf] != B.one_comp[(F.one_map[g], F.one_map[f])]:
            rep.fail("functor.one_composition", LAW,
                     f"composition not preserved at ({g},{f})", (g, f))
    for a in A.two_cells():
        b = F.two_map[a]
        if (B.two_src[b] != F.one_map[A.two_src[a]]
                or B.two_tgt[b] != F.one_map[A.two_tgt[a]]):
            rep.fail("functor.two_frame", LAW,
                     f"image of 2-cell {a} has wrong frame", (a, b))
    for f in A.one_cells():
        if F.two_map[A.two_id[f]] != B.two_id[F.one_map[f]]:
            rep.fail("functor.two_identity", LAW,
                     f"identity 2-cell of {f} not preserved", (f,))
    for (b, a), ba in sorted(A.vcomp.items()):
        if F.two_map[ba] != B.vcomp[(F.two_map[b], F.two_map[a])]:
            rep.fail("functor.vcomp", LAW,
                     f"vertical composition not preserved at ({b},{a})", (b, a))
    for (h, a), res in sorted(A.wl.items()):
        if F.two_map[res] != B.wl[(F.one_map[h], F.two_map[a])]:
            rep.fail("functor.whisker_left", LAW,
                     f"left whisker not preserved at ({h},{a})", (h, a))
    for (a, k), res in sorted(A.wr.items()):
        if F.two_map[res] != B.wr[(F.two_map[a], F.one_map[k])]:
            rep.fail("functor.whisker_right", LAW,
                     f"right whisker not preserved at ({a},{k})", (a, k))
    for f in sorted(F.dom.tight):
        if F.one_map[f] not in F.cod.tight:
            rep.fail("functor.tightness", LAW,
                     f"tight 1-cell {f} has loose image", (f, F.one_map[f]))

    rep.flags.update(local_property_flags(F))
    return rep


def local_property_flags(F: FFunctor) -> dict:
    """Three local properties of the loose part, each computed exhaustively."""
    A, B = F.dom.ambient, F.cod.ambient
    reflects_ids = True
    for a in A.two_cells():
        if B.is_identity_two(F.two_map[a]) and not A.is_identity_two(a):
            reflects_ids = False
            break
    conservative = True
    for a in A.two_cells():
        if B.inverse_two(F.two_map[a]) is not None and A.inverse_two(a) is None:
            conservative = False
            break
    faithful = True
    seen: dict[tuple, str] = {}
    for a in A.two_cells():
        key = (A.two_src[a], A.two_tgt[a], F.two_map[a])
        if key in seen and seen[key] != a:
            faithful = False
            break
        seen[key] = a
    return {
        "reflects_identity_2cells": reflects_ids,
        "locally_conservative": conservative,
        "locally_faithful": faithful,
    }


# ---------------------------------------------------------------------------
# duality


def co_dual(x):
    """Reverse all 2-cells.  An involution on every supported kind."""
    if isinstance(x, Fin2Category):
        return Fin2Category(
            name=x.name,
            objects=x.objects,
            one_src=dict(x.one_src),
            one_tgt=dict(x.one_tgt),
            one_id=dict(x.one_id),
            one_comp=dict(x.one_comp),
            two_src=dict(x.two_tgt),
            two_tgt=dict(x.two_src),
            two_id=dict(x.two_id),
            vcomp={(a, b): r for (b, a), r in x.vcomp.items()},
            wl=dict(x.wl),
            wr=dict(x.wr),
        )
    if isinstance(x, FCategory):
        return FCategory(ambient=co_dual(x.ambient), tight=x.tight)
    if isinstance(x, FFunctor):
        return FFunctor(
            name=x.name,
            dom=co_dual(x.dom),
            cod=co_dual(x.cod),
            obj_map=dict(x.obj_map),
            one_map=dict(x.one_map),
            two_map=dict(x.two_map),
        )
    if isinstance(x, WReflection):
        swap = {"l": "c", "c": "l", "p": "p"}
        return WReflection(variance=swap[x.variance], f=x.f, g=x.g, cell=x.cell)
    raise TypeError(f"co_dual does not apply to {type(x).__name__}")


# ---------------------------------------------------------------------------
# reflections and mates


def _reflection_laws(amb: Fin2Category, r: WReflection, rep: Report) -> None:
    """Check the triangle data for an l/p oriented reflection."""
    x, y = amb.one_src[r.f], amb.one_tgt[r.f]
    if amb.one_src[r.g] != y or amb.one_tgt[r.g] != x:
        rep.fail("reflection.adjoint_boundary", LAW,
                 f"{r.g} is not parallel-opposed to {r.f}", (r.f, r.g))
        return
    if amb.one_comp[(r.f, r.g)] != amb.one_id[y]:
        rep.fail("reflection.retract", LAW,
                 f"{r.f}∘{r.g} is not the identity", (r.f, r.g))
        return
    gf = amb.one_comp[(r.g, r.f)]
    cell = r.cell
    if r.variance in ("l", "p"):
        want_src, want_tgt = amb.one_id[x], gf
    else:
        want_src, want_tgt = gf, amb.one_id[x]
    if amb.two_src.get(cell) != want_src or amb.two_tgt.get(cell) != want_tgt:
        rep.fail("reflection.cell_frame", LAW,
                 f"structure 2-cell {cell} has the wrong frame", (cell,))
        return
    # the two triangle identities take the same whiskered form in either
    # orientation; only the frame of the structure 2-cell differs
    if not amb.is_identity_two(amb.wl[(r.f, cell)]):
        rep.fail("reflection.triangle_left", LAW,
                 f"{r.f}·{cell} is not an identity", (r.f, cell))
    if not amb.is_identity_two(amb.wr[(cell, r.g)]):
        rep.fail("reflection.triangle_right", LAW,
                 f"{cell}·{r.g} is not an identity", (cell, r.g))
    if r.variance == "p" and amb.inverse_two(cell) is None:
        rep.fail("reflection.unit_invertible", LAW,
                 f"unit {cell} of a p-reflection is not invertible", (cell,))


def validate_w_reflection(a: FCategory, r: WReflection, cap: int | None = None) -> Report:
    rep = Report(f"w_reflection:{r.f}-|{r.g}")
    amb = a.ambient
    if r.variance not in W_VARIANCES:
        rep.fail("structural.variance", STRUCTURAL, f"unknown variance {r.variance}", (r.variance,))
        return rep
    for cell in (r.f, r.g):
        if cell not in amb.one_src:
            rep.fail("structural.unknown_cell", STRUCTURAL, f"unknown 1-cell {cell}", (cell,))
    if r.cell not in amb.two_src:
        rep.fail("structural.unknown_cell", STRUCTURAL, f"unknown 2-cell {r.cell}", (r.cell,))
    if not rep.ok:
        return rep
    if not a.is_tight(r.f):
        rep.fail("reflection.orientation", LAW,
                 f"the marked adjoint {r.f} must be tight", (r.f,))
        return rep
    _reflection_laws(amb, r, rep)
    if not rep.ok:
        return rep

    # the structure 2-cell is forced by the adjoints plus one triangle
    x = amb.one_src[r.f]
    gf = amb.one_comp[(r.g, r.f)]
    if r.variance in ("l", "p"):
        candidates = [t for t in amb.cells_between(amb.one_id[x], gf)
                      if amb.is_identity_two(amb.wl[(r.f, t)])]
    else:
        candidates = [t for t in amb.cells_between(gf, amb.one_id[x])
                      if amb.is_identity_two(amb.wl[(r.f, t)])]
    if candidates != [r.cell]:
        rep.fail("reflection.unit_unique", LAW,
                 "the triangle equation does not pin the structure 2-cell",
                 tuple(candidates))
    rep.certificates["structure-cell-uniqueness"] = "PASS" if rep.ok else "FAIL"
    return rep


def enumerate_w_reflections(a: FCategory, f: str, variance: str) -> list[WReflection]:
    """All w-reflections on the tight 1-cell ``f``, in deterministic order."""
    amb = a.ambient
    if variance == "c":
        return [co_dual(r) for r in
                enumerate_w_reflections(co_dual(a), f, "l")]
    x, y = amb.one_src[f], amb.one_tgt[f]
    out = []
    for g in amb.hom1(y, x):
        if amb.one_comp[(f, g)] != amb.one_id[y]:
            continue
        gf = amb.one_comp[(g, f)]
        for cell in amb.cells_between(amb.one_id[x], gf):
            r = WReflection(variance=variance, f=f, g=g, cell=cell)
            rep = Report("probe")
            _reflection_laws(amb, r, rep)
            if rep.ok:
                out.append(r)
    return out


def mate_of_square(a: FCategory, r: str, s: str,
                   refl1: WReflection, refl2: WReflection) -> str:
    """Mate of a commuting square (r, s): f1 -> f2 through two reflections.

    For l/p reflections (identity counits) the mate is the 2-cell
    r∘g1 => g2∘s obtained by pasting the unit of the second reflection
    onto the composite r∘g1.  For c-reflections the computation is the
    co-dual one.
    """
    amb = a.ambient
    if refl1.variance != refl2.variance:
        raise VarianceError("mate through reflections of different variance")
    if refl1.variance == "c":
        return mate_of_square(co_dual(a), r, s, co_dual(refl1), co_dual(refl2))
    if amb.one_comp[(s, refl1.f)] != amb.one_comp[(refl2.f, r)]:
        raise BoundaryError("square does not commute with the marked adjoints")
    rg1 = amb.one_comp[(r, refl1.g)]
    return amb.wr[(refl2.cell, rg1)]


def is_reflection_morphism(a: FCategory, r: str, s: str,
                           refl1: WReflection, refl2: WReflection) -> tuple[bool, dict]:
    """Both characterisations of a morphism of w-reflections, cross-checked.

    Direct: the square of right adjoints commutes and the square is
    compatible with the structure 2-cells.  Indirect: the mate of the
    square is an identity 2-cell.
    """
    amb = a.ambient
    if refl1.variance == "c":
        return is_reflection_morphism(co_dual(a), r, s, co_dual(refl1), co_dual(refl2))
    adjoints_commute = amb.one_comp[(r, refl1.g)] == amb.one_comp[(refl2.g, s)]
    units_compatible = amb.wl[(r, refl1.cell)] == amb.wr[(refl2.cell, r)]
    direct = adjoints_commute and units_compatible
    mate = mate_of_square(a, r, s, refl1, refl2)
    via_mate = amb.is_identity_two(mate)
    if direct != via_mate:
        raise ConsistencyError(
            f"reflection-morphism characterisations disagree on ({r},{s})")
    return direct, {
        "adjoints_commute": adjoints_commute,
        "units_compatible": units_compatible,
        "mate": mate,
        "mate_is_identity": via_mate,
    }


# ---------------------------------------------------------------------------
# the tight inclusion and tight parts


def tight_part(a: FCategory) -> FCategory:
    """The all-tight F-category on tight 1-cells and all 2-cells between them."""
    amb = a.ambient
    keep1 = set(a.tight)
    keep2 = {t for t in amb.two_src
             if amb.two_src[t] in keep1 and amb.two_tgt[t] in keep1}
    sub = Fin2Category(
        name=f"{amb.name}_tight",
        objects=amb.objects,
        one_src={f: amb.one_src[f] for f in keep1},
        one_tgt={f: amb.one_tgt[f] for f in keep1},
        one_id=dict(amb.one_id),
        one_comp={k: v for k, v in amb.one_comp.items()
                  if k[0] in keep1 and k[1] in keep1},
        two_src={t: amb.two_src[t] for t in keep2},
        two_tgt={t: amb.two_tgt[t] for t in keep2},
        two_id={f: amb.two_id[f] for f in keep1},
        vcomp={k: v for k, v in amb.vcomp.items()
               if k[0] in keep2 and k[1] in keep2},
        wl={(h, t): v for (h, t), v in amb.wl.items()
            if h in keep1 and t in keep2},
        wr={(t, k): v for (t, k), v in amb.wr.items()
            if t in keep2 and k in keep1},
    )
    return all_tight(sub)


def tight_inclusion(a: FCategory) -> FFunctor:
    """The inclusion of the tight part, identity on everything it touches."""
    tau = tight_part(a)
    return FFunctor(
        name=f"j:{a.name}",
        dom=tau,
        cod=a,
        obj_map={x: x for x in tau.ambient.objects},
        one_map={f: f for f in tau.ambient.one_src},
        two_map={t: t for t in tau.ambient.two_src},
    )


# ---------------------------------------------------------------------------
# F-functor composition, identity, equality helpers


def identity_ffunctor(a: FCategory) -> FFunctor:
    return FFunctor(
        name=f"1:{a.name}",
        dom=a,
        cod=a,
        obj_map={x: x for x in a.ambient.objects},
        one_map={f: f for f in a.ambient.one_src},
        two_map={t: t for t in a.ambient.two_src},
    )


def compose_ffunctors(G: FFunctor, F: FFunctor) -> FFunctor:
    if G.dom.ambient.name != F.cod.ambient.name:
        raise BoundaryError(f"F-functors do not compose: {G.name} after {F.name}")
    return FFunctor(
        name=f"{G.name}∘{F.name}",
        dom=F.dom,
        cod=G.cod,
        obj_map={x: G.obj_map[y] for x, y in F.obj_map.items()},
        one_map={f: G.one_map[g] for f, g in F.one_map.items()},
        two_map={t: G.two_map[u] for t, u in F.two_map.items()},
    )


# ---------------------------------------------------------------------------
# generic F-functor enumeration (used by orthogonality and filler search)


def enumerate_ffunctors(dom: FCategory, cod: FCategory,
                        fixed_obj: dict | None = None,
                        fixed_one: dict | None = None,
                        fixed_two: dict | None = None,
                        one_fiber: dict | None = None,
                        two_fiber: dict | None = None,
                        cap: int | None = None) -> list[FFunctor]:
    """All F-functors dom -> cod subject to partial constraints.

    ``fixed_*`` pin individual images; ``one_fiber``/``two_fiber`` restrict
    a cell's image to a candidate list (used for fibers over a third
    functor).  Enumeration is a product scan with a functoriality filter,
    guarded by the cap.
    """
    A, B = dom.ambient, cod.ambient
    fixed_obj = fixed_obj or {}
    fixed_one = fixed_one or {}
    fixed_two = fixed_two or {}
    one_fiber = one_fiber or {}
    two_fiber = two_fiber or {}

    objs = list(A.objects)
    obj_choices = []
    for x in objs:
        obj_choices.append([fixed_obj[x]] if x in fixed_obj else list(B.objects))
    size = 1
    for ch in obj_choices:
        size *= len(ch)
    guard(size, cap, f"object maps {dom.name}->{cod.name}")

    results: list[FFunctor] = []
    ones = A.one_cells()
    twos = A.two_cells()
    for objs_pick in itertools.product(*obj_choices):
        omap = dict(zip(objs, objs_pick))
        one_choices = []
        feasible = True
        for f in ones:
            x, y = omap[A.one_src[f]], omap[A.one_tgt[f]]
            if A.is_identity_one(f):
                cands = [B.one_id[x]] if x == y else []
            else:
                cands = B.hom1(x, y)
                if f in dom.tight:
                    cands = [g for g in cands if g in cod.tight]
            if f in fixed_one:
                cands = [g for g in cands if g == fixed_one[f]]
            if f in one_fiber:
                allowed = set(one_fiber[f])
                cands = [g for g in cands if g in allowed]
            if not cands:
                feasible = False
                break
            one_choices.append(cands)
        if not feasible:
            continue
        size = 1
        for ch in one_choices:
            size *= len(ch)
        guard(size, cap, f"1-cell maps {dom.name}->{cod.name}")
        for one_pick in itertools.product(*one_choices):
            fmap = dict(zip(ones, one_pick))
            if any(fmap[gf] != B.one_comp[(fmap[g], fmap[f])]
                   for (g, f), gf in A.one_comp.items()):
                continue
            two_choices = []
            feasible = True
            for t in twos:
                sf, tf = fmap[A.two_src[t]], fmap[A.two_tgt[t]]
                if A.is_identity_two(t):
                    cands = [B.two_id[sf]] if sf == tf else []
                else:
                    cands = B.cells_between(sf, tf)
                if t in fixed_two:
                    cands = [u for u in cands if u == fixed_two[t]]
                if t in two_fiber:
                    allowed = set(two_fiber[t])
                    cands = [u for u in cands if u in allowed]
                if not cands:
                    feasible = False
                    break
                two_choices.append(cands)
            if not feasible:
                continue
            size = 1
            for ch in two_choices:
                size *= len(ch)
            guard(size, cap, f"2-cell maps {dom.name}->{cod.name}")
            for two_pick in itertools.product(*two_choices):
                tmap = dict(zip(twos, two_pick))
                if any(tmap[ba] != B.vcomp[(tmap[b], tmap[a])]
                       for (b, a), ba in A.vcomp.items()):
                    continue
                if any(tmap[res] != B.wl[(fmap[h], tmap[t])]
                       for (h, t), res in A.wl.items()):
                    continue
                if any(tmap[res] != B.wr[(tmap[t], fmap[k])]
                       for (t, k), res in A.wr.items()):
                    continue
                results.append(FFunctor(
                    name=f"enum{len(results)}:{dom.name}->{cod.name}",
                    dom=dom, cod=cod,
                    obj_map=dict(omap), one_map=dict(fmap), two_map=dict(tmap)))
    return results


# ---------------------------------------------------------------------------
# w-doctrinality


@dataclass
class DoctrinalityReport:
    subject: str
    variance: str
    w_refl: Report = None
    w_morph: Report = None
    locally_faithful: bool = False
    weak_adjunction: Report | None = None

    @property
    def verdict(self) -> bool:
        return self.w_refl.ok and self.w_morph.ok and self.locally_faithful

    def as_dict(self) -> dict:
        out = {
            "subject": self.subject,
            "variance": self.variance,
            "w_refl": self.w_refl.as_dict(),
            "w_morph": self.w_morph.as_dict(),
            "locally_faithful": self.locally_faithful,
            "verdict": self.verdict,
        }
        if self.weak_adjunction is not None:
            out["weak_adjunction"] = self.weak_adjunction.as_dict()
        return out


def _lift_reflections(H: FFunctor, f: str, image: WReflection,
                      variance: str) -> list[WReflection]:
    """All reflections on the tight f in dom(H) mapping onto ``image``."""
    out = []
    for cand in enumerate_w_reflections(H.dom, f, variance):
        if H.one_map[cand.g] == image.g and H.two_map[cand.cell] == image.cell:
            out.append(cand)
    return out


def is_w_doctrinal(H: FFunctor, variance: str,
                   with_weak_diagnostics: bool = False,
                   cap: int | None = None) -> DoctrinalityReport:
    """Decide w-doctrinality of an F-functor by exhaustive enumeration."""
    if variance not in W_VARIANCES:
        raise VarianceError(f"doctrinality is defined for l, p, c; got {variance}")
    if variance == "c":
        dual = is_w_doctrinal(co_dual(H), "l", with_weak_diagnostics, cap)
        dual.subject = f"doctrinal:{H.name}"
        dual.variance = "c"
        return dual

    out = DoctrinalityReport(subject=f"doctrinal:{H.name}", variance=variance)
    refl_rep = Report(f"{H.name}.w_refl")
    morph_rep = Report(f"{H.name}.w_morph")

    # w-Refl: every reflection on the image of a tight arrow lifts uniquely
    dom_reflections: list[WReflection] = []
    for f in sorted(H.dom.tight):
        dom_reflections.extend(enumerate_w_reflections(H.dom, f, variance))
        hf = H.one_map[f]
        for image in enumerate_w_reflections(H.cod, hf, variance):
            lifts = _lift_reflections(H, f, image, variance)
            if len(lifts) != 1:
                refl_rep.fail(
                    "doctrinal.w_refl", LAW,
                    f"reflection on {hf} has {len(lifts)} lifts along {H.name} at {f}",
                    (f, image.g, image.cell, len(lifts)))

    # w-Morph: tight squares reflect the morphism-of-reflections property
    amb = H.dom.ambient
    for r1 in dom_reflections:
        for r2 in dom_reflections:
            for r in sorted(H.dom.tight):
                for s in sorted(H.dom.tight):
                    if (amb.one_src[r] != amb.one_src[r1.f]
                            or amb.one_tgt[r] != amb.one_src[r2.f]
                            or amb.one_src[s] != amb.one_tgt[r1.f]
                            or amb.one_tgt[s] != amb.one_tgt[r2.f]):
                        continue
                    if amb.one_comp[(s, r1.f)] != amb.one_comp[(r2.f, r)]:
                        continue
                    here, _ = is_reflection_morphism(H.dom, r, s, r1, r2)
                    img1 = WReflection(variance, H.one_map[r1.f], H.one_map[r1.g],
                                       H.two_map[r1.cell])
                    img2 = WReflection(variance, H.one_map[r2.f], H.one_map[r2.g],
                                       H.two_map[r2.cell])
                    there, _ = is_reflection_morphism(
                        H.cod, H.one_map[r], H.one_map[s], img1, img2)
                    if here != there:
                        morph_rep.fail(
                            "doctrinal.w_morph", LAW,
                            f"square ({r},{s}) is a reflection morphism "
                            f"{'downstairs' if there else 'upstairs'} only",
                            (r, s, r1.f, r2.f))

    out.w_refl = refl_rep
    out.w_morph = morph_rep
    out.locally_faithful = local_property_flags(H)["locally_faithful"]
    if with_weak_diagnostics:
        out.weak_adjunction = _weak_doctrinal_adjunction(H, variance, cap)
    return out


def _enumerate_adjunctions(a: FCategory, f: str, equivalences_only: bool) -> list[tuple]:
    """All adjunctions (eps, f -| g, eta) on a given left adjoint 1-cell."""
    amb = a.ambient
    x, y = amb.one_src[f], amb.one_tgt[f]
    found = []
    for g in amb.hom1(y, x):
        gf = amb.one_comp[(g, f)]
        fg = amb.one_comp[(f, g)]
        for eta in amb.cells_between(amb.one_id[x], gf):
            for eps in amb.cells_between(fg, amb.one_id[y]):
                tri1 = amb.vcompose(amb.wr[(eps, f)], amb.wl[(f, eta)])
                tri2 = amb.vcompose(amb.wl[(g, eps)], amb.wr[(eta, g)])
                if not (amb.is_identity_two(tri1) and amb.is_identity_two(tri2)):
                    continue
                if equivalences_only and (amb.inverse_two(eta) is None
                                          or amb.inverse_two(eps) is None):
                    continue
                found.append((g, eta, eps))
    return found


def _weak_doctrinal_adjunction(H: FFunctor, variance: str,
                               cap: int | None = None) -> Report:
    """Existence/uniqueness of general adjunction lifts (diagnostics only)."""
    rep = Report(f"{H.name}.weak_{variance}_doctrinal")
    equiv_only = variance == "p"
    for f in sorted(H.dom.tight):
        hf = H.one_map[f]
        for (g, eta, eps) in _enumerate_adjunctions(H.cod, hf, equiv_only):
            lifts = []
            for (g2, eta2, eps2) in _enumerate_adjunctions(H.dom, f, equiv_only):
                if (H.one_map[g2] == g and H.two_map[eta2] == eta
                        and H.two_map[eps2] == eps):
                    lifts.append((g2, eta2, eps2))
            if not lifts:
                rep.fail("doctrinal.weak_exists", LAW,
                         f"adjunction on {hf} has no lift at {f}", (f, g))
            elif len(lifts) > 1:
                rep.fail("doctrinal.weak_unique", LAW,
                         f"adjunction on {hf} has {len(lifts)} lifts at {f}",
                         (f, g, len(lifts)))
    return rep


# ---------------------------------------------------------------------------
# the free reflection classifier


def _close_one_cell_words(generators: dict[str, tuple[str, str]],
                          rewrite: dict[tuple[str, str], tuple[str, ...]],
                          objects: tuple[str, ...],
                          budget: int = 10_000) -> dict[tuple, tuple[str, ...]]:
    """Close composable generator words under composition modulo rewriting.

    Words are tuples of generator names in application order (last applied
    first).  ``rewrite`` sends an adjacent pair to its replacement.  Returns
    the set of normal forms keyed by (src, tgt, word).  The step budget makes
    non-terminating presentations an error instead of silent truncation.
    """
    def normalise(word: tuple[str, ...]) -> tuple[str, ...]:
        steps = 0
        w = list(word)
        changed = True
        while changed:
            changed = False
            for i in range(len(w) - 1):
                pair = (w[i], w[i + 1])
                if pair in rewrite:
                    w[i:i + 2] = list(rewrite[pair])
                    changed = True
                    steps += 1
                    if steps > budget:
                        raise ConsistencyError("presentation closure exceeded its step budget")
                    break
        return tuple(w)

    def ends(word: tuple[str, ...]) -> tuple[str, str] | None:
        if not word:
            return None
        src = generators[word[-1]][0]
        tgt = generators[word[0]][1]
        cur = src
        for gen in reversed(word):
            gsrc, gtgt = generators[gen]
            if gsrc != cur:
                return None
            cur = gtgt
        return src, tgt

    normal: set[tuple[str, ...]] = set()
    frontier = [(g,) for g in generators] + [() ]
    seen = set()
    steps = 0
    while frontier:
        word = frontier.pop()
        nf = normalise(word)
        if nf in seen:
            continue
        seen.add(nf)
        if nf and ends(nf) is None:
            continue
        normal.add(nf)
        for g in sorted(generators):
            for new in ((g,) + nf, nf + (g,)):
                if ends(new) is not None or not new:
                    steps += 1
                    if steps > budget:
                        raise ConsistencyError("presentation closure exceeded its step budget")
                    frontier.append(new)
    out = {}
    for word in sorted(normal):
        if not word:
            continue
        src, tgt = ends(word)
        out[(src, tgt, word)] = word
    return out


def classifier_one_cell_closure(variance: str = "l", budget: int = 10_000):
    """Normal forms of composites of f and g under f∘g -> identity."""
    gens = {"f": ("0", "1"), "g": ("1", "0")}
    rewrite = {("f", "g"): ()}
    return _close_one_cell_words(gens, rewrite, ("0", "1"), budget)


def build_adj_classifier(variance: str, budget: int = 10_000) -> FCategory:
    """The free reflection of the requested flavour, as explicit tables.

    Generated by a tight arrow f, a loose g and a structure 2-cell subject
    to f∘g = 1 and the two triangle identities; 1-cells come from the word
    closure and 2-cells from whisker/vertical closure of the generator.
    """
    if variance not in W_VARIANCES:
        raise VarianceError(f"classifier exists for l, p, c; got {variance}")
    if variance == "c":
        return co_dual(build_adj_classifier("l", budget))

    words = classifier_one_cell_closure(variance, budget)
    names = {(): None}
    word_name = {}
    for (src, tgt, word) in sorted(words):
        word_name[word] = "*".join(word)
    one_src, one_tgt = {}, {}
    for (src, tgt, word), _ in sorted(words.items()):
        name = word_name[word]
        one_src[name] = src
        one_tgt[name] = tgt
    for x in ("0", "1"):
        one_src[f"id{x}"] = x
        one_tgt[f"id{x}"] = x
    one_id = {"0": "id0", "1": "id1"}

    def norm_word(word: tuple[str, ...]) -> str:
        w = list(word)
        changed = True
        while changed:
            changed = False
            for i in range(len(w) - 1):
                if (w[i], w[i + 1]) == ("f", "g"):
                    w[i:i + 2] = []
                    changed = True
                    break
        if not w:
            # identity at the common endpoint
            return None
        return word_name[tuple(w)]

    word_of = {name: tuple(name.split("*")) for name in word_name.values()}
    word_of["id0"] = ()
    word_of["id1"] = ()
    one_comp = {}
    for gname in one_src:
        for fname in one_src:
            if one_src[gname] != one_tgt[fname]:
                continue
            combined = word_of[gname] + word_of[fname]
            nf = norm_word(combined)
            if nf is None:
                nf = one_id[one_src[fname]]
            one_comp[(gname, fname)] = nf

    # 2-cells: identities plus the closure of the generator eta: id0 => g*f
    two_src = {f"1_{f}": f for f in one_src}
    two_tgt = {f"1_{f}": f for f in one_src}
    two_id = {f: f"1_{f}" for f in one_src}
    two_src["eta"] = "id0"
    two_tgt["eta"] = "g*f"
    extra = ["eta"]
    if variance == "p":
        two_src["etainv"] = "g*f"
        two_tgt["etainv"] = "id0"
        extra.append("etainv")

    def whisker_left_name(h: str, a: str) -> str:
        if a not in ("eta", "etainv"):
            return two_id[one_comp[(h, two_src[a])]]
        if h == "id0":
            return a
        # every non-identity word out of 0 starts with the letter f, and
        # f·eta is an identity by the triangle equation
        return two_id[one_comp[(h, two_src[a])]]

    def whisker_right_name(a: str, k: str) -> str:
        if a not in ("eta", "etainv"):
            return two_id[one_comp[(two_src[a], k)]]
        if k == "id0":
            return a
        # every non-identity word into 0 ends with the letter g
        return two_id[one_comp[(two_src[a], k)]]

    wl, wr = {}, {}
    for a in two_src:
        x, y = one_src[two_src[a]], one_tgt[two_src[a]]
        for h in one_src:
            if one_src[h] == y:
                wl[(h, a)] = whisker_left_name(h, a)
        for k in one_src:
            if one_tgt[k] == x:
                wr[(a, k)] = whisker_right_name(a, k)

    vcomp = {}
    for b in two_src:
        for a in two_src:
            if two_src[b] != two_tgt[a]:
                continue
            if a == two_id[two_src[a]]:
                vcomp[(b, a)] = b
            elif b == two_id[two_tgt[a]]:
                vcomp[(b, a)] = a
            else:
                # only mutually inverse generator cells remain
                vcomp[(b, a)] = two_id[two_src[a]]
    ambient = Fin2Category(
        name=f"Adj_{variance}",
        objects=("0", "1"),
        one_src=one_src, one_tgt=one_tgt, one_id=one_id, one_comp=one_comp,
        two_src=two_src, two_tgt=two_tgt, two_id=two_id,
        vcomp=vcomp, wl=wl, wr=wr,
    )
    return FCategory(ambient=ambient, tight=frozenset({"id0", "id1", "f"}))


def classifier_generator_inclusion(adj: FCategory) -> FFunctor:
    """The F-functor from the walking tight arrow selecting the generator f."""
    return tight_inclusion(adj)


def check_orthogonal_to_classifier(H: FFunctor, variance: str,
                                   cap: int | None = None) -> Report:
    """Unique-filler orthogonality of H against the classifier inclusion.

    Enumerates every commuting square (walking arrow, classifier) over H by
    generic F-functor search, then counts diagonal fillers.  Verdict must
    agree with the reflection-lifting sub-check of :func:`is_w_doctrinal`.
    """
    rep = Report(f"orthogonality:{H.name}:{variance}")
    adj = build_adj_classifier(variance)
    j = tight_inclusion(adj)
    squares = 0
    for f in sorted(H.dom.tight):
        # top functor: walking arrow -> dom(H) selecting the tight arrow f
        amb = H.dom.ambient
        x, y = amb.one_src[f], amb.one_tgt[f]
        bottoms = enumerate_ffunctors(
            adj, H.cod,
            fixed_obj={"0": H.obj_map[x], "1": H.obj_map[y]},
            fixed_one={"f": H.one_map[f], "id0": H.cod.ambient.one_id[H.obj_map[x]],
                       "id1": H.cod.ambient.one_id[H.obj_map[y]]},
            cap=cap)
        for G in bottoms:
            squares += 1
            fillers = enumerate_ffunctors(
                adj, H.dom,
                fixed_obj={"0": x, "1": y},
                fixed_one={"f": f, "id0": amb.one_id[x], "id1": amb.one_id[y]},
                one_fiber={c: [u for u in amb.one_cells()
                               if H.one_map[u] == G.one_map[c]]
                           for c in adj.ambient.one_src},
                two_fiber={t: [u for u in amb.two_cells()
                               if H.two_map[u] == G.two_map[t]]
                           for t in adj.ambient.two_src},
                cap=cap)
            good = [K for K in fillers
                    if all(H.one_map[K.one_map[c]] == G.one_map[c]
                           for c in adj.ambient.one_src)
                    and all(H.two_map[K.two_map[t]] == G.two_map[t]
                            for t in adj.ambient.two_src)]
            if len(good) != 1:
                rep.fail("orthogonality.filler_count", LAW,
                         f"square at {f} has {len(good)} fillers", (f, len(good)))
    rep.flags["squares_checked"] = squares
    return rep


# ---------------------------------------------------------------------------
# equivalences of F-categories


def check_f_equivalence(F: FFunctor, cap: int | None = None) -> Report:
    """Essential surjectivity of the tight part plus 2-full-faithfulness."""
    rep = Report(f"f_equivalence:{F.name}")
    require(validate_ffunctor(F))
    dom_t, cod_t = tight_part(F.dom), tight_part(F.cod)

    # essential surjectivity of the tight part: every codomain object is
    # linked to an image object by an invertible tight 1-cell
    image = {F.obj_map[x] for x in F.dom.ambient.objects}
    for b in F.cod.ambient.objects:
        if b in image:
            continue
        amb = F.cod.ambient
        linked = any(
            amb.inverse_one(u) is not None and u in F.cod.tight
            for a in sorted(image) for u in amb.hom1(a, b))
        if not linked:
            rep.fail("equivalence.essentially_surjective", LAW,
                     f"object {b} is not isomorphic to any image object", (b,))

    def fully_faithful(dom_f: FCategory, cod_f: FCategory, label: str,
                       one_map, two_map):
        domamb, codamb = dom_f.ambient, cod_f.ambient
        for x in domamb.objects:
            for y in domamb.objects:
                fx, fy = F.obj_map[x], F.obj_map[y]
                dom_ones = [f for f in domamb.hom1(x, y)]
                cod_ones = codamb.hom1(fx, fy)
                images = [one_map[f] for f in dom_ones]
                if sorted(images) != sorted(cod_ones) or len(set(images)) != len(images):
                    rep.fail(f"equivalence.{label}_one_bijective", LAW,
                             f"hom({x},{y}) 1-cells not in bijection", (x, y))
                    continue
                for f in dom_ones:
                    for g in dom_ones:
                        dom_two = [t for t in domamb.cells_between(f, g)]
                        cod_two = codamb.cells_between(one_map[f], one_map[g])
                        t_images = [two_map[t] for t in dom_two]
                        if (sorted(t_images) != sorted(cod_two)
                                or len(set(t_images)) != len(t_images)):
                            rep.fail(f"equivalence.{label}_two_bijective", LAW,
                                     f"2-cells {f}=>{g} not in bijection", (f, g))

    tight_one = {f: F.one_map[f] for f in dom_t.ambient.one_src}
    tight_two = {t: F.two_map[t] for t in dom_t.ambient.two_src}
    fully_faithful(dom_t, cod_t, "tight", tight_one, tight_two)
    fully_faithful(F.dom, F.cod, "loose", F.one_map, F.two_map)
    rep.flags["equivalence"] = rep.ok
    return rep


def is_isomorphism_of_fcategories(F: FFunctor) -> bool:
    """On-the-nose bijectivity of all three levels plus tightness both ways."""
    A, B = F.dom, F.cod
    obj_bij = sorted(F.obj_map.values()) == sorted(B.ambient.objects) \
        and len(set(F.obj_map.values())) == len(A.ambient.objects)
    one_bij = sorted(F.one_map.values()) == B.ambient.one_cells() \
        and len(set(F.one_map.values())) == len(A.ambient.one_src)
    two_bij = sorted(F.two_map.values()) == B.ambient.two_cells() \
        and len(set(F.two_map.values())) == len(A.ambient.two_src)
    tight_onto = {F.one_map[f] for f in A.tight} == set(B.tight)
    return obj_bij and one_bij and two_bij and tight_onto


# ---------------------------------------------------------------------------
# loose-limit data


@dataclass(frozen=True)
class ArrowLimitData:
    apex: str
    p: str
    q: str
    cell: str


def _cone_cell_frames(amb: Fin2Category, w: str, f: str, r: str, s: str):
    """Frame of the structure 2-cell of a w-bar cone (r, cell, s) over f."""
    fr = amb.one_comp[(f, r)]
    if w in ("l", "p"):
        return s, fr     # colax / pseudo cone: s => f∘r
    return fr, s         # lax cone: f∘r => s


def enumerate_cones(a: FCategory, w: str, f: str, x: str) -> list[tuple[str, str, str]]:
    """All w-bar cones over f with vertex x, as (r, s, cell) triples."""
    amb = a.ambient
    src_f, tgt_f = amb.one_src[f], amb.one_tgt[f]
    out = []
    for r in amb.hom1(x, src_f):
        for s in amb.hom1(x, tgt_f):
            c_src, c_tgt = _cone_cell_frames(amb, w, f, r, s)
            for cell in amb.cells_between(c_src, c_tgt):
                if w == "p" and amb.inverse_two(cell) is None:
                    continue
                out.append((r, s, cell))
    return out


def validate_loose_limit_data(a: FCategory, data: dict[str, ArrowLimitData],
                              w: str, cap: int | None = None) -> Report:
    """Certify chosen cones as w-bar limits of every loose morphism.

    Exhaustively quantifies the one- and two-dimensional universal
    properties over all objects of the ambient F-category, and checks
    that the projections jointly detect tightness.
    """
    rep = Report(f"loose_limits:{a.name}:{w}")
    amb = a.ambient
    for f in amb.one_cells():
        if f not in data:
            rep.fail("structural.missing_limit", STRUCTURAL,
                     f"no limit data for loose morphism {f}", (f,))
    if not rep.ok:
        return rep

    for f in amb.one_cells():
        d = data[f]
        if d.p not in a.tight or d.q not in a.tight:
            rep.fail("limit.projections_tight", LAW,
                     f"projections of the limit of {f} must be tight", (f,))
            continue
        c_src, c_tgt = _cone_cell_frames(amb, w, f, d.p, d.q)
        if amb.two_src.get(d.cell) != c_src or amb.two_tgt.get(d.cell) != c_tgt:
            rep.fail("limit.cone_frame", LAW,
                     f"structure 2-cell of the limit of {f} has wrong frame", (f, d.cell))
            continue
        if w == "p" and amb.inverse_two(d.cell) is None:
            rep.fail("limit.cone_invertible", LAW,
                     f"pseudo-cone cell of {f} is not invertible", (f, d.cell))
            continue

        for x in amb.objects:
            cones = enumerate_cones(a, w, f, x)
            factored = {}
            for (r, s, cell) in cones:
                ts = [t for t in amb.hom1(x, d.apex)
                      if amb.one_comp[(d.p, t)] == r
                      and amb.one_comp[(d.q, t)] == s
                      and amb.wr[(d.cell, t)] == cell]
                if len(ts) != 1:
                    rep.fail("limit.one_dimensional", LAW,
                             f"cone ({r},{s},{cell}) over {f} has {len(ts)} factorisations",
                             (f, x, r, s, cell, len(ts)))
                    continue
                factored[(r, s, cell)] = ts[0]
            # two-dimensional property over pairs of cones
            for (r1, s1, c1), t1 in sorted(factored.items()):
                for (r2, s2, c2), t2 in sorted(factored.items()):
                    for th_r in amb.cells_between(r1, r2):
                        for th_s in amb.cells_between(s1, s2):
                            lhs = amb.vcompose(c2, th_s)
                            rhs = amb.vcompose(amb.wl[(f, th_r)], c1)
                            if lhs != rhs:
                                continue
                            phis = [phi for phi in amb.cells_between(t1, t2)
                                    if amb.wl[(d.p, phi)] == th_r
                                    and amb.wl[(d.q, phi)] == th_s]
                            if len(phis) != 1:
                                rep.fail("limit.two_dimensional", LAW,
                                         f"compatible 2-cell pair over {f} has "
                                         f"{len(phis)} fillers",
                                         (f, x, th_r, th_s, len(phis)))
            # tightness detection
            for t in amb.hom1(x, d.apex):
                both_tight = (amb.one_comp[(d.p, t)] in a.tight
                              and amb.one_comp[(d.q, t)] in a.tight)
                if (t in a.tight) != both_tight:
                    rep.fail("limit.tightness_detection", LAW,
                             f"projections fail to detect tightness of {t}",
                             (f, t))
    return rep


def find_arrow_limits(a: FCategory, w: str,
                      cap: int | None = None) -> dict[str, ArrowLimitData] | None:
    """Search the finite ambient for w-bar limit data of every morphism.

    Returns the first (deterministically ordered) choice passing
    :func:`validate_loose_limit_data` per morphism, or None if some
    morphism has no limit in the F-category.
    """
    amb = a.ambient
    chosen: dict[str, ArrowLimitData] = {}
    for f in amb.one_cells():
        found = None
        for apex in amb.objects:
            for p in amb.hom1(apex, amb.one_src[f]):
                if p not in a.tight:
                    continue
                for q in amb.hom1(apex, amb.one_tgt[f]):
                    if q not in a.tight:
                        continue
                    c_src, c_tgt = _cone_cell_frames(amb, w, f, p, q)
                    for cell in amb.cells_between(c_src, c_tgt):
                        cand = ArrowLimitData(apex, p, q, cell)
                        single = _validate_single_limit(a, f, cand, w)
                        if single.ok:
                            found = cand
                            break
                    if found:
                        break
                if found:
                    break
            if found:
                break
        if not found:
            return None
        chosen[f] = found
    return chosen


def _validate_single_limit(a: FCategory, f: str, d: ArrowLimitData, w: str) -> Report:
    """Universal-property check of one candidate cone (helper for search)."""
    sub = Report(f"limit_probe:{f}")
    amb = a.ambient
    c_src, c_tgt = _cone_cell_frames(amb, w, f, d.p, d.q)
    if amb.two_src.get(d.cell) != c_src or amb.two_tgt.get(d.cell) != c_tgt:
        sub.fail("limit.cone_frame", LAW, "wrong frame", (f,))
        return sub
    if w == "p" and amb.inverse_two(d.cell) is None:
        sub.fail("limit.cone_invertible", LAW, "not invertible", (f,))
        return sub
    for x in amb.objects:
        for (r, s, cell) in enumerate_cones(a, w, f, x):
            ts = [t for t in amb.hom1(x, d.apex)
                  if amb.one_comp[(d.p, t)] == r
                  and amb.one_comp[(d.q, t)] == s
                  and amb.wr[(d.cell, t)] == cell]
            if len(ts) != 1:
                sub.fail("limit.one_dimensional", LAW, "factorisation count", (f, x))
                return sub
        for t in amb.hom1(x, d.apex):
            both = (amb.one_comp[(d.p, t)] in a.tight
                    and amb.one_comp[(d.q, t)] in a.tight)
            if (t in a.tight) != both:
                sub.fail("limit.tightness_detection", LAW, "detection", (f, t))
                return sub
    # two-dimensional property
    for x in amb.objects:
        cones = enumerate_cones(a, w, f, x)
        fact = {}
        for (r, s, cell) in cones:
            fact[(r, s, cell)] = [t for t in amb.hom1(x, d.apex)
                                  if amb.one_comp[(d.p, t)] == r
                                  and amb.one_comp[(d.q, t)] == s
                                  and amb.wr[(d.cell, t)] == cell][0]
        for (r1, s1, c1), t1 in sorted(fact.items()):
            for (r2, s2, c2), t2 in sorted(fact.items()):
                for th_r in amb.cells_between(r1, r2):
                    for th_s in amb.cells_between(s1, s2):
                        if amb.vcompose(c2, th_s) != amb.vcompose(amb.wl[(f, th_r)], c1):
                            continue
                        phis = [phi for phi in amb.cells_between(t1, t2)
                                if amb.wl[(d.p, phi)] == th_r
                                and amb.wl[(d.q, phi)] == th_s]
                        if len(phis) != 1:
                            sub.fail("limit.two_dimensional", LAW, "filler count", (f, x))
                            return sub
    return sub


# ---------------------------------------------------------------------------
# 2-natural transformations and 2-adjunctions (between all-tight F-categories)


@dataclass
class TwoNatTransformation:
    source: FFunctor
    target: FFunctor
    components: dict[str, str]   # object -> 1-cell of the codomain


def validate_2nat(t: TwoNatTransformation) -> Report:
    rep = Report("2nat")
    F, G = t.source, t.target
    if F.dom.ambient.name != G.dom.ambient.name or F.cod.ambient.name != G.cod.ambient.name:
        rep.fail("structural.parallel", STRUCTURAL,
                 "source and target are not parallel", ())
        return rep
    amb = F.cod.ambient
    for x in F.dom.ambient.objects:
        cmp = t.components.get(x)
        if cmp is None or cmp not in amb.one_src:
            rep.fail("structural.component", STRUCTURAL, f"component at {x} missing", (x,))
            continue
        if amb.one_src[cmp] != F.obj_map[x] or amb.one_tgt[cmp] != G.obj_map[x]:
            rep.fail("nat.component_boundary", LAW,
                     f"component at {x} has wrong endpoints", (x, cmp))
    if not rep.ok:
        return rep
    for f in F.dom.ambient.one_cells():
        x, y = F.dom.ambient.one_src[f], F.dom.ambient.one_tgt[f]
        lhs = amb.one_comp[(t.components[y], F.one_map[f])]
        rhs = amb.one_comp[(G.one_map[f], t.components[x])]
        if lhs != rhs:
            rep.fail("nat.one_naturality", LAW, f"naturality square at {f} fails", (f,))
    for a in F.dom.ambient.two_cells():
        x, y = F.dom.ambient.frame_objects(a)
        lhs = amb.wl[(t.components[y], F.two_map[a])]
        rhs = amb.wr[(G.two_map[a], t.components[x])]
        if lhs != rhs:
            rep.fail("nat.two_naturality", LAW, f"2-naturality at {a} fails", (a,))
    return rep


@dataclass
class TwoAdjunction:
    """A 2-adjunction left -| right presented by unit and counit tables."""

    left: FFunctor
    right: FFunctor
    unit: TwoNatTransformation        # 1 => right∘left
    counit: TwoNatTransformation      # left∘right => 1


def validate_2adjunction(adj: TwoAdjunction) -> Report:
    rep = Report("2adjunction")
    rep.merge(validate_2nat(adj.unit), "unit.")
    rep.merge(validate_2nat(adj.counit), "counit.")
    if not rep.ok:
        return rep
    B = adj.left.dom      # base
    A = adj.left.cod
    amb_a, amb_b = A.ambient, B.ambient
    for x in amb_b.objects:
        fx = adj.left.obj_map[x]
        tri = amb_a.one_comp[(adj.counit.components[fx],
                              adj.left.one_map[adj.unit.components[x]])]
        if tri != amb_a.one_id[fx]:
            rep.fail("adjunction.triangle_left", LAW,
                     f"triangle at {x} fails on the left adjoint", (x,))
    for y in amb_a.objects:
        gy = adj.right.obj_map[y]
        tri = amb_b.one_comp[(adj.right.one_map[adj.counit.components[y]],
                              adj.unit.components[gy])]
        if tri != amb_b.one_id[gy]:
            rep.fail("adjunction.triangle_right", LAW,
                     f"triangle at {y} fails on the right adjoint", (y,))
    return rep
