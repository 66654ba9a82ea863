"""Bundled finite fixtures used by the test and acceptance suites.

Chains carry their join-semilattice monoidal structure, one-object
categories come from commutative monoids, and the 2-categorical bases
are either full sub-2-categories of small categories or one-object
2-categories built from finite groups.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fincat import (
    CatAdjunction,
    FinCategory,
    Functor,
    NatTransformation,
    compose_functors,
    identity_functor,
    validate_category,
)
from .f2cat import FCategory, Fin2Category, all_tight
from .moncat import MonoidalCategory, WMonoidalFunctor


# ---------------------------------------------------------------------------
# small categories


def terminal_category(name: str = "1") -> FinCategory:
    return FinCategory(name, ("*",), {"id*": ("*", "*")}, {"*": "id*"},
                       {("id*", "id*"): "id*"})


def chain(n: int, name: str | None = None) -> FinCategory:
    """The total order 0 < 1 < ... < n-1 as a category.

    Morphisms are named m{i}_{j} for i <= j; identities are m{i}_{i}.
    """
    name = name or f"chain{n}"
    objects = tuple(str(i) for i in range(n))
    mors = {}
    for i in range(n):
        for j in range(i, n):
            mors[f"m{i}_{j}"] = (str(i), str(j))
    comp = {}
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                comp[(f"m{j}_{k}", f"m{i}_{j}")] = f"m{i}_{k}"
    return FinCategory(name, objects, mors,
                       {str(i): f"m{i}_{i}" for i in range(n)}, comp)


def walking_arrow() -> FinCategory:
    return chain(2, "2")


def discrete(n: int, name: str | None = None) -> FinCategory:
    name = name or f"disc{n}"
    objects = tuple(f"d{i}" for i in range(n))
    mors = {f"id{o}": (o, o) for o in objects}
    return FinCategory(name, objects, mors,
                       {o: f"id{o}" for o in objects},
                       {(f"id{o}", f"id{o}"): f"id{o}" for o in objects})


def monoid_category(name: str, elements: tuple[str, ...], op, unit: str) -> FinCategory:
    """One-object category with the monoid's elements as endomorphisms."""
    mors = {e: ("*", "*") for e in elements}
    comp = {(g, f): op(g, f) for g in elements for f in elements}
    return FinCategory(name, ("*",), mors, {"*": unit}, comp)


def cyclic_monoid(k: int, name: str | None = None) -> FinCategory:
    els = tuple(f"z{i}" for i in range(k))

    def add(g: str, f: str) -> str:
        return f"z{(int(g[1:]) + int(f[1:])) % k}"

    return monoid_category(name or f"Z{k}", els, add, "z0")


def nonassoc_magma_category() -> FinCategory:
    """A deliberately broken one-object table: composition not associative."""
    els = ("e", "x", "y")
    table = {
        ("e", "e"): "e", ("e", "x"): "x", ("e", "y"): "y",
        ("x", "e"): "x", ("x", "x"): "y", ("x", "y"): "e",
        ("y", "e"): "y", ("y", "x"): "x", ("y", "y"): "x",
    }
    return FinCategory("magma", ("*",), {e: ("*", "*") for e in els},
                       {"*": "e"}, dict(table))


def monotone_functor(A: FinCategory, B: FinCategory, mapping: dict[int, int],
                     name: str | None = None) -> Functor:
    """Functor between chains given by a monotone map on indices."""
    obj_map = {str(i): str(mapping[i]) for i in range(len(A.objects))}
    mor_map = {}
    for m, (s, t) in A.morphisms.items():
        mor_map[m] = f"m{mapping[int(s)]}_{mapping[int(t)]}"
    return Functor(name or f"mono{tuple(mapping[i] for i in range(len(A.objects)))}",
                   A, B, obj_map, mor_map)


def all_monotone_maps(m: int, n: int) -> list[tuple[int, ...]]:
    """All monotone maps chain(m) -> chain(n) as index tuples."""
    out = []
    for pick in itertools.product(range(n), repeat=m):
        if all(pick[i] <= pick[i + 1] for i in range(m - 1)):
            out.append(pick)
    return sorted(out)


def galois_connection(m: int, n: int, mapping: tuple[int, ...]) -> CatAdjunction | None:
    """The adjunction f -| g between chains induced by a monotone f.

    The right adjoint g(y) = max{x : f(x) <= y} exists iff f(0) = 0.
    """
    if mapping[0] != 0:
        return None
    A, B = chain(m), chain(n)
    f = monotone_functor(A, B, dict(enumerate(mapping)), name=f"f{mapping}")
    gmap = {}
    for y in range(n):
        xs = [x for x in range(m) if mapping[x] <= y]
        gmap[y] = max(xs)
    g = monotone_functor(B, A, gmap, name=f"g{mapping}")
    unit = NatTransformation(identity_functor(A),
                             compose_functors(g, f),
                             {str(x): f"m{x}_{gmap[mapping[x]]}" for x in range(m)})
    counit = NatTransformation(compose_functors(f, g), identity_functor(B),
                               {str(y): f"m{mapping[gmap[y]]}_{y}" for y in range(n)})
    return CatAdjunction(f, g, unit, counit)


def all_galois_connections(max_len: int) -> list[CatAdjunction]:
    out = []
    for m in range(1, max_len + 1):
        for n in range(1, max_len + 1):
            for mapping in all_monotone_maps(m, n):
                adj = galois_connection(m, n, mapping)
                if adj is not None:
                    out.append(adj)
    return out


# ---------------------------------------------------------------------------
# the test battery: all categories with at most K morphisms, up to iso


def _enumerate_small_categories(max_mors: int) -> list[FinCategory]:
    found: list[FinCategory] = []
    seen_keys: set = set()
    for n_obj in range(1, max_mors + 1):
        objs = tuple(f"o{i}" for i in range(n_obj))
        for extra in range(0, max_mors - n_obj + 1):
            extras = tuple(f"x{i}" for i in range(extra))
            for ends in itertools.product(
                    itertools.product(range(n_obj), repeat=2), repeat=extra):
                mors = {f"ido{i}": (f"o{i}", f"o{i}") for i in range(n_obj)}
                for name, (s, t) in zip(extras, ends):
                    mors[name] = (f"o{s}", f"o{t}")
                idents = {f"o{i}": f"ido{i}" for i in range(n_obj)}
                pairs = [(g, f) for g in mors for f in mors
                         if mors[g][0] == mors[f][1]]
                free = [(g, f) for (g, f) in pairs
                        if not (g in idents.values() or f in idents.values())]
                base = {}
                ok = True
                for (g, f) in pairs:
                    if g in idents.values():
                        base[(g, f)] = f
                    elif f in idents.values():
                        base[(g, f)] = g
                options = []
                for (g, f) in free:
                    s, t = mors[f][0], mors[g][1]
                    options.append([m for m in mors if mors[m] == (s, t)])
                if any(not o for o in options):
                    continue
                for pick in itertools.product(*options):
                    comp = dict(base)
                    comp.update({pf: m for pf, m in zip(free, pick)})
                    cat = FinCategory(f"bat{len(found)}", objs, dict(mors),
                                      dict(idents), comp)
                    if not validate_category(cat).ok:
                        continue
                    key = _iso_class_key(cat)
                    if key in seen_keys:
                        continue
                    seen_keys.add(key)
                    found.append(cat)
    return found


def _iso_class_key(c: FinCategory):
    """Canonical form under object and morphism renamings."""
    objs = list(c.objects)
    best = None
    for operm in itertools.permutations(range(len(objs))):
        rank = {objs[i]: operm[i] for i in range(len(objs))}
        mors = sorted(c.morphisms, key=lambda m: (rank[c.src(m)], rank[c.tgt(m)],
                                                  not c.is_identity(m), m))
        for mperm in itertools.permutations(mors):
            mrank = {m: i for i, m in enumerate(mperm)}
            sig_m = tuple(sorted((mrank[m], rank[c.src(m)], rank[c.tgt(m)])
                                 for m in mors))
            sig_i = tuple(sorted((rank[o], mrank[c.id_(o)]) for o in c.objects))
            sig_c = tuple(sorted((mrank[g], mrank[f], mrank[h])
                                 for (g, f), h in c.composition.items()))
            key = (sig_m, sig_i, sig_c)
            if best is None or key < best:
                best = key
    return best


_battery_cache: dict[int, list[FinCategory]] = {}


def test_battery(max_mors: int = 3) -> list[FinCategory]:
    """All categories with at most ``max_mors`` morphisms, one per iso class."""
    if max_mors not in _battery_cache:
        _battery_cache[max_mors] = _enumerate_small_categories(max_mors)
    return list(_battery_cache[max_mors])


# ---------------------------------------------------------------------------
# monoidal fixtures


def chain_monoidal(n: int) -> MonoidalCategory:
    """Chain with tensor = join (max) and unit the bottom element."""
    base = chain(n)
    tobj = {(str(a), str(b)): str(max(a, b))
            for a in range(n) for b in range(n)}
    tmor = {}
    for f, (a, b) in base.morphisms.items():
        for g, (c, d) in base.morphisms.items():
            tmor[(f, g)] = f"m{max(int(a), int(c))}_{max(int(b), int(d))}"
    assoc = {(str(a), str(b), str(c)): base.id_(str(max(a, b, c)))
             for a in range(n) for b in range(n) for c in range(n)}
    lu = {str(a): base.id_(str(a)) for a in range(n)}
    ru = {str(a): base.id_(str(a)) for a in range(n)}
    return MonoidalCategory(base=base, tensor_obj=tobj, tensor_mor=tmor,
                            unit="0", associator=assoc,
                            left_unitor=lu, right_unitor=ru)


def commutative_monoid_tables(order: int) -> list[dict]:
    """All commutative monoid multiplication tables on {e, a1, ...}, up to iso."""
    els = ["e"] + [f"a{i}" for i in range(1, order)]
    nonunit = els[1:]
    pairs = [(x, y) for i, x in enumerate(nonunit) for y in nonunit[i:]]
    found = []
    seen = set()
    for pick in itertools.product(els, repeat=len(pairs)):
        table = {}
        for x in els:
            table[("e", x)] = x
            table[(x, "e")] = x
        for (x, y), v in zip(pairs, pick):
            table[(x, y)] = v
            table[(y, x)] = v
        if any(table[(table[(x, y)], z)] != table[(x, table[(y, z)])]
               for x in els for y in els for z in els):
            continue
        key = _monoid_iso_key(els, table)
        if key in seen:
            continue
        seen.add(key)
        found.append(dict(table))
    return found


def _monoid_iso_key(els: list[str], table: dict) -> tuple:
    best = None
    nonunit = els[1:]
    for perm in itertools.permutations(nonunit):
        rank = {"e": 0}
        rank.update({x: i + 1 for i, x in enumerate(perm)})
        sig = tuple(sorted((rank[x], rank[y], rank[table[(x, y)]])
                           for x in els for y in els))
        if best is None or sig < best:
            best = sig
    return best


def monoid_monoidal(name: str, elements: tuple[str, ...], op, unit: str) -> MonoidalCategory:
    """One-object monoidal category with tensor given by the monoid itself.

    Bifunctoriality needs commutativity, which every fixture satisfies.
    """
    base = monoid_category(name, elements, op, unit)
    tobj = {("*", "*"): "*"}
    tmor = {(f, g): op(f, g) for f in elements for g in elements}
    return MonoidalCategory(base=base, tensor_obj=tobj, tensor_mor=tmor,
                            unit="*", associator={("*", "*", "*"): unit},
                            left_unitor={"*": unit}, right_unitor={"*": unit})


def cyclic_monoidal(k: int) -> MonoidalCategory:
    els = tuple(f"z{i}" for i in range(k))

    def add(g: str, f: str) -> str:
        return f"z{(int(g[1:]) + int(f[1:])) % k}"

    return monoid_monoidal(f"SZ{k}", els, add, "z0")


def all_sigma_m_monoidal(max_order: int = 4) -> list[MonoidalCategory]:
    out = []
    for order in range(1, max_order + 1):
        for i, table in enumerate(commutative_monoid_tables(order)):
            els = sorted({x for (x, _) in table})
            name = f"SM{order}_{i}"
            out.append(monoid_monoidal(
                name, tuple(sorted(els)), lambda g, f, t=table: t[(g, f)], "e"))
    return out


def lax_monotone(M: MonoidalCategory, N: MonoidalCategory,
                 mapping: tuple[int, ...]) -> WMonoidalFunctor:
    """A monotone map between join-semilattice chains with its unique
    comparison constraints, as a lax monoidal functor."""
    A, B = M.base, N.base
    f = monotone_functor(A, B, dict(enumerate(mapping)))
    cons = {}
    for a in range(len(A.objects)):
        for b in range(len(A.objects)):
            x = max(mapping[a], mapping[b])
            y = mapping[max(a, b)]
            cons[(str(a), str(b))] = f"m{x}_{y}"
    unit_c = f"m0_{mapping[0]}"
    return WMonoidalFunctor(variance="l", dom=M, cod=N, functor=f,
                            constraints=cons, unit_constraint=unit_c)


def strict_chain_functor(M: MonoidalCategory, N: MonoidalCategory,
                         mapping: tuple[int, ...]) -> WMonoidalFunctor:
    """A join- and bottom-preserving chain map as a strict monoidal functor."""
    lax = lax_monotone(M, N, mapping)
    return WMonoidalFunctor(variance="s", dom=M, cod=N, functor=lax.functor,
                            constraints=lax.constraints,
                            unit_constraint=lax.unit_constraint)


# ---------------------------------------------------------------------------
# 2-categorical bases


def group_2cat(name: str, elements: tuple[str, ...], op, unit: str,
               ) -> Fin2Category:
    """One-object, locally discrete 2-category from a finite group or monoid."""
    one_src = {e: "*" for e in elements}
    one_tgt = {e: "*" for e in elements}
    one_comp = {(g, f): op(g, f) for g in elements for f in elements}
    two_src = {f"1_{e}": e for e in elements}
    two_tgt = dict(two_src)
    two_id = {e: f"1_{e}" for e in elements}
    vcomp = {(f"1_{e}", f"1_{e}"): f"1_{e}" for e in elements}
    wl = {(h, f"1_{e}"): f"1_{op(h, e)}" for h in elements for e in elements}
    wr = {(f"1_{e}", k): f"1_{op(e, k)}" for e in elements for k in elements}
    return Fin2Category(name=name, objects=("*",),
                        one_src=one_src, one_tgt=one_tgt,
                        one_id={"*": unit}, one_comp=one_comp,
                        two_src=two_src, two_tgt=two_tgt, two_id=two_id,
                        vcomp=vcomp, wl=wl, wr=wr)


def z2_2cat() -> Fin2Category:
    def add(g: str, f: str) -> str:
        return "e" if g == f else "s"
    return group_2cat("Z2", ("e", "s"), add, "e")


def z3_2cat() -> Fin2Category:
    els = ("z0", "z1", "z2")

    def add(g: str, f: str) -> str:
        return f"z{(int(g[1]) + int(f[1])) % 3}"
    return group_2cat("Z3cat", els, add, "z0")


S3_ELEMENTS = ("e", "r", "rr", "s", "rs", "rrs")
# presentation: r^3 = e, s^2 = e, s r = r^2 s
_S3_PERMS = {
    "e": (0, 1, 2), "r": (1, 2, 0), "rr": (2, 0, 1),
    "s": (1, 0, 2), "rs": (0, 2, 1), "rrs": (2, 1, 0),
}


def s3_mult(g: str, f: str) -> str:
    pg, pf = _S3_PERMS[g], _S3_PERMS[f]
    comp = tuple(pg[pf[i]] for i in range(3))
    for name, perm in _S3_PERMS.items():
        if perm == comp:
            return name
    raise AssertionError


def s3_2cat() -> Fin2Category:
    return group_2cat("S3", S3_ELEMENTS, s3_mult, "e")


def parallel_pair_2cat(n_cells: int = 2) -> Fin2Category:
    """Two objects, two parallel 1-cells u, v with n 2-cells u => v."""
    one_src = {"idA": "A", "idB": "B", "u": "A", "v": "A"}
    one_tgt = {"idA": "A", "idB": "B", "u": "B", "v": "B"}
    one_comp = {}
    for f in one_src:
        one_comp[(f"id{one_tgt[f]}", f)] = f
        one_comp[(f, f"id{one_src[f]}")] = f
    two_src = {f"1_{f}": f for f in one_src}
    two_tgt = dict(two_src)
    for i in range(n_cells):
        two_src[f"xi{i}"] = "u"
        two_tgt[f"xi{i}"] = "v"
    two_id = {f: f"1_{f}" for f in one_src}
    vcomp = {}
    for b in two_src:
        for a in two_src:
            if two_src[b] != two_tgt[a]:
                continue
            if a in two_id.values():
                vcomp[(b, a)] = b
            elif b in two_id.values():
                vcomp[(b, a)] = a
    wl, wr = {}, {}
    for a in two_src:
        f = two_src[a]
        x, y = one_src[f], one_tgt[f]
        for h in one_src:
            if one_src[h] == y:
                wl[(h, a)] = a if not a.startswith("1_") else two_id[one_comp[(h, f)]]
        for k in one_src:
            if one_tgt[k] == x:
                wr[(a, k)] = a if not a.startswith("1_") else two_id[one_comp[(f, k)]]
    return Fin2Category(name=f"pair{n_cells}", objects=("A", "B"),
                        one_src=one_src, one_tgt=one_tgt,
                        one_id={"A": "idA", "B": "idB"}, one_comp=one_comp,
                        two_src=two_src, two_tgt=two_tgt, two_id=two_id,
                        vcomp=vcomp, wl=wl, wr=wr)


def iso_pair_fcategory() -> FCategory:
    """Two strictly isomorphic objects; the backwards 1-cell is loose.

    A minimal F-category with genuinely loose content that still admits
    all flavours of arrow limits.
    """
    one_src = {"idX": "X", "idY": "Y", "u": "X", "v": "Y"}
    one_tgt = {"idX": "X", "idY": "Y", "u": "Y", "v": "X"}
    one_comp = {
        ("idX", "idX"): "idX", ("idY", "idY"): "idY",
        ("idY", "u"): "u", ("u", "idX"): "u",
        ("idX", "v"): "v", ("v", "idY"): "v",
        ("v", "u"): "idX", ("u", "v"): "idY",
    }
    two_src = {f"1_{f}": f for f in one_src}
    two_id = {f: f"1_{f}" for f in one_src}
    vcomp = {(f"1_{f}", f"1_{f}"): f"1_{f}" for f in one_src}
    wl, wr = {}, {}
    for f in one_src:
        a = f"1_{f}"
        x, y = one_src[f], one_tgt[f]
        for h in one_src:
            if one_src[h] == y:
                wl[(h, a)] = f"1_{one_comp[(h, f)]}"
        for k in one_src:
            if one_tgt[k] == x:
                wr[(a, k)] = f"1_{one_comp[(f, k)]}"
    amb = Fin2Category(name="isopair", objects=("X", "Y"),
                       one_src=one_src, one_tgt=one_tgt,
                       one_id={"X": "idX", "Y": "idY"}, one_comp=one_comp,
                       two_src=two_src, two_tgt=dict(two_src), two_id=two_id,
                       vcomp=vcomp, wl=wl, wr=wr)
    return FCategory(ambient=amb, tight=frozenset({"idX", "idY", "u"}))
