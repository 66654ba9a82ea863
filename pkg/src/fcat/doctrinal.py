"""Doctrinal lifts: transporting monoidal structure across an adjunction.

Given a strict or strong monoidal functor with an adjoint, the adjoint
acquires a canonical lax (or colax, or strong) structure making the unit
and counit monoidal.  The lift is computed by the explicit composite
through the adjunction; uniqueness is certified separately by exhaustive
enumeration of all compatible constraint families.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .caps import guard
from .report import Report, VarianceError, require
from .fincat import (
    CatAdjunction,
    Functor,
    opposite_adjunction,
    opposite_functor,
    validate_adjunction,
)
from .moncat import (
    MonoidalCategory,
    MonoidalTransformation,
    WMonoidalFunctor,
    coerce_variance,
    compose_monoidal_functors,
    identity_monoidal_functor,
    op_dualize,
    oriented_constraints,
    validate_monoidal_functor,
    validate_monoidal_transformation,
)


@dataclass
class DoctrinalLift:
    variance: str
    source_functor: WMonoidalFunctor
    adjunction: CatAdjunction
    lifted: WMonoidalFunctor
    lifted_unit: MonoidalTransformation
    lifted_counit: MonoidalTransformation

    def certify(self) -> Report:
        rep = Report(f"doctrinal_lift:{self.lifted.name}:{self.variance}")
        rep.merge(validate_monoidal_functor(self.lifted), "lifted.")
        rep.merge(validate_monoidal_transformation(self.lifted_unit), "unit.")
        rep.merge(validate_monoidal_transformation(self.lifted_counit), "counit.")
        # forgetting the monoidal data must recover the input adjunction
        adj = self.adjunction
        if self.variance == "c":
            plain = (self.lifted.functor.table(), self.source_functor.functor.table())
            given = (adj.left.table(), adj.right.table())
        else:
            plain = (self.source_functor.functor.table(), self.lifted.functor.table())
            given = (adj.left.table(), adj.right.table())
        if plain != given:
            rep.fail("lift.underlying", "law",
                     "underlying data does not recover the input adjunction", ())
        return rep


def _lift_certificates(variance: str, F: WMonoidalFunctor, G: WMonoidalFunctor,
                       adj: CatAdjunction) -> tuple[MonoidalTransformation, MonoidalTransformation]:
    """Unit and counit as monoidal transformations for the lifted adjunction."""
    if variance == "c":
        # adjunction (eps, G -| F, eta) with the colax G on the left
        view = "c"
        left, right = G, coerce_variance(F, view)
    else:
        view = variance
        left, right = coerce_variance(F, view), G
    dom_id = identity_monoidal_functor(left.dom, view)
    cod_id = identity_monoidal_functor(left.cod, view)
    unit = MonoidalTransformation(
        source=dom_id, target=compose_monoidal_functors(right, left), nat=adj.unit)
    counit = MonoidalTransformation(
        source=compose_monoidal_functors(left, right), target=cod_id, nat=adj.counit)
    return unit, counit


def lift_adjunction(variance: str, F: WMonoidalFunctor,
                    adj: CatAdjunction) -> DoctrinalLift:
    """Compute the canonical lifted structure on the other adjoint.

    variance l: F (strict or strong) is the left adjoint; the right
    adjoint gets the lax structure whose binary constraint at (x, y) is
    the composite of the unit at Gx⊗Gy, the image of the inverted
    constraint of F, and G applied to the tensor of two counits.
    variance p: same formula on an adjoint equivalence, with the lift
    certified invertible.  variance c is the op-dual computation.
    """
    if variance not in ("l", "p", "c"):
        raise VarianceError(f"doctrinal lifts exist for l, p, c; got {variance}")
    if F.variance not in ("s", "p"):
        raise VarianceError(
            f"doctrinal orientation error: a {F.variance}-structured functor "
            "cannot be lifted along; supply a strict or strong one")
    require(validate_monoidal_functor(F))
    require(validate_adjunction(adj))

    if variance == "c":
        dual = lift_adjunction("l", op_dualize(F), opposite_adjunction(adj))
        lifted = op_dualize(dual.lifted)
        unit = op_dualize(dual.lifted_counit)
        counit = op_dualize(dual.lifted_unit)
        out = DoctrinalLift(variance="c", source_functor=F, adjunction=adj,
                            lifted=lifted, lifted_unit=unit, lifted_counit=counit)
        require(out.certify())
        return out

    if not F.functor.same_as(adj.left):
        raise VarianceError(
            "doctrinal orientation error: the structured functor must be "
            "the left adjoint for an l- or p-lift")
    if variance == "p":
        flags = validate_adjunction(adj).flags
        if not flags["is_adjoint_equivalence"]:
            raise VarianceError(
                "a p-lift needs an adjoint equivalence: both the unit and "
                "the counit must be invertible")

    A, B = F.dom, F.cod            # F : A -> B monoidal categories
    G = adj.right
    cod = A.base                   # constraints of the lift live in A
    f_inv, f0_inv = oriented_constraints(F, lax=False)  # F(a⊗b) -> Fa⊗Fb

    cons = {}
    for x in B.base.objects:
        for y in B.base.objects:
            gx, gy = G.on_obj(x), G.on_obj(y)
            start = adj.unit.at(A.tobj(gx, gy))
            middle = G.on_mor(f_inv[(gx, gy)])
            finish = G.on_mor(B.tmor(adj.counit.at(x), adj.counit.at(y)))
            cons[(x, y)] = cod.compose(finish, cod.compose(middle, start))
    unit_c = cod.compose(G.on_mor(f0_inv), adj.unit.at(A.unit))

    lifted = WMonoidalFunctor(variance=variance, dom=B, cod=A, functor=G,
                              constraints=cons, unit_constraint=unit_c)
    unit, counit = _lift_certificates(variance, F, lifted, adj)
    out = DoctrinalLift(variance=variance, source_functor=F, adjunction=adj,
                        lifted=lifted, lifted_unit=unit, lifted_counit=counit)
    require(out.certify())
    return out


def enumerate_compatible_structures(variance: str, G: Functor, adj: CatAdjunction,
                                    F: WMonoidalFunctor,
                                    cap: int | None = None) -> list[WMonoidalFunctor]:
    """All constraint families on G that lift the adjunction.

    A candidate passes when it validates at the requested variance and the
    unit and counit of the adjunction are monoidal transformations for the
    induced composite structures.  On well-oriented input the list is a
    singleton; on incoherent input it is reported as-is with no
    uniqueness claim.
    """
    if variance not in ("l", "p", "c"):
        raise VarianceError(f"unsupported variance {variance}")
    require(validate_adjunction(adj))

    if variance == "c":
        # one enumeration path: solve the dual lax problem and dualize back
        duals = enumerate_compatible_structures(
            "l", opposite_functor(G), opposite_adjunction(adj), op_dualize(F), cap)
        return [op_dualize(D) for D in duals]

    A, B = F.dom, F.cod
    cod = A.base
    pairs = [(x, y) for x in B.base.objects for y in B.base.objects]
    choices = []
    for (x, y) in pairs:
        gx, gy = G.on_obj(x), G.on_obj(y)
        choices.append(cod.hom(A.tobj(gx, gy), G.on_obj(B.tobj(x, y))))
    unit_choices = cod.hom(A.unit, G.on_obj(B.unit))
    size = len(unit_choices)
    for ch in choices:
        size *= len(ch)
    guard(size, cap, "doctrinal constraint families")

    view = "l" if variance == "l" else "p"
    left = coerce_variance(F, view)
    dom_id = identity_monoidal_functor(B, view)
    cod_id = identity_monoidal_functor(A, view)
    out = []
    for unit_c in unit_choices:
        for pick in itertools.product(*choices):
            cand = WMonoidalFunctor(
                variance=variance, dom=B, cod=A, functor=G,
                constraints=dict(zip(pairs, pick)), unit_constraint=unit_c)
            if not validate_monoidal_functor(cand).ok:
                continue
            unit = MonoidalTransformation(
                source=dom_id, target=compose_monoidal_functors(cand, left),
                nat=adj.unit)
            counit = MonoidalTransformation(
                source=compose_monoidal_functors(left, cand), target=cod_id,
                nat=adj.counit)
            if (validate_monoidal_transformation(unit).ok
                    and validate_monoidal_transformation(counit).ok):
                out.append(cand)
    return out
