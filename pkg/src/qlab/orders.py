"""Internal order structure: preorders on objects, monotone maps and
monotone relations, the adjoint diamond operations, and the structure the
category of preordered objects inherits (tensor, biproducts, compacts, the
ordered truth-value object, and the downset correspondence).

Everything is generic over an instance with the needed structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .calculus import BiproductData, biproduct_data, omega_data, tuple_into
from .core import Check, Instance, StructureError, star_of


class OrderError(ValueError):
    pass


@dataclass(frozen=True)
class PreorderedObject:
    obj: Any
    order: Any  # an endomorphism, reflexive and transitive

    @property
    def converse_name(self):
        return "dagger of the order"


def preordered(inst: Instance, obj: Any, order: Any) -> PreorderedObject:
    if inst.source(order) != obj or inst.target(order) != obj:
        raise OrderError("the order must be an endomorphism of the object")
    one = inst.identity(obj)
    if not inst.leq(one, order):
        raise OrderError("the order is not reflexive")
    if not inst.leq(inst.compose(order, order), order):
        raise OrderError("the order is not transitive")
    return PreorderedObject(obj, order)


def discrete(inst: Instance, obj: Any) -> PreorderedObject:
    return PreorderedObject(obj, inst.identity(obj))


def opposite(inst: Instance, p: PreorderedObject) -> PreorderedObject:
    return PreorderedObject(p.obj, inst.dagger(p.order))


def converse(inst: Instance, p: PreorderedObject) -> Any:
    """The converse order, written >= below."""
    return inst.dagger(p.order)


# -- monotone maps -----------------------------------------------------------

def monotone_map_conditions(
    inst: Instance, p: PreorderedObject, q: PreorderedObject, f: Any
) -> tuple[bool, bool, bool]:
    """Three equivalent ways to say a map f : X -> Y is monotone."""
    fd = inst.dagger(f)
    c1 = inst.leq(inst.compose(f, p.order), inst.compose(q.order, f))
    c2 = inst.leq(inst.compose(inst.compose(f, p.order), fd), q.order)
    c3 = inst.leq(p.order, inst.compose(fd, inst.compose(q.order, f)))
    return c1, c2, c3


def is_monotone_map(
    inst: Instance, p: PreorderedObject, q: PreorderedObject, f: Any
) -> bool:
    return monotone_map_conditions(inst, p, q, f)[0]


# -- monotone relations and their category ---------------------------------------

def is_monotone_relation(
    inst: Instance, p: PreorderedObject, q: PreorderedObject, v: Any
) -> bool:
    """v : X -> Y is monotone when absorbing the converse orders fixes it."""
    left = inst.compose(converse(inst, q), v)
    right = inst.compose(v, converse(inst, p))
    return inst.equal(left, v) and inst.equal(right, v)


def monotone_saturate(
    inst: Instance, p: PreorderedObject, q: PreorderedObject, v: Any
) -> Any:
    """The least monotone relation above v."""
    return inst.compose(converse(inst, q), inst.compose(v, converse(inst, p)))


def monrel_identity(inst: Instance, p: PreorderedObject) -> Any:
    """The identity of the category of monotone relations: the converse order."""
    return converse(inst, p)


def diamond_lower(inst: Instance, q: PreorderedObject, r: Any) -> Any:
    """r with codomain preordered by q, saturated downward: >=_Y o r."""
    return inst.compose(converse(inst, q), r)


def diamond_upper(inst: Instance, q: PreorderedObject, r: Any) -> Any:
    """The upper companion Y -> X: the dagger composed with the converse order."""
    return inst.compose(inst.dagger(r), converse(inst, q))


def diamond_adjunction_check(
    inst: Instance, p: PreorderedObject, q: PreorderedObject, f: Any
) -> bool:
    """For a monotone map f, the lower and upper companions are adjoint in
    the category of monotone relations."""
    lo = diamond_lower(inst, q, f)
    up = diamond_upper(inst, q, f)
    idp = monrel_identity(inst, p)
    idq = monrel_identity(inst, q)
    return inst.leq(inst.compose(lo, up), idq) and inst.leq(idp, inst.compose(up, lo))


# -- inherited structure ---------------------------------------------------------

def preorder_tensor(
    inst: Instance, p: PreorderedObject, q: PreorderedObject
) -> PreorderedObject:
    return preordered(
        inst, inst.tensor_obj(p.obj, q.obj), inst.tensor_mor(p.order, q.order)
    )


@dataclass(frozen=True)
class MonRelBiproduct:
    ordered: PreorderedObject
    data: BiproductData
    injections: tuple
    projections: tuple


def monrel_biproduct(inst: Instance, ps: Sequence[PreorderedObject]) -> MonRelBiproduct:
    """Biproducts of preordered objects: the order is the direct sum of the
    orders, the structural maps are the plain ones saturated by the converse
    orders."""
    data = biproduct_data(inst, [p.obj for p in ps])
    order_parts = [
        inst.compose(i, inst.compose(p.order, inst.dagger(i)))
        for i, p in zip(data.injections, ps)
    ]
    order = inst.sup(order_parts, data.total, data.total)
    total = preordered(inst, data.total, order)
    ge_total = converse(inst, total)
    injections = tuple(inst.compose(ge_total, i) for i in data.injections)
    projections = tuple(
        inst.compose(converse(inst, p), pr) for p, pr in zip(ps, data.projections)
    )
    return MonRelBiproduct(total, data, injections, projections)


@dataclass(frozen=True)
class MonRelCompact:
    dual: PreorderedObject
    eta: Any
    epsilon: Any


def monrel_compact(inst: Instance, p: PreorderedObject) -> MonRelCompact:
    """Compact structure on a preordered object: the dual carries the
    transposed order; the unit and counit absorb the converse orders."""
    x = p.obj
    xd = inst.dual_obj(x)
    ge = converse(inst, p)
    ge_star = star_of(inst, ge)
    dual = preordered(inst, xd, star_of(inst, p.order))
    eta = inst.compose(inst.tensor_mor(ge_star, ge), inst.eta(x))
    epsilon = inst.compose(inst.epsilon(x), inst.tensor_mor(ge, ge_star))
    return MonRelCompact(dual, eta, epsilon)


# -- the ordered truth-value object ------------------------------------------------

@dataclass(frozen=True)
class OmegaOrder:
    data: BiproductData
    ordered: PreorderedObject


def omega_order(inst: Instance) -> OmegaOrder:
    """I (+) I ordered with 'false' below 'true'."""
    data = omega_data(inst)
    p_false, p_true = data.projections
    i_false, i_true = data.injections
    bump = inst.compose(i_true, p_false)
    order = inst.join2(inst.identity(data.total), bump)
    return OmegaOrder(data, preordered(inst, data.total, order))


def omega_eval_identities(inst: Instance, om: OmegaOrder) -> list[tuple[str, bool]]:
    """The projection identities that make the ordered truth values tick."""
    p_false, p_true = om.data.projections
    unit = inst.unit_obj()
    le = om.ordered.order
    ge = inst.dagger(le)
    top = inst.top(om.data.total, unit)
    return [
        ("p_false o le = p_false", inst.equal(inst.compose(p_false, le), p_false)),
        ("p_true o le = top", inst.equal(inst.compose(p_true, le), top)),
        ("p_true o ge = p_true", inst.equal(inst.compose(p_true, ge), p_true)),
        ("p_false o ge = top", inst.equal(inst.compose(p_false, ge), top)),
    ]


def monotone_map_to_downset(inst: Instance, om: OmegaOrder, f: Any) -> Any:
    """A monotone map X -> Omega becomes a relation X -> I by projecting on
    'true'; the result absorbs the converse order of X."""
    return inst.compose(om.data.projections[1], f)


def downset_to_monotone_map(
    inst: Instance,
    om: OmegaOrder,
    p: PreorderedObject,
    r: Any,
    complement: Callable[[Any], Any],
) -> Any:
    """The inverse correspondence: pair the complement with the relation."""
    return tuple_into(inst, om.data, [complement(r), r])


def is_downset_relation(inst: Instance, p: PreorderedObject, r: Any) -> bool:
    """r : X -> I stands for a downset when it absorbs the converse order."""
    return inst.equal(inst.compose(r, converse(inst, p)), r)
