"""The matrix (biproduct) completion of a one-object or many-object base.

Objects are finite indexed families of base objects; morphisms are matrices
of base morphisms composed by sup-of-composites.  The dagger, order, monoidal,
compact and biproduct structure all lift blockwise from the base.

Three bases are provided:
  * QuantaleBase over the boolean quantale -> the category of relations,
  * QuantaleBase over any finite quantale -> quantale-valued relations,
  * FdOSBase (operator subspaces between finite dimensions) -> quantum relations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .core import Instance, StructureError
from .exact import (
    ExactMatrix,
    OperatorSubspace,
    commutation_matrix,
    full_subspace,
    kronecker,
    span_of,
    subspace_adjoint,
    subspace_join,
    subspace_leq,
    subspace_meet,
    subspace_product,
    zero_subspace,
)
from .finrel import BoolRelation, FiniteSet
from .quantale import FiniteQuantale, VRelation, boolean_quantale


class MatrError(ValueError):
    pass


class BaseQuantaloid:
    """The structure a base must provide for the matrix completion.

    Base objects are hashable values; base morphisms are values with a
    canonical equality.  Sups, bottom and top take explicit source/target
    objects since base morphisms need not know their own type.
    """

    name = "base"

    def compose(self, g: Any, f: Any) -> Any:
        raise NotImplementedError

    def identity(self, b: Any) -> Any:
        raise NotImplementedError

    def dagger(self, m: Any) -> Any:
        raise NotImplementedError

    def sup(self, ms: Sequence[Any], src: Any, tgt: Any) -> Any:
        raise NotImplementedError

    def leq(self, m1: Any, m2: Any) -> bool:
        raise NotImplementedError

    def meet(self, m1: Any, m2: Any) -> Any:
        raise NotImplementedError

    def bottom(self, src: Any, tgt: Any) -> Any:
        return self.sup([], src, tgt)

    def top(self, src: Any, tgt: Any) -> Any:
        raise NotImplementedError

    def is_bottom(self, m: Any, src: Any, tgt: Any) -> bool:
        return m == self.bottom(src, tgt)

    # monoidal / compact
    def tensor_obj(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def tensor_mor(self, m: Any, n: Any) -> Any:
        raise NotImplementedError

    def unit_obj(self) -> Any:
        raise NotImplementedError

    def assoc_cell(self, a: Any, b: Any, c: Any) -> Any:
        raise NotImplementedError

    def lunit_cell(self, a: Any) -> Any:
        raise NotImplementedError

    def runit_cell(self, a: Any) -> Any:
        raise NotImplementedError

    def symm_cell(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def dual_obj(self, a: Any) -> Any:
        raise NotImplementedError

    def eta_cell(self, a: Any) -> Any:
        raise NotImplementedError

    def epsilon_cell(self, a: Any) -> Any:
        raise NotImplementedError

    def enum_hom(self, src: Any, tgt: Any):
        return None


class QuantaleBase(BaseQuantaloid):
    """One-object base whose endomorphisms form a commutative finite quantale."""

    def __init__(self, quantale: FiniteQuantale):
        self.quantale = quantale
        self.name = f"quantale-base({len(quantale.elements)})"

    def __eq__(self, other):
        return isinstance(other, QuantaleBase) and self.quantale == other.quantale

    def __hash__(self):
        return hash(("QuantaleBase", self.quantale))

    def compose(self, g, f):
        return self.quantale.mul(g, f)

    def identity(self, b):
        return self.quantale.unit

    def dagger(self, m):
        return m

    def sup(self, ms, src, tgt):
        return self.quantale.sup(ms)

    def leq(self, m1, m2):
        return self.quantale.leq(m1, m2)

    def meet(self, m1, m2):
        return self.quantale.meet(m1, m2)

    def top(self, src, tgt):
        return self.quantale.top

    def tensor_obj(self, a, b):
        return "*"

    def tensor_mor(self, m, n):
        return self.quantale.mul(m, n)

    def unit_obj(self):
        return "*"

    def assoc_cell(self, a, b, c):
        return self.quantale.unit

    def lunit_cell(self, a):
        return self.quantale.unit

    def runit_cell(self, a):
        return self.quantale.unit

    def symm_cell(self, a, b):
        return self.quantale.unit

    def dual_obj(self, a):
        return "*"

    def eta_cell(self, a):
        return self.quantale.unit

    def epsilon_cell(self, a):
        return self.quantale.unit

    def enum_hom(self, src, tgt):
        return list(self.quantale.elements)


def _vec_identity_column(n: int) -> ExactMatrix:
    vec = ExactMatrix.identity(n).vectorize()
    return ExactMatrix.from_vector(vec, n * n, 1)


class FdOSBase(BaseQuantaloid):
    """Base for quantum relations: objects are positive dimensions, morphisms
    are operator subspaces between the corresponding matrix spaces."""

    name = "fdos-base"

    def __eq__(self, other):
        return isinstance(other, FdOSBase)

    def __hash__(self):
        return hash("FdOSBase")

    def compose(self, g: OperatorSubspace, f: OperatorSubspace) -> OperatorSubspace:
        return subspace_product(g, f)

    def identity(self, b: int) -> OperatorSubspace:
        return span_of(ExactMatrix.identity(b))

    def dagger(self, m: OperatorSubspace) -> OperatorSubspace:
        return subspace_adjoint(m)

    def sup(self, ms, src, tgt):
        out = zero_subspace(src, tgt)
        for m in ms:
            out = subspace_join(out, m)
        return out

    def leq(self, m1, m2):
        return subspace_leq(m1, m2)

    def meet(self, m1, m2):
        return subspace_meet(m1, m2)

    def top(self, src, tgt):
        return full_subspace(src, tgt)

    def is_bottom(self, m, src, tgt):
        return m.is_zero()

    def tensor_obj(self, a, b):
        return a * b

    def tensor_mor(self, m, n):
        return kronecker(m, n)

    def unit_obj(self):
        return 1

    def assoc_cell(self, a, b, c):
        return self.identity(a * b * c)

    def lunit_cell(self, a):
        return self.identity(a)

    def runit_cell(self, a):
        return self.identity(a)

    def symm_cell(self, a, b):
        return span_of(commutation_matrix(a, b))

    def dual_obj(self, a):
        return a

    def eta_cell(self, a):
        return span_of(_vec_identity_column(a))

    def epsilon_cell(self, a):
        return span_of(_vec_identity_column(a).adjoint())

    def enum_hom(self, src, tgt):
        if src == 1 and tgt == 1:
            return [zero_subspace(1, 1), full_subspace(1, 1)]
        return None


@dataclass(frozen=True)
class MatrObject:
    """A finite indexed family of base objects."""

    base: BaseQuantaloid
    components: tuple  # tuple of (label, base object)

    def __post_init__(self):
        labels = [lab for lab, _ in self.components]
        if len(set(labels)) != len(labels):
            raise MatrError(f"duplicate component labels: {labels}")

    @property
    def labels(self) -> tuple:
        return tuple(lab for lab, _ in self.components)

    def base_obj(self, label) -> Any:
        for lab, b in self.components:
            if lab == label:
                return b
        raise MatrError(f"no component labelled {label!r}")

    def __repr__(self):
        parts = ", ".join(f"{lab!r}: {b!r}" for lab, b in self.components)
        return f"MatrObject({parts})"


@dataclass(frozen=True)
class MatrMorphism:
    """A matrix of base morphisms; bottom blocks are omitted."""

    source: MatrObject
    target: MatrObject
    blocks: tuple  # sorted tuple of ((source label, target label), base morphism)

    def block_map(self) -> dict:
        return dict(self.blocks)

    def block(self, src_label, tgt_label):
        for key, m in self.blocks:
            if key == (src_label, tgt_label):
                return m
        return None

    def __repr__(self):
        return (
            f"MatrMorphism({self.source.labels} -> {self.target.labels}, "
            f"{len(self.blocks)} blocks)"
        )


class MatrInstance(Instance):
    """The dagger compact quantaloid of matrices over a base."""

    has_monoidal = True
    has_compact = True
    has_biproducts = True

    def __init__(self, base: BaseQuantaloid, name: str = "matr"):
        self.base = base
        self.name = name

    # -- object and morphism builders ----------------------------------------
    def obj(self, components: Iterable[tuple]) -> MatrObject:
        return MatrObject(self.base, tuple(components))

    def mor(self, src: MatrObject, tgt: MatrObject, blocks: dict) -> MatrMorphism:
        kept = []
        src_labels = set(src.labels)
        tgt_labels = set(tgt.labels)
        for (a, b), m in blocks.items():
            if a not in src_labels or b not in tgt_labels:
                raise MatrError(f"block key {(a, b)!r} outside {src.labels} x {tgt.labels}")
            if not self.base.is_bottom(m, src.base_obj(a), tgt.base_obj(b)):
                kept.append(((a, b), m))
        kept.sort(key=lambda item: (repr(item[0][0]), repr(item[0][1])))
        return MatrMorphism(src, tgt, tuple(kept))

    # -- quantaloid structure ----------------------------------------
    def source(self, f: MatrMorphism) -> MatrObject:
        return f.source

    def target(self, f: MatrMorphism) -> MatrObject:
        return f.target

    def identity(self, x: MatrObject) -> MatrMorphism:
        return self.mor(x, x, {(lab, lab): self.base.identity(b) for lab, b in x.components})

    def compose(self, g: MatrMorphism, f: MatrMorphism) -> MatrMorphism:
        if f.target != g.source:
            raise MatrError(f"cannot compose: middle objects differ")
        contributions: dict = {}
        gmap: dict = {}
        for (b, c), m in g.blocks:
            gmap.setdefault(b, []).append((c, m))
        for (a, b), m in f.blocks:
            for c, n in gmap.get(b, []):
                contributions.setdefault((a, c), []).append(self.base.compose(n, m))
        blocks = {}
        for (a, c), ms in contributions.items():
            blocks[(a, c)] = self.base.sup(ms, f.source.base_obj(a), g.target.base_obj(c))
        return self.mor(f.source, g.target, blocks)

    def dagger(self, f: MatrMorphism) -> MatrMorphism:
        blocks = {(b, a): self.base.dagger(m) for (a, b), m in f.blocks}
        return self.mor(f.target, f.source, blocks)

    def sup(self, fs: Sequence[MatrMorphism], src: MatrObject, tgt: MatrObject) -> MatrMorphism:
        gathered: dict = {}
        for f in fs:
            if f.source != src or f.target != tgt:
                raise MatrError("sup of morphisms with different types")
            for key, m in f.blocks:
                gathered.setdefault(key, []).append(m)
        blocks = {
            (a, b): self.base.sup(ms, src.base_obj(a), tgt.base_obj(b))
            for (a, b), ms in gathered.items()
        }
        return self.mor(src, tgt, blocks)

    def meet2(self, f: MatrMorphism, g: MatrMorphism) -> MatrMorphism:
        if f.source != g.source or f.target != g.target:
            raise MatrError("meet of morphisms with different types")
        gmap = g.block_map()
        blocks = {}
        for key, m in f.blocks:
            if key in gmap:
                blocks[key] = self.base.meet(m, gmap[key])
        return self.mor(f.source, f.target, blocks)

    def leq(self, f: MatrMorphism, g: MatrMorphism) -> bool:
        if f.source != g.source or f.target != g.target:
            raise MatrError("order compares morphisms of the same type")
        gmap = g.block_map()
        for (a, b), m in f.blocks:
            other = gmap.get((a, b))
            if other is None:
                other = self.base.bottom(f.source.base_obj(a), f.target.base_obj(b))
            if not self.base.leq(m, other):
                return False
        return True

    def top(self, src: MatrObject, tgt: MatrObject) -> MatrMorphism:
        blocks = {
            (a, b): self.base.top(oa, ob)
            for a, oa in src.components
            for b, ob in tgt.components
        }
        return self.mor(src, tgt, blocks)

    # -- monoidal structure ----------------------------------------
    def tensor_obj(self, x: MatrObject, y: MatrObject) -> MatrObject:
        comps = [
            ((la, lb), self.base.tensor_obj(oa, ob))
            for la, oa in x.components
            for lb, ob in y.components
        ]
        return self.obj(comps)

    def tensor_mor(self, f: MatrMorphism, g: MatrMorphism) -> MatrMorphism:
        src = self.tensor_obj(f.source, g.source)
        tgt = self.tensor_obj(f.target, g.target)
        blocks = {}
        for (a, c), m in f.blocks:
            for (b, d), n in g.blocks:
                blocks[((a, b), (c, d))] = self.base.tensor_mor(m, n)
        return self.mor(src, tgt, blocks)

    def unit_obj(self) -> MatrObject:
        return self.obj([("*", self.base.unit_obj())])

    def assoc(self, x: MatrObject, y: MatrObject, z: MatrObject) -> MatrMorphism:
        src = self.tensor_obj(self.tensor_obj(x, y), z)
        tgt = self.tensor_obj(x, self.tensor_obj(y, z))
        blocks = {}
        for a, oa in x.components:
            for b, ob in y.components:
                for c, oc in z.components:
                    blocks[(((a, b), c), (a, (b, c)))] = self.base.assoc_cell(oa, ob, oc)
        return self.mor(src, tgt, blocks)

    def lunit(self, x: MatrObject) -> MatrMorphism:
        src = self.tensor_obj(self.unit_obj(), x)
        blocks = {(("*", a), a): self.base.lunit_cell(oa) for a, oa in x.components}
        return self.mor(src, x, blocks)

    def runit(self, x: MatrObject) -> MatrMorphism:
        src = self.tensor_obj(x, self.unit_obj())
        blocks = {((a, "*"), a): self.base.runit_cell(oa) for a, oa in x.components}
        return self.mor(src, x, blocks)

    def symm(self, x: MatrObject, y: MatrObject) -> MatrMorphism:
        src = self.tensor_obj(x, y)
        tgt = self.tensor_obj(y, x)
        blocks = {
            ((a, b), (b, a)): self.base.symm_cell(oa, ob)
            for a, oa in x.components
            for b, ob in y.components
        }
        return self.mor(src, tgt, blocks)

    # -- compact structure ----------------------------------------
    def dual_obj(self, x: MatrObject) -> MatrObject:
        return self.obj([(a, self.base.dual_obj(oa)) for a, oa in x.components])

    def eta(self, x: MatrObject) -> MatrMorphism:
        tgt = self.tensor_obj(self.dual_obj(x), x)
        blocks = {("*", (a, a)): self.base.eta_cell(oa) for a, oa in x.components}
        return self.mor(self.unit_obj(), tgt, blocks)

    def epsilon(self, x: MatrObject) -> MatrMorphism:
        src = self.tensor_obj(x, self.dual_obj(x))
        blocks = {((a, a), "*"): self.base.epsilon_cell(oa) for a, oa in x.components}
        return self.mor(src, self.unit_obj(), blocks)

    # -- biproducts ----------------------------------------
    def biproduct(self, objs: Sequence[MatrObject]) -> tuple[MatrObject, list, list]:
        comps = []
        for k, o in enumerate(objs):
            comps.extend(((k, lab), b) for lab, b in o.components)
        total = self.obj(comps)
        injections = []
        for k, o in enumerate(objs):
            blocks = {(lab, (k, lab)): self.base.identity(b) for lab, b in o.components}
            injections.append(self.mor(o, total, blocks))
        projections = [self.dagger(i) for i in injections]
        return total, injections, projections

    # -- enumeration ----------------------------------------
    def enum_hom(self, src: MatrObject, tgt: MatrObject):
        keys = [
            ((a, b), oa, ob) for a, oa in src.components for b, ob in tgt.components
        ]
        choices = []
        for _, oa, ob in keys:
            hom = self.base.enum_hom(oa, ob)
            if hom is None:
                return None
            choices.append(hom)
        out = []
        for combo in itertools.product(*choices):
            blocks = {key: m for (key, _, _), m in zip(keys, combo)}
            out.append(self.mor(src, tgt, blocks))
        return out


# -- the three concrete instances -----------------------------------------------

def rel_instance() -> MatrInstance:
    return MatrInstance(QuantaleBase(boolean_quantale()), name="rel")


def vrel_instance(quantale: FiniteQuantale) -> MatrInstance:
    return MatrInstance(QuantaleBase(quantale), name="vrel")


def qrel_instance() -> MatrInstance:
    return MatrInstance(FdOSBase(), name="qrel")


# -- conversions between the direct models and the matrix completion --------------

def set_to_object(inst: MatrInstance, a: FiniteSet) -> MatrObject:
    """A finite set as a family of copies of the base unit object."""
    unit = inst.base.unit_obj()
    return inst.obj([(lab, unit) for lab in a.labels])


def relation_to_matr(inst: MatrInstance, r: BoolRelation) -> MatrMorphism:
    if not isinstance(inst.base, QuantaleBase):
        raise MatrError("boolean relations convert over a quantale base")
    q = inst.base.quantale
    src = set_to_object(inst, r.source)
    tgt = set_to_object(inst, r.target)
    blocks = {(a, b): q.unit for (a, b) in r.pairs}
    return inst.mor(src, tgt, blocks)


def matr_to_relation(f: MatrMorphism) -> BoolRelation:
    src = FiniteSet(f.source.labels)
    tgt = FiniteSet(f.target.labels)
    return BoolRelation(src, tgt, frozenset(key for key, _ in f.blocks))


def vrelation_to_matr(inst: MatrInstance, r: VRelation) -> MatrMorphism:
    if not isinstance(inst.base, QuantaleBase) or inst.base.quantale != r.quantale:
        raise MatrError("the instance base must carry the relation's quantale")
    src = set_to_object(inst, r.source)
    tgt = set_to_object(inst, r.target)
    blocks = {(a, b): r.at(a, b) for a in r.source.labels for b in r.target.labels}
    return inst.mor(src, tgt, blocks)


def matr_to_vrelation(inst: MatrInstance, f: MatrMorphism) -> VRelation:
    q = inst.base.quantale
    src = FiniteSet(f.source.labels)
    tgt = FiniteSet(f.target.labels)
    return VRelation(q, src, tgt, {key: m for key, m in f.blocks})
