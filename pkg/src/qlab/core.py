"""The contract every concrete category instance implements, plus the
instance-generic morphism predicates and the compact-closed calculus.

An instance supplies ordered homsets with sups, composition, dagger, and
optionally monoidal / compact / biproduct structure.  Everything here is
written against that contract only, so the same predicate code runs on
boolean relations, quantale-valued relations and quantum relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence


class StructureError(ValueError):
    """An operation needs structure (monoidal, compact, ...) the instance lacks."""


class Instance:
    """Abstract dagger quantaloid instance.

    Morphisms are opaque values; the instance knows how to read off their
    source and target.  Optional structure is flagged by the has_* attributes.
    """

    name: str = "instance"
    has_monoidal = False
    has_compact = False
    has_biproducts = False

    # -- required ----------------------------------------------------------
    def compose(self, g: Any, f: Any) -> Any:
        raise NotImplementedError

    def identity(self, x: Any) -> Any:
        raise NotImplementedError

    def dagger(self, f: Any) -> Any:
        raise NotImplementedError

    def sup(self, fs: Sequence[Any], src: Any, tgt: Any) -> Any:
        raise NotImplementedError

    def meet2(self, f: Any, g: Any) -> Any:
        raise NotImplementedError

    def top(self, src: Any, tgt: Any) -> Any:
        raise NotImplementedError

    def source(self, f: Any) -> Any:
        raise NotImplementedError

    def target(self, f: Any) -> Any:
        raise NotImplementedError

    # -- derived -----------------------------------------------------------
    def bottom(self, src: Any, tgt: Any) -> Any:
        return self.sup([], src, tgt)

    def join2(self, f: Any, g: Any) -> Any:
        return self.sup([f, g], self.source(f), self.target(f))

    def leq(self, f: Any, g: Any) -> bool:
        return self.equal(self.join2(f, g), g)

    def equal(self, f: Any, g: Any) -> bool:
        return f == g

    # -- optional monoidal ---------------------------------------------------
    def tensor_obj(self, x: Any, y: Any) -> Any:
        raise StructureError(f"{self.name} has no monoidal structure")

    def tensor_mor(self, f: Any, g: Any) -> Any:
        raise StructureError(f"{self.name} has no monoidal structure")

    def unit_obj(self) -> Any:
        raise StructureError(f"{self.name} has no monoidal structure")

    def assoc(self, x: Any, y: Any, z: Any) -> Any:
        raise StructureError(f"{self.name} has no monoidal structure")

    def lunit(self, x: Any) -> Any:
        raise StructureError(f"{self.name} has no monoidal structure")

    def runit(self, x: Any) -> Any:
        raise StructureError(f"{self.name} has no monoidal structure")

    def symm(self, x: Any, y: Any) -> Any:
        raise StructureError(f"{self.name} has no monoidal structure")

    # -- optional compact -------------------------------------------------------
    def dual_obj(self, x: Any) -> Any:
        raise StructureError(f"{self.name} has no compact structure")

    def eta(self, x: Any) -> Any:
        raise StructureError(f"{self.name} has no compact structure")

    def epsilon(self, x: Any) -> Any:
        raise StructureError(f"{self.name} has no compact structure")

    # -- optional biproducts -------------------------------------------------------
    def biproduct(self, objs: Sequence[Any]) -> tuple[Any, list[Any], list[Any]]:
        raise StructureError(f"{self.name} has no biproducts")

    # -- optional enumeration --------------------------------------------------------
    def enum_hom(self, src: Any, tgt: Any):
        """All morphisms src -> tgt, or None when the homset is not enumerable."""
        return None

    def scalars(self):
        return self.enum_hom(self.unit_obj(), self.unit_obj())


@dataclass(frozen=True)
class Check:
    """A decided predicate: truthiness plus a counterexample payload on failure."""

    ok: bool
    law: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def _fail(law: str, *witness: Any) -> Check:
    return Check(False, law, tuple(witness))


OK = Check(True)


# -- morphism predicates ------------------------------------------------------------

def is_map(inst: Instance, f: Any) -> Check:
    x, y = inst.source(f), inst.target(f)
    fd = inst.dagger(f)
    left = inst.compose(fd, f)
    if not inst.leq(inst.identity(x), left):
        return _fail("dagger(f) o f >= id", f, left)
    right = inst.compose(f, fd)
    if not inst.leq(right, inst.identity(y)):
        return _fail("f o dagger(f) <= id", f, right)
    return OK


def is_injective(inst: Instance, f: Any) -> Check:
    m = is_map(inst, f)
    if not m:
        return m
    return is_dagger_mono(inst, f)


def is_surjective(inst: Instance, f: Any) -> Check:
    m = is_map(inst, f)
    if not m:
        return m
    return is_dagger_epi(inst, f)


def is_bijective(inst: Instance, f: Any) -> Check:
    m = is_injective(inst, f)
    if not m:
        return m
    return is_surjective(inst, f)


def is_dagger_mono(inst: Instance, f: Any) -> Check:
    x = inst.source(f)
    c = inst.compose(inst.dagger(f), f)
    if not inst.equal(c, inst.identity(x)):
        return _fail("dagger(f) o f = id", f, c)
    return OK


def is_dagger_epi(inst: Instance, f: Any) -> Check:
    y = inst.target(f)
    c = inst.compose(f, inst.dagger(f))
    if not inst.equal(c, inst.identity(y)):
        return _fail("f o dagger(f) = id", f, c)
    return OK


def is_dagger_iso(inst: Instance, f: Any) -> Check:
    m = is_dagger_mono(inst, f)
    if not m:
        return m
    return is_dagger_epi(inst, f)


def is_projection(inst: Instance, f: Any) -> Check:
    if not inst.equal(inst.dagger(f), f):
        return _fail("f = dagger(f)", f)
    sq = inst.compose(f, f)
    if not inst.equal(sq, f):
        return _fail("f o f = f", f, sq)
    return OK


def endorelation_class(inst: Instance, r: Any) -> frozenset[str]:
    """The set of endorelation flags the morphism satisfies."""
    x = inst.source(r)
    if x != inst.target(r):
        raise StructureError("endorelation flags need an endomorphism")
    one = inst.identity(x)
    rd = inst.dagger(r)
    rr = inst.compose(r, r)
    flags = set()
    if inst.leq(one, r):
        flags.add("reflexive")
    if inst.leq(rr, r):
        flags.add("transitive")
    if inst.equal(rr, r):
        flags.add("idempotent")
    if inst.equal(rd, r):
        flags.add("symmetric")
    if inst.leq(inst.meet2(r, rd), one):
        flags.add("antisymmetric")
    if {"reflexive", "transitive"} <= flags:
        flags.add("preorder")
        if "antisymmetric" in flags:
            flags.add("order")
    if {"symmetric", "transitive"} <= flags:
        flags.add("PER")
        if "reflexive" in flags:
            flags.add("equivalence")
    if {"symmetric", "idempotent"} <= flags:
        flags.add("projection")
    if inst.has_compact and inst.has_monoidal:
        unit = inst.unit_obj()
        if inst.equal(trace_of(inst, r), inst.bottom(unit, unit)):
            flags.add("irreflexive")
    return frozenset(flags)


def is_nondegenerate(inst: Instance) -> bool:
    unit = inst.unit_obj()
    return not inst.equal(inst.identity(unit), inst.bottom(unit, unit))


def is_affine(inst: Instance) -> bool:
    unit = inst.unit_obj()
    return inst.equal(inst.identity(unit), inst.top(unit, unit))


def scalar_mul(inst: Instance, s: Any, f: Any) -> Any:
    """s . f for a scalar s : I -> I."""
    x, y = inst.source(f), inst.target(f)
    lam_x = inst.lunit(x)
    lam_y = inst.lunit(y)
    return inst.compose(lam_y, inst.compose(inst.tensor_mor(s, f), inst.dagger(lam_x)))


# -- compact-closed calculus --------------------------------------------------------------

def name_of(inst: Instance, f: Any) -> Any:
    """The name of f : X -> Y, a morphism I -> X* (x) Y."""
    x = inst.source(f)
    xd = inst.dual_obj(x)
    return inst.compose(inst.tensor_mor(inst.identity(xd), f), inst.eta(x))


def coname_of(inst: Instance, f: Any) -> Any:
    """The coname of f : X -> Y, a morphism X (x) Y* -> I."""
    y = inst.target(f)
    yd = inst.dual_obj(y)
    return inst.compose(inst.epsilon(y), inst.tensor_mor(f, inst.identity(yd)))


def name_inverse(inst: Instance, h: Any, x: Any, y: Any) -> Any:
    """Recover f : X -> Y from its name h : I -> X* (x) Y."""
    xd = inst.dual_obj(x)
    idx = inst.identity(x)
    idy = inst.identity(y)
    rho_inv = inst.dagger(inst.runit(x))               # X -> X (x) I
    step = inst.compose(inst.tensor_mor(idx, h), rho_inv)
    alpha_inv = inst.dagger(inst.assoc(x, xd, y))      # X (x) (X* (x) Y) -> (X (x) X*) (x) Y
    step = inst.compose(alpha_inv, step)
    step = inst.compose(inst.tensor_mor(inst.epsilon(x), idy), step)
    return inst.compose(inst.lunit(y), step)


def coname_inverse(inst: Instance, k: Any, x: Any, y: Any) -> Any:
    """Recover f : X -> Y from its coname k : X (x) Y* -> I."""
    yd = inst.dual_obj(y)
    idx = inst.identity(x)
    idy = inst.identity(y)
    rho_inv = inst.dagger(inst.runit(x))               # X -> X (x) I
    step = inst.compose(inst.tensor_mor(idx, inst.eta(y)), rho_inv)
    alpha_inv = inst.dagger(inst.assoc(x, yd, y))      # X (x) (Y* (x) Y) -> (X (x) Y*) (x) Y
    step = inst.compose(alpha_inv, step)
    step = inst.compose(inst.tensor_mor(k, idy), step)
    return inst.compose(inst.lunit(y), step)


def star_of(inst: Instance, f: Any) -> Any:
    """The transpose f* : Y* -> X*."""
    x, y = inst.source(f), inst.target(f)
    xd, yd = inst.dual_obj(x), inst.dual_obj(y)
    idxd = inst.identity(xd)
    idyd = inst.identity(yd)
    step = inst.dagger(inst.lunit(yd))                 # Y* -> I (x) Y*
    step = inst.compose(inst.tensor_mor(inst.eta(x), idyd), step)
    step = inst.compose(inst.assoc(xd, x, yd), step)
    step = inst.compose(inst.tensor_mor(idxd, inst.tensor_mor(f, idyd)), step)
    step = inst.compose(inst.tensor_mor(idxd, inst.epsilon(y)), step)
    return inst.compose(inst.runit(xd), step)


def trace_of(inst: Instance, f: Any) -> Any:
    """The categorical trace of an endomorphism, a scalar I -> I."""
    x = inst.source(f)
    if x != inst.target(f):
        raise StructureError("trace needs an endomorphism")
    xd = inst.dual_obj(x)
    eps = inst.epsilon(x)
    return inst.compose(
        eps, inst.compose(inst.tensor_mor(f, inst.identity(xd)), inst.dagger(eps))
    )


def dimension_of(inst: Instance, x: Any) -> Any:
    return trace_of(inst, inst.identity(x))


def is_perp(inst: Instance, r: Any, s: Any) -> bool:
    """Trace orthogonality of parallel morphisms."""
    unit = inst.unit_obj()
    t = trace_of(inst, inst.compose(r, inst.dagger(s)))
    return inst.equal(t, inst.bottom(unit, unit))


def maps_compose_check(inst: Instance, f: Any, g: Any) -> Check:
    """Composites of maps are maps."""
    if not (is_map(inst, f) and is_map(inst, g)):
        return _fail("inputs are maps", f, g)
    return is_map(inst, inst.compose(g, f))
