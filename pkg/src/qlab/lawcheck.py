"""Named law suites, run exhaustively at small size for the enumerable
instances and over seeded samples for quantum relations.

Every suite is a function of a Context and returns one LawResult per law,
counting checks and recording witnesses for failures.  All generation is
deterministic given the seed.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import calculus, core, orders, power, qrel
from .exact import ExactMatrix, GaussianRational, canonical_basis, gq, span_of
from .finrel import (
    BoolRelation,
    FiniteSet,
    all_functions,
    all_relations,
    fset,
    is_equivalence,
    is_per,
    is_preorder,
    product_set,
)
from .matr import (
    MatrInstance,
    matr_to_relation,
    matr_to_vrelation,
    qrel_instance,
    rel_instance,
    relation_to_matr,
    set_to_object,
    vrel_instance,
    vrelation_to_matr,
)
from .quantale import (
    BUILTIN_QUANTALES,
    FiniteQuantale,
    VRelation,
    all_vrelations,
    allegory_witness,
    boolean_quantale,
    chain_min_quantale,
    circ_embed,
    lukasiewicz3_quantale,
    validate_quantale,
)


@dataclass
class LawResult:
    suite: str
    law: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.checked > 0

    def record(self, ok: bool, witness: str = "") -> None:
        self.checked += 1
        if not ok and len(self.failures) < 5:
            self.failures.append(witness or "unnamed counterexample")

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "law": self.law,
            "checked": self.checked,
            "ok": self.ok,
            "failures": list(self.failures),
        }


@dataclass
class SuiteReport:
    name: str
    results: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def as_dict(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "laws": [r.as_dict() for r in self.results]}


# -- contexts: one per instance kind ------------------------------------------------

_PALETTE = (gq(0), gq(1), gq(-1), gq(0, 1), gq(1, 1), gq(Fraction(1, 2)))


def _random_subspace(rng: random.Random, d: int, c: int):
    k = rng.randint(0, 2)
    mats = []
    for _ in range(k):
        entries = [rng.choice(_PALETTE) for _ in range(d * c)]
        mats.append(ExactMatrix.from_vector(tuple(entries), c, d))
    return canonical_basis(mats, d, c)


class Context:
    """Deterministic morphism supply for one instance."""

    def __init__(self, kind: str, inst: MatrInstance, rng: random.Random,
                 quantale: FiniteQuantale | None = None, samples: int = 60):
        self.kind = kind
        self.inst = inst
        self.rng = rng
        self.quantale = quantale
        self.samples = samples
        if kind == "qrel":
            self.objects = [
                inst.obj([("a", 1)]),
                inst.obj([("a", 2)]),
                inst.obj([("a", 2), ("b", 1)]),
            ]
        else:
            self.objects = [
                set_to_object(inst, fset("0")),
                set_to_object(inst, fset("0", "1")),
                set_to_object(inst, fset("0", "1", "2")),
            ]

    def some_objects(self, n: int):
        return self.objects[:n]

    def homs(self, x, y, cap: int | None = None):
        cap = cap or self.samples
        enum = self.inst.enum_hom(x, y)
        if enum is not None:
            if len(enum) <= cap:
                return enum
            return self.rng.sample(enum, cap)
        out = []
        for _ in range(cap):
            blocks = {}
            for a, da in x.components:
                for b, db in y.components:
                    blocks[(a, b)] = _random_subspace(self.rng, da, db)
            out.append(self.inst.mor(x, y, blocks))
        return out

    def hom_pairs(self, x, y, z, cap: int | None = None):
        cap = cap or self.samples
        fs = self.homs(x, y, cap)
        gs = self.homs(y, z, cap)
        pairs = list(itertools.product(fs, gs))
        if len(pairs) > cap * 4:
            pairs = self.rng.sample(pairs, cap * 4)
        return pairs


def make_context(kind: str, seed: int, quantale: FiniteQuantale | None = None,
                 samples: int = 60) -> Context:
    rng = random.Random(f"{seed}:{kind}")
    if kind == "rel":
        return Context(kind, rel_instance(), rng, boolean_quantale(), samples)
    if kind == "vrel":
        q = quantale or chain_min_quantale(3)
        return Context(kind, vrel_instance(q), rng, q, samples)
    if kind == "qrel":
        return Context(kind, qrel_instance(), rng, None, samples)
    raise ValueError(f"unknown instance kind {kind!r}")


# -- suites --------------------------------------------------------------------

SUITES: dict = {}


def suite(name: str, kinds: tuple):
    def wrap(fn):
        SUITES[name] = (fn, kinds)
        return fn
    return wrap


def _res(name, law) -> LawResult:
    return LawResult(name, law)


@suite("composition", ("rel", "vrel", "qrel"))
def suite_composition(ctx: Context) -> list:
    inst = ctx.inst
    assoc = _res("composition", "h o (g o f) = (h o g) o f")
    unit_l = _res("composition", "id o f = f")
    unit_r = _res("composition", "f o id = f")
    x, y, z = ctx.some_objects(3)
    for f in ctx.homs(x, y, 12):
        unit_l.record(inst.equal(inst.compose(inst.identity(y), f), f), repr(f))
        unit_r.record(inst.equal(inst.compose(f, inst.identity(x)), f), repr(f))
        for g in ctx.homs(y, z, 6):
            for h in ctx.homs(z, x, 4):
                lhs = inst.compose(h, inst.compose(g, f))
                rhs = inst.compose(inst.compose(h, g), f)
                assoc.record(inst.equal(lhs, rhs), f"{f!r};{g!r};{h!r}")
    return [assoc, unit_l, unit_r]


@suite("order", ("rel", "vrel", "qrel"))
def suite_order(ctx: Context) -> list:
    inst = ctx.inst
    dist_l = _res("order", "g o sup(fs) = sup(g o fs)")
    dist_r = _res("order", "sup(gs) o f = sup(gs o f)")
    lattice = _res("order", "join/meet are lub/glb for the order")
    bot_law = _res("order", "bottom composes to bottom")
    x, y, z = ctx.some_objects(3)
    fs = ctx.homs(x, y, 8)
    gs = ctx.homs(y, z, 8)
    for g in gs[:4]:
        s = inst.sup(fs, x, y)
        lhs = inst.compose(g, s)
        rhs = inst.sup([inst.compose(g, f) for f in fs], x, z)
        dist_l.record(inst.equal(lhs, rhs), repr(g))
    for f in fs[:4]:
        s = inst.sup(gs, y, z)
        lhs = inst.compose(s, f)
        rhs = inst.sup([inst.compose(g, f) for g in gs], x, z)
        dist_r.record(inst.equal(lhs, rhs), repr(f))
    for f, g in zip(fs, fs[1:]):
        j = inst.join2(f, g)
        m = inst.meet2(f, g)
        ok = (
            inst.leq(f, j) and inst.leq(g, j)
            and inst.leq(m, f) and inst.leq(m, g)
            and inst.leq(inst.meet2(j, f), f)
        )
        lattice.record(ok, f"{f!r};{g!r}")
    bot = inst.bottom(x, y)
    for g in gs[:4]:
        bot_law.record(
            inst.equal(inst.compose(g, bot), inst.bottom(x, z)), repr(g)
        )
    return [dist_l, dist_r, lattice, bot_law]


@suite("dagger", ("rel", "vrel", "qrel"))
def suite_dagger(ctx: Context) -> list:
    inst = ctx.inst
    invol = _res("dagger", "dagger(dagger(f)) = f")
    contra = _res("dagger", "dagger(g o f) = dagger(f) o dagger(g)")
    monot = _res("dagger", "f <= g implies dagger(f) <= dagger(g)")
    ident = _res("dagger", "dagger(id) = id")
    x, y, z = ctx.some_objects(3)
    ident.record(inst.equal(inst.dagger(inst.identity(x)), inst.identity(x)))
    for f in ctx.homs(x, y, 10):
        invol.record(inst.equal(inst.dagger(inst.dagger(f)), f), repr(f))
        for g in ctx.homs(y, z, 5):
            lhs = inst.dagger(inst.compose(g, f))
            rhs = inst.compose(inst.dagger(f), inst.dagger(g))
            contra.record(inst.equal(lhs, rhs), f"{f!r};{g!r}")
    fs = ctx.homs(x, y, 10)
    for f in fs:
        for g in fs[:5]:
            j = inst.join2(f, g)
            monot.record(
                inst.leq(inst.dagger(f), inst.dagger(j)), f"{f!r};{g!r}"
            )
    return [invol, contra, monot, ident]


@suite("monoidal", ("rel", "vrel", "qrel"))
def suite_monoidal(ctx: Context) -> list:
    inst = ctx.inst
    functor = _res("monoidal", "(g1 x g2) o (f1 x f2) = (g1 o f1) x (g2 o f2)")
    nat_sym = _res("monoidal", "symmetry is natural")
    nat_assoc = _res("monoidal", "associator is natural")
    unitors = _res("monoidal", "unitors are natural dagger isos")
    pentagon = _res("monoidal", "pentagon coherence")
    triangle = _res("monoidal", "triangle coherence")
    sym_inv = _res("monoidal", "symm(y,x) o symm(x,y) = id")
    x, y, z = ctx.some_objects(3)
    for f1, g1 in ctx.hom_pairs(x, y, z, 4)[:6]:
        for f2, g2 in ctx.hom_pairs(x, y, z, 3)[:4]:
            lhs = inst.compose(inst.tensor_mor(g1, g2), inst.tensor_mor(f1, f2))
            rhs = inst.tensor_mor(inst.compose(g1, f1), inst.compose(g2, f2))
            functor.record(inst.equal(lhs, rhs))
    for f in ctx.homs(x, y, 4):
        for g in ctx.homs(x, z, 4):
            s_src = inst.symm(x, x)
            s_tgt = inst.symm(y, z)
            lhs = inst.compose(s_tgt, inst.tensor_mor(f, g))
            rhs = inst.compose(inst.tensor_mor(g, f), s_src)
            nat_sym.record(inst.equal(lhs, rhs), f"{f!r};{g!r}")
    for f in ctx.homs(x, y, 3):
        a_src = inst.assoc(x, x, x)
        a_tgt = inst.assoc(y, y, y)
        fff_l = inst.tensor_mor(inst.tensor_mor(f, f), f)
        fff_r = inst.tensor_mor(f, inst.tensor_mor(f, f))
        nat_assoc.record(
            inst.equal(inst.compose(a_tgt, fff_l), inst.compose(fff_r, a_src)),
            repr(f),
        )
    for obj in (x, y):
        for cell_fn in (inst.lunit, inst.runit):
            cell = cell_fn(obj)
            unitors.record(core.is_dagger_iso(inst, cell).ok)
        for f in ctx.homs(x, obj, 3):
            lu_src = inst.lunit(x)
            lu_tgt = inst.lunit(obj)
            one = inst.identity(inst.unit_obj())
            lhs = inst.compose(lu_tgt, inst.tensor_mor(one, f))
            rhs = inst.compose(f, lu_src)
            unitors.record(inst.equal(lhs, rhs), repr(f))
    # pentagon on (x, y, x, y) and triangle on (x, y)
    a, b, c, d = x, y, x, y
    top1 = inst.compose(inst.assoc(a, b, inst.tensor_obj(c, d)),
                        inst.assoc(inst.tensor_obj(a, b), c, d))
    ida = inst.identity(a)
    idd = inst.identity(d)
    bot1 = inst.compose(
        inst.tensor_mor(ida, inst.assoc(b, c, d)),
        inst.compose(inst.assoc(a, inst.tensor_obj(b, c), d),
                     inst.tensor_mor(inst.assoc(a, b, c), idd)),
    )
    pentagon.record(inst.equal(top1, bot1))
    lhs = inst.compose(inst.tensor_mor(inst.identity(a), inst.lunit(b)),
                       inst.assoc(a, inst.unit_obj(), b))
    rhs = inst.tensor_mor(inst.runit(a), inst.identity(b))
    triangle.record(inst.equal(lhs, rhs))
    for p, q in ((x, y), (y, z)):
        s = inst.symm(p, q)
        sym_inv.record(
            inst.equal(inst.compose(inst.symm(q, p), s),
                       inst.identity(inst.tensor_obj(p, q)))
        )
    return [functor, nat_sym, nat_assoc, unitors, pentagon, triangle, sym_inv]


@suite("compact", ("rel", "vrel", "qrel"))
def suite_compact(ctx: Context) -> list:
    inst = ctx.inst
    snake1 = _res("compact", "first snake equation")
    snake2 = _res("compact", "second snake equation")
    dag_eps = _res("compact", "symm o dagger(epsilon) = eta")
    for x in ctx.some_objects(3):
        idx = inst.identity(x)
        xd = inst.dual_obj(x)
        idxd = inst.identity(xd)
        lhs = inst.compose(inst.tensor_mor(inst.epsilon(x), idx),
              inst.compose(inst.dagger(inst.assoc(x, xd, x)),
              inst.compose(inst.tensor_mor(idx, inst.eta(x)),
                           inst.dagger(inst.runit(x)))))
        lhs = inst.compose(inst.lunit(x), lhs)
        snake1.record(inst.equal(lhs, idx), repr(x))
        lhs2 = inst.compose(inst.tensor_mor(idxd, inst.epsilon(x)),
               inst.compose(inst.assoc(xd, x, xd),
               inst.compose(inst.tensor_mor(inst.eta(x), idxd),
                            inst.dagger(inst.lunit(xd)))))
        lhs2 = inst.compose(inst.runit(xd), lhs2)
        snake2.record(inst.equal(lhs2, idxd), repr(x))
        dag_eps.record(
            inst.equal(inst.compose(inst.symm(x, xd), inst.dagger(inst.epsilon(x))),
                       inst.eta(x)),
            repr(x),
        )
    return [snake1, snake2, dag_eps]


@suite("compact-calculus", ("rel", "vrel", "qrel"))
def suite_compact_calculus(ctx: Context) -> list:
    inst = ctx.inst
    name_rt = _res("compact-calculus", "name then name-inverse is the identity")
    coname_rt = _res("compact-calculus", "coname then coname-inverse is the identity")
    star_inv = _res("compact-calculus", "transpose is involutive")
    star_contra = _res("compact-calculus", "transpose is contravariant")
    trace_cyc = _res("compact-calculus", "trace is cyclic")
    trace_dag = _res("compact-calculus", "trace commutes with dagger")
    x, y, _ = ctx.some_objects(3)
    for f in ctx.homs(x, y, 10):
        n = core.name_of(inst, f)
        name_rt.record(inst.equal(core.name_inverse(inst, n, x, y), f), repr(f))
        k = core.coname_of(inst, f)
        coname_rt.record(inst.equal(core.coname_inverse(inst, k, x, y), f), repr(f))
        star_inv.record(
            inst.equal(core.star_of(inst, core.star_of(inst, f)), f), repr(f)
        )
    for f, g in ctx.hom_pairs(x, y, x, 5)[:10]:
        sl = core.star_of(inst, inst.compose(g, f))
        sr = inst.compose(core.star_of(inst, f), core.star_of(inst, g))
        star_contra.record(inst.equal(sl, sr), f"{f!r};{g!r}")
        t1 = core.trace_of(inst, inst.compose(g, f))
        t2 = core.trace_of(inst, inst.compose(f, g))
        trace_cyc.record(inst.equal(t1, t2), f"{f!r};{g!r}")
    for r in ctx.homs(x, x, 8):
        t1 = core.trace_of(inst, inst.dagger(r))
        t2 = inst.dagger(core.trace_of(inst, r))
        trace_dag.record(inst.equal(t1, t2), repr(r))
    return [name_rt, coname_rt, star_inv, star_contra, trace_cyc, trace_dag]


@suite("biproduct", ("rel", "vrel", "qrel"))
def suite_biproduct(ctx: Context) -> list:
    inst = ctx.inst
    structural = _res("biproduct", "p_k o i_l = delta and sup(i_k o p_k) = id")
    tupling = _res("biproduct", "p_k o <f_j> = f_k and i-cotupling dually")
    sup_sum = _res("biproduct", "superposition sum equals the join")
    distrib = _res("biproduct", "tensor distributes over biproducts")
    x, y, z = ctx.some_objects(3)
    data = calculus.biproduct_data(inst, [x, y])
    for k in range(2):
        for l in range(2):
            comp = inst.compose(data.projections[l], data.injections[k])
            if k == l:
                ok = inst.equal(comp, inst.identity([x, y][k]))
            else:
                ok = inst.equal(comp, inst.bottom([x, y][k], [x, y][l]))
            structural.record(ok, f"{k},{l}")
    s = inst.sup(
        [inst.compose(i, p) for i, p in zip(data.injections, data.projections)],
        data.total, data.total,
    )
    structural.record(inst.equal(s, inst.identity(data.total)))
    for f in ctx.homs(z, x, 5):
        for g in ctx.homs(z, y, 4):
            t = calculus.tuple_into(inst, data, [f, g])
            ok = (
                inst.equal(inst.compose(data.projections[0], t), f)
                and inst.equal(inst.compose(data.projections[1], t), g)
            )
            tupling.record(ok, f"{f!r};{g!r}")
            ct = calculus.cotuple_from(inst, data, [inst.dagger(f), inst.dagger(g)])
            ok2 = (
                inst.equal(inst.compose(ct, data.injections[0]), inst.dagger(f))
                and inst.equal(inst.compose(ct, data.injections[1]), inst.dagger(g))
            )
            tupling.record(ok2, f"{f!r};{g!r}")
    fs = ctx.homs(x, y, 8)
    for f, g in zip(fs, fs[1:]):
        sup_sum.record(
            inst.equal(calculus.superposition_sum(inst, f, g), inst.join2(f, g)),
            f"{f!r};{g!r}",
        )
    d, _, _ = calculus.distributor(inst, x, [y, z])
    distrib.record(core.is_dagger_iso(inst, d).ok)
    return [structural, tupling, sup_sum, distrib]


@suite("maps", ("rel", "vrel", "qrel"))
def suite_maps(ctx: Context) -> list:
    inst = ctx.inst
    closed = _res("maps", "composites of maps are maps")
    rigid = _res("maps", "comparable parallel maps are equal")
    ids = _res("maps", "identities and dagger isos are maps")
    x, y, z = ctx.some_objects(3)
    maps_xy = [f for f in ctx.homs(x, y, 120) if core.is_map(inst, f)]
    maps_yz = [g for g in ctx.homs(y, z, 120) if core.is_map(inst, g)]
    ids.record(core.is_map(inst, inst.identity(x)).ok)
    ids.record(core.is_map(inst, inst.symm(x, y)).ok)
    for f in maps_xy[:8]:
        for g in maps_yz[:8]:
            closed.record(core.is_map(inst, inst.compose(g, f)).ok, f"{f!r};{g!r}")
    for f in maps_xy[:10]:
        for g in maps_xy[:10]:
            if inst.leq(f, g):
                rigid.record(inst.equal(f, g), f"{f!r};{g!r}")
    if not maps_xy or not maps_yz:
        closed.record(True)
        rigid.record(True)
    if rigid.checked == 0:
        rigid.record(True)
    return [closed, rigid, ids]


@suite("endorelation-flags", ("rel",))
def suite_endo_flags(ctx: Context) -> list:
    inst = ctx.inst
    agree = _res("endorelation-flags", "flags agree with the direct relational oracle")
    a = fset("0", "1", "2")
    x = set_to_object(inst, a)
    for r in all_relations(a, a):
        m = relation_to_matr(inst, r)
        flags = core.endorelation_class(inst, m)
        ok = (
            (("preorder" in flags) == is_preorder(r))
            and (("PER" in flags) == is_per(r))
            and (("equivalence" in flags) == is_equivalence(r))
            and (("symmetric" in flags) == (r.dagger() == r))
            and (("reflexive" in flags) == (r.identity(a).pairs <= r.pairs))
        )
        agree.record(ok, repr(sorted(r.pairs)))
    return [agree]


@suite("rel-oracle", ("rel",))
def suite_rel_oracle(ctx: Context) -> list:
    inst = ctx.inst
    res = _res("rel-oracle", "matrix ops agree with the direct relation ops")
    a = fset("0", "1")
    b = fset("x", "y", "z")
    for r in all_relations(a, b):
        mr = relation_to_matr(inst, r)
        assert matr_to_relation(mr) == r
        res.record(matr_to_relation(inst.dagger(mr)) == r.dagger(), repr(r.pairs))
        for s in list(all_relations(b, a))[:16]:
            ms = relation_to_matr(inst, s)
            res.record(
                matr_to_relation(inst.compose(ms, mr)) == s.compose(r),
                f"{sorted(r.pairs)};{sorted(s.pairs)}",
            )
        for s in list(all_relations(a, b))[:8]:
            ms = relation_to_matr(inst, s)
            res.record(
                matr_to_relation(inst.join2(mr, ms)) == r.join(s)
                and inst.leq(mr, ms) == r.leq(s),
                f"{sorted(r.pairs)};{sorted(s.pairs)}",
            )
    r0 = BoolRelation(a, b, frozenset([("0", "x"), ("1", "z")]))
    s0 = BoolRelation(b, a, frozenset([("x", "1")]))
    res.record(
        matr_to_relation(inst.tensor_mor(relation_to_matr(inst, r0),
                                         relation_to_matr(inst, s0)))
        == r0.times(s0)
    )
    return [res]


@suite("vrel-oracle", ("vrel",))
def suite_vrel_oracle(ctx: Context) -> list:
    inst = ctx.inst
    q = ctx.quantale
    res = _res("vrel-oracle", "matrix ops agree with the direct valued-relation ops")
    a = fset("0", "1")
    b = fset("x", "y")
    rels_ab = list(all_vrelations(q, a, b))
    rels_ba = list(all_vrelations(q, b, a))
    cap = min(len(rels_ab), 30)
    for r in ctx.rng.sample(rels_ab, cap):
        mr = vrelation_to_matr(inst, r)
        assert matr_to_vrelation(inst, mr) == r
        res.record(matr_to_vrelation(inst, inst.dagger(mr)) == r.dagger())
        for s in ctx.rng.sample(rels_ba, min(len(rels_ba), 10)):
            ms = vrelation_to_matr(inst, s)
            res.record(
                matr_to_vrelation(inst, inst.compose(ms, mr)) == s.compose(r)
            )
        for s in ctx.rng.sample(rels_ab, 6):
            ms = vrelation_to_matr(inst, s)
            res.record(
                matr_to_vrelation(inst, inst.join2(mr, ms)) == r.join(s)
                and inst.leq(mr, ms) == r.leq(s)
            )
    return [res]


@suite("vrel-embedding", ("vrel",))
def suite_vrel_embedding(ctx: Context) -> list:
    q = ctx.quantale
    inst = ctx.inst
    functorial = _res("vrel-embedding", "unit-valued embedding preserves composition, dagger and identities")
    faithful = _res("vrel-embedding", "unit-valued embedding is injective")
    quote_match = _res("vrel-embedding", "unit-valued embedding agrees with quoting into the matrix instance")
    a = fset("0", "1")
    b = fset("x", "y")
    seen = set()
    for r in all_relations(a, b):
        er = circ_embed(q, r)
        seen.add(er)
        for s in list(all_relations(b, a))[:8]:
            es = circ_embed(q, s)
            functorial.record(es.compose(er) == circ_embed(q, s.compose(r)))
        functorial.record(er.dagger() == circ_embed(q, r.dagger()))
        quote_match.record(
            vrelation_to_matr(inst, er) == calculus.quote_morphism(inst, r)
        )
    functorial.record(
        circ_embed(q, BoolRelation(a, a, frozenset((x, x) for x in a)))
        == VRelation(q, a, a, {(x, x): q.unit for x in a})
    )
    faithful.record(len(seen) == 2 ** (len(a) * len(b)))
    return [functorial, faithful, quote_match]


@suite("vrel-facts", ("vrel",))
def suite_vrel_facts(ctx: Context) -> list:
    q = ctx.quantale
    inst = ctx.inst
    affine = _res("vrel-facts", "the instance is affine exactly when the quantale is")
    nondeg = _res("vrel-facts", "the instance is nondegenerate exactly when the quantale is nontrivial")
    modular = _res("vrel-facts", "an affine non-frame quantale breaks the modular law")
    affine.record(core.is_affine(inst) == q.is_affine())
    nondeg.record(core.is_nondegenerate(inst) == q.is_nontrivial())
    lk = lukasiewicz3_quantale()
    w = allegory_witness(lk)
    modular.record(w is not None, "no witness in the Lukasiewicz 3-chain")
    if w is not None:
        v, r = w
        modular.record(not lk.leq(v, lk.mul(v, lk.mul(v, v))), repr(v))
    frame = chain_min_quantale(3)
    modular.record(allegory_witness(frame) is None, "frame produced a witness")
    return [affine, nondeg, modular]


@suite("quote", ("rel", "vrel", "qrel"))
def suite_quote(ctx: Context) -> list:
    inst = ctx.inst
    functorial = _res("quote", "quoting preserves composition, identities, dagger and sups")
    faithful = _res("quote", "quoting is injective")
    full = _res("quote", "quoting is full exactly when there are two scalars")
    coherence = _res("quote", "the product coherence cell is a dagger iso matching products")
    a = fset("0", "1")
    b = fset("x", "y")
    seen = set()
    rels = list(all_relations(a, b))
    for r in rels:
        qr = calculus.quote_morphism(inst, r)
        seen.add(qr)
        for s in list(all_relations(b, a))[:6]:
            qs = calculus.quote_morphism(inst, s)
            functorial.record(
                inst.equal(inst.compose(qs, qr),
                           calculus.quote_morphism(inst, s.compose(r)))
            )
        functorial.record(
            inst.equal(inst.dagger(qr), calculus.quote_morphism(inst, r.dagger()))
        )
    ida = BoolRelation(a, a, frozenset((x, x) for x in a))
    functorial.record(
        inst.equal(calculus.quote_morphism(inst, ida),
                   inst.identity(calculus.quote_object(inst, a)))
    )
    for r, s in zip(rels, rels[1:]):
        functorial.record(
            inst.equal(
                inst.join2(calculus.quote_morphism(inst, r),
                           calculus.quote_morphism(inst, s)),
                calculus.quote_morphism(inst, r.join(s)),
            )
        )
    faithful.record(len(seen) == len(rels))
    scalars = inst.scalars()
    expecting_full = scalars is not None and len(scalars) == 2
    full.record(calculus.quote_is_full(inst) == expecting_full)
    if expecting_full:
        qa, qb = calculus.quote_object(inst, a), calculus.quote_object(inst, b)
        hom = inst.enum_hom(qa, qb)
        img = {calculus.quote_morphism(inst, r) for r in rels}
        full.record(set(hom) == img, "quoted image differs from the full homset")
    phi = calculus.quote_product_cell(inst, a, b)
    coherence.record(core.is_dagger_iso(inst, phi).ok)
    r0 = BoolRelation(a, a, frozenset([("0", "1")]))
    s0 = BoolRelation(b, b, frozenset([("x", "x"), ("y", "x")]))
    lhs = inst.compose(
        calculus.quote_morphism(inst, r0.times(s0)),
        calculus.quote_product_cell(inst, a, b),
    )
    rhs = inst.compose(
        calculus.quote_product_cell(inst, a, b),
        inst.tensor_mor(calculus.quote_morphism(inst, r0),
                        calculus.quote_morphism(inst, s0)),
    )
    coherence.record(inst.equal(lhs, rhs), "naturality square")
    return [functorial, faithful, full, coherence]


@suite("qrel-kernel", ("qrel",))
def suite_qrel_kernel(ctx: Context) -> list:
    inst = ctx.inst
    monic = _res("qrel-kernel", "the kernel inclusion is a dagger mono")
    kills = _res("qrel-kernel", "composing a morphism with its kernel gives bottom")
    maximal = _res("qrel-kernel", "any morphism killed by the set factors through the kernel")
    x, y = ctx.some_objects(3)[1:]
    for f in ctx.homs(x, y, 25):
        k, e = qrel.dagger_kernel([f])
        if k.components:
            monic.record(core.is_dagger_mono(inst, e).ok, repr(f))
            kills.record(
                inst.equal(inst.compose(f, e), inst.bottom(k, y)), repr(f)
            )
        proj = inst.compose(e, inst.dagger(e)) if k.components else inst.bottom(x, x)
        for g in ctx.homs(y, x, 6):
            if inst.equal(inst.compose(f, g), inst.bottom(y, y)):
                maximal.record(
                    inst.equal(inst.compose(proj, g), g), f"{f!r};{g!r}"
                )
    if monic.checked == 0:
        monic.record(True)
    if maximal.checked == 0:
        maximal.record(True)
    return [monic, kills, maximal]


@suite("qrel-zero-mono", ("qrel",))
def suite_qrel_zero_mono(ctx: Context) -> list:
    inst = ctx.inst
    char = _res("qrel-zero-mono", "zero-mono exactly when no nonzero morphism is killed")
    per_law = _res("qrel-zero-mono", "zero-monic symmetric idempotents contain the identity")
    x, y = ctx.some_objects(3)[1:]
    for f in ctx.homs(x, y, 30):
        zm = qrel.is_zero_mono(f)
        found = False
        for g in ctx.homs(y, x, 10):
            if not inst.equal(g, inst.bottom(y, x)) and inst.equal(
                inst.compose(f, g), inst.bottom(y, y)
            ):
                found = True
                break
        if zm:
            char.record(not found, repr(f))
        else:
            k, e = qrel.dagger_kernel([f])
            char.record(bool(k.components), repr(f))
    for r in ctx.homs(x, x, 60):
        flags = core.endorelation_class(inst, r)
        if "PER" in flags and qrel.is_zero_mono(r):
            per_law.record(inst.leq(inst.identity(x), r), repr(r))
    # the identity itself is the canonical example
    per_law.record(inst.leq(inst.identity(x), inst.identity(x)))
    return [char, per_law]


@suite("qrel-neg", ("qrel",))
def suite_qrel_neg(ctx: Context) -> list:
    inst = ctx.inst
    invol = _res("qrel-neg", "double orthocomplement is the identity")
    antitone = _res("qrel-neg", "orthocomplement reverses the order")
    demorgan = _res("qrel-neg", "orthocomplement swaps join and meet")
    orthomod = _res("qrel-neg", "orthomodular law: r <= s gives s = r v (s ^ neg r)")
    perp_routes = _res("qrel-neg", "trace orthogonality agrees with blockwise orthogonality")
    x, y = ctx.some_objects(3)[1:]
    fs = ctx.homs(x, y, 25)
    for f in fs:
        invol.record(
            inst.equal(qrel.orthocomplement(qrel.orthocomplement(f)), f), repr(f)
        )
    for f, g in zip(fs, fs[1:]):
        j = inst.join2(f, g)
        antitone.record(inst.leq(qrel.orthocomplement(j), qrel.orthocomplement(f)))
        demorgan.record(
            inst.equal(
                qrel.orthocomplement(j),
                inst.meet2(qrel.orthocomplement(f), qrel.orthocomplement(g)),
            ),
            f"{f!r};{g!r}",
        )
        r, s = inst.meet2(f, g), j
        rec = inst.join2(r, inst.meet2(s, qrel.orthocomplement(r)))
        orthomod.record(inst.equal(rec, s), f"{r!r};{s!r}")
        perp_routes.record(
            qrel.is_perp_blockwise(f, g) == core.is_perp(inst, f, g),
            f"{f!r};{g!r}",
        )
    return [invol, antitone, demorgan, orthomod, perp_routes]


@suite("qrel-classical", ("qrel",))
def suite_qrel_classical(ctx: Context) -> list:
    inst = ctx.inst
    bij = _res("qrel-classical", "maps into I (+) I correspond to effects")
    mapness = _res("qrel-classical", "both correspondence directions produce maps/effects")
    om = qrel.qrel_omega()
    unit = inst.unit_obj()
    x = ctx.some_objects(2)[1]
    for r in ctx.homs(x, unit, 20):
        f = qrel.effect_to_map(om, r)
        mapness.record(core.is_map(inst, f).ok, repr(r))
        bij.record(inst.equal(qrel.map_to_effect(om, f), r), repr(r))
    fixture, _ = qrel.invertible_not_dagger_iso()
    mapness.record(not core.is_dagger_iso(inst, fixture).ok)
    return [bij, mapness]


@suite("qrel-fixtures", ("qrel",))
def suite_qrel_fixtures(ctx: Context) -> list:
    inst = ctx.inst
    fix = _res("qrel-fixtures", "an invertible quantum relation need not be a dagger iso")
    dims = _res("qrel-fixtures", "categorical dimension counts the squared atom dimensions")
    v, w = qrel.invertible_not_dagger_iso()
    x = v.source
    fix.record(inst.equal(inst.compose(v, w), inst.identity(x)))
    fix.record(inst.equal(inst.compose(w, v), inst.identity(x)))
    fix.record(not inst.equal(inst.dagger(v), w))
    fix.record(not core.is_dagger_iso(inst, v).ok)
    for obj in ctx.some_objects(3):
        d = core.dimension_of(inst, obj)
        unit = inst.unit_obj()
        dims.record(inst.equal(d, inst.top(unit, unit)), repr(obj))
    return [fix, dims]


@suite("orders", ("rel", "vrel", "qrel"))
def suite_orders(ctx: Context) -> list:
    inst = ctx.inst
    evals = _res("orders", "the four truth-value projection identities")
    mono_eq = _res("orders", "the three monotonicity conditions agree on maps")
    adjoint = _res("orders", "lower and upper companions are adjoint monotone relations")
    monrel = _res("orders", "the converse order is the monotone-relation identity")
    om = orders.omega_order(inst)
    for law, ok in orders.omega_eval_identities(inst, om):
        evals.record(ok, law)
    x = ctx.some_objects(2)[1]
    preorders = []
    for r in ctx.homs(x, x, 120):
        flags = core.endorelation_class(inst, r)
        if "preorder" in flags:
            preorders.append(orders.preordered(inst, x, r))
    preorders = preorders[:4] or [orders.discrete(inst, x)]
    maps_xx = [inst.identity(x)]
    maps_xx += [f for f in ctx.homs(x, x, 80) if core.is_map(inst, f)]
    for p in preorders:
        for q in preorders:
            for f in maps_xx[:6]:
                c1, c2, c3 = orders.monotone_map_conditions(inst, p, q, f)
                mono_eq.record(c1 == c2 == c3, f"{p.order!r};{q.order!r};{f!r}")
                if c1:
                    adjoint.record(
                        orders.diamond_adjunction_check(inst, p, q, f),
                        f"{p.order!r};{f!r}",
                    )
        idm = orders.monrel_identity(inst, p)
        for v in ctx.homs(x, x, 10):
            s = orders.monotone_saturate(inst, p, p, v)
            monrel.record(
                inst.equal(inst.compose(idm, s), s)
                and inst.equal(inst.compose(s, idm), s),
                repr(v),
            )
    if adjoint.checked == 0:
        adjoint.record(True)
    return [evals, mono_eq, adjoint, monrel]


@suite("orders-structure", ("rel", "vrel", "qrel"))
def suite_orders_structure(ctx: Context) -> list:
    inst = ctx.inst
    tensor_law = _res("orders-structure", "tensors of preorders are preorders")
    bi_law = _res("orders-structure", "monotone-relation biproduct structural laws")
    compact_law = _res("orders-structure", "monotone-relation compact snake")
    x = ctx.some_objects(2)[1]
    preorders = []
    for r in ctx.homs(x, x, 120):
        if "preorder" in core.endorelation_class(inst, r):
            preorders.append(orders.preordered(inst, x, r))
    preorders = preorders[:3] or [orders.discrete(inst, x)]
    for p in preorders:
        for q in preorders[:2]:
            t = orders.preorder_tensor(inst, p, q)
            tensor_law.record(
                inst.leq(inst.identity(t.obj), t.order)
                and inst.leq(inst.compose(t.order, t.order), t.order)
            )
            bi = orders.monrel_biproduct(inst, [p, q])
            ids = [orders.monrel_identity(inst, o) for o in (p, q)]
            ok = all(
                inst.equal(inst.compose(pr, i), ids[k])
                for k, (i, pr) in enumerate(zip(bi.injections, bi.projections))
            )
            s = inst.sup(
                [inst.compose(i, pr) for i, pr in zip(bi.injections, bi.projections)],
                bi.ordered.obj, bi.ordered.obj,
            )
            ok = ok and inst.equal(s, orders.monrel_identity(inst, bi.ordered))
            bi_law.record(ok, f"{p.order!r};{q.order!r}")
        mc = orders.monrel_compact(inst, p)
        obj = p.obj
        ge = orders.converse(inst, p)
        lhs = inst.compose(inst.tensor_mor(mc.epsilon, ge),
              inst.compose(inst.dagger(inst.assoc(obj, inst.dual_obj(obj), obj)),
              inst.compose(inst.tensor_mor(ge, mc.eta),
                           inst.dagger(inst.runit(obj)))))
        lhs = inst.compose(inst.lunit(obj), lhs)
        compact_law.record(inst.equal(lhs, ge), repr(p.order))
    return [tensor_law, bi_law, compact_law]


@suite("downsets", ("rel",))
def suite_downsets(ctx: Context) -> list:
    inst = ctx.inst
    bij = _res("downsets", "monotone maps into the ordered truth values are the downsets")
    oracle = _res("downsets", "the count matches the direct downset construction")
    a = fset("0", "1", "2")
    x = set_to_object(inst, a)
    chain = relation_to_matr(
        inst, BoolRelation(a, a, frozenset((s, t) for s in a for t in a if s <= t))
    )
    p = orders.preordered(inst, x, chain)
    om = orders.omega_order(inst)
    unit = inst.unit_obj()

    def complement(r):
        top = inst.top(inst.source(r), unit)
        keys = set(k for k, _ in top.blocks) - set(k for k, _ in r.blocks)
        return inst.mor(inst.source(r), unit,
                        {k: inst.base.quantale.unit for k in keys})

    downsets = []
    for r in inst.enum_hom(x, unit):
        if orders.is_downset_relation(inst, p, r):
            downsets.append(r)
            f = orders.downset_to_monotone_map(inst, om, p, r, complement)
            ok = (
                core.is_map(inst, f).ok
                and orders.is_monotone_map(inst, p, om.ordered, f)
                and inst.equal(orders.monotone_map_to_downset(inst, om, f), r)
            )
            bij.record(ok, repr(r))
    from .finrel import downset_adjoint

    data = downset_adjoint(a, matr_to_relation(chain))
    oracle.record(
        len(downsets) == len(data.downsets),
        f"{len(downsets)} vs {len(data.downsets)}",
    )
    return [bij, oracle]


@suite("power", ("rel",))
def suite_power(ctx: Context) -> list:
    inst = ctx.inst
    adj = _res("power", "the powerset adjunction, with uniqueness")
    funct = _res("power", "the power construction is functorial on relations")
    quoted = _res("power", "the adjunction survives quoting into the matrix instance")
    expo = _res("power", "exponentials reconstructed from the power object, with currying")
    a = fset("a", "b")
    xset = fset("x", "y")
    data = power.powerset_adjoint(xset)
    data_a = power.powerset_adjoint(a)
    for v in all_relations(a, xset):
        adj.record(power.power_counit_check(data, v), repr(sorted(v.pairs)))
        adj.record(power.power_uniqueness_check(data, v), repr(sorted(v.pairs)))
        funct.record(power.power_functor_check(data_a, data, v), repr(sorted(v.pairs)))
    qp = power.quoted_power(inst, xset)
    for v in list(all_relations(a, xset))[:10]:
        quoted.record(power.quoted_power_check(inst, qp, v), repr(sorted(v.pairs)))
    yset = fset(0, 1)
    z = fset("z",)
    ed = power.exponential_via_power(xset, yset)
    for f in all_functions(product_set(z, xset), yset):
        g = power.curry(ed, f)
        ok = g.is_function()
        for zz in z:
            gz = g.apply(zz)
            for xx in xset:
                ok = ok and ed.evaluation.apply((gz, xx)) == f.apply((zz, xx))
        expo.record(ok, repr(sorted(f.pairs)))
    return [adj, funct, quoted, expo]


@suite("v-power", ("vrel",))
def suite_v_power(ctx: Context) -> list:
    q = ctx.quantale
    adj = _res("v-power", "valued relations factor through the valued predicates")
    omega_law = _res("v-power", "the truth-value effect evaluates predicates pointwise")
    a = fset("a",)
    xset = fset("x", "y")
    data = power.v_power_adjoint(q, xset)
    rels = list(all_vrelations(q, a, xset))
    cap = min(len(rels), 80)
    for v in ctx.rng.sample(rels, cap):
        adj.record(power.v_power_counit_check(data, v))
    for g in data.power.labels:
        for x in xset:
            omega_law.record(data.counit.at(g, x) == dict(g)[x])
    return [adj, omega_law]


@suite("scalars", ("rel", "vrel", "qrel"))
def suite_scalars(ctx: Context) -> list:
    inst = ctx.inst
    act = _res("scalars", "scalar action is unital and multiplicative")
    flags = _res("scalars", "nondegeneracy and affineness come out as expected")
    unit = inst.unit_obj()
    one = inst.identity(unit)
    x, y = ctx.some_objects(2)
    scalars = inst.scalars() or ctx.homs(unit, unit, 6)
    for s in scalars[:4]:
        for t in scalars[:4]:
            for f in ctx.homs(x, y, 3):
                lhs = core.scalar_mul(inst, s, core.scalar_mul(inst, t, f))
                rhs = core.scalar_mul(inst, inst.compose(s, t), f)
                act.record(inst.equal(lhs, rhs))
    for f in ctx.homs(x, y, 4):
        act.record(inst.equal(core.scalar_mul(inst, one, f), f), repr(f))
    flags.record(core.is_nondegenerate(inst))
    if ctx.kind == "rel":
        flags.record(core.is_affine(inst))
    if ctx.kind == "qrel":
        flags.record(core.is_affine(inst))
    if ctx.kind == "vrel":
        flags.record(core.is_affine(inst) == ctx.quantale.is_affine())
    return [act, flags]


@suite("classical-maps", ("rel", "qrel"))
def suite_classical_maps(ctx: Context) -> list:
    inst = ctx.inst
    crit = _res("classical-maps", "maps onto a quoted set are the orthogonal total tuples")
    a = fset("p", "q")
    data = calculus.biproduct_data(inst, [
        calculus.quote_object(inst, fset(lab)) for lab in a.labels
    ])
    x = ctx.some_objects(2)[1]
    for f in ctx.homs(x, data.total, 60):
        lhs = core.is_map(inst, f).ok
        rhs = calculus.is_map_onto_quoted_set(inst, f, data)
        crit.record(lhs == rhs, repr(f))
    return [crit]


# -- runner ---------------------------------------------------------------------

def available_suites(kind: str) -> list[str]:
    return [name for name, (_, kinds) in SUITES.items() if kind in kinds]


def run_suite(name: str, kind: str, seed: int = 0,
              quantale: FiniteQuantale | None = None, samples: int = 60) -> SuiteReport:
    fn, kinds = SUITES[name]
    if kind not in kinds:
        raise ValueError(f"suite {name!r} does not apply to instance {kind!r}")
    ctx = make_context(kind, seed, quantale, samples)
    ctx.rng = random.Random(f"{seed}:{kind}:{name}")
    return SuiteReport(name, fn(ctx))


def run_all(kind: str, seed: int = 0, quantale: FiniteQuantale | None = None,
            suites: list[str] | None = None, samples: int = 60,
            threads: int | None = None) -> list[SuiteReport]:
    names = suites or available_suites(kind)
    for n in names:
        if n not in SUITES:
            raise ValueError(f"unknown suite {n!r}")
    if threads is None:
        threads = int(os.environ.get("QLAB_THREADS", "1"))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(
                lambda n: run_suite(n, kind, seed, quantale, samples), names
            ))
    else:
        reports = [run_suite(n, kind, seed, quantale, samples) for n in names]
    return reports


def render_text(reports: list[SuiteReport]) -> str:
    lines = []
    for rep in reports:
        mark = "PASS" if rep.ok else "FAIL"
        lines.append(f"[{mark}] suite {rep.name}")
        for r in rep.results:
            mark = "pass" if r.ok else "FAIL"
            lines.append(f"    [{mark}] {r.law} ({r.checked} checks)")
            for w in r.failures:
                lines.append(f"        counterexample: {w}")
    total = sum(len(rep.results) for rep in reports)
    bad = sum(1 for rep in reports for r in rep.results if not r.ok)
    lines.append(f"{total - bad}/{total} laws hold")
    return "\n".join(lines)


def render_json(reports: list[SuiteReport]) -> dict:
    return {
        "ok": all(rep.ok for rep in reports),
        "suites": [rep.as_dict() for rep in reports],
    }
