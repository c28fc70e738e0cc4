"""Finite commutative unital quantales and V-valued relations.

A quantale is given by tables; validation checks every lattice and
distributivity law and reports the first violation with a witness.
VRelation is a direct entrywise implementation of V-valued relations used
both on its own and as the oracle for the generic matrix-completion
instance built over the same quantale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterator, Mapping, Sequence

from .finrel import BoolRelation, FiniteSet, product_set

Label = Hashable


class QuantaleError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteQuantale:
    """A finite complete lattice with a sup-distributive multiplication."""

    elements: tuple[Label, ...]
    join_table: Mapping[tuple[Label, Label], Label]
    mul_table: Mapping[tuple[Label, Label], Label]
    unit: Label

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "join_table", dict(self.join_table))
        object.__setattr__(self, "mul_table", dict(self.mul_table))

    def __hash__(self) -> int:
        return hash((self.elements, self.unit))

    def join(self, a: Label, b: Label) -> Label:
        return self.join_table[(a, b)]

    def mul(self, a: Label, b: Label) -> Label:
        return self.mul_table[(a, b)]

    def leq(self, a: Label, b: Label) -> bool:
        return self.join(a, b) == b

    def sup(self, items: Sequence[Label]) -> Label:
        acc = self.bottom
        for x in items:
            acc = self.join(acc, x)
        return acc

    @property
    def bottom(self) -> Label:
        b = self.elements[0]
        for x in self.elements:
            if self.leq(x, b):
                b = x
        return b

    @property
    def top(self) -> Label:
        t = self.elements[0]
        for x in self.elements:
            if self.leq(t, x):
                t = x
        return t

    def meet(self, a: Label, b: Label) -> Label:
        lower = [x for x in self.elements if self.leq(x, a) and self.leq(x, b)]
        return self.sup(lower)

    # -- flags ----------------------------------------------------------------
    def is_nontrivial(self) -> bool:
        return self.bottom != self.top

    def is_affine(self) -> bool:
        return self.unit == self.top

    def is_commutative(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a) for a in self.elements for b in self.elements)

    def is_idempotent(self) -> bool:
        return all(self.mul(a, a) == a for a in self.elements)

    def is_frame(self) -> bool:
        return all(self.mul(a, b) == self.meet(a, b) for a in self.elements for b in self.elements)


def quantale_from_tables(
    elements: Sequence[Label],
    mul: Mapping[tuple[Label, Label], Label],
    unit: Label,
    join: Mapping[tuple[Label, Label], Label] | None = None,
    leq: set[tuple[Label, Label]] | None = None,
) -> FiniteQuantale:
    """Build a quantale from a join table or a <= table; both given, cross-check."""
    if join is None and leq is None:
        raise QuantaleError("need a join table or a leq table")
    if join is None:
        join = {}
        for a, b in itertools.product(elements, repeat=2):
            uppers = [
                c for c in elements
                if (a, c) in leq and (b, c) in leq
            ]
            least = [c for c in uppers if all((c, d) in leq for d in uppers)]
            if len(least) != 1:
                raise QuantaleError(f"no least upper bound for {(a, b)!r}")
            join[(a, b)] = least[0]
    elif leq is not None:
        derived = {(a, b) for a in elements for b in elements if join[(a, b)] == b}
        if derived != set(leq):
            raise QuantaleError("join table and leq table disagree")
    return FiniteQuantale(tuple(elements), join, dict(mul), unit)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[tuple[str, tuple], ...]
    flags: Mapping[str, bool] = field(default_factory=dict)


def validate_quantale(q: FiniteQuantale) -> ValidationReport:
    """Check every axiom; report the violations with witnesses, plus flags."""
    failures: list[tuple[str, tuple]] = []
    es = q.elements

    def check(name: str, ok: bool, witness: tuple) -> None:
        if not ok and not failures:
            failures.append((name, witness))

    for a, b in itertools.product(es, repeat=2):
        if (a, b) not in q.join_table:
            return ValidationReport(False, (("join table not total", (a, b)),), {})
        if (a, b) not in q.mul_table:
            return ValidationReport(False, (("mul table not total", (a, b)),), {})
        if q.join_table[(a, b)] not in es or q.mul_table[(a, b)] not in es:
            return ValidationReport(False, (("table value outside elements", (a, b)),), {})

    for a in es:
        check("join idempotent", q.join(a, a) == a, (a,))
    for a, b in itertools.product(es, repeat=2):
        check("join commutative", q.join(a, b) == q.join(b, a), (a, b))
    for a, b, c in itertools.product(es, repeat=3):
        check("join associative", q.join(q.join(a, b), c) == q.join(a, q.join(b, c)), (a, b, c))
        check("mul associative", q.mul(q.mul(a, b), c) == q.mul(a, q.mul(b, c)), (a, b, c))
    for a in es:
        check("unit neutral", q.mul(q.unit, a) == a and q.mul(a, q.unit) == a, (a,))
    for a, b in itertools.product(es, repeat=2):
        check("mul commutative", q.mul(a, b) == q.mul(b, a), (a, b))
    # finite sup-distributivity follows from binary + bottom cases
    bot = q.bottom
    for a in es:
        check("bottom absorbing", q.mul(bot, a) == bot and q.mul(a, bot) == bot, (a,))
    for a, b, c in itertools.product(es, repeat=3):
        check(
            "mul distributes over join",
            q.mul(q.join(a, b), c) == q.join(q.mul(a, c), q.mul(b, c)),
            (a, b, c),
        )

    ok = not failures
    flags = {
        "nontrivial": q.is_nontrivial(),
        "affine": q.is_affine(),
        "commutative": q.is_commutative(),
        "idempotent": q.is_idempotent(),
        "frame": q.is_frame(),
    } if ok else {}
    return ValidationReport(ok, tuple(failures), flags)


# -- built-in quantales ------------------------------------------------------------

def boolean_quantale() -> FiniteQuantale:
    """The two-element frame: join = or, mul = and, unit = top."""
    els = ("0", "1")
    join = {(a, b): "1" if "1" in (a, b) else "0" for a in els for b in els}
    mul = {(a, b): "1" if a == b == "1" else "0" for a in els for b in els}
    return FiniteQuantale(els, join, mul, "1")


def chain_min_quantale(n: int) -> FiniteQuantale:
    """The n-element chain 0 < 1 < ... < n-1 with mul = min; a frame."""
    els = tuple(str(i) for i in range(n))
    join = {(a, b): str(max(int(a), int(b))) for a in els for b in els}
    mul = {(a, b): str(min(int(a), int(b))) for a in els for b in els}
    return FiniteQuantale(els, join, mul, els[-1])


def lukasiewicz3_quantale() -> FiniteQuantale:
    """The 3-chain {0, 1/2, 1} with truncated addition x.y = max(0, x+y-1).

    Affine and commutative but not idempotent (1/2 . 1/2 = 0), hence not a
    frame: the witness for the failure of the modular relation law.
    """
    els = ("0", "1/2", "1")
    val = {"0": 0, "1/2": 1, "1": 2}
    name = {0: "0", 1: "1/2", 2: "1"}
    join = {(a, b): name[max(val[a], val[b])] for a in els for b in els}
    mul = {(a, b): name[max(0, val[a] + val[b] - 2)] for a in els for b in els}
    return FiniteQuantale(els, join, mul, "1")


BUILTIN_QUANTALES: dict[str, FiniteQuantale] = {
    "bool": boolean_quantale(),
    "chain3": chain_min_quantale(3),
    "chain4": chain_min_quantale(4),
    "lukasiewicz3": lukasiewicz3_quantale(),
}


# -- V-valued relations ----------------------------------------------------------------

@dataclass(frozen=True)
class VRelation:
    quantale: FiniteQuantale
    source: FiniteSet
    target: FiniteSet
    values: Mapping[tuple[Label, Label], Label]

    def __post_init__(self) -> None:
        vals = {}
        for x in self.source:
            for y in self.target:
                v = self.values.get((x, y), self.quantale.bottom)
                if v not in self.quantale.elements:
                    raise QuantaleError(f"value {v!r} not in quantale")
                vals[(x, y)] = v
        object.__setattr__(self, "values", vals)

    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(sorted(self.values.items(), key=repr))))

    def at(self, x: Label, y: Label) -> Label:
        return self.values[(x, y)]

    @staticmethod
    def identity(q: FiniteQuantale, x: FiniteSet) -> "VRelation":
        return VRelation(q, x, x, {(a, a): q.unit for a in x})

    @staticmethod
    def bottom(q: FiniteQuantale, x: FiniteSet, y: FiniteSet) -> "VRelation":
        return VRelation(q, x, y, {})

    @staticmethod
    def top(q: FiniteQuantale, x: FiniteSet, y: FiniteSet) -> "VRelation":
        return VRelation(q, x, y, {(a, b): q.top for a in x for b in y})

    def compose(self, other: "VRelation") -> "VRelation":
        """self after other."""
        if other.target != self.source or other.quantale != self.quantale:
            raise QuantaleError("composition mismatch")
        q = self.quantale
        vals = {
            (x, z): q.sup([q.mul(other.at(x, y), self.at(y, z)) for y in other.target])
            for x in other.source
            for z in self.target
        }
        return VRelation(q, other.source, self.target, vals)

    def dagger(self) -> "VRelation":
        return VRelation(
            self.quantale, self.target, self.source,
            {(y, x): v for (x, y), v in self.values.items()},
        )

    def join(self, other: "VRelation") -> "VRelation":
        self._check_parallel(other)
        q = self.quantale
        return VRelation(
            q, self.source, self.target,
            {k: q.join(v, other.values[k]) for k, v in self.values.items()},
        )

    def leq(self, other: "VRelation") -> bool:
        self._check_parallel(other)
        return all(self.quantale.leq(v, other.values[k]) for k, v in self.values.items())

    def _check_parallel(self, other: "VRelation") -> None:
        if self.source != other.source or self.target != other.target:
            raise QuantaleError("relations are not parallel")

    def times(self, other: "VRelation") -> "VRelation":
        q = self.quantale
        src = product_set(self.source, other.source)
        tgt = product_set(self.target, other.target)
        vals = {
            ((x1, x2), (y1, y2)): q.mul(self.at(x1, y1), other.at(x2, y2))
            for (x1, y1) in self.values
            for (x2, y2) in other.values
        }
        return VRelation(q, src, tgt, vals)


def all_vrelations(q: FiniteQuantale, a: FiniteSet, b: FiniteSet) -> Iterator[VRelation]:
    cells = list(itertools.product(a.labels, b.labels))
    for vals in itertools.product(q.elements, repeat=len(cells)):
        yield VRelation(q, a, b, dict(zip(cells, vals)))


def circ_embed(q: FiniteQuantale, r: BoolRelation) -> VRelation:
    """Unit-valued embedding of a boolean relation."""
    if not q.is_nontrivial():
        raise QuantaleError("embedding needs a nontrivial quantale")
    return VRelation(q, r.source, r.target, {p: q.unit for p in r.pairs})


def allegory_witness(q: FiniteQuantale) -> tuple[Label, VRelation] | None:
    """An element v with v not <= v.v.v, plus the 1x1 relation r with r not <= r r^dag r.

    Returns None exactly when no such element exists (e.g. for frames).
    """
    if not q.is_affine():
        raise QuantaleError("witness search is stated for affine quantales")
    one = fset_one()
    for v in q.elements:
        if not q.leq(v, q.mul(v, q.mul(v, v))):
            r = VRelation(q, one, one, {("*", "*"): v})
            return v, r
    return None


def fset_one() -> FiniteSet:
    return FiniteSet(("*",))


# -- V-valued powerset --------------------------------------------------------------------

@dataclass(frozen=True)
class VPowerData:
    quantale: FiniteQuantale
    base: FiniteSet
    power: FiniteSet      # labels are tuples of (x, value) pairs: functions X -> V
    omega: FiniteSet      # the object of truth values: the elements of V
    omega_effect: VRelation  # omega : V -> 1, (v, *) |-> v
    counit: VRelation     # membership-style counit P(X) -> X


def v_power_adjoint(q: FiniteQuantale, x: FiniteSet) -> VPowerData:
    functions = [
        tuple(zip(x.labels, vals))
        for vals in itertools.product(q.elements, repeat=len(x))
    ]
    power = FiniteSet(tuple(functions))
    omega = FiniteSet(q.elements)
    one = fset_one()
    omega_effect = VRelation(q, omega, one, {(v, "*"): v for v in q.elements})
    counit = VRelation(
        q, power, x,
        {(g, a): dict(g)[a] for g in functions for a in x},
    )
    return VPowerData(q, x, power, omega, omega_effect, counit)


def v_power_transpose(data: VPowerData, v: VRelation) -> BoolRelation:
    """The unique function f : A -> V^X with counit o f_embedded = v."""
    if v.target != data.base:
        raise QuantaleError("relation target is not the powerset base")
    from .finrel import function_graph

    return function_graph(
        v.source, data.power,
        lambda a: tuple((x, v.at(a, x)) for x in data.base),
    )
