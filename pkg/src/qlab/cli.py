"""Command-line front end.

Subcommands:
  check    run law suites for an instance and report pass/fail
  compute  evaluate an expression over named morphisms loaded from files
  kernel   dagger kernel of a quantum relation
  neg      complement (boolean) or orthocomplement (quantum) of a relation
  power    power data for an object: powerset, valued predicates, or the
           classical truth-value object
  embed    embed a plain boolean relation into a valued or quantum instance

Inputs are file paths or inline JSON.  Exit codes: 0 success, 1 a law suite
found a failure, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import calculus, core, lawcheck, power as power_mod, qrel as qrel_mod, serialize
from .exact import ExactError
from .finrel import FinRelError
from .matr import MatrError, qrel_instance, rel_instance, vrel_instance
from .orders import OrderError
from .quantale import BUILTIN_QUANTALES, FiniteQuantale, QuantaleError, validate_quantale

INPUT_ERRORS = (
    serialize.SerializeError,
    ExactError,
    FinRelError,
    MatrError,
    OrderError,
    QuantaleError,
    core.StructureError,
    json.JSONDecodeError,
    ValueError,
    OSError,
    KeyError,
)


class CliError(Exception):
    pass


def _read_json(spec: str):
    text = spec.strip()
    if text.startswith("{") or text.startswith("["):
        return json.loads(text)
    return json.loads(Path(spec).read_text())


def _load_quantale(spec: str | None) -> FiniteQuantale:
    if spec is None:
        return BUILTIN_QUANTALES["chain3"]
    if spec in BUILTIN_QUANTALES:
        return BUILTIN_QUANTALES[spec]
    q = serialize.quantale_from_json(_read_json(spec))
    report = validate_quantale(q)
    if not report.ok:
        raise CliError(f"invalid quantale: {report.failures[0]}")
    return q


def _instance(kind: str, quantale_spec: str | None):
    if kind == "rel":
        return rel_instance()
    if kind == "vrel":
        return vrel_instance(_load_quantale(quantale_spec))
    if kind == "qrel":
        return qrel_instance()
    raise CliError(f"unknown instance {kind!r}")


def _emit(args, doc, text: str | None = None) -> None:
    if args.format == "text" and text is not None:
        payload = text
    else:
        payload = serialize.dumps(doc)
    if args.out:
        Path(args.out).write_text(payload + "\n")
    else:
        print(payload)


# -- expression evaluation --------------------------------------------------------

_FUNCTIONS = {
    "compose": 2, "dagger": 1, "join": 2, "meet": 2, "tensor": 2,
    "name": 1, "coname": 1, "star": 1, "trace": 1, "sum": 2,
}

_INFIX = {"∘": "compose", "⊗": "tensor", "∧": "meet", "∨": "join"}


def _tokenize(src: str) -> list[str]:
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch in "(),":
            tokens.append(ch)
            i += 1
        elif ch in _INFIX:
            tokens.append(ch)
            i += 1
        elif ch.isalnum() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(src[i:j])
            i = j
        else:
            raise CliError(f"unexpected character {ch!r} in expression")
    return tokens


class _Parser:
    """Infix precedence, loosest first: v, ^, tensor, then composition."""

    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise CliError(f"expected {expected or 'a token'}, got {tok!r}")
        self.pos += 1
        return tok

    def parse(self):
        node = self.level(0)
        if self.peek() is not None:
            raise CliError(f"unexpected trailing token {self.peek()!r}")
        return node

    LEVELS = ["∨", "∧", "⊗", "∘"]

    def level(self, n):
        if n == len(self.LEVELS):
            return self.atom()
        op = self.LEVELS[n]
        node = self.level(n + 1)
        while self.peek() == op:
            self.take()
            rhs = self.level(n + 1)
            node = (_INFIX[op], node, rhs)
        return node

    def atom(self):
        tok = self.take()
        if tok == "(":
            node = self.level(0)
            self.take(")")
            return node
        if tok in _FUNCTIONS and self.peek() == "(":
            self.take("(")
            args = [self.level(0)]
            while self.peek() == ",":
                self.take(",")
                args.append(self.level(0))
            self.take(")")
            if len(args) != _FUNCTIONS[tok]:
                raise CliError(f"{tok} takes {_FUNCTIONS[tok]} argument(s)")
            return (tok, *args)
        if tok in "(),":
            raise CliError(f"unexpected token {tok!r}")
        return ("ref", tok)


def _eval_expr(node, inst, env):
    op = node[0]
    if op == "ref":
        name = node[1]
        if name not in env:
            raise CliError(f"unknown name {name!r}; load it with --load")
        return env[name]
    args = [_eval_expr(a, inst, env) for a in node[1:]]
    if op == "compose":
        return inst.compose(args[0], args[1])
    if op == "dagger":
        return inst.dagger(args[0])
    if op == "join":
        return inst.join2(args[0], args[1])
    if op == "meet":
        return inst.meet2(args[0], args[1])
    if op == "tensor":
        return inst.tensor_mor(args[0], args[1])
    if op == "name":
        return core.name_of(inst, args[0])
    if op == "coname":
        return core.coname_of(inst, args[0])
    if op == "star":
        return core.star_of(inst, args[0])
    if op == "trace":
        return core.trace_of(inst, args[0])
    if op == "sum":
        return calculus.superposition_sum(inst, args[0], args[1])
    raise CliError(f"unknown operation {op!r}")


# -- subcommands --------------------------------------------------------------------

def cmd_check(args) -> int:
    quantale = _load_quantale(args.quantale) if args.instance == "vrel" else None
    suites = args.suite or None
    reports = lawcheck.run_all(
        args.instance, seed=args.seed, quantale=quantale, suites=suites,
        samples=args.samples,
    )
    doc = lawcheck.render_json(reports)
    _emit(args, doc, lawcheck.render_text(reports))
    return 0 if doc["ok"] else 1


def cmd_compute(args) -> int:
    inst = _instance(args.instance, args.quantale)
    env = {}
    for item in args.load or []:
        if "=" not in item:
            raise CliError("--load expects NAME=FILE_OR_JSON")
        name, spec = item.split("=", 1)
        env[name] = serialize.morphism_from_json(args.instance, inst, _read_json(spec))
    node = _Parser(_tokenize(args.expression)).parse()
    result = _eval_expr(node, inst, env)
    _emit(args, serialize.morphism_to_json(args.instance, inst, result))
    return 0


def cmd_kernel(args) -> int:
    inst = qrel_instance()
    f = serialize.qrelation_from_json(inst, _read_json(args.relation))
    kernel, inclusion = qrel_mod.dagger_kernel([f])
    doc = {
        "kernel": serialize.qset_to_json(kernel),
        "inclusion": serialize.qrelation_to_json(inclusion),
    }
    _emit(args, doc)
    return 0


def cmd_neg(args) -> int:
    inst = _instance(args.instance, args.quantale)
    f = serialize.morphism_from_json(args.instance, inst, _read_json(args.relation))
    if args.instance == "rel":
        unit = inst.base.quantale.unit
        keys = {
            (a, b) for a, _ in f.source.components for b, _ in f.target.components
        } - {k for k, _ in f.blocks}
        result = inst.mor(f.source, f.target, {k: unit for k in keys})
    elif args.instance == "qrel":
        result = qrel_mod.orthocomplement(f)
    else:
        raise CliError("neg is defined for the rel and qrel instances")
    _emit(args, serialize.morphism_to_json(args.instance, inst, result))
    return 0


def cmd_power(args) -> int:
    doc = _read_json(args.object)
    if args.instance == "rel":
        a = serialize.set_from_json(doc)
        data = power_mod.powerset_adjoint(a)
        out = {
            "power": serialize.set_to_json(data.power),
            "membership": serialize.relation_to_json(data.membership),
            "singleton": serialize.relation_to_json(data.singleton),
        }
    elif args.instance == "vrel":
        q = _load_quantale(args.quantale)
        a = serialize.set_from_json(doc)
        data = power_mod.v_power_adjoint(q, a)
        out = {
            "power": serialize.set_to_json(data.power),
            "omega": serialize.set_to_json(data.omega),
            "counit": serialize.vrelation_to_json(data.counit),
            "omega_effect": serialize.vrelation_to_json(data.omega_effect),
        }
    else:
        inst = qrel_instance()
        x = serialize.qset_from_json(inst, doc)
        om = qrel_mod.qrel_omega()
        out = {
            "object": serialize.qset_to_json(x),
            "omega": serialize.qset_to_json(om.total),
            "injection_false": serialize.qrelation_to_json(om.injections[0]),
            "injection_true": serialize.qrelation_to_json(om.injections[1]),
        }
    _emit(args, out)
    return 0


def cmd_embed(args) -> int:
    r = serialize.relation_from_json(_read_json(args.relation))
    if args.instance == "rel":
        raise CliError("embed targets the vrel or qrel instance")
    inst = _instance(args.instance, args.quantale)
    result = calculus.quote_morphism(inst, r)
    _emit(args, serialize.morphism_to_json(args.instance, inst, result))
    return 0


# -- argument parsing -----------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlab",
        description="Exact dagger compact quantaloids: relations, valued "
                    "relations and quantum relations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, instance_default=None):
        p.add_argument("--instance", choices=["rel", "vrel", "qrel"],
                       default=instance_default, required=instance_default is None)
        p.add_argument("--quantale", default=None,
                       help="builtin name (bool, chain3, chain4, lukasiewicz3) "
                            "or a quantale JSON file")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("check", help="run law suites")
    common(p)
    p.add_argument("--suite", action="append", default=None,
                   help="suite name (repeatable); defaults to all")
    p.add_argument("--samples", type=int, default=60)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("compute", help="evaluate an expression over loaded morphisms")
    common(p)
    p.add_argument("expression")
    p.add_argument("--load", action="append", default=None, metavar="NAME=FILE")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("kernel", help="dagger kernel of a quantum relation")
    common(p, instance_default="qrel")
    p.add_argument("relation", help="quantum relation file or inline JSON")
    p.set_defaults(fn=cmd_kernel)

    p = sub.add_parser("neg", help="complement / orthocomplement of a relation")
    common(p)
    p.add_argument("relation")
    p.set_defaults(fn=cmd_neg)

    p = sub.add_parser("power", help="power data for an object")
    common(p)
    p.add_argument("object", help="set or quantum set file or inline JSON")
    p.set_defaults(fn=cmd_power)

    p = sub.add_parser("embed", help="embed a boolean relation into an instance")
    common(p)
    p.add_argument("relation", help="boolean relation file or inline JSON")
    p.set_defaults(fn=cmd_embed)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
