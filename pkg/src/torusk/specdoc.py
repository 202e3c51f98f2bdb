"""Input documents and built-in example generators.

A spec document is a JSON object::

    {
      "schema": "torusk/spec@1",          optional
      "n": 2,                             torus rank
      "m": 3,                             number of nerve vertices
      "names": ["Q1", "Q2", "Q3"],        optional facet labels
      "facets": [[1, 2], [1, 3], [2, 3]], nerve facets, 1-based vertices
      "lambda": [[1, 0], [0, 1], [-1, -1]],
      "options": {                        optional, all keys optional
        "order": "degrevlex",             degrevlex | deglex | lex
        "convention": "minus",            minus | plus
        "extra_t": [[1, 1]],              additional covectors
        "bound": null                     degree bound for the Smith fallback
      }
    }
"""

from __future__ import annotations

import ast
import json
from dataclasses import dataclass, replace
from itertools import combinations, product as cartesian
from typing import Any, Sequence

from .charmap import CharMatrix
from .errors import InputError
from .nerve import NerveComplex
from .polyz.poly import TERM_ORDERS
from .presentation import CONVENTIONS, ManifoldSpec

SCHEMA = "torusk/spec@1"
_TOP_KEYS = {"schema", "n", "m", "names", "facets", "lambda", "options"}
_OPTION_KEYS = {"order", "convention", "extra_t", "bound"}


@dataclass(frozen=True)
class SpecDocument:
    n: int
    m: int
    facets: tuple[tuple[int, ...], ...]
    lam: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None
    order: str = "degrevlex"
    convention: str = "minus"
    extra_t: tuple[tuple[int, ...], ...] = ()
    bound: int | None = None

    def to_manifold(self) -> ManifoldSpec:
        return ManifoldSpec(NerveComplex(self.m, self.facets),
                            CharMatrix(self.lam, self.n), self.names)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"schema": SCHEMA, "n": self.n, "m": self.m}
        if self.names is not None:
            out["names"] = list(self.names)
        out["facets"] = [list(f) for f in self.facets]
        out["lambda"] = [list(r) for r in self.lam]
        out["options"] = {"order": self.order, "convention": self.convention,
                          "extra_t": [list(t) for t in self.extra_t],
                          "bound": self.bound}
        return out


def _int(value, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"expected an integer, got {value!r}", field)
    return value


def _int_rows(value, field: str, width: int | None = None) -> tuple[tuple[int, ...], ...]:
    if not isinstance(value, list):
        raise InputError("expected a list of integer lists", field)
    rows = []
    for i, row in enumerate(value):
        f = f"{field}[{i}]"
        if not isinstance(row, list):
            raise InputError("expected a list of integers", f)
        r = tuple(_int(x, f) for x in row)
        if width is not None and len(r) != width:
            raise InputError(f"has length {len(r)}, expected {width}", f)
        rows.append(r)
    return tuple(rows)


def _line_of(text: str, key: str) -> int | None:
    needle = f'"{key}"'
    for i, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return i
    return None


def parse_spec(text: str) -> SpecDocument:
    """Parse and check a spec document; raises :class:`InputError`."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, line=exc.lineno) from None
    try:
        return _from_dict(data)
    except InputError as exc:
        if exc.line is None and exc.field:
            top = exc.field.split("[")[0].split(".")[0]
            line = _line_of(text, top)
            if line is not None:
                raise InputError(exc.message, exc.field, line) from None
        raise


def _from_dict(data) -> SpecDocument:
    if not isinstance(data, dict):
        raise InputError("document must be a JSON object")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise InputError("unknown field", sorted(unknown)[0])
    if "schema" in data and data["schema"] != SCHEMA:
        raise InputError(f"unsupported schema {data['schema']!r}", "schema")
    for key in ("n", "m", "facets", "lambda"):
        if key not in data:
            raise InputError("missing required field", key)
    n = _int(data["n"], "n")
    m = _int(data["m"], "m")
    if n < 1:
        raise InputError("torus rank must be at least 1", "n")
    if m < 1:
        raise InputError("vertex count must be at least 1", "m")
    facets = _int_rows(data["facets"], "facets")
    for i, f in enumerate(facets):
        for v in f:
            if not 1 <= v <= m:
                raise InputError(f"vertex {v} out of range 1..{m} (vertices are 1-based)",
                                 f"facets[{i}]")
        if len(set(f)) != len(f):
            raise InputError("repeated vertex", f"facets[{i}]")
    lam = _int_rows(data["lambda"], "lambda", n)
    if len(lam) != m:
        raise InputError(f"has {len(lam)} rows, expected m={m}", "lambda")
    names = data.get("names")
    if names is not None:
        if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
            raise InputError("expected a list of strings", "names")
        if len(names) != m:
            raise InputError(f"has {len(names)} entries, expected m={m}", "names")
        names = tuple(names)
    opts = data.get("options") or {}
    if not isinstance(opts, dict):
        raise InputError("expected an object", "options")
    unknown = set(opts) - _OPTION_KEYS
    if unknown:
        raise InputError("unknown option", f"options.{sorted(unknown)[0]}")
    order = opts.get("order", "degrevlex")
    if order not in TERM_ORDERS:
        raise InputError(f"unknown term order {order!r}", "options.order")
    convention = opts.get("convention", "minus")
    if convention not in CONVENTIONS:
        raise InputError(f"unknown sign convention {convention!r}", "options.convention")
    extra_t = _int_rows(opts.get("extra_t", []), "options.extra_t", n)
    bound = opts.get("bound")
    if bound is not None:
        bound = _int(bound, "options.bound")
        if bound < 1:
            raise InputError("must be at least 1", "options.bound")
    return SpecDocument(n, m, facets, lam, names, order, convention, extra_t, bound)


def serialize_spec(doc: SpecDocument) -> str:
    """Deterministic text form; ``parse_spec`` inverts it."""
    d = doc.to_dict()
    lines = ["{"]
    items = list(d.items())
    for i, (k, v) in enumerate(items):
        comma = "," if i < len(items) - 1 else ""
        if k == "options":
            opt_items = list(v.items())
            lines.append(f'  "{k}": {{')
            for j, (ok, ov) in enumerate(opt_items):
                oc = "," if j < len(opt_items) - 1 else ""
                lines.append(f'    "{ok}": {json.dumps(ov)}{oc}')
            lines.append("  }" + comma)
        else:
            lines.append(f'  "{k}": {json.dumps(v)}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- example generators -------------------------------------------------

def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(i == j) for j in range(n))


def simplex(n: int) -> SpecDocument:
    """``CP^n``: boundary of the n-simplex with rows ``e_1..e_n, -(e_1+..+e_n)``."""
    if n < 1:
        raise ValueError("simplex(n) needs n >= 1")
    facets = tuple(combinations(range(1, n + 2), n))
    lam = tuple(_unit(n, i) for i in range(n)) + (tuple([-1] * n),)
    return SpecDocument(n, n + 1, facets, lam)


def hirzebruch(k: int) -> SpecDocument:
    """Hirzebruch surface: square nerve, rows ``(1,0),(0,1),(-1,k),(0,-1)``."""
    facets = ((1, 2), (2, 3), (3, 4), (1, 4))
    lam = ((1, 0), (0, 1), (-1, k), (0, -1))
    return SpecDocument(2, 4, facets, lam)


def bott(upper: Sequence[Sequence[int]]) -> SpecDocument:
    """Bott tower on the n-cube.

    Vertices ``i`` and ``n+i`` are opposite facets of the cube; rows are
    ``e_1..e_n`` followed by the negated rows of ``upper``, which must be
    upper triangular with diagonal entries +-1.
    """
    n = len(upper)
    if n < 1 or any(len(r) != n for r in upper):
        raise ValueError("bott() needs a nonempty square matrix")
    for i in range(n):
        if abs(upper[i][i]) != 1:
            raise ValueError("bott() needs diagonal entries +-1")
        if any(upper[i][j] for j in range(i)):
            raise ValueError("bott() needs an upper-triangular matrix")
    facets = tuple(tuple(sorted(i + 1 + n * c for i, c in enumerate(choice)))
                   for choice in cartesian((0, 1), repeat=n))
    lam = tuple(_unit(n, i) for i in range(n)) + tuple(tuple(-x for x in r) for r in upper)
    return SpecDocument(n, 2 * n, facets, lam)


def product(a: SpecDocument, b: SpecDocument) -> SpecDocument:
    """Join of nerves with block-diagonal characteristic matrix."""
    facets = tuple(fa + tuple(v + a.m for v in fb) for fa in a.facets for fb in b.facets)
    lam = (tuple(r + (0,) * b.n for r in a.lam)
           + tuple((0,) * a.n + r for r in b.lam))
    return SpecDocument(a.n + b.n, a.m + b.m, facets, lam)


def disjoint_squares() -> SpecDocument:
    """Two disjoint 4-cycles: nonsingular but not shellable."""
    h = hirzebruch(0)
    facets = h.facets + tuple(tuple(v + 4 for v in f) for f in h.facets)
    return SpecDocument(2, 8, facets, h.lam + h.lam)


GENERATORS = {
    "simplex": simplex,
    "hirzebruch": hirzebruch,
    "bott": bott,
    "product": product,
    "disjoint_squares": disjoint_squares,
}


def generate_example(name: str, *args) -> SpecDocument:
    try:
        gen = GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown example {name!r}; expected one of {sorted(GENERATORS)}") from None
    return gen(*args)


def example_from_expression(expr: str) -> SpecDocument:
    """Build an example from text such as ``product(simplex(1), hirzebruch(2))``.

    Only calls of the known generators with integer / nested-list literals are
    accepted; nothing is evaluated.
    """
    try:
        tree = ast.parse(expr.strip(), mode="eval")
    except SyntaxError as exc:
        raise InputError(f"cannot parse example expression: {exc.msg}") from None

    def build(node):
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
            if node.keywords:
                raise InputError("keyword arguments are not supported")
            args = [build(a) for a in node.args]
            try:
                return generate_example(node.func.id, *args)
            except (TypeError, ValueError) as exc:
                raise InputError(f"{node.func.id}: {exc}") from None
        if isinstance(node, ast.Name):
            return build(ast.Call(node, [], []))
        try:
            return ast.literal_eval(node)
        except ValueError:
            raise InputError(f"unsupported expression {ast.unparse(node)!r}") from None

    doc = build(tree.body)
    if not isinstance(doc, SpecDocument):
        raise InputError("expression does not produce an example")
    return doc


def with_options(doc: SpecDocument, **changes) -> SpecDocument:
    changes = {k: v for k, v in changes.items() if v is not None}
    return replace(doc, **changes)
