"""Sparse multivariate polynomials with integer coefficients."""

from __future__ import annotations

from math import comb
from typing import Callable, Iterable, Mapping

Exp = tuple[int, ...]


def _degrevlex(e: Exp) -> tuple[int, ...]:
    return (sum(e),) + tuple(-x for x in reversed(e))


def _deglex(e: Exp) -> tuple[int, ...]:
    return (sum(e),) + e


def _lex(e: Exp) -> tuple[int, ...]:
    return e


# Larger key means larger monomial; v1 > v2 > ... > vm in every order.
TERM_ORDERS: dict[str, Callable[[Exp], tuple[int, ...]]] = {
    "degrevlex": _degrevlex,
    "deglex": _deglex,
    "lex": _lex,
}


def order_key(order: str) -> Callable[[Exp], tuple[int, ...]]:
    try:
        return TERM_ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown term order {order!r}; "
                         f"expected one of {sorted(TERM_ORDERS)}") from None


def exp_add(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exp, b: Exp) -> Exp:
    return tuple(x - y for x, y in zip(a, b))


def exp_divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


class IntPoly:
    """Polynomial in ``v1..v_nvars`` over Z, stored as ``{exponent: coeff}``.

    Instances are treated as immutable; zero coefficients are never stored.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exp, int] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != nvars:
                        raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                    clean[tuple(e)] = int(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exp, int]) -> "IntPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "IntPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c: int, nvars: int) -> "IntPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, j: int, nvars: int) -> "IntPoly":
        """The variable ``v_j`` (1-based)."""
        if not 1 <= j <= nvars:
            raise ValueError(f"variable index {j} out of range 1..{nvars}")
        e = [0] * nvars
        e[j - 1] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exp: Iterable[int], c: int = 1) -> "IntPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    @classmethod
    def squarefree(cls, support: Iterable[int], nvars: int) -> "IntPoly":
        """Product of the variables indexed (1-based) by ``support``."""
        e = [0] * nvars
        for j in support:
            e[j - 1] = 1
        return cls._raw(nvars, {tuple(e): 1})

    def _coerce(self, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return IntPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return IntPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPoly.zero(self.nvars)
            return IntPoly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return IntPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = IntPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_term(self, exp: Exp, c: int) -> "IntPoly":
        return IntPoly._raw(self.nvars, {exp_add(e, exp): v * c
                                         for e, v in self.terms.items()} if c else {})

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other, self.nvars)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self, order: str = "degrevlex") -> list[tuple[Exp, int]]:
        key = order_key(order)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: str = "degrevlex") -> tuple[Exp, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order_key(order)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def truncate(self, max_degree: int) -> "IntPoly":
        return IntPoly._raw(self.nvars, {e: c for e, c in self.terms.items()
                                         if sum(e) <= max_degree})

    def homogeneous_part(self, degree: int) -> "IntPoly":
        return IntPoly._raw(self.nvars, {e: c for e, c in self.terms.items()
                                         if sum(e) == degree})

    def substitute_sign(self) -> "IntPoly":
        """Image under the involution ``v_j -> -v_j``."""
        return IntPoly._raw(self.nvars, {e: -c if sum(e) % 2 else c
                                         for e, c in self.terms.items()})

    def format(self, order: str = "degrevlex", var: str = "v") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(f"{var}{i + 1}" if k == 1 else f"{var}{i + 1}^{k}"
                            for i, k in enumerate(e) if k)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"IntPoly({self.nvars}, {self.format()!r})"


def one_minus_power(j: int, k: int, nvars: int, sign: int = -1) -> IntPoly:
    """Binomial expansion of ``(1 + sign*v_j)^k``."""
    terms = {}
    for i in range(k + 1):
        e = [0] * nvars
        e[j - 1] = i
        terms[tuple(e)] = comb(k, i) * sign ** i
    return IntPoly(nvars, terms)
