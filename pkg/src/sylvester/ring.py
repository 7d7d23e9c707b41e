"""Sparse multivariate polynomials over the integers in indeterminates a[r,c].

A polynomial is a mapping from monomials to nonzero Python ``int``
coefficients.  Everything is kept in canonical form after every operation,
so two polynomials are mathematically equal exactly when their term maps
are equal.  That makes ``==`` the verification primitive for the rest of
the package.

Monomials are ordered by comparing their ``(variable, exponent)`` factor
lists lexicographically, variables in row-major order.  The constant
monomial sorts first.  Rendering follows this order:

>>> a11, a12, a21, a22 = (MultiPoly.var(r, c) for r, c in [(1, 1), (1, 2), (2, 1), (2, 2)])
>>> print(a11 * a22 - a12 * a21)
a[1,1]*a[2,2] - a[1,2]*a[2,1]
"""

from __future__ import annotations

import operator
from collections.abc import Iterable, Mapping
from typing import Union

from .errors import UnboundVariable


def _check_index(value, name):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")


class EntryVar(tuple):
    """The indeterminate a[row, col]; compares and hashes like ``(row, col)``."""

    __slots__ = ()

    def __new__(cls, row: int, col: int):
        _check_index(row, "row")
        _check_index(col, "col")
        return tuple.__new__(cls, (row, col))

    def __getnewargs__(self):
        return tuple(self)

    @property
    def row(self) -> int:
        return self[0]

    @property
    def col(self) -> int:
        return self[1]

    def __str__(self):
        return f"a[{self[0]},{self[1]}]"

    def __repr__(self):
        return f"EntryVar({self[0]}, {self[1]})"


class Monomial(tuple):
    """Sorted tuple of ``(EntryVar, exponent)`` pairs with positive exponents.

    The empty monomial is the constant 1.
    """

    __slots__ = ()

    def __new__(cls, factors: Iterable | Mapping = ()):
        if isinstance(factors, Mapping):
            factors = factors.items()
        powers: dict[EntryVar, int] = {}
        for var, exp in factors:
            if not isinstance(var, EntryVar):
                var = EntryVar(*var)
            if isinstance(exp, bool) or not isinstance(exp, int) or exp < 0:
                raise ValueError(f"exponent must be a nonnegative int, got {exp!r}")
            powers[var] = powers.get(var, 0) + exp
        return cls._raw(sorted((v, e) for v, e in powers.items() if e))

    @classmethod
    def _raw(cls, factors) -> Monomial:
        # caller guarantees sorted, merged, positive exponents
        return tuple.__new__(cls, factors)

    def __getnewargs__(self):
        return (tuple(self),)

    def __mul__(self, other: Monomial) -> Monomial:
        if not self:
            return other
        if not other:
            return self
        powers = dict(self)
        for var, exp in other:
            powers[var] = powers.get(var, 0) + exp
        return Monomial._raw(sorted(powers.items()))

    def degree(self, var=None) -> int:
        """Exponent of ``var``, or the total degree when ``var`` is None."""
        if var is None:
            return sum(e for _, e in self)
        for v, e in self:
            if v == var:
                return e
        return 0

    def variables(self) -> tuple[EntryVar, ...]:
        return tuple(v for v, _ in self)

    def split(self, keep) -> tuple[Monomial, Monomial]:
        """Split into (factors whose variable is in ``keep``, the rest)."""
        inside = [(v, e) for v, e in self if v in keep]
        outside = [(v, e) for v, e in self if v not in keep]
        return Monomial._raw(inside), Monomial._raw(outside)

    def __str__(self):
        if not self:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self)

    def __repr__(self):
        return f"Monomial({tuple((tuple(v), e) for v, e in self)!r})"


_ONE = Monomial._raw(())

Coercible = Union["MultiPoly", int]


class MultiPoly:
    """Immutable polynomial in ZZ[a[r,c]], stored in canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean: dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            if not isinstance(mono, Monomial):
                mono = Monomial(mono)
            if isinstance(coeff, bool) or not isinstance(coeff, int):
                raise TypeError(f"coefficients must be int, got {type(coeff).__name__}")
            total = clean.get(mono, 0) + coeff
            if total:
                clean[mono] = total
            else:
                clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> MultiPoly:
        # terms must already be canonical
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, value: int) -> MultiPoly:
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"constant must be int, got {type(value).__name__}")
        return cls._wrap({_ONE: value} if value else {})

    @classmethod
    def var(cls, row, col: int | None = None) -> MultiPoly:
        """``MultiPoly.var(r, c)`` or ``MultiPoly.var(EntryVar(r, c))``."""
        v = row if col is None else EntryVar(row, col)
        if not isinstance(v, EntryVar):
            v = EntryVar(*v)
        return cls._wrap({Monomial._raw(((v, 1),)): 1})

    @staticmethod
    def coerce(value: Coercible) -> MultiPoly:
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.constant(value)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        """Copy of the term map in monomial order."""
        return {m: self._terms[m] for m in sorted(self._terms)}

    def items(self):
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _ONE in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self._terms.get(_ONE, 0)

    def as_variable(self) -> EntryVar | None:
        """The variable if this polynomial is exactly ``a[r,c]``, else None."""
        if len(self._terms) != 1:
            return None
        (mono, coeff), = self._terms.items()
        if coeff != 1 or len(mono) != 1 or mono[0][1] != 1:
            return None
        return mono[0][0]

    def variables(self) -> set[EntryVar]:
        return {v for mono in self._terms for v, _ in mono}

    def degree(self, var=None) -> int:
        """Max exponent of ``var`` (or total degree); -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(mono.degree(var) for mono in self._terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _combine(self, other: Coercible, sign: int) -> MultiPoly:
        other = MultiPoly.coerce(other)
        if not other._terms:
            return self
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = out.get(mono, 0) + sign * coeff
            if total:
                out[mono] = total
            else:
                del out[mono]
        return MultiPoly._wrap(out)

    def __add__(self, other):
        if not isinstance(other, (MultiPoly, int)):
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (MultiPoly, int)):
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return MultiPoly.constant(other)._combine(self, -1)

    def __neg__(self):
        return MultiPoly._wrap({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def scale(self, factor: int) -> MultiPoly:
        if isinstance(factor, bool) or not isinstance(factor, int):
            raise TypeError("scale factor must be int")
        if not factor:
            return ZERO
        return MultiPoly._wrap({m: factor * c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        out: dict[Monomial, int] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                mono = ma * mb
                total = out.get(mono, 0) + ca * cb
                if total:
                    out[mono] = total
                else:
                    del out[mono]
        return MultiPoly._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if isinstance(exponent, bool) or not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative int")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exact_div(self, divisor: int) -> MultiPoly:
        """Divide every coefficient by ``divisor``; ValueError if not exact."""
        out = {}
        for mono, coeff in self._terms.items():
            q, r = divmod(coeff, divisor)
            if r:
                raise ValueError(f"{self} is not divisible by {divisor}")
            out[mono] = q
        return MultiPoly._wrap(out)

    # -- calculus and evaluation -------------------------------------------

    def diff(self, var) -> MultiPoly:
        """Formal partial derivative with respect to ``var``."""
        if not isinstance(var, EntryVar):
            var = EntryVar(*var)
        out: dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            for pos, (v, e) in enumerate(mono):
                if v == var:
                    if e == 1:
                        reduced = Monomial._raw(mono[:pos] + mono[pos + 1:])
                    else:
                        reduced = Monomial._raw(mono[:pos] + ((v, e - 1),) + mono[pos + 1:])
                    # distinct monomials stay distinct after removing one factor of var
                    out[reduced] = coeff * e
                    break
        return MultiPoly._wrap(out)

    def evaluate(self, assignment: Mapping) -> int:
        """Exact integer value; every variable must be bound."""
        total = 0
        for mono, coeff in self._terms.items():
            value = coeff
            for var, exp in mono:
                try:
                    x = assignment[var]
                except KeyError:
                    raise UnboundVariable(f"no value for {var}") from None
                value *= x**exp
            total += value
        return total

    def substitute(self, assignment: Mapping) -> MultiPoly:
        """Replace the bound variables by integers; unbound ones stay symbolic."""
        out = ZERO
        for mono, coeff in self._terms.items():
            value = coeff
            rest = []
            for var, exp in mono:
                if var in assignment:
                    value *= assignment[var] ** exp
                else:
                    rest.append((var, exp))
            if value:
                out = out + MultiPoly._wrap({Monomial._raw(rest): value})
        return out

    def collect(self, variables) -> dict[Monomial, MultiPoly]:
        """Group terms by their monomial in ``variables``.

        Returns ``{pattern: coefficient}`` such that
        ``self == sum(pattern * coefficient)`` and no coefficient involves
        any of ``variables``.
        """
        keep = set(variables)
        groups: dict[Monomial, dict[Monomial, int]] = {}
        for mono, coeff in self._terms.items():
            pattern, rest = mono.split(keep)
            groups.setdefault(pattern, {})[rest] = coeff
        return {p: MultiPoly._wrap(groups[p]) for p in sorted(groups)}

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, coeff) in enumerate(self.items()):
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = str(mono)
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"MultiPoly('{self}')"


ZERO = MultiPoly._wrap({})
ONE = MultiPoly._wrap({_ONE: 1})

_ARITH = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
}


def poly_arith(op: str, p: MultiPoly, q: Coercible | None = None) -> MultiPoly:
    """Dispatch one of ``add``, ``sub``, ``mul``, ``neg``, ``scale``."""
    if op == "neg":
        return -p
    if op == "scale":
        return p.scale(q)
    try:
        fn = _ARITH[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(p, MultiPoly.coerce(q))


def partial_derivative(p: MultiPoly, v) -> MultiPoly:
    return p.diff(v)


def poly_eval(p: MultiPoly, assignment: Mapping) -> int:
    return p.evaluate(assignment)
