"""Exact sparse multivariate polynomials over the rationals.

Every symbolic identity in this package is decided here: an identity holds
iff its residual polynomial has no terms left after cancellation, so the
representation is exact end to end.

  coefficient   int or fractions.Fraction (reduced, positive denominator)
  monomial      packed integer key, five bits of exponent per variable
  polynomial    dict mapping monomial keys to nonzero coefficients

Variables live in a ring context (PolyRing) and come in three kinds: base
coordinates x^i and y^i, which support partial derivation, and section
variables (components of sections, matrix unknowns, scalar parameters),
which are formal parameters and may not be derived.  The canonical term
order is graded lexicographic in the (kind, index) variable order.

Five exponent bits per variable means individual exponents must stay below
32; nothing in this package exceeds ten.  Coefficients stay plain ints as
long as the inputs are integral, which keeps the identity suites fast.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]

_SHIFT = 5
_MASK = (1 << _SHIFT) - 1


class RingMismatch(ValueError):
    """Raised when polynomials from different ring contexts are combined."""


class VarKind(enum.IntEnum):
    """Variable classes, listed in canonical order."""

    BASE_X = 0
    BASE_Y = 1
    SECTION = 2


@dataclass(frozen=True)
class Variable:
    kind: VarKind
    index: int
    name: str


class PolyRing:
    """Ordered set of variables shared by a family of polynomials.

    Base variables are named ``x0..x{d-1}`` and ``y0..y{d-1}``; section
    variables keep the names they are registered with, in registration
    order.  Two polynomials interoperate only if they share the same ring
    object.
    """

    def __init__(self, base_dim: int = 0, sections: Iterable[str] = ()):
        variables = [Variable(VarKind.BASE_X, i, "x%d" % i) for i in range(base_dim)]
        variables += [Variable(VarKind.BASE_Y, i, "y%d" % i) for i in range(base_dim)]
        for pos, name in enumerate(sections):
            variables.append(Variable(VarKind.SECTION, pos, str(name)))
        self.base_dim = base_dim
        self.variables = tuple(variables)
        self._ordinals = {v.name: o for o, v in enumerate(self.variables)}
        if len(self._ordinals) != len(self.variables):
            raise ValueError("duplicate variable name in ring")
        self.zero = Polynomial(self, {})
        self.one = Polynomial(self, {0: 1})

    def __repr__(self):
        return "PolyRing(base_dim=%d, nvars=%d)" % (self.base_dim, len(self.variables))

    def ordinal(self, var) -> int:
        name = var.name if isinstance(var, Variable) else var
        try:
            return self._ordinals[name]
        except KeyError:
            raise KeyError("variable %r not in ring" % name) from None

    def variable(self, var) -> Variable:
        return self.variables[self.ordinal(var)]

    def poly(self, var) -> "Polynomial":
        """The given variable as a degree-one polynomial."""
        return Polynomial(self, {1 << (_SHIFT * self.ordinal(var)): 1})

    def x(self, i: int) -> "Polynomial":
        return self.poly("x%d" % i)

    def y(self, i: int) -> "Polynomial":
        return self.poly("y%d" % i)

    def const(self, value) -> "Polynomial":
        value = _coerce(value)
        return Polynomial(self, {0: value} if value else {})

    def exponents(self, key: int) -> tuple:
        """Decode a monomial key into one exponent per variable."""
        exps = []
        for _ in self.variables:
            exps.append(key & _MASK)
            key >>= _SHIFT
        return tuple(exps)


def _coerce(value) -> Scalar:
    if isinstance(value, (int, Fraction)):
        return value
    raise TypeError("expected int or Fraction, got %r" % type(value).__name__)


def _total_degree(key: int) -> int:
    deg = 0
    while key:
        deg += key & _MASK
        key >>= _SHIFT
    return deg


class Polynomial:
    """Immutable-by-convention sparse polynomial over a PolyRing.

    The term dict is owned by the instance and never mutated after
    construction; all operations build fresh dicts, so values are safe to
    share across threads.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get(0, 0)

    def total_degree(self):
        """Largest total degree among terms, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(_total_degree(k) for k in self.terms)

    def min_total_degree(self):
        """Smallest total degree among terms, or None for the zero polynomial."""
        if not self.terms:
            return None
        return min(_total_degree(k) for k in self.terms)

    def variables(self) -> set:
        """Names of the variables that actually occur."""
        seen = set()
        for key in self.terms:
            o = 0
            while key:
                if key & _MASK:
                    seen.add(self.ring.variables[o].name)
                key >>= _SHIFT
                o += 1
        return seen

    def depends_on_base(self) -> bool:
        nbase = 2 * self.ring.base_dim
        if nbase == 0:
            return False
        base_mask = (1 << (_SHIFT * nbase)) - 1
        return any(key & base_mask for key in self.terms)

    # -- ring operations ----------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring is not other.ring:
            raise RingMismatch("polynomials belong to different rings")

    def __add__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            terms = dict(self.terms)
            for k, c in other.terms.items():
                s = terms.get(k, 0) + c
                if s:
                    terms[k] = s
                else:
                    terms.pop(k, None)
            return Polynomial(self.ring, terms)
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            terms = dict(self.terms)
            s = terms.get(0, 0) + other
            if s:
                terms[0] = s
            else:
                terms.pop(0, None)
            return Polynomial(self.ring, terms)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            a, b = self.terms, other.terms
            if len(a) > len(b):
                a, b = b, a
            out: dict = {}
            for k1, c1 in a.items():
                for k2, c2 in b.items():
                    k = k1 + k2
                    s = out.get(k, 0) + c1 * c2
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
            return Polynomial(self.ring, out)
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero
            return Polynomial(self.ring, {k: c * other for k, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (Fraction(1, other) if isinstance(other, int) else 1 / other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = self.ring.one
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring is other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {0: other} or self.terms == {0: Fraction(other)}
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None  # mutable dict inside; not hashable

    # -- calculus and evaluation ----------------------------------------

    def derive(self, var) -> "Polynomial":
        """Formal partial derivative in a base variable.

        Section variables are parameters, not coordinates, so derivation
        with respect to them is rejected.
        """
        v = self.ring.variable(var)
        if v.kind is VarKind.SECTION:
            raise ValueError("cannot derive in section variable %r" % v.name)
        shift = _SHIFT * self.ring.ordinal(v)
        out = {}
        for k, c in self.terms.items():
            e = (k >> shift) & _MASK
            if e:
                out[k - (1 << shift)] = c * e
        return Polynomial(self.ring, out)

    def evaluate(self, assignment: Mapping) -> Fraction:
        """Exact value at a point; the assignment must cover every variable."""
        vals = self._assignment_vector(assignment)
        total = Fraction(0)
        for key, c in self.terms.items():
            acc = Fraction(c)
            o = 0
            while key:
                e = key & _MASK
                if e:
                    val = vals[o]
                    if val is None:
                        raise ValueError(
                            "missing variable %r in assignment" % self.ring.variables[o].name
                        )
                    acc *= val ** e
                key >>= _SHIFT
                o += 1
            total += acc
        return total

    def substitute(self, assignment: Mapping) -> "Polynomial":
        """Substitute rational values for a subset of the variables."""
        vals = self._assignment_vector(assignment)
        out: dict = {}
        for key, c in self.terms.items():
            acc = c
            rest = 0
            o = 0
            k = key
            while k:
                e = k & _MASK
                if e:
                    val = vals[o]
                    if val is None:
                        rest += e << (_SHIFT * o)
                    else:
                        acc = acc * val ** e
                k >>= _SHIFT
                o += 1
            if acc:
                s = out.get(rest, 0) + acc
                if s:
                    out[rest] = s
                else:
                    out.pop(rest, None)
        return Polynomial(self.ring, out)

    def _assignment_vector(self, assignment: Mapping):
        vals = [None] * len(self.ring.variables)
        for name, value in assignment.items():
            if isinstance(name, Variable):
                name = name.name
            vals[self.ring.ordinal(name)] = Fraction(value)
        return vals

    # -- canonical display ----------------------------------------------

    def sorted_terms(self):
        """Terms in graded lexicographic order, highest degree first."""
        decorated = []
        for key, c in self.terms.items():
            exps = self.ring.exponents(key)
            decorated.append((-_total_degree(key), tuple(-e for e in exps), exps, c))
        decorated.sort()
        return [(exps, c) for _, _, exps, c in decorated]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for o, e in enumerate(exps):
                if e == 1:
                    factors.append(self.ring.variables[o].name)
                elif e:
                    factors.append("%s^%d" % (self.ring.variables[o].name, e))
            mono = "*".join(factors)
            if not mono:
                term = str(c)
            elif c == 1:
                term = mono
            elif c == -1:
                term = "-" + mono
            else:
                term = "%s*%s" % (c, mono)
            parts.append(term)
        text = parts[0]
        for term in parts[1:]:
            text += " - " + term[1:] if term.startswith("-") else " + " + term
        return text

    def __repr__(self):
        return "Polynomial(%s)" % self
