"""Sparse multivariate polynomials with exact rational coefficients.

Variables are ``x1, x2, ...`` (1-based).  A :class:`Monomial` is a sorted
tuple of ``(index, exponent)`` pairs with no zero exponents, and a
:class:`Polynomial` is an immutable mapping ``Monomial -> Fraction`` that
never stores a zero coefficient.

Text form::

    poly   := ['-'] term (('+'|'-') term)*
    term   := coeff | coeff '*' powers | powers
    coeff  := integer | integer '/' positive-integer
    powers := power ('*' power)*
    power  := 'x' index | 'x' index '^' exponent

Whitespace is ignored.  Canonical output lists terms in graded-lex
descending order, e.g. ``x1^2 - 1`` or ``5/2*x1*x2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Tuple, Union

# Fail-fast bounds; adjustable at module level.
MAX_EXPONENT = 2**16
MAX_INDEX = 2**20

Scalar = Union[int, Fraction]


class PolySyntaxError(ValueError):
    """Raised by :func:`parse_poly` for malformed text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class PolyLimitError(OverflowError):
    """An exponent or variable index exceeds the configured bound."""


class Monomial(tuple):
    """Product of variable powers, stored as sorted ``(index, exponent)`` pairs.

    ``Monomial()`` is the unit monomial.  Construct from a mapping
    ``{index: exponent}`` or an iterable of pairs; zero exponents are dropped.
    """

    __slots__ = ()

    def __new__(cls, exponents: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        merged: Dict[int, int] = {}
        for j, e in items:
            j, e = int(j), int(e)
            if j < 1:
                raise ValueError(f"variable index must be >= 1, got {j}")
            if e < 0:
                raise ValueError(f"negative exponent {e} for x{j}")
            merged[j] = merged.get(j, 0) + e
        return cls._raw(_checked(merged))

    @classmethod
    def _raw(cls, pairs: Iterable[Tuple[int, int]]) -> "Monomial":
        return tuple.__new__(cls, pairs)

    @classmethod
    def var(cls, j: int, e: int = 1) -> "Monomial":
        return cls({j: e})

    @property
    def degree(self) -> int:
        return sum(e for _, e in self)

    @property
    def max_index(self) -> int:
        return self[-1][0] if self else 0

    def exponent(self, j: int) -> int:
        for i, e in self:
            if i == j:
                return e
        return 0

    def as_dict(self) -> Dict[int, int]:
        return dict(self)

    def dense(self) -> Tuple[int, ...]:
        """Exponent vector ``(e1, ..., e_max)``."""
        out = [0] * self.max_index
        for j, e in self:
            out[j - 1] = e
        return tuple(out)

    def times(self, other: "Monomial") -> "Monomial":
        if not other:
            return self
        if not self:
            return other
        d = dict(self)
        for j, e in other:
            d[j] = d.get(j, 0) + e
        return Monomial._raw(_checked(d))

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Graded-lex key (``x1 > x2 > ...``); larger key means earlier in output."""
        return (self.degree, self.dense())

    def __repr__(self) -> str:
        return f"Monomial({dict(self)!r})"


def _checked(d: Mapping[int, int]) -> Tuple[Tuple[int, int], ...]:
    pairs = []
    for j in sorted(d):
        e = d[j]
        if e == 0:
            continue
        if e > MAX_EXPONENT:
            raise PolyLimitError(f"exponent {e} of x{j} exceeds limit {MAX_EXPONENT}")
        if j > MAX_INDEX:
            raise PolyLimitError(f"variable index {j} exceeds limit {MAX_INDEX}")
        pairs.append((j, e))
    return tuple(pairs)


ONE_MONOMIAL = Monomial()


class Polynomial:
    """Immutable sparse polynomial over the rationals.

    Supports ``+``, ``-``, ``*`` (with polynomials or scalars), ``**`` with a
    non-negative integer, and equality with scalars.  ``str(p)`` is the
    canonical text form.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if not isinstance(m, Monomial):
                m = Monomial(m)
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, 0) + c
                if not clean[m]:
                    del clean[m]
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # caller guarantees Monomial keys and nonzero Fraction values
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        return cls._wrap({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def var(cls, j: int, e: int = 1) -> "Polynomial":
        return cls._wrap({Monomial.var(j, e): Fraction(1)})

    @classmethod
    def monomial(cls, m: Monomial, c: Scalar = 1) -> "Polynomial":
        c = Fraction(c)
        return cls._wrap({m: c} if c else {})

    @classmethod
    def univariate(cls, coeffs: Iterable[Scalar], j: int = 1) -> "Polynomial":
        """``sum(coeffs[k] * x_j**k)``."""
        return cls({Monomial.var(j, k): c for k, c in enumerate(coeffs)})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, m: Monomial | Mapping[int, int] = ONE_MONOMIAL) -> Fraction:
        if not isinstance(m, Monomial):
            m = Monomial(m)
        return self._terms.get(m, Fraction(0))

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    @property
    def max_index(self) -> int:
        """Largest variable index present, 0 for constants."""
        return max((m.max_index for m in self._terms), default=0)

    @property
    def variables(self) -> frozenset:
        return frozenset(j for m in self._terms for j, _ in m)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self._terms}) <= 1

    def degree_in(self, j: int) -> int:
        return max((m.exponent(j) for m in self._terms), default=-1)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key(), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return poly_scale(other, self)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1.times(m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return poly_scale(1 / Fraction(other), self)
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial('{format_poly(self)}')"


def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    return NotImplemented


ZERO = Polynomial._wrap({})
ONE = Polynomial.constant(1)


def norm_sq(N: int) -> Polynomial:
    """``x1^2 + ... + xN^2``."""
    return Polynomial._wrap({Monomial._raw(((j, 2),)): Fraction(1) for j in range(1, N + 1)})


# --- text form -------------------------------------------------------------

_TOKEN = re.compile(r"(\d+)|(x)|([-+*/^])")


def _tokenize(text: str):
    tokens = []
    pos, n = 0, len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        mt = _TOKEN.match(text, pos)
        if mt is None:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        if mt.group(1) is not None:
            tokens.append(("int", int(mt.group(1)), pos))
        elif mt.group(2) is not None:
            tokens.append(("x", "x", pos))
        else:
            tokens.append(("op", mt.group(3), pos))
        pos = mt.end()
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_int(self, what: str) -> int:
        kind, val, pos = self.take()
        if kind != "int":
            raise PolySyntaxError(f"expected {what}", pos)
        return val

    def poly(self) -> Polynomial:
        terms: Dict[Monomial, Fraction] = {}
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        while True:
            m, c = self.term()
            terms[m] = terms.get(m, 0) + sign * c
            kind, val, pos = self.peek()
            if kind == "end":
                break
            if kind == "op" and val in "+-":
                self.take()
                sign = 1 if val == "+" else -1
                continue
            raise PolySyntaxError("expected '+', '-' or end of input", pos)
        return Polynomial(terms)

    def term(self) -> Tuple[Monomial, Fraction]:
        kind, val, pos = self.peek()
        if kind == "int":
            coeff = Fraction(self.take()[1])
            if self.peek()[:2] == ("op", "/"):
                self.take()
                dpos = self.peek()[2]
                den = self.expect_int("denominator")
                if den == 0:
                    raise PolySyntaxError("denominator must be positive", dpos)
                coeff /= den
            if self.peek()[:2] == ("op", "*"):
                self.take()
                return self.powers(), coeff
            return ONE_MONOMIAL, coeff
        if kind == "x":
            return self.powers(), Fraction(1)
        raise PolySyntaxError("expected a coefficient or a variable", pos)

    def powers(self) -> Monomial:
        exps: Dict[int, int] = {}
        while True:
            kind, _, pos = self.take()
            if kind != "x":
                raise PolySyntaxError("expected a variable 'x<index>'", pos)
            ipos = self.peek()[2]
            j = self.expect_int("variable index")
            if j < 1:
                raise PolySyntaxError("variable index must be positive", ipos)
            if j > MAX_INDEX:
                raise PolyLimitError(f"variable index {j} exceeds limit {MAX_INDEX}")
            e = 1
            if self.peek()[:2] == ("op", "^"):
                self.take()
                epos = self.peek()[2]
                e = self.expect_int("exponent")
                if e < 1:
                    raise PolySyntaxError("exponent must be positive", epos)
            exps[j] = exps.get(j, 0) + e
            if exps[j] > MAX_EXPONENT:
                raise PolyLimitError(f"exponent {exps[j]} of x{j} exceeds limit {MAX_EXPONENT}")
            if self.peek()[:2] != ("op", "*"):
                return Monomial(exps)
            self.take()


def parse_poly(text: str) -> Polynomial:
    """Parse the text form; raises :class:`PolySyntaxError` with a position."""
    if not text.strip():
        raise PolySyntaxError("empty input", 0)
    return _Parser(text).poly()


def _format_monomial(m: Monomial) -> str:
    return "*".join(f"x{j}" if e == 1 else f"x{j}^{e}" for j, e in m)


def format_poly(p: Polynomial) -> str:
    if not p:
        return "0"
    parts = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        if not m:
            body = str(a)
        elif a == 1:
            body = _format_monomial(m)
        else:
            body = f"{a}*{_format_monomial(m)}"
        if k == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


# --- ring operations and calculus -------------------------------------------

def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_scale(c: Scalar, p: Polynomial) -> Polynomial:
    c = Fraction(c)
    if not c:
        return ZERO
    return Polynomial._wrap({m: c * v for m, v in p.items()})


def partial_derivative(j: int, p: Polynomial) -> Polynomial:
    """Formal partial derivative with respect to ``x_j``."""
    if j < 1:
        raise ValueError(f"variable index must be >= 1, got {j}")
    out: Dict[Monomial, Fraction] = {}
    for m, c in p.items():
        e = m.exponent(j)
        if e:
            d = dict(m)
            d[j] = e - 1
            key = Monomial._raw(_checked(d))
            out[key] = out.get(key, 0) + e * c
    return Polynomial._wrap({m: c for m, c in out.items() if c})


def homogeneous_components(p: Polynomial) -> Dict[int, Polynomial]:
    """Split ``p`` by total degree: ``{degree: homogeneous part}``."""
    parts: Dict[int, Dict[Monomial, Fraction]] = {}
    for m, c in p.items():
        parts.setdefault(m.degree, {})[m] = c
    return {d: Polynomial._wrap(parts[d]) for d in sorted(parts)}


def substitute_linear(p: Polynomial, rows: Mapping[int, Polynomial]) -> Polynomial:
    """Simultaneously replace ``x_j`` by ``rows[j]`` (each of degree <= 1)."""
    for j, r in rows.items():
        if r.degree > 1:
            raise ValueError(f"substitution for x{j} has degree {r.degree} > 1")
    powers: Dict[Tuple[int, int], Polynomial] = {}

    def power(j: int, e: int) -> Polynomial:
        key = (j, e)
        if key not in powers:
            powers[key] = rows[j] ** e
        return powers[key]

    result = ZERO
    for m, c in p.items():
        kept = []
        term = Polynomial.constant(c)
        for j, e in m:
            if j in rows:
                term = term * power(j, e)
            else:
                kept.append((j, e))
        if kept:
            term = term * Polynomial.monomial(Monomial._raw(tuple(kept)))
        result = result + term
    return result


def evaluate(p: Polynomial, point: Mapping[int, Union[Scalar, float]]):
    """Value of ``p`` at ``point`` (``{index: value}``).

    Exact (a Fraction) for rational inputs; a float if any used value is a float.
    """
    total = Fraction(0)
    for m, c in p.items():
        v = c
        for j, e in m:
            try:
                x = point[j]
            except KeyError:
                raise KeyError(f"no value given for x{j}") from None
            v = v * x**e
        total = total + v
    return total


def max_coeff_norm(p: Polynomial) -> Fraction:
    """Largest absolute coefficient (0 for the zero polynomial)."""
    return max((abs(c) for _, c in p.items()), default=Fraction(0))
