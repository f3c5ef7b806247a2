"""Sparse multivariate polynomials over the Gaussian rationals.

A polynomial germ is stored as a map from exponent vectors (tuples of
non-negative ints, one slot per variable) to nonzero
:class:`~germinv.gaussian.GaussianRational` coefficients.  The zero
polynomial is the empty map.  Zero coefficients are never stored, so
equality and hashing are structural.

The variable count ``nvars`` is fixed per polynomial; mixing different
variable counts in one operation is a hard error, never a broadcast.
Variable *names* are not part of the value: parsing and printing take a
name tuple, and ``str(poly)`` falls back to x, y, z / z1..zn defaults.

Terms are iterated and printed in graded lexicographic order: ascending
total degree, and within one degree descending lexicographically in the
exponents, so a germ reads off like a Taylor expansion from its lowest
order upward.  ``parse_poly(str(f), names) == f`` holds for every f.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InputError, ParseError, ZeroPolynomialError
from .gaussian import GaussianRational, ONE, ZERO

Monomial = tuple[int, ...]


# -- monomial helpers --------------------------------------------------------

def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_quotient(b: Monomial, a: Monomial) -> Monomial:
    """Exponent vector of x^b / x^a; caller guarantees divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def grlex_key(m: Monomial):
    """Sort key for printing/iteration: degree up, then lex down."""
    return (sum(m), tuple(-e for e in m))


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """All exponent vectors of the given total degree, lex-descending."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def monomials_up_to(nvars: int, max_degree: int) -> Iterator[Monomial]:
    """All exponent vectors of total degree <= max_degree, graded order."""
    for d in range(max_degree + 1):
        yield from monomials_of_degree(nvars, d)


def _coerce_scalar(value) -> GaussianRational:
    return GaussianRational.of(value)


# -- the polynomial type -----------------------------------------------------

class Poly:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        if nvars < 1:
            raise InputError("a polynomial needs at least one variable")
        clean: dict[Monomial, GaussianRational] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars:
                raise InputError(
                    f"exponent vector {mono} has length {len(mono)}, expected {nvars}"
                )
            if any(e < 0 for e in mono):
                raise InputError(f"negative exponent in {mono}")
            c = _coerce_scalar(coeff)
            if c:
                acc = clean.get(mono)
                clean[mono] = c if acc is None else acc + c
                if not clean[mono]:
                    del clean[mono]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Poly":
        return Poly(nvars)

    @staticmethod
    def constant(nvars: int, value) -> "Poly":
        return Poly(nvars, {(0,) * nvars: _coerce_scalar(value)})

    @staticmethod
    def variable(nvars: int, index: int) -> "Poly":
        if not 0 <= index < nvars:
            raise InputError(f"variable index {index} out of range for {nvars} variables")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return Poly(nvars, {mono: ONE})

    @staticmethod
    def monomial(nvars: int, mono: Monomial, coeff=1) -> "Poly":
        return Poly(nvars, {tuple(mono): _coerce_scalar(coeff)})

    # -- structural queries ------------------------------------------------

    def items(self) -> list[tuple[Monomial, GaussianRational]]:
        """Terms in canonical graded-lex order (a fresh list)."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]))

    def terms(self) -> dict[Monomial, GaussianRational]:
        return dict(self._terms)

    def support(self) -> frozenset[Monomial]:
        return frozenset(self._terms)

    def coeff(self, mono: Monomial) -> GaussianRational:
        return self._terms.get(tuple(mono), ZERO)

    def constant_term(self) -> GaussianRational:
        return self._terms.get((0,) * self.nvars, ZERO)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            h = hash((self.nvars, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    # -- degree structure --------------------------------------------------

    def degree(self) -> int:
        """Largest total degree of a term; undefined for 0."""
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(mono_degree(m) for m in self._terms)

    def order(self) -> int:
        """Smallest total degree of a term (the multiplicity at 0)."""
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no order")
        return min(mono_degree(m) for m in self._terms)

    def homogeneous_component(self, degree: int) -> "Poly":
        return Poly(
            self.nvars,
            {m: c for m, c in self._terms.items() if mono_degree(m) == degree},
        )

    def initial_form(self) -> "Poly":
        """The lowest-degree homogeneous part; errors on 0."""
        return self.homogeneous_component(self.order())

    def is_homogeneous(self) -> bool:
        if not self._terms:
            return True
        degrees = {mono_degree(m) for m in self._terms}
        return len(degrees) == 1

    def truncate_jet(self, max_degree: int) -> "Poly":
        """Drop every term of total degree > max_degree."""
        return Poly(
            self.nvars,
            {m: c for m, c in self._terms.items() if mono_degree(m) <= max_degree},
        )

    # -- arithmetic --------------------------------------------------------

    def _check_same_vars(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise InputError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        self._check_same_vars(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            s = acc.get(m, ZERO) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return Poly(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly.constant(self.nvars, other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check_same_vars(other)
        acc: dict[Monomial, GaussianRational] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = acc.get(m, ZERO) + c1 * c2
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return Poly(self.nvars, acc)

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def scale(self, scalar) -> "Poly":
        c = _coerce_scalar(scalar)
        if not c:
            return Poly(self.nvars)
        return Poly(self.nvars, {m: c * v for m, v in self._terms.items()})

    def mul_term(self, mono: Monomial, coeff) -> "Poly":
        """Multiply by coeff * x^mono in one pass (reduction hot path)."""
        c = _coerce_scalar(coeff)
        if not c:
            return Poly(self.nvars)
        mono = tuple(mono)
        return Poly(self.nvars, {mono_mul(m, mono): c * v for m, v in self._terms.items()})

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise InputError("negative exponent")
        result = Poly.constant(self.nvars, 1)
        base, e = self, exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- calculus and substitution -----------------------------------------

    def partial(self, index: int) -> "Poly":
        """d/dx_index."""
        if not 0 <= index < self.nvars:
            raise InputError(f"variable index {index} out of range")
        acc: dict[Monomial, GaussianRational] = {}
        for m, c in self._terms.items():
            e = m[index]
            if e == 0:
                continue
            dm = m[:index] + (e - 1,) + m[index + 1:]
            acc[dm] = acc.get(dm, ZERO) + c * e
        return Poly(self.nvars, acc)

    def jacobian(self) -> tuple["Poly", ...]:
        """All first partials, in variable order."""
        return tuple(self.partial(i) for i in range(self.nvars))

    def evaluate(self, point: Sequence) -> GaussianRational:
        if len(point) != self.nvars:
            raise InputError(
                f"point has {len(point)} coordinates, expected {self.nvars}"
            )
        values = [_coerce_scalar(p) for p in point]
        total = ZERO
        for m, c in self._terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Plug images[i] in for variable i; images share one variable count."""
        if len(images) != self.nvars:
            raise InputError(
                f"{len(images)} substitution images for {self.nvars} variables"
            )
        out_vars = images[0].nvars
        for img in images:
            if img.nvars != out_vars:
                raise InputError("substitution images disagree on variable count")
        powers: list[dict[int, Poly]] = [
            {0: Poly.constant(out_vars, 1)} for _ in range(self.nvars)
        ]

        def power(i: int, e: int) -> Poly:
            cache = powers[i]
            if e not in cache:
                top = max(cache)
                acc = cache[top]
                for k in range(top + 1, e + 1):
                    acc = acc * images[i]
                    cache[k] = acc
            return cache[e]

        total = Poly.zero(out_vars)
        for m, c in self._terms.items():
            term = Poly.constant(out_vars, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def translate(self, point: Sequence) -> "Poly":
        """f(z + p), exactly."""
        if len(point) != self.nvars:
            raise InputError(
                f"point has {len(point)} coordinates, expected {self.nvars}"
            )
        images = [
            Poly.variable(self.nvars, i) + Poly.constant(self.nvars, point[i])
            for i in range(self.nvars)
        ]
        return self.substitute(images)

    def restrict_to_line(self, direction) -> "Poly":
        """One-variable germ t |-> f(t * v)."""
        entries = _direction_entries(direction, self.nvars)
        t = Poly.variable(1, 0)
        return self.substitute([t.scale(v) for v in entries])

    def linear_change(self, matrix: Sequence[Sequence]) -> "Poly":
        """f(M z) for a square matrix of scalars acting on the variables."""
        if len(matrix) != self.nvars:
            raise InputError("matrix size does not match variable count")
        images = []
        for row in matrix:
            if len(row) != self.nvars:
                raise InputError("matrix is not square")
            img = Poly.zero(self.nvars)
            for j, entry in enumerate(row):
                img = img + Poly.variable(self.nvars, j).scale(entry)
            images.append(img)
        return self.substitute(images)

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self, default_names(self.nvars))

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self!s})"


# -- line directions ---------------------------------------------------------

@dataclass(frozen=True)
class LineDirection:
    """A direction vector through 0; at least one entry must be nonzero."""

    entries: tuple[GaussianRational, ...]

    def __post_init__(self):
        entries = tuple(GaussianRational.of(e) for e in self.entries)
        if not entries:
            raise InputError("empty direction vector")
        if not any(entries):
            raise InputError("direction vector must have a nonzero entry")
        object.__setattr__(self, "entries", entries)

    @staticmethod
    def of(values: Iterable) -> "LineDirection":
        return LineDirection(tuple(GaussianRational.of(v) for v in values))

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def _direction_entries(direction, nvars: int) -> tuple[GaussianRational, ...]:
    if isinstance(direction, LineDirection):
        entries = direction.entries
    else:
        entries = tuple(GaussianRational.of(v) for v in direction)
        if not any(entries):
            raise InputError("direction vector must have a nonzero entry")
    if len(entries) != nvars:
        raise InputError(
            f"direction has {len(entries)} entries, expected {nvars}"
        )
    return entries


# -- parsing -----------------------------------------------------------------

_DEFAULTS = ("x", "y", "z")


def default_names(nvars: int) -> tuple[str, ...]:
    if nvars == 1:
        return ("t",)
    if nvars <= 3:
        return _DEFAULTS[:nvars]
    return tuple(f"z{i + 1}" for i in range(nvars))


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        text, n = self.text, len(self.text)
        pos = self.pos
        while pos < n and text[pos].isspace():
            pos += 1
        self.pos = pos
        if pos >= n:
            return ("end", "", pos)
        ch = text[pos]
        if ch in "+-*^()":
            return ("op", ch, pos)
        if ch.isdigit():
            end = pos
            while end < n and text[end].isdigit():
                end += 1
            # A rational literal may continue with /denominator.
            if end < n and text[end] == "/":
                d = end + 1
                if d < n and text[d].isdigit():
                    end = d
                    while end < n and text[end].isdigit():
                        end += 1
            return ("number", text[pos:end], pos)
        if ch.isalpha() or ch == "_":
            end = pos
            while end < n and (text[end].isalnum() or text[end] == "_"):
                end += 1
            return ("name", text[pos:end], pos)
        raise ParseError(f"unexpected character {ch!r}", pos)

    def take(self):
        kind, value, pos = self.peek()
        self.pos = pos + len(value)
        return kind, value, pos


class _Parser:
    """Recursive descent over: expr := term (('+'|'-') term)*,
    term := factor ('*' factor)*, factor := atom ['^' int],
    atom := number | 'i' | variable | '(' expr ')' | ('+'|'-') atom.
    """

    def __init__(self, text: str, names: Sequence[str]):
        if "i" in names:
            raise InputError("variable name 'i' is reserved for the imaginary unit")
        seen = set()
        for name in names:
            if name in seen:
                raise InputError(f"duplicate variable name {name!r}")
            seen.add(name)
        self.toks = _Tokenizer(text)
        self.names = {name: idx for idx, name in enumerate(names)}
        self.nvars = len(names)

    def parse(self) -> Poly:
        poly = self.expr()
        kind, value, pos = self.toks.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", pos)
        return poly

    def expr(self) -> Poly:
        kind, value, pos = self.toks.peek()
        negate = False
        if kind == "op" and value in "+-":
            self.toks.take()
            negate = value == "-"
        poly = self.term()
        if negate:
            poly = -poly
        while True:
            kind, value, pos = self.toks.peek()
            if kind == "op" and value in "+-":
                self.toks.take()
                rhs = self.term()
                poly = poly - rhs if value == "-" else poly + rhs
            else:
                return poly

    def term(self) -> Poly:
        poly = self.factor()
        while True:
            kind, value, _ = self.toks.peek()
            if kind == "op" and value == "*":
                self.toks.take()
                poly = poly * self.factor()
            else:
                return poly

    def factor(self) -> Poly:
        base = self.atom()
        kind, value, pos = self.toks.peek()
        if kind == "op" and value == "^":
            self.toks.take()
            kind, value, pos = self.toks.peek()
            if kind == "op" and value == "-":
                raise ParseError("negative exponent", pos)
            if kind != "number" or "/" in value:
                raise ParseError("exponent must be a non-negative integer", pos)
            self.toks.take()
            base = base ** int(value)
        return base

    def atom(self) -> Poly:
        kind, value, pos = self.toks.take()
        if kind == "number":
            return Poly.constant(self.nvars, Fraction(value))
        if kind == "name":
            if value == "i":
                return Poly.constant(self.nvars, GaussianRational(0, 1))
            if value in self.names:
                return Poly.variable(self.nvars, self.names[value])
            raise ParseError(f"unknown variable {value!r}", pos)
        if kind == "op" and value == "(":
            poly = self.expr()
            kind, value, pos = self.toks.take()
            if not (kind == "op" and value == ")"):
                raise ParseError("expected ')'", pos)
            return poly
        if kind == "op" and value in "+-":
            inner = self.atom()
            return -inner if value == "-" else inner
        raise ParseError(
            "expected a number, variable or '('" if kind == "end"
            else f"unexpected {value!r}",
            pos,
        )


def parse_poly(text: str, names: Sequence[str]) -> Poly:
    """Parse an expression over the named variables into a Poly.

    Grammar: + - * ^ and parentheses over integer/rational/Gaussian-rational
    literals (``i`` is the imaginary unit) and the given variable names.
    Raises :class:`ParseError` with a character position on bad syntax,
    unknown variables, or negative exponents.
    """
    if len(names) < 1:
        raise InputError("at least one variable name is required")
    return _Parser(text, tuple(names)).parse()


# -- printing ----------------------------------------------------------------

def _format_monomial(mono: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _format_coeff(c: GaussianRational, with_monomial: bool) -> tuple[str, str]:
    """Return (sign, magnitude-string); mixed coefficients keep their parens."""
    if c.re != 0 and c.im != 0:
        return "+", f"({c})"
    if c.im != 0:
        sign = "+" if c.im > 0 else "-"
        mag = abs(c.im)
        if mag == 1:
            return sign, "i"
        return sign, f"{mag}*i"
    sign = "+" if c.re > 0 else "-"
    mag = abs(c.re)
    if mag == 1 and with_monomial:
        return sign, ""
    return sign, str(mag)


def format_poly(f: Poly, names: Sequence[str]) -> str:
    if len(names) != f.nvars:
        raise InputError(f"{len(names)} names for {f.nvars} variables")
    if not f:
        return "0"
    pieces = []
    for mono, coeff in f.items():
        monomial = _format_monomial(mono, names)
        sign, mag = _format_coeff(coeff, bool(monomial))
        if monomial and mag:
            body = f"{mag}*{monomial}"
        else:
            body = monomial or mag or "1"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# -- small constructors shared across modules --------------------------------

def fermat(l: int, nvars: int) -> Poly:
    """Sum of l-th powers of all variables, the reference germ of degree l."""
    if l < 1 or nvars < 1:
        raise InputError("fermat(l, nvars) needs l >= 1 and nvars >= 1")
    total = Poly.zero(nvars)
    for i in range(nvars):
        total = total + Poly.variable(nvars, i) ** l
    return total
