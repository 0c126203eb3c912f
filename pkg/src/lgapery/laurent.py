"""Exact multivariate Laurent polynomials over the rationals.

A polynomial is a finite map from integer exponent vectors to nonzero
rational coefficients, with a fixed ambient dimension. Values are immutable;
all operations are pure functions, so instances are safe to share between
threads.

The text grammar (used by :func:`parse` and produced by ``to_text``):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' ['-'] integer)?
    atom   := integer | variable | '(' expr ')'

Variables are ``x, y, z`` in dimension 3, or ``x1 .. xd`` in any dimension.
Whitespace is insignificant; implicit multiplication is not supported.
Division is only defined when the divisor normalizes to a single monomial,
and negative powers require a single-monomial base.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import det_int, invert_fraction_matrix

Exponent = tuple[int, ...]


class LaurentError(Exception):
    """Base class for Laurent polynomial errors."""


class DimensionMismatchError(LaurentError):
    pass


class ParseError(LaurentError):
    """Syntax or normalization error, with a character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LaurentPolynomial:
    """Immutable Laurent polynomial with Fraction coefficients.

    Terms are kept in a dict ordered by lexicographic exponent, which makes
    iteration, printing and equality deterministic.
    """

    __slots__ = ("dimension", "_terms")

    def __init__(self, dimension: int, terms=None):
        if dimension < 1:
            raise ValueError("dimension must be positive")
        clean: dict[Exponent, Fraction] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for exp, coeff in items:
                exp = tuple(int(e) for e in exp)
                if len(exp) != dimension:
                    raise DimensionMismatchError(
                        f"exponent {exp} has length {len(exp)}, expected {dimension}")
                c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if c != 0:
                    acc = clean.get(exp)
                    c = c if acc is None else acc + c
                    if c == 0:
                        clean.pop(exp, None)
                    else:
                        clean[exp] = c
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "_terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dimension: int) -> "LaurentPolynomial":
        return cls(dimension, {})

    @classmethod
    def constant(cls, dimension: int, value) -> "LaurentPolynomial":
        return cls(dimension, {(0,) * dimension: Fraction(value)})

    @classmethod
    def monomial(cls, dimension: int, exponent, coeff=1) -> "LaurentPolynomial":
        return cls(dimension, {tuple(exponent): Fraction(coeff)})

    @classmethod
    def variable(cls, dimension: int, index: int) -> "LaurentPolynomial":
        exp = [0] * dimension
        exp[index] = 1
        return cls(dimension, {tuple(exp): Fraction(1)})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        """Copy of the term map (lexicographic key order)."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list[Exponent]:
        return list(self._terms.keys())

    def coefficient(self, exponent) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.dimension, Fraction(0))

    def num_terms(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self._terms.values())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.dimension == other.dimension and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.dimension, tuple(self._terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _check_dim(self, other: "LaurentPolynomial"):
        if self.dimension != other.dimension:
            raise DimensionMismatchError(
                f"dimension {self.dimension} vs {other.dimension}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(self.dimension, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check_dim(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPolynomial(self.dimension, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.dimension,
                                 {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(self.dimension, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPolynomial.zero(self.dimension)
            return LaurentPolynomial(
                self.dimension, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check_dim(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                s = c1 * c2 if s is None else s + c1 * c2
                out[e] = s
        return LaurentPolynomial(self.dimension, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = LaurentPolynomial.constant(self.dimension, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def monomial_divide(self, exponent, coeff=1) -> "LaurentPolynomial":
        """Divide by the monomial coeff * x^exponent."""
        c = Fraction(coeff)
        if c == 0:
            raise ZeroDivisionError("division by zero monomial")
        exp = tuple(exponent)
        return LaurentPolynomial(
            self.dimension,
            {tuple(a - b for a, b in zip(e, exp)): v / c
             for e, v in self._terms.items()})

    def monomial_substitute(self, basis, shift) -> "LaurentPolynomial":
        """Rewrite exponents in a new lattice basis.

        ``basis`` is a list of d exponent vectors (rows of a unimodular
        matrix M); each exponent e maps to the coordinate row c solving
        c * M = e - shift. Coefficients are unchanged.
        """
        d = self.dimension
        rows = [tuple(int(x) for x in row) for row in basis]
        if len(rows) != d or any(len(r) != d for r in rows):
            raise ValueError("basis must consist of d vectors of length d")
        if abs(det_int(rows)) != 1:
            raise ValueError("basis matrix is not unimodular")
        shift = tuple(int(s) for s in shift)
        # c = (e - shift) * M^{-1}, row-vector convention.
        minv = invert_fraction_matrix(rows)
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            diff = [a - b for a, b in zip(e, shift)]
            coords = []
            for j in range(d):
                v = sum(diff[i] * minv[i][j] for i in range(d))
                if v.denominator != 1:
                    raise ValueError("substitution left the exponent lattice")
                coords.append(int(v))
            out[tuple(coords)] = c
        return LaurentPolynomial(d, out)

    # -- printing ----------------------------------------------------------

    def _var_name(self, i: int) -> str:
        if self.dimension == 3:
            return "xyz"[i]
        return f"x{i + 1}"

    def to_text(self) -> str:
        """Canonical text form: terms in lexicographic exponent order."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            factors = []
            for i, k in enumerate(e):
                if k == 0:
                    continue
                name = self._var_name(i)
                factors.append(name if k == 1 else f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = _frac_text(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_frac_text(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.dimension}, {self.to_text()!r})"


def _frac_text(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


# -- parser ----------------------------------------------------------------

class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str, dimension: int):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.dim = dimension

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.kind!r}", tok.pos)
        return self.advance()

    def parse(self) -> LaurentPolynomial:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.kind!r}", tok.pos)
        return value

    def expr(self) -> LaurentPolynomial:
        negate = False
        if self.peek().kind == "-":
            self.advance()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op.kind == "+" else value - rhs
        return value

    def term(self) -> LaurentPolynomial:
        value = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.factor()
            if op.kind == "*":
                value = value * rhs
            else:
                if rhs.num_terms() != 1:
                    raise ParseError("division by a non-monomial divisor", op.pos)
                ((exp, coeff),) = rhs.items()
                value = value.monomial_divide(exp, coeff)
        return value

    def factor(self) -> LaurentPolynomial:
        value = self.atom()
        if self.peek().kind == "^":
            caret = self.advance()
            sign = 1
            if self.peek().kind == "-":
                self.advance()
                sign = -1
            tok = self.expect("int")
            n = sign * tok.value
            if n >= 0:
                value = value ** n
            else:
                if value.num_terms() != 1:
                    raise ParseError(
                        "negative power of a non-monomial base", caret.pos)
                ((exp, coeff),) = value.items()
                value = LaurentPolynomial.monomial(
                    self.dim, tuple(n * e for e in exp), Fraction(coeff) ** n)
        return value

    def atom(self) -> LaurentPolynomial:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return LaurentPolynomial.constant(self.dim, tok.value)
        if tok.kind == "name":
            self.advance()
            return LaurentPolynomial.variable(self.dim, self._var_index(tok))
        if tok.kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {tok.kind!r}", tok.pos)

    def _var_index(self, tok: _Token) -> int:
        name = tok.value
        if self.dim == 3 and name in ("x", "y", "z"):
            return "xyz".index(name)
        if name.startswith("x") and name[1:].isdigit():
            idx = int(name[1:])
            if 1 <= idx <= self.dim:
                return idx - 1
            raise ParseError(
                f"variable {name!r} out of range for dimension {self.dim}", tok.pos)
        raise ParseError(f"unknown variable {name!r}", tok.pos)


def parse(text: str, dimension: int = 3) -> LaurentPolynomial:
    """Parse a Laurent polynomial from text (see the module grammar)."""
    return _Parser(text, dimension).parse()
