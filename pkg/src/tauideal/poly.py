"""Multivariate polynomials over GF(p^r).

A polynomial lives in a ``PolynomialRing`` and is stored as a dict from
exponent tuples to nonzero encoded coefficients.  Rings carry a term
order ("grevlex" by default, "lex" optional) used for leading terms and
canonical printing.

Text format: terms joined by ``+``/``-``, each term a ``*``-separated
product of an optional coefficient and variable powers, e.g.
``3*x^2*y + z``.  Over extension fields, coefficients outside the prime
subfield are written as parenthesized polynomials in ``g``:
``(g+1)*x*y^2``.  The symbol ``g`` is reserved and cannot name a ring
variable in an extension field.  ``parse`` and ``format`` round-trip:
coefficients print as least residues and terms descend in the ring
order, so equal polynomials print identically.
"""

from __future__ import annotations

import re
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from .ff import FieldDescriptor, FieldElement, FieldMismatchError, GF, format_g_polynomial

Monomial = Tuple[int, ...]
TermMap = Dict[Monomial, int]

_VAR_NAME = re.compile(r"[a-z][a-z0-9_]*\Z")


class ParseError(ValueError):
    """Syntax or vocabulary error in polynomial text, with position."""

    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {line}, column {col})")
        self.pos = pos
        self.line = line
        self.col = col


def grevlex_key(m: Monomial) -> tuple:
    """Sort key: max() under this key is the grevlex-largest monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: Monomial) -> tuple:
    return m


_ORDER_KEYS: Dict[str, Callable[[Monomial], tuple]] = {
    "grevlex": grevlex_key,
    "lex": lex_key,
}


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """Exponent of x^a / x^b; caller must know b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class PolynomialRing:
    """GF(q)[x_1, ..., x_n] with a fixed term order."""

    __slots__ = ("field", "names", "order", "nvars", "order_key", "_var_index", "_gens")

    def __init__(self, field: FieldDescriptor, names: Sequence[str], order: str = "grevlex"):
        names = tuple(names)
        if not names:
            raise ValueError("ring needs at least one variable")
        for name in names:
            if not _VAR_NAME.match(name):
                raise ValueError(
                    f"invalid variable name {name!r}: need [a-z][a-z0-9_]*"
                )
            if name == "g" and field.r > 1:
                raise ValueError("'g' is reserved for the field generator in extension fields")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if order not in _ORDER_KEYS:
            raise ValueError(f"unknown term order {order!r}; use 'grevlex' or 'lex'")
        self.field = field
        self.names = names
        self.order = order
        self.nvars = len(names)
        self.order_key = _ORDER_KEYS[order]
        self._var_index = {name: i for i, name in enumerate(names)}
        self._gens = None

    # -- construction ---------------------------------------------------

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: 1})

    @property
    def gens(self) -> tuple:
        if self._gens is None:
            gens = []
            for i in range(self.nvars):
                exp = [0] * self.nvars
                exp[i] = 1
                gens.append(Polynomial(self, {tuple(exp): 1}))
            self._gens = tuple(gens)
        return self._gens

    def gen(self, name: str) -> "Polynomial":
        return self.gens[self.var_index(name)]

    def var_index(self, name: str) -> int:
        try:
            return self._var_index[name]
        except KeyError:
            raise ValueError(f"no variable named {name!r} in {self}") from None

    def constant(self, value: Union[int, str, FieldElement]) -> "Polynomial":
        code = self.field.element(value).code
        if code == 0:
            return self.zero
        return Polynomial(self, {(0,) * self.nvars: code})

    def monomial(self, exponents: Sequence[int], coeff: Union[int, str, FieldElement] = 1) -> "Polynomial":
        exponents = tuple(exponents)
        if len(exponents) != self.nvars or any(e < 0 for e in exponents):
            raise ValueError(f"bad exponent vector {exponents} for {self.nvars} variables")
        code = self.field.element(coeff).code
        if code == 0:
            return self.zero
        return Polynomial(self, {exponents: code})

    def from_terms(self, terms: Iterable[Tuple[Monomial, int]]) -> "Polynomial":
        """Build from (exponent, encoded coefficient) pairs, summing repeats."""
        field = self.field
        acc: TermMap = {}
        for mono, code in terms:
            if code == 0:
                continue
            mono = tuple(mono)
            if len(mono) != self.nvars:
                raise ValueError(f"exponent {mono} has wrong arity")
            prev = acc.get(mono)
            if prev is None:
                acc[mono] = code
            else:
                s = field.add(prev, code)
                if s:
                    acc[mono] = s
                else:
                    del acc[mono]
        return Polynomial(self, acc)

    def with_order(self, order: str) -> "PolynomialRing":
        if order == self.order:
            return self
        return polynomial_ring(self.field, self.names, order)

    # -- parsing ----------------------------------------------------------

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()

    # -- printing ---------------------------------------------------------

    def format_term(self, mono: Monomial, code: int) -> str:
        field = self.field
        factors = []
        for name, e in zip(self.names, mono):
            if e == 0:
                continue
            factors.append(name if e == 1 else f"{name}^{e}")
        if not factors:
            text = field.format_code(code)
            return f"({text})" if code >= field.p else text
        if code != 1:
            text = field.format_code(code)
            factors.insert(0, f"({text})" if code >= field.p else text)
        return "*".join(factors)

    def format(self, poly: "Polynomial") -> str:
        if not poly.terms:
            return "0"
        key = self.order_key
        monos = sorted(poly.terms, key=key, reverse=True)
        return " + ".join(self.format_term(m, poly.terms[m]) for m in monos)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolynomialRing)
            and self.field == other.field
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash((self.field, self.names, self.order))

    def __reduce__(self):
        return (
            polynomial_ring,
            (self.field, self.names, self.order),
        )

    def __repr__(self) -> str:
        return f"{self.field}[{', '.join(self.names)}] ({self.order})"


_RING_CACHE: dict = {}


def polynomial_ring(field: FieldDescriptor, names: Sequence[str], order: str = "grevlex") -> PolynomialRing:
    key = (field, tuple(names), order)
    ring = _RING_CACHE.get(key)
    if ring is None:
        ring = PolynomialRing(field, names, order)
        _RING_CACHE[key] = ring
    return ring


def _poly_from_state(ring: PolynomialRing, items: tuple) -> "Polynomial":
    return Polynomial(ring, dict(items))


class Polynomial:
    """Immutable element of a PolynomialRing."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: TermMap):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self) -> Dict[int, "Polynomial"]:
        """Split into homogeneous parts, keyed by total degree."""
        parts: Dict[int, TermMap] = {}
        for mono, code in self.terms.items():
            parts.setdefault(sum(mono), {})[mono] = code
        return {d: Polynomial(self.ring, t) for d, t in sorted(parts.items())}

    def degree_in(self, var: Union[int, str]) -> int:
        i = var if isinstance(var, int) else self.ring.var_index(var)
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.order_key)

    def leading_coefficient(self) -> FieldElement:
        return self.ring.field.from_code(self.terms[self.leading_monomial()])

    def coefficient(self, mono: Sequence[int]) -> FieldElement:
        return self.ring.field.from_code(self.terms.get(tuple(mono), 0))

    def sorted_terms(self, reverse: bool = True) -> list:
        key = self.ring.order_key
        return [(m, self.terms[m]) for m in sorted(self.terms, key=key, reverse=reverse)]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self.terms.items())

    # -- arithmetic ------------------------------------------------------

    def _check_ring(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise FieldMismatchError(f"mixed rings: {self.ring} and {other.ring}")

    def _coerce(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        if isinstance(other, (int, FieldElement, str)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        field = self.ring.field
        out = dict(self.terms)
        for mono, code in other.terms.items():
            prev = out.get(mono)
            if prev is None:
                out[mono] = code
            else:
                s = field.add(prev, code)
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {m: neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement, str)):
            code = self.ring.field.element(other).code
            if code == 0:
                return self.ring.zero
            mul = self.ring.field.mul
            return Polynomial(self.ring, {m: mul(c, code) for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        field = self.ring.field
        add, mul = field.add, field.mul
        out: TermMap = {}
        small, large = (self.terms, other.terms)
        if len(small) > len(large):
            small, large = large, small
        for m1, c1 in small.items():
            for m2, c2 in large.items():
                mono = tuple(x + y for x, y in zip(m1, m2))
                c = mul(c1, c2)
                prev = out.get(mono)
                if prev is None:
                    out[mono] = c
                else:
                    s = add(prev, c)
                    if s:
                        out[mono] = s
                    else:
                        del out[mono]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def frobenius_power(self, e: int) -> "Polynomial":
        """self**(p**e), computed termwise (char-p freshman's dream)."""
        if e < 0:
            raise ValueError("negative Frobenius level")
        if e == 0:
            return self
        q = self.ring.field.p**e
        frob = self.ring.field.frobenius
        return Polynomial(
            self.ring,
            {tuple(x * q for x in m): frob(c, e) for m, c in self.terms.items()},
        )

    def shift(self, mono: Sequence[int]) -> "Polynomial":
        """Multiply by the monomial x^mono."""
        mono = tuple(mono)
        return Polynomial(
            self.ring, {tuple(x + y for x, y in zip(m, mono)): c for m, c in self.terms.items()}
        )

    # -- substitution / evaluation ------------------------------------------

    def evaluate(self, point: Sequence[Union[int, str, FieldElement]]) -> FieldElement:
        field = self.ring.field
        codes = [field.element(v).code for v in point]
        if len(codes) != self.ring.nvars:
            raise ValueError(f"expected {self.ring.nvars} coordinates, got {len(codes)}")
        total = 0
        for mono, coeff in self.terms.items():
            val = coeff
            for code, e in zip(codes, mono):
                if e:
                    val = field.mul(val, field.power(code, e))
                    if val == 0:
                        break
            total = field.add(total, val)
        return field.from_code(total)

    def substitute(self, images: Mapping[Union[int, str], "Polynomial"]) -> "Polynomial":
        """Simultaneously replace variables by polynomials (same ring)."""
        ring = self.ring
        image_list: list = [None] * ring.nvars
        for var, img in images.items():
            i = var if isinstance(var, int) else ring.var_index(var)
            if not isinstance(img, Polynomial) or img.ring != ring:
                raise ValueError("substitution images must lie in the same ring")
            image_list[i] = img
        result = ring.zero
        for mono, coeff in self.terms.items():
            residual = [0] * ring.nvars
            term = None
            for i, e in enumerate(mono):
                if e and image_list[i] is not None:
                    factor = image_list[i] ** e
                    term = factor if term is None else term * factor
                else:
                    residual[i] = e
            piece = Polynomial(ring, {tuple(residual): coeff})
            if term is not None:
                piece = piece * term
            result = result + piece
        return result

    def map_ring(self, target: PolynomialRing, var_map: Optional[Mapping[str, str]] = None) -> "Polynomial":
        """Reinterpret in another ring over the same field.

        Variables are matched by name unless ``var_map`` renames them;
        variables absent from the target must not occur in the support.
        """
        if target.field != self.ring.field:
            raise FieldMismatchError("target ring has a different coefficient field")
        positions: list = []
        for i, name in enumerate(self.ring.names):
            mapped = (var_map or {}).get(name, name)
            positions.append(target._var_index.get(mapped))
        out: TermMap = {}
        for mono, coeff in self.terms.items():
            new = [0] * target.nvars
            for i, e in enumerate(mono):
                if e == 0:
                    continue
                j = positions[i]
                if j is None:
                    raise ValueError(
                        f"variable {self.ring.names[i]!r} occurs but has no image in {target}"
                    )
                new[j] += e
            key = tuple(new)
            prev = out.get(key)
            if prev is None:
                out[key] = coeff
            else:
                s = target.field.add(prev, coeff)
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Polynomial(target, out)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, FieldElement)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __reduce__(self):
        return (_poly_from_state, (self.ring, tuple(self.terms.items())))

    def __str__(self) -> str:
        return self.ring.format(self)

    def __repr__(self) -> str:
        return f"<{self} over {self.ring.field}>"


class _Parser:
    """Recursive-descent parser for the polynomial text format."""

    def __init__(self, ring: PolynomialRing, text: str):
        self.ring = ring
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: Optional[int] = None) -> ParseError:
        return ParseError(message, self.text, self.pos if pos is None else pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Polynomial:
        self.skip_ws()
        if self.pos >= len(self.text):
            raise self.error("empty polynomial")
        result = self.ring.zero
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            term = self.parse_term()
            result = result + (term if sign == 1 else -term)
            self.skip_ws()
            if self.pos >= len(self.text):
                return result
            ch = self.peek()
            if ch not in "+-":
                raise self.error(f"expected '+' or '-', found {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1

    def parse_term(self) -> Polynomial:
        factors = [self.parse_factor()]
        while True:
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
                factors.append(self.parse_factor())
            else:
                break
        result = factors[0]
        for f in factors[1:]:
            result = result * f
        return result

    def parse_factor(self) -> Polynomial:
        self.skip_ws()
        ch = self.peek()
        start = self.pos
        if not ch:
            raise self.error("unexpected end of input")
        if ch.isdigit():
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return self.ring.constant(int(self.text[start : self.pos]))
        if ch == "(":
            depth = 0
            i = self.pos
            while i < len(self.text):
                if self.text[i] == "(":
                    depth += 1
                elif self.text[i] == ")":
                    depth -= 1
                    if depth == 0:
                        break
                i += 1
            if depth != 0:
                raise self.error("unbalanced parenthesis", start)
            inner = self.text[self.pos + 1 : i]
            self.pos = i + 1
            if self.ring.field.r == 1:
                raise self.error(
                    "parenthesized coefficients need an extension field", start
                )
            try:
                return self.ring.constant(self.ring.field.element(inner.strip()))
            except ValueError as exc:
                raise self.error(f"bad field literal: {exc}", start) from None
        if ch.isalpha() or ch == "_":
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start : self.pos]
            if name == "g" and self.ring.field.r > 1:
                base = self.ring.constant(self.ring.field.generator)
            elif name in self.ring._var_index:
                base = self.ring.gens[self.ring._var_index[name]]
            else:
                raise self.error(f"unknown variable {name!r}", start)
            exp = self.parse_exponent()
            return base**exp if exp != 1 else base
        raise self.error(f"unexpected character {ch!r}")

    def parse_exponent(self) -> int:
        save = self.pos
        self.skip_ws()
        if self.peek() != "^":
            self.pos = save
            return 1
        self.pos += 1
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected integer exponent after '^'")
        return int(self.text[start : self.pos])
