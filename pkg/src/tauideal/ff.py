"""Arithmetic in the finite field GF(p^r).

Extension fields are realized as GF(p)[g]/(m(g)) for a monic irreducible
modulus m of degree r.  Elements are stored *encoded*: the element
c_0 + c_1*g + ... + c_{r-1}*g^{r-1} is the integer c_0 + c_1*p + ... in
[0, q) with q = p^r.  Zero and one are always encoded as 0 and 1.

All hot-path arithmetic runs on encoded integers through precomputed
tables held by a ``FieldDescriptor``; ``FieldElement`` is a thin immutable
wrapper for API use.  Since the field is perfect, the Frobenius map
x -> x^p is a bijection and every element has a unique p^e-th root,
obtained by applying x -> x^(p^(r-1)) e times.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence, Union


class FieldMismatchError(ValueError):
    """Raised when operands belong to different field descriptors."""


# Monic irreducible polynomials (ascending coefficients) defining the
# built-in extensions for small p, r.  Degree-1 rows are identity
# placeholders: arithmetic never reduces modulo them.
_BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
}

# Full q x q addition tables are built only below this order; larger
# fields fall back to digit-wise addition.
_ADD_TABLE_LIMIT = 1024


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _ptrim(a: Sequence[int]) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list:
    a = _ptrim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, mi in enumerate(m):
            a[i + shift] = (a[i + shift] - factor * mi) % p
        a = _ptrim(a)
    return a


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    m = _ptrim(modulus)
    r = len(m) - 1
    if r < 1:
        return False
    # Trial division by every monic polynomial of degree 1..r//2.
    for d in range(1, r // 2 + 1):
        for idx in range(p**d):
            div = []
            v = idx
            for _ in range(d):
                div.append(v % p)
                v //= p
            div.append(1)
            if not _pmod(m, div, p):
                return False
    return True


def parse_g_polynomial(text: str, p: int) -> tuple:
    """Parse a polynomial in the symbol ``g`` over GF(p), e.g. ``g^2+g+1``.

    Returns ascending coefficients as a tuple. Used for ``--modulus``
    values and extension-field literals.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    # Split into signed terms.
    terms = []
    cur = ""
    sign = 1
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0:
            terms.append((sign, cur))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif ch == "-" and i == 0:
            sign = -1
        elif ch == "+" and i == 0:
            continue
        else:
            cur += ch
    terms.append((sign, cur))
    coeffs: dict = {}
    for sgn, term in terms:
        if not term:
            raise ValueError(f"malformed term in {text!r}")
        coeff = 1
        power = 0
        parts = term.split("*")
        for part in parts:
            if not part:
                raise ValueError(f"malformed term {term!r} in {text!r}")
            if part[0].isdigit():
                coeff *= int(part)
            elif part[0] == "g":
                if part == "g":
                    power += 1
                elif part.startswith("g^"):
                    power += int(part[2:])
                else:
                    raise ValueError(f"unknown symbol {part!r} in {text!r}")
            else:
                raise ValueError(f"unknown symbol {part!r} in {text!r}")
        coeffs[power] = (coeffs.get(power, 0) + sgn * coeff) % p
    deg = max(coeffs) if coeffs else 0
    return tuple(coeffs.get(i, 0) % p for i in range(deg + 1))


def format_g_polynomial(coords: Sequence[int]) -> str:
    """Canonical text of a g-polynomial, terms in descending power."""
    parts = []
    for i in range(len(coords) - 1, -1, -1):
        c = coords[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            gp = "g" if i == 1 else f"g^{i}"
            parts.append(gp if c == 1 else f"{c}*{gp}")
    return "+".join(parts) if parts else "0"


class FieldDescriptor:
    """GF(p^r) with table-backed arithmetic on encoded integers."""

    __slots__ = (
        "p",
        "r",
        "q",
        "modulus",
        "_add_table",
        "_neg_table",
        "_inv_table",
        "_exp",
        "_log",
        "_root_table",
        "_ppow",
    )

    def __init__(self, p: int, r: int = 1, modulus: Optional[Sequence[int]] = None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if r < 1:
            raise ValueError(f"extension degree must be >= 1, got {r}")
        if modulus is None:
            if r == 1:
                modulus = (0, 1)
            elif (p, r) in _BUILTIN_MODULI:
                modulus = _BUILTIN_MODULI[(p, r)]
            else:
                raise ValueError(
                    f"no built-in modulus for GF({p}^{r}); supply one explicitly"
                )
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {r}")
        if r > 1 and not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {format_g_polynomial(modulus)} is reducible over GF({p})")
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = modulus
        self._ppow = tuple(p**i for i in range(r + 1))
        self._build_tables()

    # -- encoding -----------------------------------------------------

    def encode(self, coords: Sequence[int]) -> int:
        p = self.p
        if len(coords) > self.r:
            raise ValueError("too many coordinates")
        return sum((c % p) * self._ppow[i] for i, c in enumerate(coords))

    def decode(self, a: int) -> tuple:
        p = self.p
        out = []
        for _ in range(self.r):
            out.append(a % p)
            a //= p
        return tuple(out)

    # -- table construction -------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        prod = _pmul(self.decode(a), self.decode(b), self.p)
        if len(prod) > self.r:
            prod = _pmod(prod, self.modulus, self.p)
        return self.encode(prod)

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        self._neg_table = tuple(self.encode(tuple((-c) % p for c in self.decode(a))) for a in range(q))
        if q <= _ADD_TABLE_LIMIT:
            self._add_table = [
                [self.encode(tuple((x + y) % p for x, y in zip(self.decode(a), self.decode(b)))) for b in range(q)]
                for a in range(q)
            ]
        else:
            self._add_table = None
        # Discrete exp/log over a primitive element (used for mul/inv only;
        # roots are computed by explicit powers below).
        gen = self._find_generator()
        exp = [1] * (2 * (q - 1))
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            exp[i + (q - 1)] = acc
            log[acc] = i
            acc = self._raw_mul(acc, gen)
        self._exp = exp
        self._log = log
        self._inv_table = tuple(0 if a == 0 else exp[(q - 1) - log[a]] for a in range(q))
        # Inverse Frobenius: x -> x^(p^(r-1)).
        k = p ** (self.r - 1)
        self._root_table = tuple(self._raw_pow(a, k) for a in range(q))

    def _raw_pow(self, a: int, n: int) -> int:
        result = 1
        base = a
        while n:
            if n & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            n >>= 1
        return result

    def _find_generator(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        factors = []
        m = n
        d = 2
        while d * d <= m:
            if m % d == 0:
                factors.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            factors.append(m)
        for cand in range(2, self.q):
            if all(self._raw_pow(cand, n // f) != 1 for f in factors):
                return cand
        raise RuntimeError("no multiplicative generator found")  # pragma: no cover

    # -- arithmetic on encoded values ----------------------------------

    def add(self, a: int, b: int) -> int:
        t = self._add_table
        if t is not None:
            return t[a][b]
        p = self.p
        return self.encode(tuple((x + y) % p for x, y in zip(self.decode(a), self.decode(b))))

    def neg(self, a: int) -> int:
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg_table[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self._inv_table[a]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero field element")
        return self.mul(a, self._inv_table[b])

    def power(self, a: int, n: int) -> int:
        if n < 0:
            return self.power(self.inv(a), -n)
        if a == 0:
            return 0 if n else 1
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def frobenius(self, a: int, e: int = 1) -> int:
        """a^(p^e), as an encoded value."""
        for _ in range(e % self.r if self.r > 1 else 0):
            a = self.power(a, self.p)
        return a

    def pth_root(self, a: int, e: int = 1) -> int:
        """The unique b with b^(p^e) = a (encoded)."""
        if e < 1:
            raise ValueError("root level e must be >= 1")
        t = self._root_table
        for _ in range(e % self.r if self.r > 1 else 0):
            a = t[a]
        return a

    # -- element-level API ---------------------------------------------

    def element(self, value: Union[int, str, Sequence[int], "FieldElement"]) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is not self and value.field != self:
                raise FieldMismatchError("element belongs to a different field")
            return FieldElement(self, value.code)
        if isinstance(value, str):
            coords = parse_g_polynomial(value, self.p)
            if len(coords) > self.r:
                raise ValueError(f"literal {value!r} has degree >= {self.r}")
            return FieldElement(self, self.encode(coords))
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        return FieldElement(self, self.encode(tuple(value)))

    def from_code(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise ValueError(f"encoded value {code} out of range for order {self.q}")
        return FieldElement(self, code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def generator(self) -> "FieldElement":
        if self.r == 1:
            raise ValueError("prime field has no extension generator g")
        return FieldElement(self, self.p)  # the class of g

    def elements(self) -> Iterator["FieldElement"]:
        for a in range(self.q):
            yield FieldElement(self, a)

    def format_code(self, a: int) -> str:
        if self.r == 1:
            return str(a)
        return format_g_polynomial(self.decode(a))

    # -- identity ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldDescriptor)
            and self.p == other.p
            and self.r == other.r
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus))

    def __reduce__(self):
        return (GF, (self.p, self.r, self.modulus))

    def __repr__(self) -> str:
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.r}, modulus={format_g_polynomial(self.modulus)})"

    def __str__(self) -> str:
        return f"GF({self.q})" if self.r > 1 else f"GF({self.p})"


_FIELD_CACHE: dict = {}


def GF(p: int, r: int = 1, modulus: Optional[Iterable[int]] = None) -> FieldDescriptor:
    """Construct (or fetch the cached) descriptor for GF(p^r)."""
    if isinstance(modulus, str):
        modulus = parse_g_polynomial(modulus, p)
    if modulus is None:
        if r == 1:
            modulus = (0, 1)
        else:
            modulus = _BUILTIN_MODULI.get((p, r))
            if modulus is None:
                raise ValueError(
                    f"no built-in modulus for GF({p}^{r}); supply one explicitly"
                )
    key = (p, r, tuple(c % p for c in modulus))
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = FieldDescriptor(p, r, key[2])
        _FIELD_CACHE[key] = field
    return field


class FieldElement:
    """Immutable element of GF(p^r); all operators return fresh values."""

    __slots__ = ("field", "code")

    def __init__(self, field: FieldDescriptor, code: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "code", code)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __reduce__(self):
        return (FieldElement, (self.field, self.code))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.field} and {other.field}"
                )
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.code, code))

    __radd__ = __add__

    def __sub__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.code, code))

    def __rsub__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(code, self.code))

    def __mul__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.code, code))

    def __rtruediv__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(code, self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.power(self.code, n))

    def pth_root(self, e: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.pth_root(self.code, e))

    def frobenius(self, e: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.code, e))

    @property
    def coords(self) -> tuple:
        return self.field.decode(self.code)

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.code))

    def __str__(self) -> str:
        return self.field.format_code(self.code)

    def __repr__(self) -> str:
        return f"FieldElement({self!s}, {self.field!r})"
