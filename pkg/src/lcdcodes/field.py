"""Exact arithmetic in F_q = F_{r^2} using a polynomial basis over F_p.

An element is stored as an integer index whose base-``p`` digits are the
polynomial coefficients, constant term least significant. Iterating indices
``0 .. q-1`` therefore walks the coefficient vectors lexicographically with the
constant term fastest; that is the canonical enumeration order used for every
"first element such that ..." choice in this package.

Addition, multiplication, inversion, conjugation ``a -> a^r`` and the trace
``a -> a + a^r`` are precomputed as lookup tables, so fields are limited to
desk-scale sizes (``q <= MAX_ORDER``).
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterator, Sequence

from lcdcodes.errors import (
    EvenCharacteristic,
    FieldMismatch,
    FieldTooLarge,
    NoSquareRootOfMinusOne,
    NotMonic,
    NotPrime,
    OddDegree,
    ParseError,
    Reducible,
)

MAX_ORDER = 1024

# fixed moduli for the common small fields; other q use the first irreducible
# polynomial in lexicographic order
DEFAULT_MODULI = {
    4: (2, (1, 1, 1)),
    9: (3, (2, 2, 1)),
    25: (5, (2, 4, 1)),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            m, t = 0, q
            while t % p == 0:
                t //= p
                m += 1
            if t != 1 or not is_prime(p):
                break
            return p, m
    raise NotPrime(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# polynomials over F_p as coefficient lists, low degree first


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        f = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        _trim(a)
    return a


def _monic_polys(p: int, deg: int) -> Iterator[list[int]]:
    for low in itertools.product(range(p), repeat=deg):
        yield list(low) + [1]


def is_irreducible(p: int, modulus: Sequence[int]) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(_trim(list(modulus))) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(modulus, f, p):
                return False
    return True


def first_irreducible(p: int, deg: int) -> tuple[int, ...]:
    """First monic irreducible polynomial of the given degree, constant term fastest."""
    for f in _monic_polys(p, deg):
        if is_irreducible(p, f):
            return tuple(f)
    raise Reducible(f"no irreducible polynomial of degree {deg} over F_{p}")  # pragma: no cover


# ---------------------------------------------------------------------------


class FieldSpec:
    """The field F_q = F_p[x]/(modulus) with q = r^2.

    Args:
        p: prime characteristic.
        modulus: monic irreducible polynomial over F_p of even degree ``2s``,
            coefficients low degree first.

    Raises:
        NotPrime, NotMonic, OddDegree, Reducible, FieldTooLarge
    """

    def __init__(self, p: int, modulus: Sequence[int]):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"characteristic {p!r} is not prime")
        coeffs = [int(c) for c in modulus]
        if any(not 0 <= c < p for c in coeffs):
            raise ValueError(f"modulus coefficients must lie in [0, {p})")
        if not coeffs or coeffs[-1] != 1:
            raise NotMonic(f"modulus {coeffs} is not monic")
        m = len(coeffs) - 1
        if m < 2 or m % 2:
            raise OddDegree(f"modulus degree {m} is not even and >= 2")
        if p**m > MAX_ORDER:
            raise FieldTooLarge(f"q = {p}^{m} exceeds the supported order {MAX_ORDER}")
        if not is_irreducible(p, coeffs):
            raise Reducible(f"modulus {coeffs} is reducible over F_{p}")

        self.p = p
        self.modulus = tuple(coeffs)
        self.degree = m
        self.s = m // 2
        self.r = p**self.s
        self.q = p**m
        self._build_tables()

    # -- table construction --------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def _index(self, digits: Sequence[int]) -> int:
        a = 0
        for d in reversed(digits):
            a = a * self.p + d % self.p
        return a

    def _mul_poly(self, a: int, b: int) -> int:
        p, m = self.p, self.degree
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod(prod, self.modulus, p)
        return self._index(rem + [0] * (m - len(rem)))

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        digits = [self._digits(a) for a in range(q)]
        self.add_table = [
            [self._index([x + y for x, y in zip(digits[a], digits[b])]) for b in range(q)]
            for a in range(q)
        ]
        self.neg_table = [self._index([-x for x in digits[a]]) for a in range(q)]

        # discrete log tables from the first multiplicative generator
        exp = None
        for g in range(2, q) if q > 2 else ():
            powers = [1]
            x = g
            while x != 1 and len(powers) < q:
                powers.append(x)
                x = self._mul_poly(x, g)
            if len(powers) == q - 1:
                exp = powers
                break
        if exp is None:  # pragma: no cover - every finite field is cyclic
            raise RuntimeError("no multiplicative generator found")
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        self._exp, self._log = exp, log
        n = q - 1
        self.mul_table = [[0] * q for _ in range(q)]
        for a in range(1, q):
            row = self.mul_table[a]
            la = log[a]
            for b in range(1, q):
                row[b] = exp[(la + log[b]) % n]
        self.inv_table = [0] + [exp[(-log[a]) % n] for a in range(1, q)]
        self.conj_table = [0] + [exp[(log[a] * self.r) % n] for a in range(1, q)]
        self.trace_table = [self.add_table[a][self.conj_table[a]] for a in range(q)]
        self.omega_index = p  # digits (0, 1, 0, ...)
        self.subfield_indices = tuple(a for a in range(q) if self.conj_table[a] == a)

    # -- raw index arithmetic ------------------------------------------------

    def pow_index(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    # -- public element constructors -------------------------------------------

    def __call__(self, x: int | FieldElement) -> FieldElement:
        """Coerce an integer (taken mod p, a prime-subfield element) or element."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch("element belongs to a different field")
            return x
        return FieldElement(self, int(x) % self.p)

    def from_index(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} out of range for F_{self.q}")
        return FieldElement(self, index)

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) > self.degree:
            raise ValueError(f"at most {self.degree} coefficients expected")
        return FieldElement(self, self._index(list(coeffs)))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def omega(self) -> FieldElement:
        """Residue class of x, the distinguished generator w."""
        return FieldElement(self, self.omega_index)

    def elements(self) -> Iterator[FieldElement]:
        """All q elements in canonical order."""
        return (FieldElement(self, a) for a in range(self.q))

    def subfield_elements(self) -> Iterator[FieldElement]:
        """The r elements of F_r, in canonical order."""
        return (FieldElement(self, a) for a in self.subfield_indices)

    @property
    def odd(self) -> bool:
        return self.p != 2

    # -- text --------------------------------------------------------------------

    def describe(self) -> str:
        coeffs = ",".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.degree}) mod {coeffs}"

    def format_index(self, a: int) -> str:
        terms = []
        for k, c in reversed(list(enumerate(self._digits(a)))):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                w = "w" if k == 1 else f"w^{k}"
                terms.append(w if c == 1 else f"{c}*{w}")
        return "+".join(terms) or "0"

    _TERM = re.compile(r"^(?:(-?\d+)\*)?w(?:\^(\d+))?$|^(-?\d+)$")

    def parse(self, token: str) -> FieldElement:
        """Parse a sum of terms ``c``, ``w``, ``w^k``, ``c*w^k``."""
        text = token.replace(" ", "")
        if not text:
            raise ParseError("empty element token")
        acc = 0
        for term in text.split("+"):
            mt = self._TERM.match(term)
            if mt is None:
                raise ParseError(f"bad element token {token!r}")
            coef, exp_, const = mt.groups()
            if const is not None:
                value = int(const) % self.p
            else:
                k = int(exp_) if exp_ is not None else 1
                c = int(coef) % self.p if coef is not None else 1
                value = self.mul_table[c][self.pow_index(self.omega_index, k)]
            acc = self.add_table[acc][value]
        return FieldElement(self, acc)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec({self.describe()})"


class FieldElement:
    """Immutable element of a :class:`FieldSpec`."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field._digits(self.value))

    def _other(self, other) -> int | None:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return None

    def __add__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add_table[self.value][b])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_table[self.value])

    def __sub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        f = self.field
        return FieldElement(f, f.add_table[self.value][f.neg_table[b]])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_table[self.value][b])

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FieldElement(self.field, self.field.inv_table[self.value])

    def __truediv__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        if b == 0:
            raise ZeroDivisionError("division by zero")
        f = self.field
        return FieldElement(f, f.mul_table[self.value][f.inv_table[b]])

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_index(self.value, e))

    def conj(self) -> FieldElement:
        return FieldElement(self.field, self.field.conj_table[self.value])

    def trace(self) -> FieldElement:
        return FieldElement(self.field, self.field.trace_table[self.value])

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field == other.field
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.field.format_index(self.value)

    def __repr__(self) -> str:
        return f"<{self} in F_{self.field.q}>"


def field_new(p: int, modulus: Sequence[int]) -> FieldSpec:
    return FieldSpec(p, modulus)


def default_field(q: int) -> FieldSpec:
    """F_q with the built-in modulus, or the first irreducible one of degree log_p q."""
    if q in DEFAULT_MODULI:
        p, mod = DEFAULT_MODULI[q]
        return FieldSpec(p, mod)
    p, m = _prime_power(q)
    if m % 2:
        raise OddDegree(f"q = {q} is not an even power of a prime")
    return FieldSpec(p, first_irreducible(p, m))


def conj(a: FieldElement) -> FieldElement:
    """The automorphism a -> a^r fixing F_r."""
    return a.conj()


def trace(a: FieldElement) -> FieldElement:
    """Tr(a) = a + a^r, an element of F_r."""
    return a.trace()


def is_in_subfield(a: FieldElement) -> bool:
    return a.field.conj_table[a.value] == a.value


def find_alpha(spec: FieldSpec) -> FieldElement:
    """First nonzero element with conj(a) = -a. Only meaningful for odd q."""
    if not spec.odd:
        raise EvenCharacteristic("alpha is only defined for odd q")
    for a in range(1, spec.q):
        if spec.conj_table[a] == spec.neg_table[a]:
            return FieldElement(spec, a)
    raise AssertionError("unreachable: odd fields always have such an alpha")  # pragma: no cover


def sqrt_minus_one(spec: FieldSpec) -> FieldElement:
    """First lambda with lambda^2 = -1 and lambda^(r+1) = -1.

    Both hold exactly when r = 1 (mod 4); otherwise NoSquareRootOfMinusOne.
    """
    if spec.r % 4 != 1:
        raise NoSquareRootOfMinusOne(f"r = {spec.r} is not 1 mod 4")
    minus_one = spec.neg_table[1]
    for a in range(1, spec.q):
        if spec.mul_table[a][a] == minus_one:
            return FieldElement(spec, a)
    raise AssertionError("unreachable")  # pragma: no cover
