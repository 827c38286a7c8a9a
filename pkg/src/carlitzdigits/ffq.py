"""Arithmetic in the finite field F_q with q = p^a elements.

An element is a coefficient vector (c_0, ..., c_{a-1}) over the prime field,
standing for c_0 + c_1*g + ... + c_{a-1}*g^(a-1) where g is the class of the
variable modulo a fixed monic irreducible degree-a polynomial over F_p.  For
a = 1 the vector has a single entry and no modulus is involved.

Elements are enumerated in a fixed order (index 0 .. q-1): coefficient
vectors read as base-p digit strings with the constant coordinate varying
fastest.  Every deterministic choice in this package (canonical generators,
polynomial enumeration, sweep order) refers to that order.

Moduli for small extension fields (q <= 64) are built in; any other
extension field needs an explicit monic irreducible modulus.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import HypothesisError, ParseError
from .numutil import is_prime, prime_factors

# Fixed moduli for the extension fields with q = p^a <= 64, coefficients
# ascending.  These are the classical Conway polynomials, but nothing below
# depends on that normalization beyond monic irreducibility.
BUILTIN_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}


# -- dense F_p[x] helpers on plain int lists (ascending), used only for
#    modulus validation so FieldSpec does not depend on the Poly type --

def _fp_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_mod(f: list[int], g: list[int], p: int) -> list[int]:
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], p - 2, p)
    while len(_fp_trim(f)) - 1 >= dg:
        c = f[-1] * inv % p
        k = len(f) - 1 - dg
        for i, b in enumerate(g):
            f[k + i] = (f[k + i] - c * b) % p
        _fp_trim(f)
    return f


def _fp_is_irreducible(mod: tuple[int, ...], p: int) -> bool:
    # trial division by monic polynomials of degree up to deg(mod)/2;
    # deg(mod) is tiny here, so brute force is fine
    d = len(mod) - 1
    for s in range(1, d // 2 + 1):
        for idx in range(p**s):
            cand = [idx // p**i % p for i in range(s)] + [1]
            if not _fp_mod(list(mod), cand, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Description of F_q, q = p^a. The modulus is present exactly when a > 1."""

    p: int
    a: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.a < 1:
            raise ValueError("a must be >= 1")
        if self.a == 1:
            if self.modulus is not None:
                raise ValueError("prime fields take no modulus")
            return
        mod = self.modulus
        if mod is None:
            mod = BUILTIN_MODULI.get((self.p, self.a))
            if mod is None:
                raise ValueError(
                    f"no built-in modulus for p^a = {self.p}^{self.a}; pass one explicitly"
                )
            object.__setattr__(self, "modulus", mod)
            return
        mod = tuple(c % self.p for c in mod)
        if len(mod) != self.a + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree a")
        if not _fp_is_irreducible(mod, self.p):
            raise ValueError("modulus is reducible over F_p")
        object.__setattr__(self, "modulus", mod)

    @property
    def q(self) -> int:
        return self.p**self.a

    @classmethod
    def from_order(cls, q: int, modulus: tuple[int, ...] | None = None) -> "FieldSpec":
        """Build the FieldSpec for the field with q elements (q a prime power)."""
        if q < 2:
            raise ParseError(f"q = {q} is not a prime power")
        p = min(prime_factors(q))
        a = 0
        n = q
        while n % p == 0:
            n //= p
            a += 1
        if n != 1:
            raise ParseError(f"q = {q} is not a prime power")
        if a == 1:
            if modulus is not None:
                raise ParseError("prime fields take no modulus")
            return cls(p)
        return cls(p, a, modulus)

    def element(self, value) -> "FieldElement":
        """Coerce an int (constant embedding) or coefficient iterable."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.a - 1)
            return FieldElement(self, coeffs)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.a:
            raise ValueError("too many coefficients for this field")
        coeffs += (0,) * (self.a - len(coeffs))
        return FieldElement(self, coeffs)

    def from_index(self, i: int) -> "FieldElement":
        """The i-th element in the canonical order, 0 <= i < q."""
        if not 0 <= i < self.q:
            raise ValueError("index out of range")
        coeffs = []
        for _ in range(self.a):
            coeffs.append(i % self.p)
            i //= self.p
        return FieldElement(self, tuple(coeffs))

    def elements(self):
        for i in range(self.q):
            yield self.from_index(i)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.a)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple[int, ...]

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise ValueError("operands live in different fields")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def index(self) -> int:
        i = 0
        for c in reversed(self.coeffs):
            i = i * self.spec.p + c
        return i

    def __add__(self, other):
        self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple(-x % p for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        spec = self.spec
        p = spec.p
        if spec.a == 1:
            return FieldElement(spec, (self.coeffs[0] * other.coeffs[0] % p,))
        prod = [0] * (2 * spec.a - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = spec.modulus
        for k in range(len(prod) - 1, spec.a - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(spec.a):
                    prod[k - spec.a + i] = (prod[k - spec.a + i] - c * mod[i]) % p
        return FieldElement(spec, tuple(prod[: spec.a]))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.spec.q - 2)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __str__(self) -> str:
        if self.spec.a == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*g")
            else:
                terms.append(f"{c}*g^{i}")
        return "+".join(terms) if terms else "0"


def mult_order(x: FieldElement) -> int:
    """Order of x in the unit group F_q^x."""
    if x.is_zero():
        raise ValueError("zero has no multiplicative order")
    n = x.spec.q - 1
    t = n
    for ell in prime_factors(n) if n > 1 else ():
        while t % ell == 0 and (x ** (t // ell)) == x.spec.one:
            t //= ell
    return t


@functools.lru_cache(maxsize=None)
def canonical_generator(spec: FieldSpec) -> FieldElement:
    """The least generator of F_q^x in the canonical element order."""
    n = spec.q - 1
    for x in spec.elements():
        if not x.is_zero() and mult_order(x) == n:
            return x
    raise AssertionError("unit group of a finite field is cyclic")


def quadratic_character(x: FieldElement) -> int:
    """+1 on nonzero squares, -1 on nonsquares, 0 at zero.  Needs q odd."""
    q = x.spec.q
    if q % 2 == 0:
        raise HypothesisError("q must be odd for the quadratic character")
    if x.is_zero():
        return 0
    return 1 if x ** ((q - 1) // 2) == x.spec.one else -1


@functools.lru_cache(maxsize=None)
def _dlog_table(generator: FieldElement) -> dict[FieldElement, int]:
    spec = generator.spec
    n = spec.q - 1
    table = {}
    cur = spec.one
    for k in range(n):
        if cur in table:
            raise ValueError(f"{generator} does not generate the unit group")
        table[cur] = k
        cur = cur * generator
    if cur != spec.one:
        raise ValueError(f"{generator} does not generate the unit group")
    return table


def dlog(x: FieldElement, generator: FieldElement) -> int:
    """Discrete log of x base a fixed generator of F_q^x."""
    if x.is_zero():
        raise ValueError("zero has no discrete log")
    return _dlog_table(generator)[x]


@dataclass(frozen=True)
class UnitCharacter:
    """Character lambda_s of F_q^x relative to a chosen generator w.

    lambda_s(w^t) = zeta_{q-1}^(s*t).  ``exponent`` returns the exponent of
    zeta_{q-1}, or None at zero (the character value 0).  The generator
    defaults to the canonical one, but callers that index characters against
    a different generator (e.g. the reduction of a primitive base) pass it
    explicitly.
    """

    spec: FieldSpec
    s: int
    generator: FieldElement

    def __post_init__(self):
        n = self.spec.q - 1
        object.__setattr__(self, "s", self.s % n if n > 0 else 0)
        _dlog_table(self.generator)  # validates the generator

    @property
    def order(self) -> int:
        n = self.spec.q - 1
        if n == 0 or self.s == 0:
            return 1
        return n // math.gcd(self.s, n)

    def is_trivial(self) -> bool:
        return self.s == 0 or self.spec.q == 2

    def exponent(self, x: FieldElement) -> int | None:
        """Exponent k with lambda(x) = zeta_{q-1}^k, or None when x = 0."""
        if x.is_zero():
            return None
        n = self.spec.q - 1
        if n == 1:
            return 0
        return self.s * dlog(x, self.generator) % n

    def conjugate(self) -> "UnitCharacter":
        return UnitCharacter(self.spec, -self.s, self.generator)


def unit_character(spec: FieldSpec, s: int, generator: FieldElement | None = None) -> UnitCharacter:
    if generator is None:
        generator = canonical_generator(spec) if spec.q > 2 else spec.one
    return UnitCharacter(spec, s, generator)
