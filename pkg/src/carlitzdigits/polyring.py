"""The polynomial ring A = F_q[T].

A polynomial is a tuple of field elements, ascending by degree, with no
trailing zeros; the zero polynomial is the empty tuple.  deg 0 is the
sentinel NEG_INF (so deg respects products only away from zero), and the
leading coefficient of 0 is defined to be 0.

Enumeration of polynomials is lexicographic with the constant coefficient
varying fastest, matching the element order of the coefficient field; there
are exactly q^s monic polynomials of degree s and they are produced in that
fixed order.

Text forms: a human-readable sum of terms like "T^3+2*T+2" (parsing also
accepts the implicit product "2T"), and a bare coefficient list "2,2,0,1"
(ascending).  Over extension fields a coefficient is a parenthesized list
of prime-field coordinates, e.g. "(1,1)*T^2+(0,1)".
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import HypothesisError, ParseError
from .ffq import FieldElement, FieldSpec
from .numutil import prime_factors

NEG_INF = float("-inf")


@dataclass(frozen=True)
class Poly:
    spec: FieldSpec
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        coeffs = self.coeffs
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, ())

    @classmethod
    def one(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, (spec.one,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def degree(self):
        """Degree as an int, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def leading_coeff(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.spec.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.spec.one

    def constant_coeff(self) -> FieldElement:
        return self.coeffs[0] if self.coeffs else self.spec.zero

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly) or other.spec != self.spec:
            raise ValueError("operands live over different fields")

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.spec, tuple(out))

    def __neg__(self):
        return Poly(self.spec, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.spec)
        out = [self.spec.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return Poly(self.spec, tuple(out))

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: FieldElement) -> "Poly":
        return Poly(self.spec, tuple(x * c for x in self.coeffs))

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        dg = len(other.coeffs) - 1
        rem = list(self.coeffs)
        if len(rem) - 1 < dg:
            return Poly.zero(self.spec), self
        inv = other.coeffs[-1].inverse()
        quo = [self.spec.zero] * (len(rem) - dg)
        for k in range(len(rem) - dg - 1, -1, -1):
            c = rem[k + dg] * inv
            if not c.is_zero():
                quo[k] = c
                for i, b in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - c * b
        return Poly(self.spec, tuple(quo)), Poly(self.spec, tuple(rem[:dg]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial cannot be made monic")
        return self.scale(self.coeffs[-1].inverse())

    def evaluate(self, x: FieldElement) -> FieldElement:
        acc = self.spec.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return format_poly(self)


def poly(spec: FieldSpec, *coeffs) -> Poly:
    """Convenience constructor from ints or field elements, ascending."""
    return Poly(spec, tuple(spec.element(c) for c in coeffs))


def gen(spec: FieldSpec) -> Poly:
    """The variable T."""
    return poly(spec, 0, 1)


def valuation_inf(f1: Poly, f2: Poly) -> int:
    """Valuation at infinity of f1/f2, i.e. deg f2 - deg f1."""
    if f1.is_zero() or f2.is_zero():
        raise ValueError("valuation of zero is undefined")
    return len(f2.coeffs) - len(f1.coeffs)


def mod_pow(base: Poly, e: int, m: Poly) -> Poly:
    """base^e mod m for e >= 0 (e may be a big integer)."""
    if e < 0:
        raise ValueError("negative exponents are not supported")
    if m.degree() == NEG_INF:
        raise ZeroDivisionError("zero modulus")
    result = Poly.one(base.spec) % m
    acc = base % m
    while e:
        if e & 1:
            result = (result * acc) % m
        acc = (acc * acc) % m
        e >>= 1
    return result


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic() if not f.is_zero() else f


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: T^(q^d) = T mod f, and T^(q^(d/ell)) - T is coprime to
    f for every prime ell dividing d."""
    d = len(f.coeffs) - 1
    if d < 1:
        raise ValueError("irreducibility is only defined for nonconstant polynomials")
    if d == 1:
        return True
    q = f.spec.q
    t = gen(f.spec)
    if mod_pow(t, q**d, f) != t % f:
        return False
    for ell in prime_factors(d):
        h = mod_pow(t, q ** (d // ell), f) - (t % f)
        if poly_gcd(h, f).degree() != 0:
            return False
    return True


def monic_polys(spec: FieldSpec, s: int):
    """All q^s monic polynomials of degree s, in the canonical order."""
    if s < 0:
        raise ValueError("degree must be >= 0")
    q = spec.q
    one = spec.one
    for idx in range(q**s):
        coeffs = tuple(spec.from_index(idx // q**i % q) for i in range(s))
        yield Poly(spec, coeffs + (one,))


def monic_polys_below(spec: FieldSpec, d: int):
    """All monic polynomials of degree < d, by ascending degree."""
    for s in range(d):
        yield from monic_polys(spec, s)


def all_polys_below(spec: FieldSpec, d: int):
    """All q^d polynomials of degree < d (zero included), canonical order."""
    q = spec.q
    for idx in range(q**d):
        yield Poly(spec, tuple(spec.from_index(idx // q**i % q) for i in range(d)))


# -- text forms --

_TERM_RE = re.compile(
    r"^(?:\((?P<vec>[0-9,\s]*)\)|(?P<int>[0-9]+))?\s*\*?\s*(?P<var>T(?:\^(?P<exp>[0-9]+))?)?$"
)


def _split_terms(s: str) -> list[str]:
    terms, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {s!r}")
        if ch == "+" and depth == 0:
            terms.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {s!r}")
    terms.append("".join(cur))
    return terms


def _parse_element(spec: FieldSpec, text: str) -> FieldElement:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
        parts = [p.strip() for p in text.split(",")] if text.strip() else []
        try:
            return spec.element([int(p) for p in parts])
        except (ValueError, ParseError) as exc:
            raise ParseError(f"bad field element {text!r}: {exc}") from None
    try:
        return spec.element(int(text))
    except ValueError:
        raise ParseError(f"bad field element {text!r}") from None


def parse_poly(spec: FieldSpec, text: str) -> Poly:
    """Parse either text form (terms joined by +, or a coefficient list)."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    if "T" not in s:
        # coefficient list, ascending
        items = _split_top_commas(s)
        return Poly(spec, tuple(_parse_element(spec, item) for item in items))
    acc: dict[int, FieldElement] = {}
    for raw in _split_terms(s):
        term = raw.strip().replace(" ", "")
        m = _TERM_RE.match(term)
        if not m or (m.group("vec") is None and m.group("int") is None and m.group("var") is None):
            raise ParseError(f"bad term {raw!r} in polynomial {text!r}")
        if m.group("vec") is not None:
            c = _parse_element(spec, "(" + m.group("vec") + ")")
        elif m.group("int") is not None:
            c = spec.element(int(m.group("int")))
        else:
            c = spec.one
        if m.group("var") is None:
            k = 0
        else:
            k = int(m.group("exp")) if m.group("exp") else 1
        acc[k] = acc[k] + c if k in acc else c
    deg = max(acc)
    coeffs = tuple(acc.get(i, spec.zero) for i in range(deg + 1))
    return Poly(spec, coeffs)


def _split_top_commas(s: str) -> list[str]:
    items, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur))
    return items


def _format_coeff(c: FieldElement) -> str:
    if c.spec.a == 1:
        return str(c.coeffs[0])
    return "(" + ",".join(str(x) for x in c.coeffs) + ")"


def format_poly(f: Poly, style: str = "human") -> str:
    if style == "list":
        if f.is_zero():
            return "0"
        return ",".join(_format_coeff(c) for c in f.coeffs)
    if style != "human":
        raise ValueError(f"unknown style {style!r}")
    if f.is_zero():
        return "0"
    one = f.spec.one
    terms = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c.is_zero():
            continue
        if k == 0:
            terms.append(_format_coeff(c))
        else:
            var = "T" if k == 1 else f"T^{k}"
            terms.append(var if c == one else f"{_format_coeff(c)}*{var}")
    return "+".join(terms)
