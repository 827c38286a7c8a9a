"""The Carlitz module action of A = F_q[T] on itself.

T acts by x -> T*x + x^q and constants act by multiplication; extending
multiplicatively gives, for each I in A, an F_q-linear (additive) polynomial
rho_I(x) = sum_i c_i x^(q^i) with c_i in A, of degree q^deg(I) in x.  The
coefficients are computed by a Horner recursion over the coefficients of I:
rho_{a_0 + T*J} = a_0 * x + rho_T(rho_J(x)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .ffq import FieldSpec
from .polyring import Poly, format_poly


@dataclass(frozen=True)
class AdditivePoly:
    """sum_i coeffs[i] * x^(q^i) with coefficients in F_q[T]."""

    spec: FieldSpec
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        coeffs = self.coeffs
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, spec: FieldSpec) -> "AdditivePoly":
        return cls(spec, ())

    @classmethod
    def identity(cls, spec: FieldSpec) -> "AdditivePoly":
        return cls(spec, (Poly.one(spec),))

    def is_zero(self) -> bool:
        return not self.coeffs

    def x_degree(self) -> int:
        """Degree in x, i.e. q^(number of Frobenius twists)."""
        if not self.coeffs:
            raise ValueError("the zero map has no degree")
        return self.spec.q ** (len(self.coeffs) - 1)

    def __add__(self, other: "AdditivePoly") -> "AdditivePoly":
        if other.spec != self.spec:
            raise ValueError("operands live over different fields")
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return AdditivePoly(self.spec, tuple(out))

    def compose(self, other: "AdditivePoly") -> "AdditivePoly":
        """self(other(x)); coefficients multiply with a Frobenius twist."""
        if other.spec != self.spec:
            raise ValueError("operands live over different fields")
        if not self.coeffs or not other.coeffs:
            return AdditivePoly.zero(self.spec)
        out = [Poly.zero(self.spec)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            for j, d in enumerate(other.coeffs):
                out[i + j] = out[i + j] + c * _q_power(d, i)
        return AdditivePoly(self.spec, tuple(out))

    def apply(self, x: Poly) -> Poly:
        """Evaluate at a polynomial argument."""
        q = self.spec.q
        acc = Poly.zero(self.spec)
        xp = x
        for i, c in enumerate(self.coeffs):
            if i:
                xp = _poly_pow(xp, q)
            acc = acc + c * xp
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        q = self.spec.q
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            xpow = "x" if i == 0 else f"x^{q**i}"
            if c == Poly.one(self.spec):
                terms.append(xpow)
            else:
                cs = format_poly(c)
                if "+" in cs:
                    cs = f"({cs})"
                terms.append(f"{cs}*{xpow}")
        return " + ".join(terms)


def _q_power(f: Poly, i: int) -> Poly:
    """f^(q^i).  Frobenius spreads coefficients: sum a_k T^(k*q^i)."""
    if i == 0 or f.is_zero():
        return f
    step = f.spec.q**i
    out = [f.spec.zero] * ((len(f.coeffs) - 1) * step + 1)
    for k, a in enumerate(f.coeffs):
        out[k * step] = a
    return Poly(f.spec, tuple(out))


def _poly_pow(f: Poly, e: int) -> Poly:
    acc = Poly.one(f.spec)
    base = f
    while e:
        if e & 1:
            acc = acc * base
        base = base * base
        e >>= 1
    return acc


def carlitz_poly(operand: Poly) -> AdditivePoly:
    """The additive polynomial rho_I for I in F_q[T].

    Horner over the coefficients of I, highest first: starting from 0,
    rho <- rho_T o rho + a_j * x, using rho_T(y) = T*y + y^q.
    """
    spec = operand.spec
    t_poly = Poly(spec, (spec.zero, spec.one))
    rho = AdditivePoly.zero(spec)
    for a in reversed(operand.coeffs):
        coeffs = list(rho.coeffs)
        # rho_T o rho: c'_i = T*c_i + c_{i-1}^q
        twisted = [Poly.zero(spec)] * (len(coeffs) + 1 if coeffs else 0)
        for i, c in enumerate(coeffs):
            twisted[i] = twisted[i] + t_poly * c
            twisted[i + 1] = twisted[i + 1] + _q_power(c, 1)
        if not a.is_zero():
            const = Poly(spec, (a,))
            if twisted:
                twisted[0] = twisted[0] + const
            else:
                twisted = [const]
        rho = AdditivePoly(spec, tuple(twisted))
    return rho
