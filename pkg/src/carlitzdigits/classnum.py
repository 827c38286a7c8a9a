"""Divisor class numbers of subfields of cyclotomic function fields.

Let P be monic irreducible of degree d over F_q and G a primitive base mod P
(so the unit group mod P is generated by G, of order N = q^d - 1).  Two
generating polynomials built from the first r = N/(q-1) digits H_1..H_r of
1/P in base G carry the class number data:

  degree polynomial      sum_k deg'(H_k) u^(k-1)            (deg'(0) = 0)
  twisted polynomial     lam(lc(G)) sum_k lam~(lc(H_k)) u^(k-1)

for unit characters lam of F_q^x (lam~ the conjugate, lam~(0) = 0, lc the
leading coefficient).  When deg G >= deg P, products of their values at
roots of unity give the plus part and the relative part of the class number
of any subfield of the P-th cyclotomic function field.  Everything is
computed in Z[zeta_N]; products collapse to rational integers, and that
collapse is asserted, not assumed.

Independent routes kept alongside the digit route: the classical character
sum formulas over monic polynomials of degree < d (no hypothesis on deg G),
and point counting on the hyperelliptic model for the quadratic subfield.
"""

from __future__ import annotations

import cmath
import functools
from dataclasses import dataclass
from typing import NamedTuple

from .chars import DirichletChar, ResidueCtx, build_context, restriction, subfield
from .cycint import CycloInt, exponent_sum, int_poly_resultant, root_of_unity
from .errors import ExactnessError, HypothesisError
from .ffq import FieldElement, FieldSpec, UnitCharacter, quadratic_character
from .numutil import prime_factors
from .polyring import (
    Poly,
    all_polys_below,
    format_poly,
    is_irreducible,
    mod_pow,
    monic_polys,
)

_ADVISORY_REL_TOL = 1e-6


@dataclass(eq=False)
class DigitPolynomials:
    """First r digits of 1/P in base G and their generating polynomials."""

    ctx: ResidueCtx
    digits: tuple[Poly, ...]
    degree_poly: tuple[int, ...]

    def twisted_exponents(self, lam: UnitCharacter) -> tuple[int | None, ...]:
        """Coefficient exponents of the lam-twisted polynomial.

        Entry k-1 is the exponent of zeta_{q-1} in lam(lc(G)) * lam~(lc(H_k)),
        or None where H_k = 0 (the coefficient 0).
        """
        base_exp = lam.exponent(self.ctx.G.leading_coeff())
        modulus = max(lam.spec.q - 1, 1)
        out: list[int | None] = []
        for h in self.digits:
            if h.is_zero():
                out.append(None)
            else:
                out.append((base_exp - lam.exponent(h.leading_coeff())) % modulus)
        return tuple(out)

    def twisted_poly(self, lam: UnitCharacter) -> tuple[CycloInt, ...]:
        """Coefficients of the lam-twisted polynomial in Z[zeta_{q-1}]."""
        n = max(lam.spec.q - 1, 1)
        out = []
        for e in self.twisted_exponents(lam):
            out.append(CycloInt.zero(n) if e is None else root_of_unity(n, e))
        return tuple(out)


def digit_polynomials(ctx: ResidueCtx) -> DigitPolynomials:
    """Digits H_1..H_r through the closed form, off the ctx power table."""
    cached = getattr(ctx, "_digit_memo", None)
    if cached is not None:
        return cached
    digits = []
    degs = []
    for k in range(1, ctx.r + 1):
        gk1 = ctx.powers[(k - 1) % ctx.N]
        gk = ctx.powers[k % ctx.N]
        quo, rem = divmod(ctx.G * gk1 - gk, ctx.P)
        if not rem.is_zero():
            raise ExactnessError("digit closed form left a remainder")
        digits.append(quo)
        degs.append(len(quo.coeffs) - 1 if quo.coeffs else 0)
    result = DigitPolynomials(ctx=ctx, digits=tuple(digits), degree_poly=tuple(degs))
    ctx._digit_memo = result
    return result


def _eval_int_poly_at_root(coeffs, n: int, j: int) -> CycloInt:
    """sum_k coeffs[k] * zeta_n^(j*k)."""
    return exponent_sum(n, ((j * k, c) for k, c in enumerate(coeffs) if c))


def _monic_window(ctx: ResidueCtx, lo: int):
    """(dlog, deg) for monic I with max(lo, 0) <= deg I < d.

    Monic polynomials of degree < d are their own canonical residues, so
    the discrete log is a direct table lookup.
    """
    for s in range(max(lo, 0), ctx.d):
        for mp in monic_polys(ctx.spec, s):
            yield ctx.dlog[mp], s


def window_degree_identity(ctx: ResidueCtx, chi: DirichletChar):
    """Degree polynomial at chi(G) against the windowed weighted sum.

    For chi trivial on scalars: value equals
    sum over monic I, d-e <= deg I < d, of (deg I - (d-e)) chi(I).
    Valid in both regimes of e = deg G.  Returns (lhs, rhs).
    """
    if not chi.restricts_to_scalars_trivially():
        raise HypothesisError("chi must be trivial on scalars")
    dp = digit_polynomials(ctx)
    lhs = _eval_int_poly_at_root(dp.degree_poly, ctx.N, chi.j)
    lo = ctx.d - ctx.e
    rhs = exponent_sum(
        ctx.N, ((chi.j * k, s - lo) for k, s in _monic_window(ctx, lo) if s - lo)
    )
    return lhs, rhs


def full_degree_identity(ctx: ResidueCtx, chi: DirichletChar):
    """Degree polynomial at chi(G) against sum of chi(I) deg I, deg I < d.

    Needs deg G >= deg P and chi nontrivial (but trivial on scalars).
    Returns (lhs, rhs).
    """
    _require_big_base(ctx)
    if chi.is_trivial():
        raise HypothesisError("chi must be nontrivial")
    if not chi.restricts_to_scalars_trivially():
        raise HypothesisError("chi must be trivial on scalars")
    dp = digit_polynomials(ctx)
    lhs = _eval_int_poly_at_root(dp.degree_poly, ctx.N, chi.j)
    rhs = exponent_sum(ctx.N, ((chi.j * k, s) for k, s in _monic_window(ctx, 0) if s))
    return lhs, rhs


def _twisted_factor(ctx: ResidueCtx, dp: DigitPolynomials, chi: DirichletChar) -> CycloInt:
    """Twisted polynomial of lam = chi restricted to scalars, at chi(G).

    Coefficients live in Z[zeta_{q-1}]; they are lifted along
    zeta_{q-1} = zeta_N^r before evaluating at zeta_N^j.
    """
    lam = restriction(chi)
    exps = dp.twisted_exponents(lam)
    terms = []
    for k, e in enumerate(exps):
        if e is not None:
            terms.append((ctx.r * e + chi.j * k, 1))
    return exponent_sum(ctx.N, terms)


def window_twist_identity(ctx: ResidueCtx, chi: DirichletChar):
    """Twisted polynomial at chi(G) against the windowed plain sum.

    Equals sum of chi(I) over monic I with d-e <= deg I < d, for any chi.
    Valid in both regimes of e.  Returns (lhs, rhs).
    """
    dp = digit_polynomials(ctx)
    lhs = _twisted_factor(ctx, dp, chi)
    lo = ctx.d - ctx.e
    rhs = exponent_sum(ctx.N, ((chi.j * k, 1) for k, _ in _monic_window(ctx, lo)))
    return lhs, rhs


def full_twist_identity(ctx: ResidueCtx, chi: DirichletChar):
    """Twisted polynomial at chi(G) against sum of chi(I), deg I < d.

    Valid for every chi once deg G >= deg P.  Returns (lhs, rhs).
    """
    _require_big_base(ctx)
    dp = digit_polynomials(ctx)
    lhs = _twisted_factor(ctx, dp, chi)
    rhs = exponent_sum(ctx.N, ((chi.j * k, 1) for k, _ in _monic_window(ctx, 0)))
    return lhs, rhs


def digit_degree_sum(q: int, d: int, e: int) -> int:
    """Closed form for sum of deg'(H_k), k = 1..r.

    q^(d-e) * s1(e) when e < d, and (e-d) * s0(d) + s1(d) when e >= d,
    with s0(j) = sum_{i<j} q^i and s1(j) = sum_{i<j} i q^i.
    """
    if d < 1 or e < 1:
        raise ValueError("degrees must be >= 1")
    s0 = lambda j: sum(q**i for i in range(j))
    s1 = lambda j: sum(i * q**i for i in range(j))
    if e < d:
        return q ** (d - e) * s1(e)
    return (e - d) * s0(d) + s1(d)


def _require_big_base(ctx: ResidueCtx) -> None:
    if ctx.e < ctx.d:
        raise HypothesisError("requires deg G >= deg P")


def _collapse(value: CycloInt, what: str) -> int:
    v = value.as_integer()
    if v is None:
        raise ExactnessError(f"{what} did not collapse to a rational integer")
    return v


def _advisory_check(factors, exact: int, what: str) -> None:
    """Compare the floating product of factors against the exact integer.

    Accumulated in log space so large products cannot overflow.  This is
    an advisory cross-check: a violation is an internal error.
    """
    if not factors:
        return
    total = 0j
    for f in factors:
        z = f.complex_eval()
        if z == 0:
            raise ExactnessError(f"{what}: advisory factor evaluated to zero")
        total += cmath.log(z)
    if exact == 0:
        raise ExactnessError(f"{what}: exact value is zero")
    target = cmath.log(complex(exact))
    diff = cmath.exp(total - target)
    if abs(diff - 1) > _ADVISORY_REL_TOL:
        raise ExactnessError(
            f"{what}: advisory complex product differs by {abs(diff - 1):.3e} (relative)"
        )


def h_plus_from_digits(ctx: ResidueCtx, l: int) -> int:
    """Class number of the real subfield L+ from the degree polynomial.

    h = (-1)^(m-1) * product of the degree polynomial over the nontrivial
    m-th roots of unity, m = gcd(l, r).  The product is computed both as a
    resultant against (u^m - 1)/(u - 1) and as an exact product in
    Z[zeta_N]; the two must agree.  Needs deg G >= deg P and m > 1.
    """
    desc = subfield(ctx, l)
    _require_big_base(ctx)
    m = desc.m
    if m == 1:
        raise HypothesisError("L+ is the rational base field (m = 1); nothing to compute")
    F = digit_polynomials(ctx).degree_poly
    step = ctx.N // m
    factors = [_eval_int_poly_at_root(F, ctx.N, step * t) for t in range(1, m)]
    prod = CycloInt.one(ctx.N)
    for f in factors:
        prod = prod * f
    value = _collapse(prod, "plus-part product")
    res = int_poly_resultant((1,) * m, F)
    if res != value:
        raise ExactnessError(
            f"resultant route ({res}) and product route ({value}) disagree for the plus part"
        )
    _advisory_check(factors, value, "plus-part product")
    sign = 1 if m % 2 else -1
    return sign * value


def h_minus_from_digits(ctx: ResidueCtx, l: int) -> int:
    """Relative class number h_L / h_{L+} from twisted polynomials.

    Product over chi in X_L^- (grouped by restriction to scalars) of the
    twisted polynomial at chi(G).  Needs deg G >= deg P and n > 1.
    """
    desc = subfield(ctx, l)
    _require_big_base(ctx)
    if desc.n == 1:
        raise HypothesisError("L equals its real subfield (n = 1); nothing to compute")
    dp = digit_polynomials(ctx)
    factors = []
    for j in desc.chis_minus:
        factors.append(_twisted_factor(ctx, dp, ctx.char(j)))
    prod = CycloInt.one(ctx.N)
    for f in factors:
        prod = prod * f
    value = _collapse(prod, "minus-part product")
    _advisory_check(factors, value, "minus-part product")
    return value


class CharSumClassNumbers(NamedTuple):
    h_plus: int
    h_minus: int
    h: int


def h_from_char_sums(ctx: ResidueCtx, l: int) -> CharSumClassNumbers:
    """Class number of the degree-l subfield by the character sum formulas.

    h+ is the product over nontrivial chi in X_L^+ of -sum chi(I) deg I,
    h- the product over chi in X_L^- of sum chi(I), both over monic I of
    degree < d.  No hypothesis on deg G; this is the digit route's oracle.
    """
    desc = subfield(ctx, l)
    window = list(_monic_window(ctx, 0))
    plus_factors = []
    for j in desc.chis_plus:
        if j == 0:
            continue
        s1 = exponent_sum(ctx.N, ((j * k, s) for k, s in window if s))
        plus_factors.append(-s1)
    minus_factors = []
    for j in desc.chis_minus:
        minus_factors.append(exponent_sum(ctx.N, ((j * k, 1) for k, _ in window)))
    hp = CycloInt.one(ctx.N)
    for f in plus_factors:
        hp = hp * f
    hm = CycloInt.one(ctx.N)
    for f in minus_factors:
        hm = hm * f
    h_plus = _collapse(hp, "character sum plus part")
    h_minus = _collapse(hm, "character sum minus part")
    _advisory_check(plus_factors, h_plus, "character sum plus part")
    _advisory_check(minus_factors, h_minus, "character sum minus part")
    return CharSumClassNumbers(h_plus, h_minus, h_plus * h_minus)


def quadratic_class_number(P: Poly, G: Poly) -> int:
    """Class number of the quadratic subfield from signed digit data.

    For q odd and deg G >= deg P: even d gives the alternating sum of digit
    degrees; odd d gives -eta_G times the alternating sum of the quadratic
    characters of the digit leading coefficients, eta_G that of lc(G).
    """
    if P.spec.q % 2 == 0:
        raise HypothesisError("q must be odd for the quadratic subfield")
    ctx = build_context(P, G)
    _require_big_base(ctx)
    dp = digit_polynomials(ctx)
    if ctx.d % 2 == 0:
        total = 0
        for k, deg in enumerate(dp.degree_poly, start=1):
            total += deg if k % 2 == 0 else -deg
        return total
    eta = quadratic_character(G.leading_coeff())
    total = 0
    for k, h in enumerate(dp.digits, start=1):
        eps = quadratic_character(h.leading_coeff())
        total += eps if k % 2 == 0 else -eps
    return -eta * total


def canonical_primitive_lift(P: Poly) -> Poly:
    """G = g0 + P for the least primitive residue g0 in enumeration order.

    The result is monic of degree d = deg P, so deg G >= deg P holds and
    G is primitive mod P exactly because g0 is.
    """
    spec = P.spec
    d = len(P.coeffs) - 1
    N = spec.q**d - 1
    primes = prime_factors(N) if N > 1 else ()
    one = Poly.one(spec) % P
    for cand in all_polys_below(spec, d):
        if cand.is_zero():
            continue
        if all(mod_pow(cand, N // ell, P) != one for ell in primes):
            return cand + P
    raise ExactnessError("no primitive residue found; unit groups are cyclic")


# -- point counting oracle for the quadratic subfield --

def point_count_class_number(P: Poly) -> int:
    """Class number of F_q(T, y), y^2 = (-1)^d P(T), by point counting.

    Counts points of the smooth hyperelliptic model over F_{q^i} for
    i = 1..genus, rebuilds the zeta numerator through Newton's identities
    and the functional equation, and evaluates it at 1.  Needs q odd and
    2 <= d <= 5 (genus at most 2).
    """
    spec = P.spec
    q = spec.q
    if q % 2 == 0:
        raise HypothesisError("point counting needs q odd")
    d = len(P.coeffs) - 1
    if not 2 <= d <= 5:
        raise HypothesisError("point counting supports 2 <= deg P <= 5")
    if not P.is_monic() or not is_irreducible(P):
        raise HypothesisError("P must be monic irreducible")
    genus = (d - 1) // 2
    if genus == 0:
        return 1
    negate = d % 2 == 1
    infinity = 1 if d % 2 else 2
    power_sums = []
    for i in range(1, genus + 1):
        ext, embed = _extension_with_embedding(spec, i)
        coeffs = [embed(c) for c in P.coeffs]
        total = 0
        for t in ext.elements():
            acc = ext.zero
            for c in reversed(coeffs):
                acc = acc * t + c
            if negate:
                acc = -acc
            total += quadratic_character(acc)
        n_points = q**i + total + infinity
        power_sums.append(q**i + 1 - n_points)
    s1 = power_sums[0]
    if genus == 1:
        h = 1 - s1 + q
    else:
        s2 = power_sums[1]
        e1 = s1
        if (s1 * s1 - s2) % 2:
            raise ExactnessError("Newton identity produced a non-integer coefficient")
        e2 = (s1 * s1 - s2) // 2
        b1, b2 = -e1, e2
        h = 1 + b1 + b2 + q * b1 + q * q
    if h < 1:
        raise ExactnessError("point count produced a non-positive class number")
    return h


@functools.lru_cache(maxsize=None)
def _default_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over F_p, in enumeration order."""
    base = FieldSpec(p)
    for cand in monic_polys(base, k):
        if is_irreducible(cand):
            return tuple(c.coeffs[0] for c in cand.coeffs)
    raise AssertionError("irreducibles of every degree exist")


def _extension_with_embedding(spec: FieldSpec, i: int):
    """The field F_{q^i} together with an embedding F_q -> F_{q^i}."""
    if i == 1:
        return spec, lambda c: c
    k = spec.a * i
    try:
        ext = FieldSpec(spec.p, k)
    except ValueError:
        ext = FieldSpec(spec.p, k, _default_modulus(spec.p, k))
    if spec.a == 1:
        return ext, lambda c, _ext=ext: _ext.element(c.coeffs[0])
    # embed by sending the generator to a root of the base modulus
    root = None
    for x in ext.elements():
        acc = ext.zero
        for mc in reversed(spec.modulus):
            acc = acc * x + ext.element(mc)
        if acc.is_zero():
            root = x
            break
    if root is None:
        raise ExactnessError("base modulus has no root in the extension")

    def embed(c: FieldElement, _root=root, _ext=ext):
        acc = _ext.zero
        for cc in reversed(c.coeffs):
            acc = acc * _root + _ext.element(cc)
        return acc

    return ext, embed


# -- reports --

CSV_COLUMNS = ("q", "d", "P", "G", "l", "m", "n", "h_plus", "h_minus", "h", "methods", "agree")


@dataclass(frozen=True)
class ClassNumberReport:
    q: int
    d: int
    P: str
    G: str
    e: int
    r: int
    l: int
    m: int
    n: int
    h_plus: int
    h_minus: int
    h: int
    methods: tuple[str, ...]
    agree: bool

    def to_json_dict(self) -> dict:
        return {
            "q": self.q, "d": self.d, "P": self.P, "G": self.G,
            "e": self.e, "r": self.r, "l": self.l, "m": self.m, "n": self.n,
            "h_plus": self.h_plus, "h_minus": self.h_minus, "h": self.h,
            "methods": list(self.methods), "agree": self.agree,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ClassNumberReport":
        return cls(
            q=data["q"], d=data["d"], P=data["P"], G=data["G"],
            e=data["e"], r=data["r"], l=data["l"], m=data["m"], n=data["n"],
            h_plus=data["h_plus"], h_minus=data["h_minus"], h=data["h"],
            methods=tuple(data["methods"]), agree=data["agree"],
        )

    def csv_row(self) -> list:
        return [
            self.q, self.d, self.P, self.G, self.l, self.m, self.n,
            self.h_plus, self.h_minus, self.h,
            "+".join(self.methods), str(self.agree).lower(),
        ]


def compute_report(
    ctx: ResidueCtx,
    l: int,
    verify_charsum: bool = False,
    verify_pointcount: bool = False,
) -> ClassNumberReport:
    """Digit-route class numbers for the degree-l subfield, with optional
    oracle comparisons.  The digit route needs deg G >= deg P; degenerate
    parts (m = 1 or n = 1) are the empty products, i.e. 1.
    """
    desc = subfield(ctx, l)
    _require_big_base(ctx)
    h_plus = 1 if desc.m == 1 else h_plus_from_digits(ctx, l)
    h_minus = 1 if desc.n == 1 else h_minus_from_digits(ctx, l)
    h = h_plus * h_minus
    methods = ["digits"]
    agree = True
    if verify_charsum:
        cs = h_from_char_sums(ctx, l)
        methods.append("charsum")
        agree = agree and cs.h_plus == h_plus and cs.h_minus == h_minus
    if verify_pointcount:
        if l != 2:
            raise HypothesisError("the point count oracle applies to the quadratic subfield (l = 2)")
        pc = point_count_class_number(ctx.P)
        methods.append("pointcount")
        agree = agree and pc == h
    return ClassNumberReport(
        q=ctx.spec.q, d=ctx.d, P=format_poly(ctx.P), G=format_poly(ctx.G),
        e=ctx.e, r=ctx.r, l=l, m=desc.m, n=desc.n,
        h_plus=h_plus, h_minus=h_minus, h=h,
        methods=tuple(methods), agree=agree,
    )
