"""Characters of the unit group (A/P)^x for irreducible P, indexed by a
primitive base.

With P monic irreducible of degree d the unit group is cyclic of order
N = q^d - 1.  A base G that generates it fixes an isomorphism k -> G^k, and
every character is chi_j: G^k -> zeta_N^(j*k).  The context precomputes the
full power table and its inverse (discrete log), so character values are
exponent lookups.

Scalars sit inside the unit group as the subgroup of order q - 1 generated
by w = G^r, r = N/(q-1); restriction to scalars therefore lands on unit
characters indexed against w, not against the canonical generator of F_q^x.

Subgroups of the character group come from subfields: for l | N the field
fixed by the index-l subgroup H_L has character group X_L = {chi : chi^l = 1}.
The subgroup generated by H_L and the scalars is generated by G^l and G^r,
hence has index gcd(l, r); that gcd is the character count m of the real
part X_L^+, and n = l/m divides q - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cycint import CycloInt, root_of_unity
from .errors import HypothesisError, PrimitivityError, ResourceLimitError
from .ffq import FieldElement, UnitCharacter
from .numutil import prime_factors
from .polyring import Poly, is_irreducible, mod_pow

_N_BOUND = 2**63


@dataclass(eq=False)
class ResidueCtx:
    """Power table of a primitive base G modulo irreducible P."""

    P: Poly
    G: Poly
    d: int
    e: int
    N: int
    r: int
    powers: tuple[Poly, ...]
    dlog: dict
    unit_gen: FieldElement

    @property
    def spec(self):
        return self.P.spec

    def char(self, j: int) -> "DirichletChar":
        return DirichletChar(self, j % self.N)

    def dlog_of(self, poly: Poly) -> int | None:
        """Discrete log of (poly mod P) base G, or None when P divides poly."""
        rem = poly % self.P
        if rem.is_zero():
            return None
        return self.dlog[rem]


def build_context(P: Poly, G: Poly) -> ResidueCtx:
    """Validate (P, G) and precompute the power table.

    P must be monic irreducible; G must be a unit mod P of full order N,
    which is checked prime-by-prime so a failure names a witness ell with
    G^(N/ell) = 1.
    """
    if P.spec != G.spec:
        raise ValueError("P and G live over different fields")
    spec = P.spec
    d = len(P.coeffs) - 1
    if d < 1 or not P.is_monic():
        raise HypothesisError("P must be monic of positive degree")
    if not is_irreducible(P):
        raise HypothesisError("P must be irreducible")
    N = spec.q**d - 1
    if N >= _N_BOUND:
        raise ResourceLimitError(f"unit group order {N} exceeds the 64-bit bound")
    if (G % P).is_zero():
        raise HypothesisError("requires gcd(G, P) = 1")
    for ell in prime_factors(N) if N > 1 else ():
        if mod_pow(G, N // ell, P) == Poly.one(spec) % P:
            raise PrimitivityError(
                f"G is not primitive mod P: its order divides N/{ell}", witness=ell
            )
    powers = []
    dlog = {}
    cur = Poly.one(spec) % P
    for k in range(N):
        powers.append(cur)
        dlog[cur] = k
        cur = (cur * G) % P
    if cur != Poly.one(spec) % P:
        raise PrimitivityError("G does not have order N mod P")
    r = N // (spec.q - 1)
    wpoly = powers[r % N]
    if wpoly.degree() != 0:
        raise RuntimeError("G^r must reduce to a scalar")
    unit_gen = wpoly.constant_coeff()
    return ResidueCtx(
        P=P, G=G, d=d, e=len(G.coeffs) - 1, N=N, r=r,
        powers=tuple(powers), dlog=dlog, unit_gen=unit_gen,
    )


def deg_map(ctx: ResidueCtx, k: int) -> int:
    """Degree of the canonical representative of G^k, 0 <= k < N."""
    if not 0 <= k < ctx.N:
        raise ValueError("exponent out of range")
    return len(ctx.powers[k].coeffs) - 1


@dataclass(frozen=True)
class DirichletChar:
    """chi_j on (A/P)^x: chi_j(G^k) = zeta_N^(j*k), and 0 on multiples of P."""

    ctx: ResidueCtx
    j: int

    def __post_init__(self):
        object.__setattr__(self, "j", self.j % self.ctx.N)

    def is_trivial(self) -> bool:
        return self.j == 0

    @property
    def order(self) -> int:
        return self.ctx.N // math.gcd(self.j, self.ctx.N) if self.j else 1

    def exponent_at(self, poly: Poly) -> int | None:
        """Exponent of zeta_N for chi(poly), or None when the value is 0."""
        k = self.ctx.dlog_of(poly)
        if k is None:
            return None
        return self.j * k % self.ctx.N

    def value(self, poly: Poly) -> CycloInt:
        e = self.exponent_at(poly)
        if e is None:
            return CycloInt.zero(self.ctx.N)
        return root_of_unity(self.ctx.N, e)

    def value_at_base(self) -> CycloInt:
        """chi(G) = zeta_N^j."""
        return root_of_unity(self.ctx.N, self.j)

    def conjugate(self) -> "DirichletChar":
        return DirichletChar(self.ctx, -self.j)

    def restricts_to_scalars_trivially(self) -> bool:
        return self.j % (self.ctx.spec.q - 1) == 0


def restriction(chi: DirichletChar) -> UnitCharacter:
    """Restriction of chi_j to the scalar subgroup, indexed against w = G^r.

    chi_j(G^r) = zeta_N^(j*r) = zeta_{q-1}^j, so the restriction is the unit
    character of index j mod (q-1) relative to w.
    """
    spec = chi.ctx.spec
    return UnitCharacter(spec, chi.j % (spec.q - 1), chi.ctx.unit_gen)


@dataclass(frozen=True)
class SubfieldDescriptor:
    """Character data of the degree-l subfield L inside the P-th cyclotomic
    function field, plus its real subfield L+.

    chis / chis_plus / chis_minus are the chi_j index sets for X_L, X_L^+
    and their difference.  unit_chars lists the restrictions lambda of X_L
    to scalars (the group Y_L of order n), and alpha_exponents maps each
    lambda index s to the exponent a with alpha_lambda = zeta_N^a, where
    alpha_lambda = chi(G)^m for any chi in X_L restricting to lambda.
    """

    ctx: ResidueCtx
    l: int
    m: int
    n: int
    chis: tuple[int, ...]
    chis_plus: tuple[int, ...]
    chis_minus: tuple[int, ...]
    unit_chars: tuple[UnitCharacter, ...]
    alpha_exponents: dict = field(compare=False)

    def alpha(self, lam: UnitCharacter) -> CycloInt:
        return root_of_unity(self.ctx.N, self.alpha_exponents[lam.s])


def subfield(ctx: ResidueCtx, l: int) -> SubfieldDescriptor:
    """Descriptor for the subfield of degree l over the base field; l | N."""
    if l < 1 or ctx.N % l:
        raise HypothesisError(f"l = {l} does not divide N = {ctx.N}")
    q = ctx.spec.q
    m = math.gcd(l, ctx.r)
    n = l // m
    if (q - 1) % n:
        raise RuntimeError("n must divide q - 1")
    chis = tuple(t * (ctx.N // l) for t in range(l))
    plus_step = ctx.N // m
    plus_set = frozenset(t * plus_step for t in range(m))
    chis_plus = tuple(sorted(plus_set))
    chis_minus = tuple(sorted(set(chis) - plus_set))
    alpha_exponents: dict[int, int] = {}
    for j in chis:
        s = j % (q - 1)
        a = j * m % ctx.N
        if s in alpha_exponents:
            if alpha_exponents[s] != a:
                raise RuntimeError("alpha is not constant on restriction fibers")
        else:
            alpha_exponents[s] = a
    if len(alpha_exponents) != n:
        raise RuntimeError("restriction image has unexpected size")
    if len(set(alpha_exponents.values())) != n:
        raise RuntimeError("alpha must be injective on Y_L")
    unit_chars = tuple(
        UnitCharacter(ctx.spec, s, ctx.unit_gen) for s in sorted(alpha_exponents)
    )
    return SubfieldDescriptor(
        ctx=ctx, l=l, m=m, n=n, chis=chis, chis_plus=chis_plus,
        chis_minus=chis_minus, unit_chars=unit_chars, alpha_exponents=alpha_exponents,
    )
