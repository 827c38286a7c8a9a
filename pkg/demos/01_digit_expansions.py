"""
Digit expansions of rational functions
======================================

Every rational function over F_q has a unique expansion
f = H_0 + H_1/G + H_2/G^2 + ... in a polynomial base G, with all digits
of degree below deg G.  This script walks through the basic behavior.
"""

from carlitzdigits import (
    FieldSpec,
    Poly,
    digit_closed_form,
    digit_expand,
    digit_period,
    parse_poly,
    twisted_digit_sum,
)

# -- 1. a purely periodic expansion ------------------------------------
# Over F_3, expand 1/(T^2+1) in base G = T^2+T+2.  The base generates
# the unit group mod the denominator, so the digit stream is periodic
# with period equal to the multiplicative order, here 8.

spec = FieldSpec.from_order(3)
P = parse_poly(spec, "T^2+1")
G = parse_poly(spec, "T^2+T+2")

expansion = digit_expand(Poly.one(spec), P, G, 8)
print(f"1/({P}) in base {G} over F_3:")
print(f"  H_0 = {expansion.h0}")
for k, digit in enumerate(expansion.digits, start=1):
    print(f"  H_{k} = {digit}")
print(f"  period = {expansion.period}")
print()

# -- 2. the closed form ------------------------------------------------
# For 1/M with gcd(G, M) = 1 each digit is (G*G_{k-1} - G_k)/M where G_k
# is the remainder of G^k mod M.  No long division needed.

for k in (1, 2, 3, 20, 21):
    print(f"  closed form H_{k} = {digit_closed_form(P, G, k)}")
print()

# -- 3. periods are multiplicative orders -------------------------------
# digit_period confirms the claimed period on a verification window.

M = parse_poly(spec, "T^3+2*T+2")
for base_text in ("T", "T+1", "T^2+T+2", "T^3+T+2"):
    base = parse_poly(spec, base_text)
    print(f"  period of 1/({M}) in base {base_text}: {digit_period(M, base)}")
print()

# -- 4. digits can vanish when the base is small ------------------------
# With deg G < deg M some digits are zero; with deg G >= deg M none are.

spec2 = FieldSpec.from_order(2)
M2 = parse_poly(spec2, "T^3+T+1")
for base_text in ("T", "T^3"):
    base = parse_poly(spec2, base_text)
    exp = digit_expand(Poly.one(spec2), M2, base, 7)
    digits = ", ".join(str(h) for h in exp.digits)
    print(f"  base {base_text}: digits {digits}")
print()

# -- 5. digit sums over a full period vanish ----------------------------
# Summing H_1..H_g over one period gives zero whenever
# gcd(M, G*(G - 1)) = 1; the smallest failure of that hypothesis is
# M = T, G = T+1 over F_2, where the sum is 1.

total = twisted_digit_sum(M, G, spec.one)
print(f"  sum of digits of 1/({M}) over one period: {total}")
tiny = twisted_digit_sum(parse_poly(spec2, "T"), parse_poly(spec2, "T+1"), spec2.one)
print(f"  counterexample M = T, G = T+1 over F_2: sum = {tiny}")
