"""
The module action realized by additive polynomials
==================================================

F_q[T] acts on itself through rho_T(x) = T*x + x^q extended
multiplicatively; each operand I yields an F_q-linear polynomial of
degree q^deg(I).  The torsion of this action is what the class number
machinery is ultimately about; here we just play with the action itself.
"""

from carlitzdigits import FieldSpec, Poly, carlitz_poly, parse_poly

# -- 1. small operands over F_2 ------------------------------------------
spec = FieldSpec.from_order(2)
for text in ("1", "T", "T+1", "T^2", "T^3+T+1"):
    rho = carlitz_poly(parse_poly(spec, text))
    print(f"  rho_[{text}](x) = {rho}")
print()

# -- 2. the action is additive and multiplicative --------------------------
I = parse_poly(spec, "T^2+T")
J = parse_poly(spec, "T+1")
lhs = carlitz_poly(I + J)
rhs = carlitz_poly(I) + carlitz_poly(J)
print(f"  rho_(I+J) == rho_I + rho_J: {lhs == rhs}")
lhs = carlitz_poly(I * J)
rhs = carlitz_poly(I).compose(carlitz_poly(J))
print(f"  rho_(I*J) == rho_I o rho_J: {lhs == rhs}")
print()

# -- 3. prime operands ------------------------------------------------------
# For irreducible P the inner coefficients of rho_P are all divisible by
# P, the x coefficient is P itself and the top coefficient is 1, so
# rho_P(x) = x^(q^d) + P * (...) + P * x looks like a function field
# analogue of (1+x)^p mod p.

P = parse_poly(spec, "T^3+T+1")
rho = carlitz_poly(P)
print(f"  rho_P for P = {P}:")
for i, c in enumerate(rho.coeffs):
    divisible = "yes" if (c % P).is_zero() and not c.is_zero() else "no"
    print(f"    coefficient of x^{spec.q**i}: {c}   divisible by P: {divisible}")
print()

# -- 4. evaluating the action ----------------------------------------------
# rho_T applied to T gives T^2 + T^q; applying rho_I is a ring action on
# the additive group of F_q[T].

spec3 = FieldSpec.from_order(3)
t = parse_poly(spec3, "T")
rho_t = carlitz_poly(t)
print(f"  over F_3, rho_T(T) = {rho_t.apply(t)}")
print(f"  rho_T(T^2+1) = {rho_t.apply(parse_poly(spec3, 'T^2+1'))}")
x = parse_poly(spec3, "T+2")
y = parse_poly(spec3, "2*T^2")
additive = rho_t.apply(x + y) == rho_t.apply(x) + rho_t.apply(y)
print(f"  rho_T(x + y) == rho_T(x) + rho_T(y): {additive}")
