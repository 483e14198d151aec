"""At m = 320 the first-order residual has two repeated factors, so two key polynomials are needed.

The index is N_1 plus one second-order lattice count per key, weighted by the
degree of the residual factor.  The round-2 oracle confirms the total.
"""
from duodecic.arith import IntPoly, fp_factor
from duodecic.newton import lattice_count_under, newton_polygon, residual_polynomial
from duodecic.montes2 import montes_index, v_newton_polygon
from duodecic.pure12 import classify, key_data_for_case
from duodecic.verify import round2_vp_index

m, p = 320, 2
f = IntPoly([-m] + [0] * 11 + [1])
(edge,) = newton_polygon(f, p).principal
res = residual_polynomial(f, p, edge)
print(f"residual {res} factors as {[(str(g), k) for g, k in fp_factor(res)]}")

n1 = lattice_count_under(newton_polygon(f, p))
print(f"N_1 = {n1}")
total = n1
for t in key_data_for_case(classify(m, p), m):
    n2 = lattice_count_under(v_newton_polygon(f, t).polygon)
    print(f"key {t.phi} over psi = {t.psi}: N_2 = {n2}, weight {t.mu}")
    total += t.mu * n2

print(f"sum = {total}, second-order engine = {montes_index(f, p, key_data_for_case(classify(m, p), m))}, "
      f"round-2 = {round2_vp_index(m, p)}")
