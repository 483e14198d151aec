"""Walk through x^12 - 60 one prime at a time, then glue the local answers together."""
from duodecic.arith import IntPoly
from duodecic.newton import newton_polygon, residual_polynomial
from duodecic.montes2 import v_newton_polygon, second_order_residual
from duodecic.pure12 import classify, key_data_for_case, relevant_primes, vp_index
from duodecic.report import build_report

m = 60
f = IntPoly([-m] + [0] * 11 + [1])
print(f"f = {f}")

for p in relevant_primes(m):
    label = classify(m, p)
    print(f"\np = {p}: case {label.tag}, v_p(index) = {vp_index(m, p)}")
    for ed in newton_polygon(f, p).principal:
        print(f"  first-order edge slope {ed.slope}, residual {residual_polynomial(f, p, ed)}")
    if label.is_table_case:
        for t in key_data_for_case(label, m):
            vpoly = v_newton_polygon(f, t).polygon
            print(f"  key {t.phi}: V-polygon vertices {[(v.abscissa, int(v.ordinate)) for v in vpoly.vertices]}")
            for ed in vpoly.principal:
                print(f"    residual {second_order_residual(f, t, ed)}")

rep = build_report(m, verify=True)
print(f"\nindex = {rep.index}")
print(f"d_K   = {rep.dK}")
print("global integral basis:")
for e in rep.global_basis.elements:
    print(f"  {e}")
print("all checks passed" if rep.verified else "verification FAILED")
