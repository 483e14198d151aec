"""Which squarefree m up to 100 give a monogenic power basis?

The congruence predicate is compared with the round-2 oracle for every m.
"""
from duodecic.arith import factor_int, validate_m, InvalidInput
from duodecic.pure12 import is_power_basis_monogenic, relevant_primes
from duodecic.verify import round2_vp_index

yes, mismatches = [], []
for a in range(2, 101):
    for m in (a, -a):
        if any(e > 1 for e in factor_int(m).values()):
            continue
        try:
            validate_m(m)
        except InvalidInput:
            continue
        pred = is_power_basis_monogenic(m)
        oracle = all(round2_vp_index(m, p) == 0 for p in relevant_primes(m))
        if pred:
            yes.append(m)
        if pred != oracle:
            mismatches.append(m)

print(f"power basis is integral for {len(yes)} values:")
print(" ".join(map(str, sorted(yes))))
print(f"predicate/oracle mismatches: {mismatches or 'none'}")
