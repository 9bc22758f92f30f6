"""Build the primitive idempotent families for each supported group shape.

Run:  python demos/01_idempotent_families.py
"""

from abelcodes import family_pq, family_prime_power, family_three_primes
from abelcodes.group_algebra import as_cyclic


def show(family):
    print(f"\n== {family.shape} family on factors {list(family.group.factor_orders)} "
          f"(order {family.group.order}) ==")
    print(f"parameters: {family.params}")
    for label in family.labels:
        e = family.elements[label]
        print(f"  {label:8s} weight {e.weight:4d}  predicted dim "
              f"{family.predicted_dims[label]:4d}")
    for check in family.verify_axioms():
        mark = "ok" if check["passed"] else "FAIL"
        print(f"  [{mark}] {check['name']}: {check['detail']}")


# A squarefree two-prime group.  The pair (3, 5) is relabeled to (5, 3) so the
# second prime is 3 mod 4; e3 is the split member whose support contains the
# generator.
fam15 = family_pq(3, 5)
show(fam15)
print("\ne3 as powers of a single generator:",
      sorted(as_cyclic(fam15.elements["e3"]).support_ranks()))

# A prime-power group: C9 x C5.  I0j and Ii0 step one subgroup level down in a
# single factor; each (i, j) level splits in two.
show(family_prime_power(3, 2, 5, 1))

# Three distinct primes: fourteen idempotents, including the four components of
# (1 + hat(a))(1 + hat(b))(1 + hat(c)).
show(family_three_primes(3, 5, 11))
