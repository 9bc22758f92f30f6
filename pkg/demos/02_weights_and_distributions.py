"""Exact minimum weights and full weight distributions of the minimal codes.

The two groups here behave differently: on the order-15 group the split code
meets its p + q upper bound (every nonzero word has weight 8), while on the
order-33 group the minimum 12 stays strictly below p + q = 14.

Run:  python demos/02_weights_and_distributions.py
"""

from abelcodes import family_pq
from abelcodes.codes import (
    analyze_family,
    code_seed_word,
    distribution_csv,
    weight_distribution,
)

for p, q in ((3, 5), (3, 11)):
    fam = family_pq(p, q)
    np_, nq_ = int(fam.params["p"]), int(fam.params["q"])
    print(f"\n== order {np_ * nq_}: normalized (p, q) = ({np_}, {nq_}) ==")
    reports = analyze_family(fam, budget=1 << 12)
    for label in fam.labels:
        rep = reports[label]
        theory = rep.theory
        if theory.kind == "exact":
            expect = f"expected {theory.value}"
        elif theory.kind == "bounds":
            expect = f"expected in [{theory.lower}, {theory.upper}]"
        else:
            expect = "no stated value"
        print(f"  {label:4s} dim {rep.dimension:3d}  min weight "
              f"{rep.min_weight.value}  ({expect})")

    y = code_seed_word(fam, "e3")
    print(f"  short codeword in the e3 ideal: weight {y.weight} = p + q")

    hist = weight_distribution(fam.elements["e3"], budget=1 << 12)
    print(f"  e3 weight distribution: {hist}")
    bound = np_ + nq_
    attained = min(hist) == bound
    print(f"  upper bound p + q = {bound} attained: {attained}")
    print("  as CSV:")
    for line in distribution_csv(hist).splitlines():
        print(f"    {line}")
