"""Localization relations, locus by locus
==========================================

Each torus fixed locus adds a term ``alpha_part * L + beta_part`` to a
relation that must vanish. Solving for L recovers the degree of lambda_1
(non-orbifold relation) or of lambda_1^e (orbifold relation, when the
ages sum to 2 and the smallest plus largest age exceed 1).
"""

from hodge_degrees import lambda1_degree, lambda1e_degree, new_datum
from hodge_degrees.localization import nonorbifold_relation, orbifold_relation, solve


def print_relation(rel):
    for c in rel.contributions:
        label = "{" + ",".join(map(str, c.label)) + "}"
        print(f"   Gamma_{label:<8} alpha {str(c.alpha_part):>6}   beta {c.beta_part}")
    print(f"   total: {rel.alpha} * L + ({rel.beta}) = 0  =>  L = {solve(rel)}")


x = new_datum(6, [2, 4, 3, 3])
print(f"lambda1 on {x}, closed form {lambda1_degree(x)}")
for point in range(1, 5):
    print(f" point {point} sent to infinity:")
    print_relation(nonorbifold_relation(x, infinity_point=point))

y = new_datum(5, [3, 4, 4, 4])
print(f"\nlambda1^3 on {y}, closed form {lambda1e_degree(y, 3)}")
print_relation(orbifold_relation(y, 3))
