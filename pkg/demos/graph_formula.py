"""lambda_1 as a combination of boundary divisors, psi and kappa_1
===================================================================

On an n-pointed space the class lambda_1 is a rational combination of
boundary divisors, psi classes and kappa_1. Since boundary curves span
curve classes, the formula is pinned down by its intersection numbers
with them; here each one is compared with the closed-form degree of
lambda_1 on the 4-pointed datum the curve carries.
"""

from hodge_degrees import canonicalize, graph_formula_lambda1, new_datum
from hodge_degrees.tautring import check_graph_formula


def main():
    x = new_datum(4, [1, 1, 2, 2, 2])
    cls = canonicalize(graph_formula_lambda1(x))
    print(f"lambda1 on {x} =")
    for sym, c in cls.terms:
        print(f"   {str(c):>7}  {sym}")
    print("\nas JSON:", cls.to_json())

    print("\npairings with boundary curves:")
    for check in check_graph_formula(x):
        flag = "  (disconnected induced datum)" if check.geometric_caveat else ""
        mark = "ok" if check.ok else "MISMATCH"
        print(f"   C{check.curve}  {str(check.paired):>6} vs {str(check.expected):>6} on {check.induced}  {mark}{flag}")


if __name__ == "__main__":
    main()
