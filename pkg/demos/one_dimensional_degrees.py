"""Degrees of lambda_1 and lambda_1^e on one-dimensional spaces
================================================================

A 4-pointed monodromy datum (d; m1, m2, m3, m4) gives a one-dimensional
space of cyclic admissible covers. This script

1. prints the cover genus and the ranks of the eigenbundles,
2. tabulates deg lambda_1^e for every character e,
3. checks that the table sums to deg lambda_1,
4. compares against the prime-degree closed form when d is an odd prime.
"""

from hodge_degrees import (
    cover_invariants,
    lambda1_degree,
    lambda1_degree_prime,
    lambda1e_degree,
    new_datum,
    rank_eigenbundle,
)
from hodge_degrees.degrees import is_prime


def show(d, m):
    x = new_datum(d, m)
    inv = cover_invariants(x)
    print(f"{x}: genus {inv.genus}, ranks {[rank_eigenbundle(x, e) for e in range(d)]}")
    table = [lambda1e_degree(x, e) for e in range(d)]
    for e, value in enumerate(table):
        print(f"   lambda1^{e:<2} = {value}")
    total = lambda1_degree(x)
    print(f"   sum = {sum(table)}, lambda1 = {total}")
    if d > 2 and is_prime(d):
        value, line = lambda1_degree_prime(x)
        print(f"   prime formula, case {line}: {value}")
    print()


def main():
    show(5, [1, 4, 2, 3])
    show(5, [3, 4, 4, 4])
    show(6, [2, 4, 3, 3])
    show(7, [1, 1, 2, 3])


if __name__ == "__main__":
    main()
