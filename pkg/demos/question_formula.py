"""A graph formula for lambda_1^e on 4-pointed spaces
======================================================

The candidate formula puts ``min{0, 1 - sum_{i in I} <e m_i/d>} / 2`` on each
Delta_I. On a one-dimensional space its degree can be compared with the
closed form for lambda_1^e directly. ``check_candidate_formula`` is the hook
for testing a proposed n-pointed generalization against boundary curves;
the 4-pointed formula is passed here only to show the call shape.
"""

from hodge_degrees import (
    evaluate_degree_4pt,
    graph_formula_lambda1e_question,
    lambda1e_degree,
    new_datum,
)
from hodge_degrees.tautring import check_candidate_formula
from hodge_degrees.verify import run_suite

x = new_datum(5, [1, 4, 2, 3])
for e in range(x.d):
    cls = graph_formula_lambda1e_question(x, e)
    print(f"e={e}: degree {evaluate_degree_4pt(cls)}, closed form {lambda1e_degree(x, e)}")
    print(f"      {cls}")

checks = check_candidate_formula(graph_formula_lambda1e_question, x, 2)
print("\ncandidate hook:", [(str(c.curve), str(c.paired), c.ok) for c in checks])

result = run_suite("question", dmax=12)
print(f"\nsweep d <= 12: {result.comparisons} comparisons, {len(result.failures)} failures")
