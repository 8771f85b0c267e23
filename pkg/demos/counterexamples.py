"""Re-derive each bound failure by listing the sums by hand.

Each set below satisfies the hypotheses of one of the interval bounds
while having fewer restricted sums than the bound promises.
"""

from itertools import combinations

from zpsum import ZpSet, evaluate, normalize

CASES = [
    ("T2", 17, "0-3,5-6,13,15"),
    ("T3", 17, "0-2,15"),
    ("T4", 17, "0-2,8,10"),
    ("T4", 17, "0,2-3,5"),
]

for theorem, p, literal in CASES:
    A = ZpSet.parse(p, literal)
    sums = sorted({(a + b) % p for a, b in combinations(A.elements(), 2)})
    rep = evaluate(normalize(A), theorem)
    print(f"{theorem}  A={{{literal}}} mod {p}  normal form {normalize(A)}")
    print(f"     case {rep.case.case.value}: bound {rep.bound}, |2^A| = {len(sums)} {sums}")
    if rep.alt_bound is not None:
        print(f"     alternative endpoint reading gives {rep.alt_bound}")
