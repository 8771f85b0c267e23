"""Walk through A = [0,3] u [12,13] in Z_23.

The set looks like an interval with a stray pair, but doubling it gives
[0,4] u {6}, and both sets have ten restricted sums.
"""

from zpsum import ZpSet, longest_ap, normalize, restricted_sumset
from zpsum.zp_core import dilate

p = 23
A = ZpSet.parse(p, "0-3,12-13")
S = restricted_sumset(A, A)
print(f"A        = {{{A.literal()}}}")
print(f"2^A      = {{{S.literal()}}}  size {len(S)} = 2|A| - 2")

# the interval [0,3] is not the longest progression inside A
w = longest_ap(A)
print(f"longest progression: a={w.a} d={w.d} r={w.r}: {w.members(p)}")

N = normalize(A)
print(f"normal form: {N}  (witness a={N.witness.a}, d={N.witness.d})")

A2 = dilate(A, 2)
S2 = restricted_sumset(A2, A2)
print(f"2*A      = {{{A2.literal()}}}, 2^(2*A) = {{{S2.literal()}}}, size {len(S2)}")
