"""A small exhaustive sweep, split into shards and merged back."""

from zpsum.verify import SweepSpec, merge_all, sweep
from zpsum.zp_core import format_literal

p = 13
checks = {"EH", "T1", "T2", "CLASS_2M1"}
whole = sweep(SweepSpec(p, checks=checks))
shards = [sweep(SweepSpec(p, checks=checks, shard=(i, 4))) for i in range(4)]
merged = merge_all(shards)

print(f"{whole.sets_examined} subsets of Z_{p} examined")
for name, c in sorted(whole.checks.items()):
    print(f"  {name:<10} applicable {c.applicable:>5}  failed {c.failed}")
print("merged shards equal the single run:", merged == whole)

# |2^A| - 2|A| for every size; -3 are the progressions, -2 the first non-progressions
print("size  excess  count  smallest set")
for (k, e), (count, rep) in sorted(whole.classes.items()):
    if 5 <= k <= 6:
        print(f"{k:>4}  {e:>6}  {count:>5}  {{{format_literal(rep)}}}")
