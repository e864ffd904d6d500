"""The shipped reference data and every identity it is held to.

Three tables ride along with the package (checksummed, never silently
trusted): the full weight distribution of the (512, 2^256, 32) code
R(4,9), the block-count table for the 12 quartic classes on 7 variables,
and the class matching with transition matrices.

Run:  python demos/reference_tables.py
"""

from rmenum.boolfn import format_anf
from rmenum.fixtures import (
    check_dual_transitions,
    load_dual_transitions,
    load_partition_sizes,
    load_reference_distribution,
)
from rmenum.oracle import validate_reference

print("R(4,9) weight distribution (512 columns, coefficients past 2^250):")
dist = load_reference_distribution()
nz = dist.nonzero_items()
print(f"  {len(nz)} distinct weights; W_32 = {dist.coeffs[32]}")
print(f"  W_256 has {len(str(dist.coeffs[256]))} decimal digits")
for line in validate_reference(dist, 4, 9).lines():
    print(" ", line)

print("\nper-class block counts (raw orbit blocks, then merged by enumerator):")
rows = load_partition_sizes()
for p in rows[:5]:
    print(f"  e = {format_anf(p.e):16s} {p.raw_blocks:6d} -> {p.merged_blocks:5d}")
print(f"  ... totals: {sum(p.raw_blocks for p in rows)} raw,"
      f" {sum(p.merged_blocks for p in rows)} merged")

print("\nclass matching: 999 classes in 12 groups, one transition matrix each:")
trans = load_dual_transitions()
print(f"  group sizes sum to {sum(t.count for t in trans)}")
mults = sum(t.count * p.merged_blocks for t, p in zip(trans, rows))
print(f"  implied multiplication budget for the full run: {mults}")
for line in check_dual_transitions(trans):
    print(" ", line)
