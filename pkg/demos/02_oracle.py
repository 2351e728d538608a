"""Cross-check the Graf product against an independent Clifford product.

The oracle reduces words of generators by bubble sort; the kernel uses the
contracted-wedge recursion. They should agree on every blade pair.

Run: python3 demos/02_oracle.py [max_n]
"""
import sys
import time

from grafclifford import signatures_up_to
from grafclifford.oracle import full_sweep

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 5

start = time.perf_counter()
total = 0
for sig in signatures_up_to(max_n):
    report = full_sweep(sig)
    total += report.pairs_checked
    status = "ok" if report.passed else f"{len(report.mismatches)} mismatches"
    print(f"{str(sig):>7}  {report.pairs_checked:>6} pairs  {status}")
print(f"{total} blade pairs in {time.perf_counter() - start:.1f}s")
