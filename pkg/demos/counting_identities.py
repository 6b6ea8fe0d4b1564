"""Three ways to count the same family.

BG-partitions of n, self-Mullineux partitions of n, and partitions of n
into distinct odd parts none divisible by p all have the same size; the
last family is what the product (1+t) (1+t^5) (1+t^7) ... generates
(odd exponents with the multiples of p left out, shown here for p=3).

Run:  python3 demos/counting_identities.py
"""

from mulli import (
    bg_counts_from_gf,
    census,
    diagonal_hook_lengths,
    format_partition,
    self_conjugate_from_diagonal_hooks,
)

P, N_MAX = 3, 20

gf = bg_counts_from_gf(P, N_MAX)
print(f"p={P}:  n | #BG | #self-Mullineux | #distinct-odd | GF coefficient")
for n in range(N_MAX + 1):
    report = census(P, n)
    row = (len(report.bg), len(report.self_mullineux), len(report.distinct_odd_nondiv), gf[n])
    assert len(set(row)) == 1
    print(f"  {n:5} | {row[0]:3} | {row[1]:15} | {row[2]:13} | {row[3]}")
print()

print("why #BG = #distinct-odd: reading off diagonal hooks folds a")
print("self-conjugate partition into distinct odd numbers, and unfolding")
print("nests one symmetric hook inside the next:")
for lam in census(P, 18).bg:
    hooks = diagonal_hook_lengths(lam)
    assert self_conjugate_from_diagonal_hooks(hooks) == lam
    print(f"  {format_partition(lam):24} <-> hooks {hooks}")
