"""Pair the two fixed-point families at one size.

Self-conjugate partitions are fixed by conjugation; self-Mullineux
partitions are fixed by the Mullineux map.  Restricting the first family
to BG-partitions (no diagonal hook divisible by p) makes the two
families the same size, and sharing a symbol pairs them off.

Run:  python3 demos/fixed_point_pairing.py
"""

from mulli import bg_symbol, census, format_partition, mull_to_bg, mullineux_symbol, render_diagram

P, N = 3, 18

report = census(P, N)
print(f"n={N}, p={P}: {report.all_count} partitions, {report.p_regular_count} of them {P}-regular")
print()

print(f"self-conjugate ({len(report.self_conjugate)}):")
for lam in report.self_conjugate:
    tag = "   <- BG" if lam in report.bg else ""
    print(f"  {format_partition(lam)}{tag}")
print()

print("BG -> self-Mullineux, matched by their shared symbol:")
for b, m in report.pairs:
    left = bg_symbol(b, P).to_text()
    right = mullineux_symbol(m, P).to_text()
    assert left == right
    print(f"  {format_partition(b):24} {format_partition(m):16} symbol {left}")
print()

b, m = report.pairs[0]
print(f"side by side: {format_partition(b)} (self-conjugate) and {format_partition(m)} ({P}-regular)")
for row_b, row_m in zip(render_diagram(b).splitlines() + [""] * 9, render_diagram(m).splitlines() + [""] * 9):
    if row_b or row_m:
        print(f"  {row_b:30} {row_m}")
print()
print(f"and back: mull_to_bg({format_partition(m)}) = {format_partition(mull_to_bg(m, P))}")
