"""Walk one partition through peeling, symbol, and the involution.

Run:  python3 demos/peel_and_map.py
"""

from mulli import (
    format_partition,
    mullineux_map,
    mullineux_symbol,
    p_rim,
    remove_p_rim,
    render_diagram,
    render_peeled,
)

LAM = (9, 6, 3, 1)
P = 5

print(f"partition {format_partition(LAM)} at p={P}")
print(render_diagram(LAM))
print()

print("the first 5-rim (runs of 5 border cells, each run restarting one row down):")
print(render_diagram(LAM, highlight=p_rim(LAM, P).cells))
print()

print("peeling to nothing, cells labelled by the step that removes them:")
print(render_peeled(LAM, P))
print()

chain = [LAM]
while chain[-1]:
    chain.append(remove_p_rim(chain[-1], P))
print("chain:", "  ->  ".join(format_partition(lam) or "(empty)" for lam in chain))

sym = mullineux_symbol(LAM, P)
print(f"symbol: {sym.to_text()}   (rim sizes over row counts, one column per step)")
print()

image = mullineux_map(LAM, P)
print(f"the involution flips each r to a + eps - r and rebuilds:")
print(f"  m({format_partition(LAM)}) = {format_partition(image)}")
print(f"  m(m(lam)) = {format_partition(mullineux_map(image, P))}   (back where we started)")
