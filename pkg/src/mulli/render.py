"""ASCII Young diagrams, plain or labelled by peeling iteration."""

from .partitions import as_partition, check_odd_p
from .rims import p_rim, p_rim_star, remove_p_rim, remove_p_rim_star


def render_diagram(lam, highlight=()):
    """Rows of [ ] cells; cells in highlight render as [#]."""
    lam = as_partition(lam)
    marked = set(highlight)
    return "\n".join(
        "".join("[#]" if (i, j) in marked else "[ ]" for j in range(1, part + 1))
        for i, part in enumerate(lam, start=1)
    )


def peel_iterations(lam, p, star=False):
    """Cell sets removed per peeling step, in removal order.

    star=False peels p-rims, star=True symmetrized p-rims (the latter
    needs a self-conjugate partition).
    """
    lam = as_partition(lam)
    check_odd_p(p)
    layers = []
    while lam:
        if star:
            layers.append(tuple(p_rim_star(lam, p).cells))
            lam = remove_p_rim_star(lam, p)
        else:
            layers.append(tuple(p_rim(lam, p).cells))
            lam = remove_p_rim(lam, p)
    return layers


def render_peeled(lam, p, star=False):
    """Diagram with each cell labelled by the peeling step that removes it."""
    lam = as_partition(lam)
    label = {}
    for k, layer in enumerate(peel_iterations(lam, p, star=star)):
        for cell in layer:
            label[cell] = k
    width = max((len(str(v)) for v in label.values()), default=1)
    return "\n".join(
        "".join(f"[{label[i, j]:>{width}}]" for j in range(1, part + 1))
        for i, part in enumerate(lam, start=1)
    )
