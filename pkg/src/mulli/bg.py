"""BG-partitions and their bijection with self-Mullineux partitions.

A BG-partition is a self-conjugate partition none of whose diagonal
hook lengths is divisible by p.  Peeling symmetrized p-rims from a
self-conjugate partition and recording (a*_i; r*_i) per step yields its
bg symbol; on BG-partitions these are exactly the symbols of the
self-Mullineux partitions (fixed points of mullineux_map), which makes
the map "compute bg symbol, reinterpret, reconstruct" a bijection.  The
reverse direction rebuilds the BG-partition layer by layer.
"""

from .partitions import as_partition, check_odd_p, durfee_length, is_bg_partition, is_self_conjugate
from .rims import _first_vacant, _read_rows, _walk_run, p_rim_star, remove_p_rim_star
from .symbols import Symbol, mullineux_symbol, reconstruct


def bg_symbol(lam, p) -> Symbol:
    """Peel symmetrized p-rims until nothing is left, recording (a*_i; r*_i).

    Defined on every self-conjugate partition (two different ones never
    share a bg symbol); the empty partition gives the empty symbol.
    """
    lam = as_partition(lam)
    check_odd_p(p)
    if not is_self_conjugate(lam):
        raise ValueError(f"{lam} is not self-conjugate")
    a, r = [], []
    cur = lam
    while cur:
        star = p_rim_star(cur, p)
        a.append(star.a_star)
        r.append(star.r_star)
        cur = remove_p_rim_star(cur, p)
    return Symbol(p, tuple(a), tuple(r), kind="bg")


def add_rim_star_layer(base, eps, m, p) -> tuple:
    """Grow a self-conjugate base by one symmetrized rim layer.

    eps = 1 puts a cell on the diagonal (forced when base is empty),
    eps = 0 keeps the layer strictly off it and forces m = 0.  m is the
    size mod p of the layer's bottom run on or above the diagonal.  The
    result is the unique self-conjugate partition with

        a_star = eps (mod 2),  r_star - eps_star = m (mod p),
        remove_p_rim_star(result, p) == base.

    Growth happens above the diagonal only: the start cell is the
    diagonal cell (d+1, d+1) when eps = 1 and the cell right of row d's
    end when eps = 0 (d = Durfee length of base); the bottom run then
    holds m more cells after a diagonal start, or p in total off it.
    Later runs hold exactly p cells, each starting at the first vacant
    column one row up, above-if-vacant-else-right as usual, until a run
    ends in row 1.  Mirroring the placed cells across the diagonal
    finishes the layer.
    """
    base = as_partition(base)
    check_odd_p(p)
    if eps not in (0, 1):
        raise ValueError(f"eps must be 0 or 1, got {eps!r}")
    if not isinstance(m, int) or isinstance(m, bool) or not 0 <= m < p:
        raise ValueError(f"m must be a residue mod {p}, got {m!r}")
    if eps == 0 and m != 0:
        raise ValueError("a layer that misses the diagonal must have m = 0")
    if not base and eps == 0:
        raise ValueError("a layer on the empty partition must contain the diagonal cell")
    if not is_self_conjugate(base):
        raise ValueError(f"{base} is not self-conjugate")

    occupied = {(i, j) for i, part in enumerate(base, start=1) for j in range(1, part + 1)}
    before = set(occupied)
    d = durfee_length(base)
    if eps:
        row, col = d + 1, d + 1
        count = m + 1  # the diagonal start cell completes an m = 0 run by itself
    else:
        row, col = d, base[d - 1] + 1
        count = p
    while True:
        last = _walk_run(occupied, row, col, count)
        if last[0] == 1:
            break
        row = last[0] - 1
        col = _first_vacant(occupied, row)
        count = p
    placed = occupied - before
    occupied |= {(j, i) for i, j in placed}
    result = _read_rows(occupied)
    if not is_self_conjugate(result):
        raise RuntimeError(f"layer growth on {base} lost self-conjugacy: {result}")
    return result


def bg_to_mull(lam, p) -> tuple:
    """Send a BG-partition to its self-Mullineux partner.

    The partner is the unique p-regular partition whose symbol equals
    the bg symbol of lam; same size, and mull_to_bg inverts it.
    """
    lam = as_partition(lam)
    check_odd_p(p)
    if not is_bg_partition(lam, p):
        raise ValueError(f"{lam} is not a BG-partition for p={p}")
    return reconstruct(bg_symbol(lam, p).as_mullineux())


def mull_to_bg(lam, p) -> tuple:
    """Send a self-Mullineux partition to its BG partner.

    Validates the input on its symbol (a_i = 2 r_i - eps_i per column,
    independent of mullineux_map), then folds add_rim_star_layer over
    the columns right to left: the last column seeds the hook
    (r_l, 1^(r_l - 1)), and column i contributes a layer with
    eps_i = 0 if p | a_i else 1 and m = (r_i - eps_i) mod p.  Every
    intermediate partition must be a BG-partition; the final one has bg
    symbol equal to the input's symbol.
    """
    sym = mullineux_symbol(lam, p)
    for i in range(len(sym)):
        if sym.a[i] != 2 * sym.r[i] - sym.eps(i):
            raise ValueError(f"{as_partition(lam)} is not self-Mullineux for p={p} (column {i})")
    if not sym.a:
        return ()
    last = len(sym) - 1
    if sym.eps(last) != 1:
        raise RuntimeError(f"last column of {sym.to_text()} has eps = 0; impossible for a fixed point")
    mu = (sym.r[last],) + (1,) * (sym.r[last] - 1)
    if not is_bg_partition(mu, p):
        raise RuntimeError(f"seed hook {mu} is not a BG-partition for p={p}")
    for i in range(last - 1, -1, -1):
        eps = sym.eps(i)
        mu = add_rim_star_layer(mu, eps, (sym.r[i] - eps) % p, p)
        if not is_bg_partition(mu, p):
            raise RuntimeError(f"intermediate {mu} is not a BG-partition for p={p}")
    return mu
