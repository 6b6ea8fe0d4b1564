"""Rim walks on Young diagrams.

The rim of a partition is its south-east border: every cell (i, j) of
the diagram with (i+1, j+1) outside it.  Read from top right to bottom
left it forms a lattice path; labeling the path cells 1, 2, 3, ... and
cutting runs of p labels (each new run restarting on the next row down,
see p_rim) selects the p-rim, the set peeled off in one step of the
symbol computations.

For self-conjugate partitions the symmetrized variant keeps the cells
of the p-rim on or above the diagonal and mirrors them below it.
"""

from dataclasses import dataclass

from .partitions import as_partition, check_odd_p, is_self_conjugate


@dataclass(frozen=True)
class PRim:
    """One p-rim: cells in walk order plus the start index of each segment."""

    cells: tuple
    segment_starts: tuple

    def __len__(self):
        return len(self.cells)

    @property
    def segments(self) -> tuple:
        bounds = self.segment_starts + (len(self.cells),)
        return tuple(self.cells[bounds[k] : bounds[k + 1]] for k in range(len(self.segment_starts)))


@dataclass(frozen=True)
class PRimStar:
    """Symmetrized p-rim of a self-conjugate partition.

    upper holds the p-rim cells on or above the diagonal (row <= col),
    lower their mirror images; the two overlap in at most one diagonal
    cell, which is what the parity eps_star detects.
    """

    upper: tuple
    lower: tuple
    a_star: int
    r_star: int
    eps_star: int

    @property
    def cells(self) -> tuple:
        """Union of upper and lower, sorted lexicographically."""
        return tuple(sorted(set(self.upper) | set(self.lower)))


def rim(lam) -> tuple:
    """Border cells from (1, lam_1) down-left to (len(lam), 1).

    Within row i these are the columns max(1, lam_{i+1}) .. lam_i, listed
    right to left; consecutive cells differ by one step left or down.
    """
    lam = as_partition(lam)
    if not lam:
        raise ValueError("the empty partition has no rim")
    cells = []
    for i, part in enumerate(lam, start=1):
        below = lam[i] if i < len(lam) else 0
        for col in range(part, max(below, 1) - 1, -1):
            cells.append((i, col))
    return tuple(cells)


def p_rim(lam, p) -> PRim:
    """The cells peeled in one step: runs of p rim cells.

    The first run takes rim labels 1..p.  If a run's last cell sits in
    the last row the walk stops; otherwise the next run starts at the
    first rim cell of the following row (the remaining labels of the
    current row are skipped) and again takes p consecutive labels.
    Only the final run may be shorter than p.
    """
    lam = as_partition(lam)
    check_odd_p(p)
    path = rim(lam)
    last_row = len(lam)
    cells = []
    starts = []
    pos = 0
    while True:
        starts.append(len(cells))
        segment = path[pos : pos + p]
        cells.extend(segment)
        row = segment[-1][0]
        if row == last_row:
            break
        pos += len(segment)
        while path[pos][0] != row + 1:
            pos += 1
    return PRim(tuple(cells), tuple(starts))


def _tail_counts(lam, cells) -> list:
    """Per-row counts of `cells`, verifying they form each row's right tail."""
    by_row = {}
    for r, c in cells:
        by_row.setdefault(r, []).append(c)
    counts = [0] * len(lam)
    for r, cols in by_row.items():
        want = set(range(lam[r - 1] - len(cols) + 1, lam[r - 1] + 1))
        if set(cols) != want:
            raise RuntimeError(f"rim removal would leave row {r} of {lam} ragged: {sorted(cols)}")
        counts[r - 1] = len(cols)
    return counts


def _strip(lam, counts) -> tuple:
    rest = [part - gone for part, gone in zip(lam, counts)]
    while rest and rest[-1] == 0:
        rest.pop()
    if any(rest[i] < rest[i + 1] for i in range(len(rest) - 1)) or 0 in rest:
        raise RuntimeError(f"rim removal broke the diagram of {lam}: {rest}")
    return tuple(rest)


def remove_p_rim(lam, p) -> tuple:
    """Delete the p-rim; the result is a partition of |lam| - len(p_rim(lam, p))."""
    lam = as_partition(lam)
    return _strip(lam, _tail_counts(lam, p_rim(lam, p).cells))


def p_rim_star(lam, p) -> PRimStar:
    """Symmetrized p-rim of a self-conjugate partition.

    a_star counts the union of the above-diagonal part and its mirror;
    r_star counts only the cells on or above the diagonal, so
    r_star = (a_star + eps_star) / 2 with eps_star = a_star mod 2, and
    eps_star = 1 exactly when the rim* contains a diagonal cell.
    """
    lam = as_partition(lam)
    check_odd_p(p)
    if lam and not is_self_conjugate(lam):
        raise ValueError(f"{lam} is not self-conjugate")
    walk = p_rim(lam, p)
    upper = tuple(sorted(c for c in walk.cells if c[0] <= c[1]))
    lower = tuple(sorted((j, i) for i, j in upper))
    a_star = len(set(upper) | set(lower))
    eps_star = a_star % 2
    r_star = len(upper)
    # the p-rim holds at most one diagonal cell, the only possible overlap
    assert r_star == (a_star + eps_star) // 2
    return PRimStar(upper=upper, lower=lower, a_star=a_star, r_star=r_star, eps_star=eps_star)


def remove_p_rim_star(lam, p) -> tuple:
    """Delete the symmetrized p-rim; the result is again self-conjugate."""
    lam = as_partition(lam)
    star = p_rim_star(lam, p)
    rest = _strip(lam, _tail_counts(lam, star.cells))
    if not is_self_conjugate(rest):
        raise RuntimeError(f"rim* removal of {lam} lost self-conjugacy: {rest}")
    return rest


# Growth helpers shared by the symbol reconstruction and the layer
# construction.  `occupied` is a mutable set of cells; both walks place
# cells one at a time, moving to the cell above when it is vacant and to
# the right otherwise.


def _walk_run(occupied, row, col, count):
    """Place `count` cells starting at (row, col); return the last cell placed."""
    last = None
    for k in range(count):
        if (row, col) in occupied:
            raise RuntimeError(f"growth collision at ({row},{col})")
        occupied.add((row, col))
        last = (row, col)
        if k + 1 < count:
            if row > 1 and (row - 1, col) not in occupied:
                row -= 1
            else:
                col += 1
    return last


def _first_vacant(occupied, row) -> int:
    col = 1
    while (row, col) in occupied:
        col += 1
    return col


def _read_rows(occupied) -> tuple:
    """Row lengths of a cell set, insisting it is a left-justified diagram."""
    if not occupied:
        return ()
    by_row = {}
    for r, c in occupied:
        by_row.setdefault(r, set()).add(c)
    length = max(by_row)
    rows = []
    for r in range(1, length + 1):
        cols = by_row.get(r, set())
        if cols != set(range(1, len(cols) + 1)):
            raise RuntimeError(f"growth left row {r} ragged")
        rows.append(len(cols))
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)) or 0 in rows:
        raise RuntimeError(f"growth broke row monotonicity: {rows}")
    return tuple(rows)
