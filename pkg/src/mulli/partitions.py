"""Integer partitions and elementary Young diagram statistics.

A partition is a weakly decreasing tuple of positive integers; the empty
tuple is the unique partition of 0.  The Young diagram of
lam = (lam_1, ..., lam_l) is the cell set {(i, j) : 1 <= j <= lam_i},
drawn with row 1 on top.

Conventions:
  * cells are (row, col) pairs, both 1-based
  * conjugation transposes the diagram; entry j of the conjugate counts
    the parts of size >= j
  * the hook of cell (i, j) is the cell itself, the cells to its right
    in row i, and the cells below it in column j
  * p always denotes an odd modulus >= 3; primality is deliberately not
    enforced (every definition here is well posed for odd p, though the
    deeper theorems about the maps built on top are proved for primes)

Every function is pure and every value immutable.
"""

from collections import Counter

# Desk-scale tool: partitions are validated to at most this many cells,
# so all arithmetic stays in machine words.
MAX_CELLS = 10**6


def as_partition(parts) -> tuple[int, ...]:
    """Normalize to the canonical tuple form, validating the shape.

    Accepts any iterable of positive integers in weakly decreasing
    order.  Trailing zeros are rejected, not stripped: canonical input
    is expected from callers, so equality stays structural.
    """
    lam = tuple(parts)
    for x in lam:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"parts must be positive integers, got {x!r}")
    for i in range(len(lam) - 1):
        if lam[i] < lam[i + 1]:
            raise ValueError(f"parts must be weakly decreasing, got {lam}")
    if sum(lam) > MAX_CELLS:
        raise ValueError(f"partition of {sum(lam)} exceeds the size cap {MAX_CELLS}")
    return lam


def check_odd_p(p) -> int:
    """Validate the modulus: an odd integer >= 3 (primality not required)."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd integer >= 3, got {p!r}")
    return p


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse '5,2,2,1' or the exponent form '5,2^2,1'; '' and '-' give ().

    Whitespace around commas is ignored.  The result is validated, so
    '1,3' or '2^0' raise ValueError.
    """
    text = text.strip()
    if text in ("", "-"):
        return ()
    parts = []
    for token in text.split(","):
        token = token.strip()
        base, _, exponent = token.partition("^")
        try:
            value = int(base)
            count = int(exponent) if exponent else 1
        except ValueError:
            raise ValueError(f"cannot parse partition piece {token!r}") from None
        if count < 1:
            raise ValueError(f"exponent must be positive in {token!r}")
        parts.extend([value] * count)
    return as_partition(parts)


def format_partition(lam) -> str:
    """Canonical text form: plain comma-separated parts ('' for the empty partition)."""
    return ",".join(str(x) for x in as_partition(lam))


def conjugate(lam) -> tuple[int, ...]:
    """Transpose of the diagram: entry j counts the parts of size >= j."""
    lam = as_partition(lam)
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def is_self_conjugate(lam) -> bool:
    return as_partition(lam) == conjugate(lam)


def durfee_length(lam) -> int:
    """Number of diagonal cells: the largest i with lam_i >= i (0 if empty)."""
    lam = as_partition(lam)
    k = 0
    for i, part in enumerate(lam, start=1):
        if part < i:
            break
        k = i
    return k


def hook_length(lam, row: int, col: int) -> int:
    """Cells of the hook based at (row, col): arm, leg, and the cell itself."""
    lam = as_partition(lam)
    if not (1 <= row <= len(lam) and 1 <= col <= lam[row - 1]):
        raise ValueError(f"cell ({row},{col}) lies outside the diagram of {lam}")
    arm = lam[row - 1] - col
    leg = sum(1 for part in lam[row:] if part >= col)
    return arm + leg + 1


def diagonal_hook_lengths(lam) -> tuple[int, ...]:
    """Hook lengths at the diagonal cells (1,1), (2,2), ...

    For self-conjugate lam these are distinct odd numbers summing to the
    size, and they determine lam (see self_conjugate_from_diagonal_hooks).
    """
    lam = as_partition(lam)
    return tuple(hook_length(lam, i, i) for i in range(1, durfee_length(lam) + 1))


def self_conjugate_from_diagonal_hooks(hooks) -> tuple[int, ...]:
    """Rebuild the self-conjugate partition whose diagonal hooks are given.

    hooks must be strictly decreasing positive odd integers.  Hook i
    becomes the symmetric hook with arm = leg = (h_i - 1) / 2 based at
    the diagonal cell (i, i); nesting them left to right gives the
    unique self-conjugate preimage.
    """
    hooks = tuple(hooks)
    for h in hooks:
        if not isinstance(h, int) or isinstance(h, bool) or h < 1 or h % 2 == 0:
            raise ValueError(f"diagonal hooks must be positive odd integers, got {h!r}")
    for i in range(len(hooks) - 1):
        if hooks[i] <= hooks[i + 1]:
            raise ValueError(f"diagonal hooks must be strictly decreasing, got {hooks}")
    if not hooks:
        return ()
    k = len(hooks)
    top = [i + (h - 1) // 2 for i, h in enumerate(hooks, start=1)]
    # rows below the Durfee square are forced by symmetry: row j holds as
    # many cells as there are top rows reaching column j
    bottom = [sum(1 for part in top if part >= j) for j in range(k + 1, top[0] + 1)]
    lam = as_partition(tuple(top) + tuple(bottom))
    assert diagonal_hook_lengths(lam) == hooks and is_self_conjugate(lam)
    return lam


def is_p_regular(lam, p) -> bool:
    """True when no part value occurs p or more times."""
    lam = as_partition(lam)
    check_odd_p(p)
    return all(count < p for count in Counter(lam).values())


def is_bg_partition(lam, p) -> bool:
    """Self-conjugate with no diagonal hook length divisible by p."""
    lam = as_partition(lam)
    check_odd_p(p)
    return is_self_conjugate(lam) and all(h % p != 0 for h in diagonal_hook_lengths(lam))


def truncate_to_durfee(lam) -> tuple[int, ...]:
    """The first k rows, where k is the Durfee length."""
    lam = as_partition(lam)
    if not lam:
        raise ValueError("the empty partition has no rows to keep")
    return lam[: durfee_length(lam)]
