"""Census of the partition families at a fixed size.

For one (p, n) this collects the p-regular count, the self-conjugate
partitions, the BG-partitions, the self-Mullineux partitions, and the
partitions into distinct odd parts not divisible by p, then pairs each
BG-partition with its self-Mullineux partner.  The last two families
are equinumerous with the BG-partitions, which is also what the product
generating function prod (1 + t^q) over odd q with p not dividing q
counts.
"""

import csv
import io
from dataclasses import dataclass

from .bg import bg_to_mull
from .partitions import as_partition, check_odd_p, diagonal_hook_lengths, format_partition, is_bg_partition, is_p_regular, is_self_conjugate
from .symbols import is_self_mullineux


def partitions_of(n, largest=None):
    """Yield the partitions of n in decreasing lexicographic order.

    largest caps the first part.  partitions_of(0) yields only ().
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"expected a size >= 0, got {n!r}")
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def has_distinct_odd_parts(lam, p=None):
    """True when all parts are odd and distinct; with p, none divisible by p."""
    lam = as_partition(lam)
    if len(set(lam)) != len(lam):
        return False
    if any(part % 2 == 0 for part in lam):
        return False
    return p is None or all(part % p for part in lam)


@dataclass(frozen=True)
class CensusReport:
    p: int
    n: int
    all_count: int
    p_regular_count: int
    self_conjugate: tuple
    bg: tuple
    self_mullineux: tuple
    distinct_odd_nondiv: tuple
    pairs: tuple  # (bg partition, self-Mullineux partner), bg side decreasing lex

    def to_json_dict(self):
        return {
            "p": self.p,
            "n": self.n,
            "all_count": self.all_count,
            "p_regular_count": self.p_regular_count,
            "self_conjugate": [list(lam) for lam in self.self_conjugate],
            "bg": [list(lam) for lam in self.bg],
            "self_mullineux": [list(lam) for lam in self.self_mullineux],
            "distinct_odd_nondiv": [list(lam) for lam in self.distinct_odd_nondiv],
            "pairs": [[list(b), list(m)] for b, m in self.pairs],
        }

    def to_csv(self):
        """One row per partition that appears in any listed family.

        Columns: partition, p_regular, self_conjugate, bg, self_mullineux,
        distinct_odd_nondiv, maps_to (the partner, bg rows only).
        """
        partner = dict(self.pairs)
        families = (set(self.self_conjugate), set(self.bg), set(self.self_mullineux), set(self.distinct_odd_nondiv))
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["partition", "p_regular", "self_conjugate", "bg", "self_mullineux", "distinct_odd_nondiv", "maps_to"])
        for lam in sorted(set().union(*families), reverse=True):
            flags = [int(is_p_regular(lam, self.p))] + [int(lam in fam) for fam in families]
            maps_to = format_partition(partner[lam]) if lam in partner else ""
            writer.writerow([format_partition(lam), *flags, maps_to])
        return out.getvalue()

    def to_text(self):
        def block(title, fam):
            body = "\n".join(f"  {format_partition(lam) or '(empty)'}" for lam in fam) or "  (none)"
            return f"{title} ({len(fam)}):\n{body}"

        head = (
            f"census for p={self.p}, n={self.n}\n"
            f"partitions: {self.all_count}\n"
            f"{self.p}-regular: {self.p_regular_count}"
        )
        pairing = "\n".join(
            f"  {format_partition(b) or '(empty)'}  ->  {format_partition(m) or '(empty)'}"
            for b, m in self.pairs
        ) or "  (none)"
        return "\n".join([
            head,
            block("self-conjugate", self.self_conjugate),
            block("BG-partitions", self.bg),
            block("self-Mullineux", self.self_mullineux),
            block(f"distinct odd parts, none divisible by {self.p}", self.distinct_odd_nondiv),
            f"BG -> self-Mullineux pairing:\n{pairing}",
        ])


def census(p, n) -> CensusReport:
    check_odd_p(p)
    all_count = 0
    p_regular_count = 0
    selfconj, bg, selfmull, distodd = [], [], [], []
    for lam in partitions_of(n):
        all_count += 1
        regular = is_p_regular(lam, p)
        if regular:
            p_regular_count += 1
            if is_self_mullineux(lam, p):
                selfmull.append(lam)
        if is_self_conjugate(lam):
            selfconj.append(lam)
            if is_bg_partition(lam, p):
                bg.append(lam)
        if has_distinct_odd_parts(lam, p):
            distodd.append(lam)

    # The diagonal hooks of a self-conjugate partition are distinct and odd,
    # and the correspondence is 1:1; under it the BG condition matches the
    # no-part-divisible-by-p condition exactly.
    via_hooks = sorted(
        (tuple(diagonal_hook_lengths(s)) for s in bg),
        reverse=True,
    )
    if via_hooks != sorted(distodd, reverse=True):
        raise RuntimeError(f"diagonal-hook correspondence broke at p={p}, n={n}")

    pairs = tuple((b, bg_to_mull(b, p)) for b in bg)
    if sorted(m for _, m in pairs) != sorted(selfmull):
        raise RuntimeError(f"BG pairing does not cover the self-Mullineux family at p={p}, n={n}")
    return CensusReport(
        p=p,
        n=n,
        all_count=all_count,
        p_regular_count=p_regular_count,
        self_conjugate=tuple(selfconj),
        bg=tuple(bg),
        self_mullineux=tuple(selfmull),
        distinct_odd_nondiv=tuple(distodd),
        pairs=pairs,
    )


def bg_counts_from_gf(p, n_max):
    """Coefficients 0..n_max of prod (1 + t^q), q odd and not divisible by p.

    Coefficient n counts the BG-partitions of n (equally: the partitions
    of n into distinct odd parts none divisible by p).
    """
    check_odd_p(p)
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 0:
        raise ValueError(f"expected a size >= 0, got {n_max!r}")
    coeffs = [1] + [0] * n_max
    for q in range(1, n_max + 1, 2):
        if q % p == 0:
            continue
        for k in range(n_max, q - 1, -1):
            coeffs[k] += coeffs[k - q]
    return coeffs
