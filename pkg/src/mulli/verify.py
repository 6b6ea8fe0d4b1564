"""Exhaustive small-size verification of every documented invariant.

run_checks(p, n_max) sweeps all partitions of every size up to n_max
and confirms each named law at exact equality.  A check reports how
many concrete cases it covered and, on failure, the first witness.
"""

import functools
from dataclasses import dataclass

from .bg import add_rim_star_layer, bg_symbol, bg_to_mull, mull_to_bg
from .census import bg_counts_from_gf, has_distinct_odd_parts, partitions_of
from .partitions import (
    conjugate,
    diagonal_hook_lengths,
    durfee_length,
    hook_length,
    is_bg_partition,
    is_p_regular,
    is_self_conjugate,
    self_conjugate_from_diagonal_hooks,
    truncate_to_durfee,
)
from .rims import p_rim, p_rim_star, remove_p_rim, remove_p_rim_star, rim
from .symbols import is_self_mullineux, mullineux_map, mullineux_symbol, reconstruct, validate_symbol


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    cases: int


@functools.lru_cache(maxsize=None)
def _all_partitions(n):
    return tuple(partitions_of(n))


def _result(name, cases, failure=None):
    if failure is None:
        return CheckResult(name, True, f"{cases} cases", cases)
    return CheckResult(name, False, failure, cases)


def check_partition_count(p, n_max):
    """Enumeration size agrees with Euler's pentagonal-number recurrence."""
    counts = [1]
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * counts[n - g1]
            if g2 <= n:
                total += sign * counts[n - g2]
            k += 1
        counts.append(total)
    cases = 0
    for n in range(n_max + 1):
        cases += 1
        if len(_all_partitions(n)) != counts[n]:
            return _result("partition-count", cases, f"n={n}: enumerated {len(_all_partitions(n))}, recurrence {counts[n]}")
    return _result("partition-count", cases)


def check_conjugate_involution(p, n_max):
    cases = 0
    for n in range(n_max + 1):
        for lam in _all_partitions(n):
            cases += 1
            if conjugate(conjugate(lam)) != lam or sum(conjugate(lam)) != n:
                return _result("conjugate-involution", cases, f"lam={lam}")
    return _result("conjugate-involution", cases)


def check_hook_transpose(p, n_max):
    """hook(lam, i, j) == hook(conjugate(lam), j, i) cell by cell."""
    cases = 0
    for n in range(n_max + 1):
        for lam in _all_partitions(n):
            mu = conjugate(lam)
            for i, part in enumerate(lam, start=1):
                for j in range(1, part + 1):
                    cases += 1
                    if hook_length(lam, i, j) != hook_length(mu, j, i):
                        return _result("hook-transpose", cases, f"lam={lam}, cell=({i},{j})")
    return _result("hook-transpose", cases)


def check_diagonal_hooks(p, n_max):
    """Diagonal hooks of a self-conjugate partition: odd, strictly decreasing, summing to n."""
    cases = 0
    for n in range(n_max + 1):
        for lam in _all_partitions(n):
            if not is_self_conjugate(lam):
                continue
            cases += 1
            hooks = diagonal_hook_lengths(lam)
            if sum(hooks) != n:
                return _result("diagonal-hooks", cases, f"lam={lam}: hooks {hooks} do not sum to {n}")
            if any(h % 2 == 0 for h in hooks):
                return _result("diagonal-hooks", cases, f"lam={lam}: even hook in {hooks}")
            if any(hooks[i] <= hooks[i + 1] for i in range(len(hooks) - 1)):
                return _result("diagonal-hooks", cases, f"lam={lam}: hooks {hooks} not strictly decreasing")
    return _result("diagonal-hooks", cases)


def check_diagonal_hook_correspondence(p, n_max):
    """Diagonal hooks biject self-conjugate partitions with distinct-odd ones.

    Round-trips through self_conjugate_from_diagonal_hooks, matches the
    two families setwise, and restricts to BG <-> no part divisible by p.
    """
    cases = 0
    for n in range(n_max + 1):
        image = []
        for lam in _all_partitions(n):
            if not is_self_conjugate(lam):
                continue
            cases += 1
            hooks = diagonal_hook_lengths(lam)
            if self_conjugate_from_diagonal_hooks(hooks) != lam:
                return _result("diagonal-hook-correspondence", cases, f"lam={lam} fails the round trip")
            if is_bg_partition(lam, p) != all(h % p for h in hooks):
                return _result("diagonal-hook-correspondence", cases, f"lam={lam}: BG flag disagrees with hooks {hooks}")
            image.append(tuple(hooks))
        target = [lam for lam in _all_partitions(n) if has_distinct_odd_parts(lam)]
        if sorted(image) != sorted(target):
            return _result("diagonal-hook-correspondence", cases, f"n={n}: image does not match the distinct-odd family")
    return _result("diagonal-hook-correspondence", cases)


def check_p_rim_structure(p, n_max):
    """Segment law: p cells each but the last, one row gap between them,
    first segment leads the rim path, last cell sits in the last row, and
    removal drops exactly the rim size."""
    cases = 0
    for n in range(1, n_max + 1):
        for lam in _all_partitions(n):
            cases += 1
            path = rim(lam)
            pr = p_rim(lam, p)
            segments = pr.segments
            if segments[0] != tuple(path[: len(segments[0])]):
                return _result("p-rim-structure", cases, f"lam={lam}: first segment strays from the rim path")
            if any(len(seg) != p for seg in segments[:-1]) or not 1 <= len(segments[-1]) <= p:
                return _result("p-rim-structure", cases, f"lam={lam}: bad segment sizes {[len(s) for s in segments]}")
            rows_used = [set(c[0] for c in seg) for seg in segments]
            for a, b in zip(rows_used, rows_used[1:]):
                if a & b or min(b) != max(a) + 1:
                    return _result("p-rim-structure", cases, f"lam={lam}: segments do not step down one row")
            if not set(pr.cells) <= set(path):
                return _result("p-rim-structure", cases, f"lam={lam}: p-rim leaves the rim")
            if pr.cells[-1][0] != len(lam):
                return _result("p-rim-structure", cases, f"lam={lam}: p-rim misses the last row")
            rest = remove_p_rim(lam, p)
            if sum(rest) != n - len(pr):
                return _result("p-rim-structure", cases, f"lam={lam}: removal size mismatch")
    return _result("p-rim-structure", cases)


def check_rim_star_structure(p, n_max):
    """Symmetrized rim stats: a* counts the union, r* the upper half,
    eps* flags the diagonal cell, and removal is self-conjugate again."""
    cases = 0
    for n in range(1, n_max + 1):
        for lam in _all_partitions(n):
            if not is_self_conjugate(lam):
                continue
            cases += 1
            star = p_rim_star(lam, p)
            diag = [c for c in star.upper if c[0] == c[1]]
            if star.eps_star != len(diag):
                return _result("rim-star-structure", cases, f"lam={lam}: eps* {star.eps_star} vs diagonal cells {len(diag)}")
            if star.a_star != len(set(star.upper) | set(star.lower)):
                return _result("rim-star-structure", cases, f"lam={lam}: a* does not count the union")
            if 2 * star.r_star != star.a_star + star.eps_star:
                return _result("rim-star-structure", cases, f"lam={lam}: 2r* != a* + eps*")
            rest = remove_p_rim_star(lam, p)
            if not is_self_conjugate(rest) or sum(rest) != n - star.a_star:
                return _result("rim-star-structure", cases, f"lam={lam}: removal broke symmetry or size")
    return _result("rim-star-structure", cases)


def check_rim_star_parity(p, n_max):
    """An even a* forces p | a*; the converse is false (9 = a* of (5,3,2,1,1) at p=3)."""
    cases = 0
    for n in range(1, n_max + 1):
        for lam in _all_partitions(n):
            if not is_self_conjugate(lam):
                continue
            cases += 1
            star = p_rim_star(lam, p)
            if star.a_star % 2 == 0 and star.a_star % p != 0:
                return _result("rim-star-parity", cases, f"lam={lam}: a*={star.a_star} even but not divisible by {p}")
    if p == 3 and n_max >= 12:
        cases += 1
        witness = p_rim_star((5, 3, 2, 1, 1), 3)
        if witness.a_star != 9:
            return _result("rim-star-parity", cases, f"witness a*={witness.a_star}, expected 9")
        if witness.a_star % 3 != 0 or witness.a_star % 2 == 0:
            return _result("rim-star-parity", cases, "witness no longer refutes the converse")
    return _result("rim-star-parity", cases)


def check_bg_four_way(p, n_max):
    """On BG-partitions: eps*=0, a* even, no diagonal rim cell, p | a* agree."""
    cases = 0
    for n in range(1, n_max + 1):
        for lam in _all_partitions(n):
            if not is_bg_partition(lam, p):
                continue
            cases += 1
            star = p_rim_star(lam, p)
            flags = (
                star.eps_star == 0,
                star.a_star % 2 == 0,
                not any(c[0] == c[1] for c in star.upper),
                star.a_star % p == 0,
            )
            if len(set(flags)) != 1:
                return _result("bg-four-way", cases, f"lam={lam}: flags {flags} disagree")
    return _result("bg-four-way", cases)


def check_bg_truncation(p, n_max):
    """The first Durfee-many rows of a BG-partition form a p-regular partition."""
    cases = 0
    for n in range(1, n_max + 1):
        for lam in _all_partitions(n):
            if not is_bg_partition(lam, p):
                continue
            cases += 1
            if not is_p_regular(truncate_to_durfee(lam), p):
                return _result("bg-truncation", cases, f"lam={lam}")
    return _result("bg-truncation", cases)


def check_bg_closure(p, n_max):
    """Removing the symmetrized rim from a BG-partition lands on a BG-partition."""
    cases = 0
    for n in range(1, n_max + 1):
        for lam in _all_partitions(n):
            if not is_bg_partition(lam, p):
                continue
            cases += 1
            if not is_bg_partition(remove_p_rim_star(lam, p), p):
                return _result("bg-closure", cases, f"lam={lam}")
    return _result("bg-closure", cases)


def check_bg_symbol_injective(p, n_max):
    cases = 0
    for n in range(n_max + 1):
        seen = {}
        for lam in _all_partitions(n):
            if not is_self_conjugate(lam):
                continue
            cases += 1
            key = bg_symbol(lam, p)
            if key in seen:
                return _result("bg-symbol-injective", cases, f"{seen[key]} and {lam} share {key.to_text()}")
            seen[key] = lam
    return _result("bg-symbol-injective", cases)


def check_bg_symbol_validates(p, n_max):
    """BG symbols satisfy the column conditions and a*_i = 2 r*_i - eps_i."""
    cases = 0
    for n in range(1, n_max + 1):
        for lam in _all_partitions(n):
            if not is_bg_partition(lam, p):
                continue
            cases += 1
            sym = bg_symbol(lam, p)
            ok, why = validate_symbol(sym)
            if not ok:
                return _result("bg-symbol-validates", cases, f"lam={lam}: {why}")
            if any(sym.a[i] != 2 * sym.r[i] - sym.eps(i) for i in range(len(sym))):
                return _result("bg-symbol-validates", cases, f"lam={lam}: a != 2r - eps in {sym.to_text()}")
    return _result("bg-symbol-validates", cases)


def check_symbol_roundtrip(p, n_max):
    """Computed symbols pass validation and reconstruct to their partition."""
    cases = 0
    for n in range(1, n_max + 1):
        for lam in _all_partitions(n):
            if not is_p_regular(lam, p):
                continue
            cases += 1
            sym = mullineux_symbol(lam, p)
            ok, why = validate_symbol(sym)
            if not ok:
                return _result("symbol-roundtrip", cases, f"lam={lam}: {why}")
            if reconstruct(sym) != lam:
                return _result("symbol-roundtrip", cases, f"lam={lam} reconstructs to {reconstruct(sym)}")
    return _result("symbol-roundtrip", cases)


def check_mullineux_involution(p, n_max):
    """The map is a size-preserving involution on p-regular partitions."""
    cases = 0
    for n in range(1, n_max + 1):
        for lam in _all_partitions(n):
            if not is_p_regular(lam, p):
                continue
            cases += 1
            mu = mullineux_map(lam, p)
            if not is_p_regular(mu, p) or sum(mu) != n:
                return _result("mullineux-involution", cases, f"lam={lam}: image {mu} leaves the domain")
            if mullineux_map(mu, p) != lam:
                return _result("mullineux-involution", cases, f"lam={lam}: m(m(lam)) = {mullineux_map(mu, p)}")
    return _result("mullineux-involution", cases)


def check_self_mullineux_fixed_points(p, n_max):
    """is_self_mullineux agrees with literally applying the map."""
    cases = 0
    for n in range(1, n_max + 1):
        for lam in _all_partitions(n):
            if not is_p_regular(lam, p):
                continue
            cases += 1
            if is_self_mullineux(lam, p) != (mullineux_map(lam, p) == lam):
                return _result("self-mullineux-fixed-points", cases, f"lam={lam}")
    return _result("self-mullineux-fixed-points", cases)


def check_small_size_conjugation(p, n_max):
    """Below n = p the map degenerates to conjugation."""
    cases = 0
    for n in range(1, min(n_max, p - 1) + 1):
        for lam in _all_partitions(n):
            cases += 1
            if mullineux_map(lam, p) != conjugate(lam):
                return _result("small-size-conjugation", cases, f"lam={lam}")
    return _result("small-size-conjugation", cases)


def check_layer_postconditions(p, n_max):
    """add_rim_star_layer hits its contract on every base and parameter pair."""
    cases = 0
    for n in range(n_max + 1):
        for base in _all_partitions(n):
            if not is_self_conjugate(base):
                continue
            params = [(1, m) for m in range(p)]
            if base:
                params.append((0, 0))
            for eps, m in params:
                cases += 1
                grown = add_rim_star_layer(base, eps, m, p)
                star = p_rim_star(grown, p)
                if star.eps_star != eps or (star.r_star - star.eps_star) % p != m:
                    return _result("layer-postconditions", cases, f"base={base}, eps={eps}, m={m}: stats off")
                if remove_p_rim_star(grown, p) != base:
                    return _result("layer-postconditions", cases, f"base={base}, eps={eps}, m={m}: removal misses the base")
    return _result("layer-postconditions", cases)


def check_bijection_roundtrip(p, n_max):
    """bg_to_mull pairs the BG and self-Mullineux families exactly, with
    mull_to_bg as two-sided inverse; both counts equal the distinct-odd
    count and the generating function coefficient."""
    gf = bg_counts_from_gf(p, n_max)
    cases = 0
    for n in range(n_max + 1):
        bg, mull, distodd = [], [], []
        for lam in _all_partitions(n):
            if is_bg_partition(lam, p):
                bg.append(lam)
            if is_p_regular(lam, p) and is_self_mullineux(lam, p):
                mull.append(lam)
            if has_distinct_odd_parts(lam, p):
                distodd.append(lam)
        image = []
        for lam in bg:
            cases += 1
            mu = bg_to_mull(lam, p)
            image.append(mu)
            if mull_to_bg(mu, p) != lam:
                return _result("bijection-roundtrip", cases, f"lam={lam}: mull_to_bg(bg_to_mull) = {mull_to_bg(mu, p)}")
        for mu in mull:
            cases += 1
            if bg_to_mull(mull_to_bg(mu, p), p) != mu:
                return _result("bijection-roundtrip", cases, f"mu={mu}: bg_to_mull(mull_to_bg) misses")
        cases += 1
        if sorted(image) != sorted(mull):
            return _result("bijection-roundtrip", cases, f"n={n}: image {image} is not the self-Mullineux family {mull}")
        if not len(bg) == len(mull) == len(distodd) == gf[n]:
            return _result(
                "bijection-roundtrip",
                cases,
                f"n={n}: counts bg={len(bg)}, mull={len(mull)}, distinct-odd={len(distodd)}, gf={gf[n]}",
            )
    return _result("bijection-roundtrip", cases)


CHECKS = (
    check_partition_count,
    check_conjugate_involution,
    check_hook_transpose,
    check_diagonal_hooks,
    check_diagonal_hook_correspondence,
    check_p_rim_structure,
    check_rim_star_structure,
    check_rim_star_parity,
    check_bg_four_way,
    check_bg_truncation,
    check_bg_closure,
    check_bg_symbol_injective,
    check_bg_symbol_validates,
    check_symbol_roundtrip,
    check_mullineux_involution,
    check_self_mullineux_fixed_points,
    check_small_size_conjugation,
    check_layer_postconditions,
    check_bijection_roundtrip,
)


def run_checks(p, n_max):
    """Run every check at (p, n_max); returns the CheckResult list."""
    return [fn(p, n_max) for fn in CHECKS]
