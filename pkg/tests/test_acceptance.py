"""Acceptance gate: ten exact-equality criteria, one pass line each.

Every assertion here is exact; no tolerances anywhere.  The loops are
exhaustive over the stated size ranges, so a pass means the maps hold
everywhere in range, not on a sample.
"""

import functools

from mulli import (
    add_rim_star_layer,
    bg_counts_from_gf,
    bg_symbol,
    bg_to_mull,
    conjugate,
    has_distinct_odd_parts,
    is_bg_partition,
    is_p_regular,
    is_self_conjugate,
    is_self_mullineux,
    mull_to_bg,
    mullineux_map,
    mullineux_symbol,
    p_rim_star,
    partitions_of,
    reconstruct,
    remove_p_rim_star,
    truncate_to_durfee,
    validate_symbol,
)

PRIMES = (3, 5, 7)


@functools.cache
def parts(n):
    return tuple(partitions_of(n))


def test_criterion_01_golden_symbol():
    sym = mullineux_symbol((9, 6, 3, 1), 5)
    assert (sym.a, sym.r) == ((9, 5, 5), (4, 2, 2))
    print("PASS criterion 1: symbol of (9,6,3,1) at p=5 is 9 5 5 / 4 2 2")


def test_criterion_02_golden_bg_symbol():
    sym = bg_symbol((6, 5, 5, 3, 3, 1), 3)
    assert (sym.a, sym.r) == ((11, 6, 5, 1), (6, 3, 3, 1))
    chain = [(6, 5, 5, 3, 3, 1)]
    while chain[-1]:
        chain.append(remove_p_rim_star(chain[-1], 3))
    assert chain[1:4] == [(4, 4, 2, 2), (3, 2, 1), (1,)]
    print("PASS criterion 2: bg symbol of (6,5,5,3,3,1) at p=3 and its peeling chain")


def test_criterion_03_golden_statistics():
    star = p_rim_star((4, 4, 2, 2), 3)
    assert (star.a_star, star.eps_star, star.r_star) == (6, 0, 3)
    star = p_rim_star((3, 2, 1), 3)
    assert (star.a_star, star.eps_star, star.r_star) == (5, 1, 3)
    print("PASS criterion 3: symmetrized rim statistics of (4,4,2,2) and (3,2,1) at p=3")


def test_criterion_04_census_18_3():
    all_parts = parts(18)
    assert len(all_parts) == 385
    assert sum(1 for lam in all_parts if is_p_regular(lam, 3)) == 135
    assert {lam for lam in all_parts if is_self_conjugate(lam)} == {
        (5, 4, 4, 4, 1),
        (6, 5, 2, 2, 2, 1),
        (7, 4, 2, 2, 1, 1, 1),
        (8, 3, 2, 1, 1, 1, 1, 1),
        (9, 2, 1, 1, 1, 1, 1, 1, 1),
    }
    assert {lam for lam in all_parts if is_bg_partition(lam, 3)} == {
        (6, 5, 2, 2, 2, 1),
        (7, 4, 2, 2, 1, 1, 1),
        (9, 2, 1, 1, 1, 1, 1, 1, 1),
    }
    assert {lam for lam in all_parts if is_p_regular(lam, 3) and is_self_mullineux(lam, 3)} == {
        (7, 5, 2, 2, 1, 1),
        (9, 4, 4, 1),
        (10, 4, 4),
    }
    print("PASS criterion 4: census at n=18, p=3 (385 / 135 / 5 / 3 / 3)")


def test_criterion_05_layer_goldens():
    assert add_rim_star_layer((6, 4, 2, 2, 1, 1), 0, 0, 3) == (9, 7, 2, 2, 2, 2, 2, 1, 1)
    assert add_rim_star_layer((6, 4, 2, 2, 1, 1), 1, 2, 3) == (9, 7, 5, 3, 3, 2, 2, 1, 1)
    print("PASS criterion 5: both layer-growth goldens on (6,4,2,2,1,1) at p=3")


def test_criterion_06_bijection_golden_and_separation():
    image = mull_to_bg((7, 6, 3, 2, 2), 5)
    assert image == (7, 5, 2, 2, 2, 1, 1)
    assert image != (9, 3, 2, 1, 1, 1, 1, 1, 1)
    print("PASS criterion 6: mull_to_bg((7,6,3,2,2)) at p=5, separated from (9,3,2,1^6)")


def test_criterion_07_involution_suite():
    cases = 0
    for p in PRIMES:
        for n in range(23):
            for lam in parts(n):
                if not is_p_regular(lam, p):
                    continue
                cases += 1
                mu = mullineux_map(lam, p)
                assert mullineux_map(mu, p) == lam
                assert sum(mu) == sum(lam)
                assert reconstruct(mullineux_symbol(lam, p)) == lam
    print(f"PASS criterion 7: involution and round trip, p in {PRIMES}, n <= 22 ({cases} partitions)")


def test_criterion_08_conjugation_degeneration():
    cases = 0
    for n in range(13):
        for lam in parts(n):
            cases += 1
            assert mullineux_map(lam, 13) == conjugate(lam)
    print(f"PASS criterion 8: the map at p=13 conjugates every partition of n <= 12 ({cases} partitions)")


def test_criterion_09_bijection_suite():
    cases = 0
    for p in PRIMES:
        gf = bg_counts_from_gf(p, 25)
        for n in range(26):
            bg = [lam for lam in parts(n) if is_bg_partition(lam, p)]
            mull = {lam for lam in parts(n) if is_p_regular(lam, p) and is_self_mullineux(lam, p)}
            distodd = sum(1 for lam in parts(n) if has_distinct_odd_parts(lam, p))
            image = set()
            for lam in bg:
                cases += 1
                mu = bg_to_mull(lam, p)
                assert mull_to_bg(mu, p) == lam
                image.add(mu)
            assert image == mull
            assert len(image) == len(bg) == distodd == gf[n]
    print(f"PASS criterion 9: two-sided bijection and all four counts, p in {PRIMES}, n <= 25 ({cases} pairs)")


def test_criterion_10_structural_law_suite():
    for p in PRIMES:
        for n in range(1, 26):
            seen = {}
            for lam in parts(n):
                if not is_self_conjugate(lam):
                    continue
                star = p_rim_star(lam, p)
                # parity: an even symmetrized rim is divisible by p
                assert star.a_star % 2 == 1 or star.a_star % p == 0
                sym = bg_symbol(lam, p)
                assert sym not in seen, (seen[sym], lam)
                seen[sym] = lam
                if not is_bg_partition(lam, p):
                    continue
                # four-way equivalence on BG-partitions
                flags = {
                    star.eps_star == 0,
                    star.a_star % 2 == 0,
                    not any(i == j for i, j in star.upper),
                    star.a_star % p == 0,
                }
                assert len(flags) == 1
                assert is_p_regular(truncate_to_durfee(lam), p)
                assert is_bg_partition(remove_p_rim_star(lam, p), p)
                assert validate_symbol(sym) == (True, "")
                assert all(sym.a[i] == 2 * sym.r[i] - sym.eps(i) for i in range(len(sym)))
    witness = p_rim_star((5, 3, 2, 1, 1), 3)
    assert witness.a_star == 9
    assert witness.a_star % 3 == 0 and witness.a_star % 2 == 1  # divisible yet odd: converse fails
    print(f"PASS criterion 10: parity, four-way equivalence, truncation, closure, injectivity, symbol validity, p in {PRIMES}, n <= 25")
