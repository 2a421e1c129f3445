from itertools import combinations
from math import comb

import pytest

from circmds.circulant import SubmatrixIndex, Variant, orbit, reflect_index
from circmds.reducer import (Certificate, ExclusionLedger, ReducedSet, build_reduced_set,
                             count_order, iter_representatives, membership_certificate,
                             row_orbit_tuples, row_tuples)
from oracles import class_count


def idx(rows, cols):
    return SubmatrixIndex(tuple(rows), tuple(cols))


def test_row_orbit_tuples():
    assert row_orbit_tuples((0, 1), 3) == {(0, 1), (1, 2), (0, 2)}
    assert row_orbit_tuples((0, 2, 4, 6), 8) == {(0, 2, 4, 6), (1, 3, 5, 7)}
    for n in range(2, 10):
        for u in range(1, n + 1):
            for rows in combinations(range(n), u):
                assert n % len(row_orbit_tuples(rows, n)) == 0


@pytest.mark.parametrize("n,total", [(3, 7), (5, 41), (7, 309), (8, 941)])
def test_totals(n, total):
    for variant in "LR":
        assert build_reduced_set(n, variant).total == total
        assert build_reduced_set(n, variant, counts_only=True).total == total


def test_n3_breakdown():
    rs = build_reduced_set(3)
    assert rs.counts == {1: 3, 2: 3, 3: 1}
    assert rs.classes[2] == [idx((0, 1), (0, 1)), idx((0, 1), (0, 2)), idx((0, 1), (1, 2))]


def test_singletons_and_full():
    rs = build_reduced_set(6)
    assert rs.classes[1] == [idx((0,), (j,)) for j in range(6)]
    assert rs.classes[6] == [idx(range(6), range(6))]


def test_rejects_small_order():
    with pytest.raises(ValueError):
        build_reduced_set(2)


@pytest.mark.parametrize("n", range(3, 11))
def test_counts_only_agrees_with_enumeration(n):
    full = build_reduced_set(n)
    assert build_reduced_set(n, counts_only=True).counts == full.counts
    assert {u: len(v) for u, v in full.classes.items()} == full.counts
    assert build_reduced_set(n, "R").counts == full.counts


def test_iter_representatives_matches_build():
    rs = build_reduced_set(7, "R")
    assert list(iter_representatives(7, "R")) == list(rs)


def test_visitor_mode():
    seen = []
    rs = build_reduced_set(6, visitor=lambda u, i: seen.append((u, i)))
    assert rs.classes is None and rs.total == len(seen) == build_reduced_set(6).total
    assert [i for _, i in seen] == list(build_reduced_set(6))


def test_row_tuples_start_at_zero():
    assert list(row_tuples(7, 2)) == [(0, 1), (0, 2), (0, 3)]
    for rows in row_tuples(12, 5):
        assert rows[0] == 0


def test_exclusion_ledger_monotone():
    ledger = ExclusionLedger(6, 3)
    sizes = [len(ledger)]
    for rows in row_tuples(6, 3):
        ledger.exclude_orbit(rows)
        sizes.append(len(ledger))
    assert sizes == sorted(sizes, reverse=True)
    assert sizes[0] == comb(6, 3) and sizes[-1] == 0


def test_determinism():
    a, b = build_reduced_set(9, "L"), build_reduced_set(9, "L")
    assert a == b and list(a) == list(b)


def test_certificate_examples():
    rs = build_reduced_set(7)
    rep = rs.classes[3][5]
    assert membership_certificate(rep, rs) == Certificate(rep, 0, False)
    cert = membership_certificate(idx((1, 2), (1, 2)), build_reduced_set(7, "R"))
    assert cert == Certificate(idx((0, 1), (0, 1)), 1, False)


@pytest.mark.parametrize("n", range(3, 7))
@pytest.mark.parametrize("variant", ["L", "R"])
def test_completeness_small(n, variant):
    rs = build_reduced_set(n, variant)
    for u in range(1, n + 1):
        for rows in combinations(range(n), u):
            for cols in combinations(range(n), u):
                cert = membership_certificate(idx(rows, cols), rs)
                assert cert is not None
                image = cert.representative
                if cert.transposed:
                    image = reflect_index(image, n, variant)
                assert idx(rows, cols) in orbit(image, n, variant)


def _literal_r_cover(n, u):
    """Column exclusion by the orbit of i itself, applied to R."""
    ledger = ExclusionLedger(n, u)
    reps = []
    for rows in row_tuples(n, u):
        reps += [idx(rows, c) for c in ledger.remaining()]
        ledger.exclude_orbit(rows)
    covered = set()
    for r in reps:
        covered |= orbit(r, n, "R") | orbit(reflect_index(r, n, "R"), n, "R")
    return len(covered)


def test_literal_exclusion_is_incomplete_for_R():
    # excluding shifts of i (rather than of n-1-i) leaves R classes uncovered
    assert _literal_r_cover(6, 3) == 364 < comb(6, 3) ** 2
    assert _literal_r_cover(7, 3) == 1078 < comb(7, 3) ** 2


@pytest.mark.parametrize("n", [4, 5, 6, 7, 9])
def test_counts_match_class_oracle_without_stabilizer_clash(n):
    # Algorithm output equals the true number of classes for these orders
    assert build_reduced_set(n).total == class_count(n, "L") == class_count(n, "R")


def test_order_eight_keeps_four_redundant_representatives():
    # the construction yields 941 for n = 8 while there are only 937 classes: rows with a
    # nontrivial stabilizer, here (0, 1, 4, 5), get columns that are transposes
    # of each other
    assert class_count(8, "L") == 937
    rs = build_reduced_set(8)
    assert rs.total == 941
    covered_twice = []
    lookup = rs.lookup()
    for rep in rs.classes[4]:
        images = orbit(rep, 8, "L") | orbit(reflect_index(rep, 8, "L"), 8, "L")
        others = [i for i in images if i in lookup and i != rep]
        if others:
            covered_twice.append(rep)
    assert len(covered_twice) == 8
    assert {r.rows for r in covered_twice} == {(0, 1, 4, 5)}


@pytest.mark.parametrize("n", [5, 6])
@pytest.mark.parametrize("variant", ["L", "R"])
def test_minor_closure_small(n, variant):
    rs = build_reduced_set(n, variant)
    for u in range(3, n):
        for rep in rs.classes[u]:
            for s in range(u):
                minor = idx(rep.rows[:-1], rep.cols[:s] + rep.cols[s + 1:])
                assert minor in rs


def test_json_roundtrip(tmp_path):
    rs = build_reduced_set(6, "R")
    back = ReducedSet.from_json(rs.to_json())
    assert back == rs and list(back) == list(rs)
    header = ReducedSet.from_json(rs.to_json(counts_only=True))
    assert header.classes is None and header.total == rs.total


def test_csv_form():
    lines = build_reduced_set(3).to_csv().splitlines()
    assert lines[0] == "u,rows,cols"
    assert lines[1] == "1,0,0"
    assert "2,0-1,0-2" in lines
    assert lines[-1] == "3,0-1-2,0-1-2"
    assert len(lines) == 8


def test_counts_only_has_no_members():
    rs = build_reduced_set(5, counts_only=True)
    with pytest.raises(ValueError):
        list(rs)


def test_count_order_edges():
    assert count_order(9, 1) == 9 and count_order(9, 9) == 1
    assert Variant("R") is Variant.R
