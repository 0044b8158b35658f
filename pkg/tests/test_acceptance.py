"""Acceptance suite: one test per reproduction target, one verdict line each.

Each test prints `ACCEPTANCE <i> <name>: PASS/FAIL` on the real stderr so the
verdicts are visible in any pytest capture mode.  Stated time limits are part
of the criteria and asserted.

Criteria 3 and 4 assert closed-form size formulas that exhaustive search
proves unattainable on certain residue classes (no code of the stated size
exists at all); the constructions here use one extra vertex on those classes
instead, so the two tests fail on exactly those orders.  The failure messages
carry the nonexistence evidence.
"""

import random
import sys
import time
from fractions import Fraction
from math import ceil

import pytest

from circodes import (
    CirculantGraph,
    Code,
    Kind,
    PERIODIC_IDENTIFYING_CODE,
    PERIODIC_LOCATING_CODE,
    density,
    exists_code_of_size,
    heavy_profile_violations,
    identifying_code_for,
    locating_code_for,
    min_code_size,
    naive_min_code_size,
    verify_periodic,
)


VERDICTS: list[str] = []


def report(num, name, ok):
    line = f"ACCEPTANCE {num} {name}: {'PASS' if ok else 'FAIL'}"
    VERDICTS.append(line)
    print(line, file=sys.__stderr__, flush=True)
    return ok


def test_criterion_01_small_locating_optima():
    expected = {7: 3, 8: 6, 9: 4, 10: 4, 11: 4, 12: 5}
    t0 = time.perf_counter()
    got = {n: min_code_size(CirculantGraph(n), Kind.LOCATING).outcome.size
           for n in expected}
    elapsed = time.perf_counter() - t0
    ok = got == expected and elapsed < 1.0
    assert report(1, "small-n locating optima", ok), (got, f"{elapsed:.2f}s")


def test_criterion_02_small_identifying_optima():
    expected = {7: 4, 8: 6, 9: 4, 10: 4}
    t0 = time.perf_counter()
    got = {n: min_code_size(CirculantGraph(n), Kind.IDENTIFYING).outcome.size
           for n in expected}
    elapsed = time.perf_counter() - t0
    ok = got == expected and elapsed < 1.0
    assert report(2, "small-n identifying optima", ok), (got, f"{elapsed:.2f}s")


def test_criterion_03_locating_constructions():
    t0 = time.perf_counter()
    invalid, mismatched = [], []
    for n in range(13, 201):
        code = locating_code_for(n)
        if not code.is_locating():
            invalid.append(n)
        stated = ceil(n / 3) + (1 if n % 3 == 2 else 0)
        if len(code) != stated:
            mismatched.append((n, len(code), stated))
    elapsed = time.perf_counter() - t0
    ok = not invalid and not mismatched and elapsed < 5.0
    report(3, "locating constructions 13..200", ok)
    assert not invalid, f"constructions failed verification at n = {invalid}"
    assert not mismatched, (
        "the formula ceil(n/3) (+1 iff n = 2 mod 3) is unattainable for "
        "n = 3 (mod 6): exhaustive search proves no locating code of size "
        "ceil(n/3) exists at n = 15, 21, 27, 33, so the constructions on "
        f"that class use ceil(n/3)+1.  Mismatching (n, actual, stated): "
        f"{mismatched[:6]}{'...' if len(mismatched) > 6 else ''}")
    assert elapsed < 5.0, f"{elapsed:.2f}s"


def test_criterion_04_identifying_constructions():
    t0 = time.perf_counter()
    invalid, mismatched = [], []
    for n in range(11, 201):
        code = identifying_code_for(n)
        if not code.is_identifying():
            invalid.append(n)
        stated = ceil(4 * n / 11) + (1 if n % 11 == 8 else 0)
        if len(code) != stated:
            mismatched.append((n, len(code), stated))
    elapsed = time.perf_counter() - t0
    ok = not invalid and not mismatched and elapsed < 5.0
    report(4, "identifying constructions 11..200", ok)
    assert not invalid, f"constructions failed verification at n = {invalid}"
    assert not mismatched, (
        "the formula ceil(4n/11) (+1 iff n = 8 mod 11) is unattainable on "
        "two further residue classes: exhaustive search proves no identifying "
        "code of size ceil(4n/11) exists at n = 38 (class 5 mod 11) or "
        "n = 46 (class 2 mod 11), so the constructions use ceil(4n/11)+1 on "
        "those classes from n = 38 and n = 46 on.  Mismatching (n, actual, "
        f"stated): {mismatched[:6]}{'...' if len(mismatched) > 6 else ''}")
    assert elapsed < 5.0, f"{elapsed:.2f}s"


def test_criterion_05_locating_nonexistence():
    t0 = time.perf_counter()
    found = {}
    for n in (14, 17, 20, 23, 26):
        witness = exists_code_of_size(CirculantGraph(n), Kind.LOCATING,
                                      ceil(n / 3))
        if witness is not None:
            found[n] = sorted(witness.members)
    elapsed = time.perf_counter() - t0
    ok = not found and elapsed < 120.0
    assert report(5, "locating nonexistence n=14..26", ok), (found,
                                                             f"{elapsed:.1f}s")


@pytest.mark.extended
def test_criterion_05x_locating_nonexistence_to_38():
    found = {}
    for n in (29, 32, 35, 38):
        witness = exists_code_of_size(CirculantGraph(n), Kind.LOCATING,
                                      ceil(n / 3))
        if witness is not None:
            found[n] = sorted(witness.members)
    assert report("5x", "locating nonexistence n=29..38", not found), found


def test_criterion_06_identifying_nonexistence():
    t0 = time.perf_counter()
    w19 = exists_code_of_size(CirculantGraph(19), Kind.IDENTIFYING, 7)
    t19 = time.perf_counter() - t0
    t0 = time.perf_counter()
    w30 = exists_code_of_size(CirculantGraph(30), Kind.IDENTIFYING, 11)
    t30 = time.perf_counter() - t0
    ok = w19 is None and w30 is None and t19 < 1.0 and t30 < 600.0
    assert report(6, "identifying nonexistence n=19,30", ok), (
        w19, w30, f"{t19:.2f}s/{t30:.1f}s")


@pytest.mark.extended
def test_criterion_06x_identifying_nonexistence_41():
    witness = exists_code_of_size(CirculantGraph(41), Kind.IDENTIFYING, 15)
    assert report("6x", "identifying nonexistence n=41", witness is None)


def test_criterion_07_share_identity():
    rng = random.Random(2718281828)
    checked = 0
    bad = []
    while checked < 200:
        n = rng.randrange(7, 41)
        g = CirculantGraph(n)
        members = set(rng.sample(range(n), rng.randrange(1, n + 1)))
        code = Code(g, members)
        while True:
            result = code.is_dominating()
            if result.ok:
                break
            members.add(rng.choice(sorted(g.closed_neighborhood(result.witness))))
            code = Code(g, members)
        if code.sum_of_shares() != n:
            bad.append((n, sorted(members)))
        checked += 1
    assert report(7, "share identity on 200 dominating codes", not bad), bad


def test_criterion_08_oracle_equivalence():
    bad = []
    for n in range(7, 17):
        g = CirculantGraph(n)
        for kind in (Kind.LOCATING, Kind.IDENTIFYING):
            fast = min_code_size(g, kind).outcome.size
            slow = naive_min_code_size(g, kind).outcome.size
            if fast != slow:
                bad.append((n, kind.value, fast, slow))
    assert report(8, "pruned search equals naive oracle", not bad), bad


def test_criterion_09_heavy_profiles():
    bad = []
    for n in range(13, 201):
        code = locating_code_for(n)
        for u, prof in heavy_profile_violations(code, Kind.LOCATING):
            bad.append(("locating", n, u, prof))
    for n in range(11, 201):
        code = identifying_code_for(n)
        for u, prof in heavy_profile_violations(code, Kind.IDENTIFYING):
            bad.append(("identifying", n, u, prof))
    assert report(9, "heavy-vertex profile classification", not bad), bad


def test_criterion_10_periodic_tightness():
    ok = (density(PERIODIC_LOCATING_CODE) == Fraction(1, 3)
          and density(PERIODIC_IDENTIFYING_CODE) == Fraction(4, 11)
          and verify_periodic(PERIODIC_LOCATING_CODE, Kind.LOCATING).ok
          and verify_periodic(PERIODIC_IDENTIFYING_CODE, Kind.IDENTIFYING).ok)
    assert report(10, "periodic densities meet the floors", ok)


def test_criterion_11_offsets_1_2_cross_check():
    bad = []
    for n in range(8, 21):
        g = CirculantGraph(n, (1, 2))
        loc = min_code_size(g, Kind.LOCATING, budget=20).outcome.size
        if not ceil(n / 3) <= loc <= ceil(n / 3) + 1:
            bad.append((n, "locating", loc))
        ident = min_code_size(g, Kind.IDENTIFYING, budget=20).outcome.size
        if not ceil(n / 2) <= ident <= ceil(n / 2) + 2:
            bad.append((n, "identifying", ident))
    assert report(11, "offsets {1,2} optima inside cited windows", not bad), bad
