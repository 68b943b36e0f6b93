"""Acceptance gate: ten criteria, each emitting one PASS/FAIL line into the
terminal summary (see conftest).  Every criterion asserts exactly what it
states — a criterion the codebase cannot honestly meet stays red with the
analysis in its line rather than being weakened."""

import random
import time

import pytest

from designforge.apps import build_bsec2, build_ooc_n4, build_ooc_nm, fold_ooc
from designforge.core import Design, block
from designforge.engine import PlanNotExecutable, Status, execute_plan, plan
from designforge.families import (
    FamilyId,
    build_family,
    quasi_skew_starter,
    schgdd_n_1_4_from_starter,
)
from designforge.search import confirm_nonexistence_5_1_4
from designforge.verify import johnson_bound, verify, verify_quasi_skew_starter

# criterion 1 parameter schedule: family -> (n, m, t) instances
FAMILY_SCHEDULE = [
    (FamilyId.F4_2T, [(4, 2, t) for t in (4, 6, 8, 10, 12)]),
    (FamilyId.F5_M4, [(5, m, 4) for m in (5, 7, 11, 13, 17, 19, 25)]),
    (FamilyId.F5_3T, [(5, 3, t) for t in (4, 6, 8, 10)]),
    (FamilyId.F5_1T, [(5, 1, t) for t in (10, 16, 22)]),
    (FamilyId.F6_2_8, [(6, 2, 8)]),
    (FamilyId.F6_4_8, [(6, 4, 8)]),
    (FamilyId.F6_M3, [(6, m, 3) for m in (5, 7, 9, 11, 13)]),
    (FamilyId.F6_2T, [(6, 2, t) for t in (6, 10, 14)]),
    (FamilyId.FN_34, [(n, 3, 4) for n in (5, 11, 17, 23, 29)]),
]

CHAIN_TARGETS = [(4, 2, 6), (4, 6, 6), (5, 2, 10), (5, 3, 6), (6, 2, 16),
                 (6, 4, 8), (6, 1, 9), (7, 1, 4), (9, 1, 9), (11, 3, 4),
                 (8, 3, 4)]


@pytest.fixture(scope="module")
def family_designs():
    """All criterion-1 designs, built and verified, with the wall time of
    doing both."""
    built = []
    problems = []
    t0 = time.perf_counter()
    for fid, instances in FAMILY_SCHEDULE:
        for n, m, t in instances:
            d = build_family(fid, n, m, t)
            expected = (t - 1) * n * (n - 1) * m // 6
            if len(d.base_blocks) != expected:
                problems.append(f"{fid.value}({n},{m},{t}): "
                                f"{len(d.base_blocks)} blocks != {expected}")
                continue
            if not verify(d).valid:
                problems.append(f"{fid.value}({n},{m},{t}): invalid")
                continue
            built.append(d)
    elapsed = time.perf_counter() - t0
    return built, problems, elapsed


def test_criterion_01_direct_families(family_designs, acceptance_report):
    built, problems, elapsed = family_designs
    total = sum(len(instances) for _, instances in FAMILY_SCHEDULE)
    ok = not problems and len(built) == total and elapsed < 60.0
    acceptance_report.append(
        f"criterion 01 (direct-family soundness): {'PASS' if ok else 'FAIL'}"
        f" - {len(built)}/{total} designs valid with exact counts in "
        f"{elapsed:.1f}s" + (f"; problems: {problems}" if problems else ""))
    assert not problems, problems
    assert len(built) == total
    assert elapsed < 60.0


def test_criterion_02_starter_coverage(acceptance_report):
    failures = []
    t0 = time.perf_counter()
    for n in range(7, 302, 2):
        try:
            pairs = quasi_skew_starter(n)
        except ValueError as exc:
            failures.append(f"n={n}: {exc}")
            continue
        if not verify_quasi_skew_starter(pairs, n).valid:
            failures.append(f"n={n}: invalid starter")
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 5.0
    acceptance_report.append(
        f"criterion 02 (starter coverage): {'PASS' if ok else 'FAIL'} - "
        f"odd n in [7,301] in {elapsed:.1f}s"
        + (f"; failures: {failures}" if failures else ""))
    assert elapsed < 5.0
    assert not failures, failures


def test_criterion_03_starter_expansion(acceptance_report):
    failures = []
    for n in range(7, 100, 2):
        try:
            d = schgdd_n_1_4_from_starter(n)
        except ValueError as exc:
            failures.append(f"n={n}: {exc}")
            continue
        if not verify(d).valid:
            failures.append(f"n={n}: invalid design")
    ok = not failures
    acceptance_report.append(
        f"criterion 03 (starter-derived quadruple-column designs): "
        f"{'PASS' if ok else 'FAIL'} - odd n in [7,99]"
        + (f"; failures: {failures}" if failures else ""))
    assert not failures, failures


def test_criterion_04_nonexistence_certificate(acceptance_report):
    t0 = time.perf_counter()
    result = confirm_nonexistence_5_1_4()
    elapsed = time.perf_counter() - t0
    ok = (result["solutions"] == 0 and result["unique_row_patterns"] == 1
          and elapsed < 60.0)
    acceptance_report.append(
        f"criterion 04 (nonexistence certificate (5,1,4)): "
        f"{'PASS' if ok else 'FAIL'} - {result['solutions']} solutions, "
        f"space exhausted in {elapsed:.1f}s ({result['nodes']} nodes)")
    assert result["solutions"] == 0
    assert result["unique_row_patterns"] == 1
    assert elapsed < 60.0


def test_criterion_05_recursive_chains(acceptance_report):
    built, skipped, refused = [], [], []
    for n, m, t in CHAIN_TARGETS:
        node = plan(n, m, t)
        try:
            result = execute_plan(node)
        except PlanNotExecutable as exc:
            refused.append(f"({n},{m},{t}): {exc}")
            continue
        if result.design is None:
            skipped.append(f"({n},{m},{t}): {'; '.join(result.skipped)}")
            continue
        if verify(result.design).valid:
            built.append((n, m, t))
        else:
            refused.append(f"({n},{m},{t}): built but invalid")
    ok = not refused and not skipped and len(built) == len(CHAIN_TARGETS)
    detail = f"{len(built)}/{len(CHAIN_TARGETS)} chains built and verified"
    if skipped:
        detail += f"; explicit skips: {skipped}"
    if refused:
        detail += f"; refusals: {refused}"
    acceptance_report.append(
        f"criterion 05 (recursive chains): {'PASS' if ok else 'FAIL'} - "
        + detail)
    assert not skipped, skipped
    assert not refused, refused


def _settled_verdict(n: int, m: int, t: int) -> str:
    """Independent transcription of the settled existence spectrum, kept
    deliberately separate from the planner's code path."""
    if n < 3 or t < 3 or m < 1:
        return "not-exists"
    if ((t - 1) * (n - 1) * m) % 2 or ((t - 1) * n * (n - 1) * m) % 6:
        return "not-exists"
    if n % 12 in (3, 7) and m % 2 == 1 and t % 4 == 2:
        return "not-exists"
    if n == 3 and m % 2 == 1 and t % 2 == 0:
        return "not-exists"
    if n == 3 and t == 3 and m % 2 == 0:
        return "not-exists"
    if (n, m, t) in ((5, 1, 4), (6, 1, 3)):
        return "not-exists"
    if n == 8 and m % 12 in (2, 10) and t % 12 in (7, 10):
        return "open"
    if t == 8 and m % 2 == 1 and n % 6 in (1, 3) and n >= 7:
        return "open"
    if t == 8 and m % 6 == 3 and n % 6 == 5 and n >= 11:
        return "open"
    if n % 12 in (1, 9) and m % 2 == 1 and t % 4 == 2:
        return "open"
    if n % 6 == 5 and n >= 11 and ((m % 6 == 3 and t % 4 == 2)
                                   or (m % 6 in (1, 5) and t % 12 == 10)):
        return "open"
    return "exists"


def test_criterion_06_classifier_fidelity(acceptance_report):
    mismatches = []
    for n in range(3, 31):
        for t in range(3, 31):
            for m in range(1, 13):
                got = plan(n, m, t).status.value
                want = _settled_verdict(n, m, t)
                if got != want:
                    mismatches.append(f"({n},{m},{t}): plan={got} "
                                      f"settled={want}")
    ok = not mismatches
    acceptance_report.append(
        f"criterion 06 (classifier fidelity): {'PASS' if ok else 'FAIL'} - "
        f"{len(mismatches)} mismatches on n,t in [3,30], m in [1,12]"
        + (f"; first: {mismatches[:5]}" if mismatches else ""))
    assert not mismatches, mismatches[:20]


def test_criterion_07_code_optimality(acceptance_report):
    t0 = time.perf_counter()
    problems = []
    for label, code, want in [
        ("2x4", build_ooc_n4(2), johnson_bound(2, 4, 3, 1)),
        ("8x4", build_ooc_n4(8), 40),
        ("8x16", build_ooc_nm(8, 16), johnson_bound(8, 16, 3, 1)),
    ]:
        if len(code.base_blocks) != want:
            problems.append(f"{label}: {len(code.base_blocks)} != {want}")
        elif not verify(code).valid:
            problems.append(f"{label}: fails correlation check")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 120.0
    acceptance_report.append(
        f"criterion 07 (code optimality): {'PASS' if ok else 'FAIL'} - "
        f"sizes 2/40/168 at the counting bound in {elapsed:.1f}s"
        + (f"; problems: {problems}" if problems else ""))
    assert not problems, problems
    assert elapsed < 120.0


def test_criterion_08_fold_correctness(acceptance_report):
    folded = fold_ooc(build_ooc_nm(8, 16), 2)
    count_ok = len(folded.base_blocks) == 336
    shape_ok = folded.params.n == 16 and folded.params.m == 8
    valid = verify(folded).valid
    ok = count_ok and shape_ok and valid
    acceptance_report.append(
        f"criterion 08 (fold correctness): {'PASS' if ok else 'FAIL'} - "
        f"{len(folded.base_blocks)} words as a 16x8 weight-3 code, "
        f"valid={valid}")
    assert count_ok and shape_ok and valid


def test_criterion_09_sampling_plan(acceptance_report):
    t0 = time.perf_counter()
    d = build_bsec2(9, 9)
    report = verify(d)
    elapsed = time.perf_counter() - t0
    ok = report.valid and elapsed < 60.0
    acceptance_report.append(
        f"criterion 09 (9x9 adjacency-avoiding sampling plan): "
        f"{'PASS' if ok else 'FAIL'} - valid={report.valid} in "
        f"{elapsed:.1f}s")
    assert report.valid, report.summary()
    assert elapsed < 60.0


def test_criterion_10_mutation_sensitivity(family_designs, acceptance_report):
    built, _, _ = family_designs
    rng = random.Random(20250822)
    rejected = 0
    for _ in range(100):
        d = rng.choice(built)
        blocks = list(d.base_blocks)
        bi = rng.randrange(len(blocks))
        pts = [(p.group, p.coord) for p in blocks[bi]]
        pi = rng.randrange(len(pts))
        g, c = pts[pi]
        if rng.random() < 0.5:
            g = rng.choice([x for x in range(d.params.n) if x != g])
        else:
            c = rng.choice([x for x in range(d.params.L) if x != c])
        pts[pi] = (g, c)
        mutated = Design(params=d.params,
                         base_blocks=blocks[:bi] + [block(pts)]
                         + blocks[bi + 1:],
                         provenance="mutated")
        if not verify(mutated).valid:
            rejected += 1
    ok = rejected == 100
    acceptance_report.append(
        f"criterion 10 (mutation sensitivity): {'PASS' if ok else 'FAIL'} - "
        f"{rejected}/100 single-coordinate mutations rejected")
    assert rejected == 100
