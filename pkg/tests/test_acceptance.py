"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` (lines are echoed in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import subprocess
import sys
import time
from typing import Callable

import pytest

from finitetop import classes as oc
from finitetop.laws import ordered_topologies, recheck, verify
from finitetop.mining import STRICTNESS_LEVELS, intersection_nonclosure_witness, mine, strictness
from finitetop.operators import SPACE_COMPACTNESS, TOPOLOGY_COMPACTNESS, BiOperatorSpace, is_B_open
from finitetop.topology import enumerate_topologies, enumerate_topologies_oracle

RESULTS: list[str] = []

Outcome = tuple[bool, str]


def _timed(fn: Callable[[], Outcome], limit_s: float | None) -> Outcome:
    start = time.perf_counter()
    ok, detail = fn()
    took = time.perf_counter() - start
    if limit_s is not None:
        fast = took < limit_s
        detail += f"; {took:.1f}s (limit {limit_s:.0f}s)"
        ok = ok and fast
    else:
        detail += f"; {took:.1f}s"
    return ok, detail


def criterion_1() -> Outcome:
    counts, agree = [], True
    for n in (1, 2, 3, 4):
        fast = enumerate_topologies(n)
        slow = enumerate_topologies_oracle(n)
        counts.append(len(fast))
        agree &= {(t.ground, t.opens) for t in fast} == {(t.ground, t.opens) for t in slow} and len(fast) == len(slow)
    return counts == [1, 4, 29, 355] and agree, f"labeled counts {counts}, routes agree: {agree}"


def criterion_2() -> Outcome:
    pairs4, bad = 0, 0
    for n in (1, 2, 3, 4):
        for t in enumerate_topologies(n):
            for s in range(t.full + 1):
                pairs4 += n == 4
                bad += oc.p_int(t, s) != oc.p_int_scan(t, s)
                bad += oc.p_cl(t, s) != oc.p_cl_scan(t, s)
                bad += oc.s_int(t, s) != oc.s_int_scan(t, s)
                bad += oc.s_cl(t, s) != oc.s_cl_scan(t, s)
    r = verify("prop-open-class-identities", max_points=4)
    ok = bad == 0 and pairs4 == 5680 and r.status == "verified"
    return ok, f"{bad} violations, {pairs4} pairs at n=4, law {r.status} over {r.instances_checked} instances"


def criterion_3() -> Outcome:
    reports = [verify(k, max_points=4) for k in ("lemma-BInt-decomposition", "lemma-BCl-decomposition")]
    ok = all(r.status == "verified" and r.witness is None for r in reports)
    return ok, ", ".join(f"{r.law} {r.status} ({r.instances_checked})" for r in reports)


def criterion_4() -> Outcome:
    eq = verify("remark-b-equivalence", max_points=4)
    tstar = verify("remark-Tstar-implies-B", max_points=3)
    chain = verify("remark-B-implies-chain", max_points=3)
    ok = all(r.status == "verified" for r in (eq, tstar, chain))
    return ok, (f"B-open iff b-open {eq.status} ({eq.instances_checked}); T*-open => B-open {tstar.status} "
                f"({tstar.instances_checked}); B-open => chain-open {chain.status} ({chain.instances_checked})")


# each pattern describes a violation of one link of the chain
CHAIN_VIOLATIONS = ("open & !alpha_open", "alpha_open & !pre_open", "alpha_open & !semi_open", "pre_open & !b_open",
               "semi_open & !b_open", "b_open & !beta_open")


def criterion_5() -> Outcome:
    broken = [p for p in CHAIN_VIOLATIONS if not mine(p, 4).absent]
    first, second = strictness(4), strictness(4)
    settled = all(r["witness"] is not None or r["exhaustive_absence"] for r in first)
    strict = [r["inclusion"] for r in first if r["witness"] is not None]
    absent = [r["inclusion"] for r in first if r["witness"] is None]
    ok = not broken and settled and first == second and len(first) == len(STRICTNESS_LEVELS)
    return ok, (f"chain violations {broken or 'none'}; strict with witness: {len(strict)}; "
                f"exhaustive absence: {absent or 'none'}; reproducible: {first == second}")


def criterion_6() -> Outcome:
    w = intersection_nonclosure_witness()
    t = w["topology"]
    g = t.ground
    opens = sorted(g.labels(u) for u in t.opens)
    sp = BiOperatorSpace.canonical(t)
    triple = (is_B_open(sp, w["s1"]), is_B_open(sp, w["s2"]), is_B_open(sp, w["s1"] & w["s2"]))
    ok = (w["n"] == 3 and opens == sorted([[], ["a"], ["b"], ["a", "b"], ["a", "b", "c"]])
          and g.labels(w["s1"]) == ["a", "c"] and g.labels(w["s2"]) == ["b", "c"]
          and w["absent_at"] == [1, 2] and triple == (True, True, False))
    return ok, f"n={w['n']}, S1={g.labels(w['s1'])}, S2={g.labels(w['s2'])}, none at n in {w['absent_at']}"


MAP_LAWS = ("prop-contra-graph-preimage", "prop-contra-compact-continuity", "prop-equalizer-B-closed",
            "cor-B-dense-agreement", "prop-non-discrete", "lemma-R-continuous", "prop-urysohn-regular-graph",
            "prop-weakly-hausdorff", "prop-B-frechet", "prop-contra-B-regular-graph")
MUST_HIT = ("prop-non-discrete", "prop-weakly-hausdorff", "prop-B-frechet")


def criterion_7() -> Outcome:
    reports = {k: verify(k, max_points=3, jobs=1) for k in MAP_LAWS}
    failed = [k for k, r in reports.items() if r.status == "counterexample"]
    unflagged = [k for k, r in reports.items() if r.hypothesis_hits == 0 and r.status != "vacuous"]
    dry = [k for k in MUST_HIT if reports[k].hypothesis_hits == 0]
    ok = not failed and not unflagged and not dry
    return ok, (f"counterexamples in {failed or 'none'}; unflagged vacuous {unflagged or 'none'}; "
                f"required non-vacuous hits {[reports[k].hypothesis_hits for k in MUST_HIT]}")


TRIVIAL_LAWS = ("prop-compact-transfer-family", "prop-R-compact-transfer", "prop-image-contra-compact",
                "cor-surjective-contra-compact")


def criterion_8() -> Outcome:
    reports = [verify(k, max_points=3) for k in TRIVIAL_LAWS]
    laws_ok = all(r.status == "verified" and r.trivial_on_finite for r in reports)
    spaces = [t for n in (1, 2, 3, 4) for t in ordered_topologies(n)][:100]
    preds_ok = all(
        all(f(t) for f in TOPOLOGY_COMPACTNESS.values())
        and all(f(BiOperatorSpace.canonical(t)) for f in SPACE_COMPACTNESS.values())
        for t in spaces
    )
    return laws_ok and preds_ok and len(spaces) == 100, (
        f"finite-trivial laws verified+flagged: {laws_ok}; all compactness predicates true on {len(spaces)} spaces: "
        f"{preds_ok}")


def _cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "finitetop", *args], capture_output=True, text=True)


def criterion_9() -> Outcome:
    parts, ok = [], True
    for k in ("selftest-bopen-implies-semiopen", "selftest-B-open-intersection"):
        r = verify(k)
        rc = _cli("verify", "--law", k, "--format", "json").returncode
        again = recheck(k, r.witness) if r.witness else None
        ok &= r.status == "counterexample" and again == (True, False) and rc == 1
        parts.append(f"{k}: {r.status}, recheck {again}, exit {rc}")
    return ok, "; ".join(parts)


def criterion_10() -> Outcome:
    one = _cli("verify", "--all", "--max-points", "3", "--jobs", "1", "--format", "json")
    eight = _cli("verify", "--all", "--max-points", "3", "--jobs", "8", "--format", "json")
    same = one.stdout == eight.stdout and bool(one.stdout)
    return same and one.returncode == eight.returncode, (
        f"{len(one.stdout)} bytes, identical: {same}, exit codes {one.returncode}/{eight.returncode}")


CRITERIA: list[tuple[int, str, Callable[[], Outcome], float | None]] = [
    (1, "enumeration cross-check", criterion_1, 60),
    (2, "pre/semi interior and closure identities", criterion_2, 10),
    (3, "BInt/BCl decomposition", criterion_3, 30),
    (4, "B-open equivalence and T*-open chain", criterion_4, None),
    (5, "implication chain and strictness", criterion_5, None),
    (6, "intersection non-closure witness", criterion_6, 5),
    (7, "map-level propositions", criterion_7, 600),
    (8, "finite-trivial laws", criterion_8, None),
    (9, "negative controls", criterion_9, None),
    (10, "parallel determinism", criterion_10, None),
]


def run_criterion(num: int) -> Outcome:
    _, title, fn, limit = CRITERIA[num - 1]
    ok, detail = _timed(fn, limit)
    line = f"{'PASS' if ok else 'FAIL'} criterion {num} ({title}): {detail}"
    RESULTS.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("num", [c[0] for c in CRITERIA])
def test_criterion(num):
    ok, line = run_criterion(num)
    assert ok, line


if __name__ == "__main__":
    outcomes = [run_criterion(c[0])[0] for c in CRITERIA]
    sys.exit(0 if all(outcomes) else 1)
