"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
Thresholds: zero counterexamples everywhere, the main sweep under 5 minutes
and the random oracle suite under 10 minutes, single-threaded.
"""

import sys
import time

import networkx as nx
import pytest

from gpkit import families, verifier
from gpkit.enumeration import enumerate_connected
from gpkit.graph import canonical_key, graph_from_edges

POPULATIONS = {4: 6, 5: 21, 6: 112, 7: 853}

LINES = []


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        line = f"[criterion {number}] {'PASS' if ok else 'FAIL'} {title}: {detail}"
        LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
        return ok

    return emit


def _atlas_keys():
    keys = {}
    for h in nx.graph_atlas_g()[1:]:
        n = h.number_of_nodes()
        if 4 <= n <= 7 and nx.is_connected(h):
            g = graph_from_edges(n, h.edges())
            keys.setdefault(n, set()).add(canonical_key(g))
    return keys


def test_criterion_1_main_theorem(report):
    atlas = _atlas_keys()
    counts_ok = all(
        len(enumerate_connected(n)) == POPULATIONS[n]
        and {canonical_key(g) for g in enumerate_connected(n)} == atlas[n]
        for n in POPULATIONS
    )
    r = verifier.verify_main_theorem(range(4, 8))
    literal = verifier.verify_main_theorem(range(4, 8), strict=True)
    ok = r.ok and counts_ok and r.duration < 300
    detail = (
        f"{r.failed} counterexamples over {r.population} graphs (6/21/112/853, atlas cross-check "
        f"{'ok' if counts_ok else 'MISMATCH'}) in {r.duration:.1f}s; "
        f"literal family reading: {literal.failed} counterexamples"
    )
    assert report(1, "gp = n-2 iff in F1..F8, 4<=n<=7", ok, detail)


def test_criterion_2_bound(report):
    r = verifier.verify_bound(range(4, 8), tight_up_to=10)
    assert report(2, "gp <= n - diam + 1, tight on K_n and P_n (n<=10)", r.ok,
                  f"{r.failed} violations over {r.population} checks")


def test_criterion_3_cycles(report):
    r = verifier.verify_cycles(12)
    values = r.detail["gp"]
    ok = r.ok and values[3] == 3 and values[4] == 2 and all(values[n] == 3 for n in range(5, 13))
    assert report(3, "gp(C_n) = 3 for 5<=n<=12, gp(C_4) = 2, gp(C_3) = 3", ok,
                  " ".join(f"C{n}={v}" for n, v in sorted(values.items())))


def test_criterion_4_diameter_two(report):
    r = verifier.verify_diam2_formula(range(4, 8))
    assert report(4, "gp = max(omega, eta) at diameter 2, 4<=n<=7", r.ok,
                  f"{r.failed} mismatches over {r.population} graphs")


def test_criterion_5_checker_agreement(report):
    r = verifier.verify_checker_agreement(range(1, 7), samples=100_000, sample_n=10, labeled=True)
    assert report(5, "definitional and structural checkers agree", r.ok,
                  f"{r.failed} disagreements over {r.population} (graph, subset) pairs: every subset "
                  f"of every labelled connected graph n<=6 plus 100000 random pairs at n=10")


def test_criterion_6_n_minus_1(report):
    r = verifier.verify_n_minus_1(range(4, 8))
    assert report(6, "gp = n-1 iff universal vertex plus cliques or K_n minus a star", r.ok,
                  f"{r.failed} counterexamples over {r.population} graphs")


def test_criterion_7_family_soundness(report):
    r = verifier.verify_families(8)
    disjoint_f5 = sum(
        1 for inst in families.sweep(8)
        if inst.label == "F5" and families.expected_diameter(inst) == 3
    )
    assert report(7, "F1..F8 instances n<=8: gp = n-2, diameter, re-recognised", r.ok,
                  f"{r.failed} failures over {r.population} instances {r.detail['instances']}; "
                  f"{disjoint_f5} F5 instances with disjoint attachments checked at diameter 3")


def test_criterion_8_oracle(report):
    start = time.perf_counter()
    r = verifier.verify_oracle(range(1, 8), samples=10_000, random_orders=(8, 12))
    elapsed = time.perf_counter() - start
    ok = r.ok and elapsed < 600
    assert report(8, "branch and bound equals exhaustive search", ok,
                  f"{r.failed} mismatches over {r.population} graphs (all connected n<=7 plus "
                  f"10000 random 8<=n<=12) in {elapsed:.1f}s")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
