"""Machine checks of the gp theorems over enumerated and random graphs.

Each ``verify_*`` function returns a :class:`Report`.  Counterexamples carry
the graph6 record, so any failure can be replayed with the single check it
came from (see :func:`replay`).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from typing import IO, Any, Callable, Iterable, Optional, Sequence

from gpkit import families
from gpkit.enumeration import enumerate_connected
from gpkit.gp import (
    distances,
    eta,
    gp_bruteforce,
    gp_certificate,
    gp_diameter2,
    gp_exact,
    is_gp_definitional,
    is_gp_structural,
)
from gpkit.graph import (
    Graph,
    GraphError,
    canonical_key,
    clique_number,
    complete_graph,
    cycle_graph,
    diameter,
    graph_from_edges,
    is_connected,
    members,
    path_graph,
)
from gpkit.graph6 import parse_graph6, to_graph6

CHECKS = ("main", "bound", "diam2", "cycles", "agreement", "nminus1", "oracle", "families")


@dataclass
class Counterexample:
    check: str
    n: int
    graph6: str
    expected: Any
    actual: Any
    witness: Any = None


@dataclass
class Report:
    check: str
    population: int = 0
    passed: int = 0
    failed: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    duration: float = 0.0
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self, timing: bool = True) -> dict[str, Any]:
        """Summary record; ``timing=False`` drops the duration so that output
        is reproducible byte for byte."""
        out = {
            "record": "summary",
            "check": self.check,
            "population": self.population,
            "passed": self.passed,
            "failed": self.failed,
        }
        if timing:
            out["duration"] = round(self.duration, 3)
        if self.detail:
            out["detail"] = self.detail
        return out

    def write_jsonl(self, out: IO[str], timing: bool = True) -> None:
        for cx in self.counterexamples:
            out.write(json.dumps({"record": "counterexample", **asdict(cx)}, sort_keys=True) + "\n")
        out.write(json.dumps(self.summary(timing), sort_keys=True) + "\n")

    def human(self, timing: bool = True) -> str:
        status = "PASS" if self.ok else "FAIL"
        lines = [
            f"{status} {self.check}: {self.passed}/{self.population} passed "
            f"({self.failed} failed)" + (f" in {self.duration:.2f}s" if timing else "")
        ]
        for cx in self.counterexamples[:20]:
            lines.append(
                f"  n={cx.n} {cx.graph6} expected={cx.expected} actual={cx.actual}"
                + (f" witness={cx.witness}" if cx.witness is not None else "")
            )
        if len(self.counterexamples) > 20:
            lines.append(f"  ... {len(self.counterexamples) - 20} more")
        return "\n".join(lines)


# a per-graph check returns (expected, actual, witness); pass iff expected == actual
GraphCheck = Callable[[Graph], tuple[Any, Any, Any]]


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    from multiprocessing import Pool

    with Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs)))


class _Runner:
    def __init__(self, check: str, sink: Optional[IO[str]] = None) -> None:
        self.report = Report(check)
        self.sink = sink
        self.start = time.perf_counter()

    def add_batch(self, graphs: Sequence[Graph], fn: GraphCheck, jobs: int = 1, label: Any = None) -> None:
        results = _map(fn, list(graphs), jobs)
        failures = []
        for g, (expected, actual, witness) in zip(graphs, results):
            self.report.population += 1
            if expected == actual:
                self.report.passed += 1
            else:
                self.report.failed += 1
                failures.append(
                    Counterexample(self.report.check, g.order, to_graph6(g), expected, actual, witness)
                )
        failures.sort(key=lambda cx: cx.graph6)
        self.report.counterexamples.extend(failures)
        if self.sink is not None:
            for cx in failures:
                self.sink.write(json.dumps({"record": "counterexample", **asdict(cx)}, sort_keys=True) + "\n")
            self.sink.write(
                json.dumps(
                    {"record": "progress", "check": self.report.check, "batch": label,
                     "size": len(results), "failed": len(failures)},
                    sort_keys=True,
                )
                + "\n"
            )
            self.sink.flush()

    def finish(self) -> Report:
        self.report.duration = time.perf_counter() - self.start
        if self.sink is not None:
            self.sink.write(json.dumps(self.report.summary(), sort_keys=True) + "\n")
            self.sink.flush()
        return self.report


def _check_range(ns: Iterable[int], low: int, high: int) -> list[int]:
    ns = list(ns)
    if not ns or min(ns) < low or max(ns) > high:
        raise GraphError(f"orders must lie in [{low}, {high}], got {ns}")
    return ns


# ------------------------------------------------------------ single checks


def check_main(g: Graph, strict: bool = False) -> tuple[Any, Any, Any]:
    n = g.order
    gp = gp_exact(g)
    rec = families.recognize(g, strict=strict)
    return gp.value == n - 2, bool(rec), {"gp": gp.value, "families": rec.matched_labels}


def check_main_strict(g: Graph) -> tuple[Any, Any, Any]:
    return check_main(g, strict=True)


def check_bound(g: Graph) -> tuple[Any, Any, Any]:
    gp = gp_exact(g).value
    bound = g.order - diameter(g) + 1
    return True, gp <= bound, {"gp": gp, "bound": bound}


def check_bound_tight(g: Graph) -> tuple[Any, Any, Any]:
    gp = gp_exact(g).value
    return g.order - diameter(g) + 1, gp, None


def check_diam2(g: Graph) -> tuple[Any, Any, Any]:
    gp = gp_exact(g).value
    return gp, gp_diameter2(g), {"omega": clique_number(g), "eta": eta(g)}


def check_nminus1(g: Graph) -> tuple[Any, Any, Any]:
    gp = gp_exact(g).value
    return gp == g.order - 1, families.recognize_gp_n_minus_1(g), {"gp": gp}


def check_oracle(g: Graph) -> tuple[Any, Any, Any]:
    fast, slow = gp_exact(g), gp_bruteforce(g)
    return slow.value, fast.value, {"exact": sorted(fast.witness), "brute": sorted(slow.witness)}


def check_agreement_all_subsets(g: Graph) -> tuple[Any, Any, Any]:
    dist = distances(g)
    bad = []
    for mask in range(1 << g.order):
        s = members(mask)
        if is_gp_definitional(g, s, dist) != is_gp_structural(g, s, dist):
            bad.append(s)
    return 0, len(bad), bad[:5] or None


SINGLE_CHECKS: dict[str, GraphCheck] = {
    "main": check_main,
    "main-strict": check_main_strict,
    "bound": check_bound,
    "diam2": check_diam2,
    "nminus1": check_nminus1,
    "oracle": check_oracle,
    "agreement": check_agreement_all_subsets,
}


def replay(cx: Counterexample | dict) -> tuple[Any, Any, Any]:
    """Re-run the single check a counterexample record came from."""
    if isinstance(cx, dict):
        cx = Counterexample(**{k: v for k, v in cx.items() if k != "record"})
    return SINGLE_CHECKS[cx.check](parse_graph6(cx.graph6))


# ----------------------------------------------------------------- reports


def verify_main_theorem(
    ns: Iterable[int], strict: bool = False, jobs: int = 1, sink: Optional[IO[str]] = None
) -> Report:
    """gp(G) = n - 2 exactly when G lies in one of F1..F8."""
    ns = _check_range(ns, 4, 8)
    run = _Runner("main-strict" if strict else "main", sink)
    for n in ns:
        run.add_batch(enumerate_connected(n).graphs, SINGLE_CHECKS[run.report.check], jobs, n)
    return run.finish()


def verify_bound(
    ns: Iterable[int], tight_up_to: int = 10, jobs: int = 1, sink: Optional[IO[str]] = None
) -> Report:
    """gp(G) <= n - diam(G) + 1, with equality on K_n and P_n."""
    ns = _check_range(ns, 2, 8)
    run = _Runner("bound", sink)
    for n in ns:
        run.add_batch(enumerate_connected(n).graphs, check_bound, jobs, n)
    tight = [complete_graph(n) for n in range(2, tight_up_to + 1)]
    tight += [path_graph(n) for n in range(2, tight_up_to + 1)]
    run.add_batch(tight, check_bound_tight, 1, "tightness")
    return run.finish()


def verify_diam2_formula(ns: Iterable[int], jobs: int = 1, sink: Optional[IO[str]] = None) -> Report:
    """gp(G) = max(omega, eta) on every graph of diameter 2."""
    ns = _check_range(ns, 3, 8)
    run = _Runner("diam2", sink)
    for n in ns:
        graphs = [g for g in enumerate_connected(n) if diameter(g) == 2]
        run.add_batch(graphs, check_diam2, jobs, n)
    return run.finish()


def verify_cycles(max_n: int, sink: Optional[IO[str]] = None) -> Report:
    """gp(C_n) = 3 for 5 <= n <= max_n; C_4 (gp 2) and C_3 (gp 3) recorded too."""
    if max_n < 5:
        raise GraphError("cycle check needs max_n >= 5")
    run = _Runner("cycles", sink)
    expected = {3: 3, 4: 2}
    graphs = [cycle_graph(n) for n in range(3, max_n + 1)]
    run.add_batch(
        graphs, lambda g: (expected.get(g.order, 3), gp_exact(g).value, None), 1, "cycles"
    )
    report = run.finish()
    report.detail["gp"] = {g.order: gp_exact(g).value for g in graphs}
    return report


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    """Connected G(n, p) sample with p drawn uniformly from [0.1, 0.9]."""
    p = rng.uniform(0.1, 0.9)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    while True:
        g = graph_from_edges(n, [e for e in pairs if rng.random() < p])
        if is_connected(g):
            return g


def verify_checker_agreement(
    ns: Iterable[int] = range(1, 7),
    samples: int = 100_000,
    sample_n: int = 10,
    seed: int = 0,
    labeled: bool = False,
    jobs: int = 1,
    sink: Optional[IO[str]] = None,
) -> Report:
    """Definitional and structural checkers agree on every subset of every
    enumerated graph, and on ``samples`` random (graph, subset) pairs.

    With ``labeled`` every labelled connected graph is used instead of one
    graph per isomorphism class.  Population counts (graph, subset) pairs.
    """
    ns = _check_range(ns, 1, 8)
    run = _Runner("agreement", sink)
    for n in ns:
        graphs = _labeled_connected(n) if labeled else enumerate_connected(n).graphs
        results = _map(_agreement_exhaustive, graphs, jobs)
        _add_subset_results(run, graphs, results, n)
    rng = random.Random(seed)
    per_graph = 100
    done = 0
    batch: list[tuple[Graph, list[list[int]]]] = []
    while done < samples:
        g = random_connected_graph(sample_n, rng)
        subsets = []
        for _ in range(min(per_graph, samples - done)):
            k = rng.randint(0, sample_n)
            subsets.append(sorted(rng.sample(range(sample_n), k)))
        done += len(subsets)
        batch.append((g, subsets))
    results = _map(_agreement_on_subsets, batch, jobs)
    _add_subset_results(run, [g for g, _ in batch], results, f"random n={sample_n}")
    return run.finish()


def _agreement_exhaustive(g: Graph) -> tuple[int, int, Any]:
    return _agreement_on_subsets((g, [members(m) for m in range(1 << g.order)]))


def _agreement_on_subsets(item: tuple[Graph, list[list[int]]]) -> tuple[int, int, Any]:
    g, subsets = item
    dist = distances(g)
    bad = [s for s in subsets if is_gp_definitional(g, s, dist) != is_gp_structural(g, s, dist)]
    return len(subsets), len(bad), bad[:5] or None


def _add_subset_results(run: _Runner, graphs, results, label) -> None:
    r = run.report
    failures = []
    for g, (count, bad, witness) in zip(graphs, results):
        r.population += count
        r.passed += count - bad
        r.failed += bad
        if bad:
            failures.append(Counterexample(r.check, g.order, to_graph6(g), 0, bad, witness))
    failures.sort(key=lambda cx: cx.graph6)
    r.counterexamples.extend(failures)
    if run.sink is not None:
        for cx in failures:
            run.sink.write(json.dumps({"record": "counterexample", **asdict(cx)}, sort_keys=True) + "\n")
        run.sink.write(json.dumps({"record": "progress", "check": r.check, "batch": label}) + "\n")
        run.sink.flush()


def _labeled_connected(n: int) -> list[Graph]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    out = []
    for bits in range(1 << len(pairs)):
        g = graph_from_edges(n, (pairs[k] for k in range(len(pairs)) if bits >> k & 1))
        if is_connected(g):
            out.append(g)
    return out


def verify_n_minus_1(ns: Iterable[int], jobs: int = 1, sink: Optional[IO[str]] = None) -> Report:
    """gp(G) = n - 1 exactly when the structural n - 1 recogniser accepts."""
    ns = _check_range(ns, 2, 8)
    run = _Runner("nminus1", sink)
    for n in ns:
        run.add_batch(enumerate_connected(n).graphs, check_nminus1, jobs, n)
    return run.finish()


def verify_oracle(
    ns: Iterable[int] = range(1, 8),
    samples: int = 10_000,
    random_orders: tuple[int, int] = (8, 12),
    seed: int = 0,
    jobs: int = 1,
    sink: Optional[IO[str]] = None,
) -> Report:
    """Branch and bound agrees with exhaustive search, enumerated and random."""
    ns = _check_range(ns, 1, 8)
    run = _Runner("oracle", sink)
    for n in ns:
        run.add_batch(enumerate_connected(n).graphs, check_oracle, jobs, n)
    rng = random.Random(seed)
    lo, hi = random_orders
    graphs = [random_connected_graph(rng.randint(lo, hi), rng) for _ in range(samples)]
    run.add_batch(graphs, check_oracle, jobs, f"random n={lo}..{hi}")
    return run.finish()


def check_family_instance(inst: families.FamilyInstance, strict: bool = False) -> tuple[Any, Any, Any]:
    """(expected, actual) summaries of one swept instance; equal iff sound."""
    g = families.generate(inst, strict=strict)
    n = g.order
    gp = gp_bruteforce(g).value
    rec = families.recognize(g, strict=strict)
    match = next((m for m in rec.matches if m.instance.label == inst.label), None)
    regenerated = (
        match is not None
        and canonical_key(families.regenerate(match, strict=strict)) == canonical_key(g)
        and families.regenerate(match, strict=strict) == g
    )
    expected = {"gp": n - 2, "diameter": families.expected_diameter(inst), "recognized": True}
    actual = {"gp": gp, "diameter": diameter(g), "recognized": regenerated}
    return expected, actual, {"instance": inst.to_text(), "families": rec.matched_labels}


def verify_families(max_n: int = 8, strict: bool = False, jobs: int = 1, sink: Optional[IO[str]] = None) -> Report:
    """Every swept instance has gp = n - 2, its family's diameter, and is
    recognised with a witness that regenerates the same graph."""
    run = _Runner("families-strict" if strict else "families", sink)
    instances = list(families.sweep(max_n, strict=strict))
    results = _map(check_family_instance if not strict else _check_family_strict, instances, jobs)
    r = run.report
    per_label: dict[str, int] = {}
    for inst, (expected, actual, witness) in zip(instances, results):
        r.population += 1
        per_label[inst.label] = per_label.get(inst.label, 0) + 1
        if expected == actual:
            r.passed += 1
        else:
            r.failed += 1
            g = families.generate(inst, strict=strict)
            r.counterexamples.append(
                Counterexample(r.check, g.order, to_graph6(g), expected, actual, witness)
            )
    r.counterexamples.sort(key=lambda cx: cx.graph6)
    r.detail["instances"] = dict(sorted(per_label.items()))
    return run.finish()


def _check_family_strict(inst: families.FamilyInstance) -> tuple[Any, Any, Any]:
    return check_family_instance(inst, strict=True)
