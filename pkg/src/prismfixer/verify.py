"""Corpus-scale verification: certificates, fixer verdicts and sweeps.

`check_graph` packages everything the adversary construction promises for
one graph into a machine-checkable certificate.  `is_universal_fixer`
decides fixer status by brute force over all permutations.  The
equivalence probe cross-checks, permutation by permutation, that the prism
keeps its domination number exactly when some separable record is
effective.  `conjecture_sweep` runs both over a corpus stream and
summarizes whether the universal fixers found are exactly the edgeless
graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .domination import domination_number, find_dominating_set_at_most
from .graphs import (
    Graph,
    GraphParseError,
    mask_to_list,
    parse_graph6,
    to_graph6,
    triangle_free_vertices,
)
from .prism import (
    CounterexampleError,
    FailureCase,
    adversary_permutation,
    classify_failure,
    prism_closed_masks,
    prism_gamma,
)
from .separable import SeparableSet, enumerate_separable, exists_effective, is_effective

DEFAULT_FIXER_GUARD = 8
DEFAULT_CHECK_GUARD = 9


class GuardExceededError(ValueError):
    """Input graph is above the size guard for an exhaustive operation."""


@dataclass(frozen=True)
class AdversaryCertificate:
    """Machine-checkable record of one graph's adversary verification.

    `records` pairs every separable record with its verified failure case
    (None only if an anomaly occurred, which also clears a flag).  All
    three flags true means the graph passed.
    """

    graph6: str
    x: int
    pi: tuple[int, ...]
    gamma: int
    prism_gamma: int
    records: tuple[tuple[SeparableSet, FailureCase | None], ...]
    bounds_ok: bool
    no_effective_ok: bool
    gamma_strict_increase_ok: bool
    anomalies: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.bounds_ok and self.no_effective_ok and self.gamma_strict_increase_ok


@dataclass(frozen=True)
class FixerVerdict:
    """Outcome of the exhaustive universal-fixer decision for one graph."""

    graph6: str
    gamma: int
    is_universal_fixer: bool
    witness_pi: tuple[int, ...] | None
    witness_prism_gamma: int | None
    permutations_tested: int


def check_graph(
    g: Graph, x: int | None = None, max_n_guard: int = DEFAULT_CHECK_GUARD
) -> AdversaryCertificate | None:
    """Full adversary verification; None when no vertex qualifies.

    Picks the smallest triangle-free vertex unless `x` is given.  Anomalies
    are encoded in the flags and the anomaly list, never raised.
    """
    if g.n > max_n_guard:
        raise GuardExceededError(
            f"adversary verification guarded to n <= {max_n_guard}, got {g.n}"
        )
    eligible = triangle_free_vertices(g)
    if x is None:
        if eligible == 0:
            return None
        x = (eligible & -eligible).bit_length() - 1
    elif not eligible & (1 << x):
        raise ValueError(f"vertex {x} is isolated or lies on a triangle")

    pi = adversary_permutation(g, x)
    gamma = domination_number(g).gamma
    pgamma = prism_gamma(g, pi)
    anomalies: list[str] = []
    records: list[tuple[SeparableSet, FailureCase | None]] = []
    no_effective = exists_effective(g, pi) is None
    for sep in enumerate_separable(g):
        if is_effective(g, sep, pi) is not None:
            anomalies.append(f"record {sep} is effective under the adversary")
            records.append((sep, None))
            no_effective = False
            continue
        try:
            records.append((sep, classify_failure(g, sep, pi, x)))
        except CounterexampleError as exc:
            anomalies.append(str(exc))
            records.append((sep, None))
            no_effective = False
    return AdversaryCertificate(
        graph6=to_graph6(g),
        x=x,
        pi=pi,
        gamma=gamma,
        prism_gamma=pgamma,
        records=tuple(records),
        bounds_ok=gamma <= pgamma <= 2 * gamma,
        no_effective_ok=no_effective,
        gamma_strict_increase_ok=pgamma >= gamma + 1,
        anomalies=tuple(anomalies),
    )


def is_universal_fixer(g: Graph, max_n_guard: int = DEFAULT_FIXER_GUARD) -> FixerVerdict:
    """Exhaustive fixer decision over all n! permutations, lexicographic.

    Early exit on the first permutation that strictly raises the prism's
    domination number; the witness is then re-verified with a full exact
    solve rather than trusted from the search.
    """
    if g.n > max_n_guard:
        raise GuardExceededError(
            f"universal-fixer decision guarded to n <= {max_n_guard}, got {g.n}"
        )
    gamma = domination_number(g).gamma
    g6 = to_graph6(g)
    tested = 0
    for pi in itertools.permutations(range(g.n)):
        tested += 1
        masks, full = prism_closed_masks(g, pi)
        if find_dominating_set_at_most(masks, full, gamma) is None:
            pgamma = prism_gamma(g, pi)
            if pgamma <= gamma:
                raise CounterexampleError(
                    f"sweep said gamma rises under {pi} but exact solve disagrees"
                )
            return FixerVerdict(g6, gamma, False, tuple(pi), pgamma, tested)
    return FixerVerdict(g6, gamma, True, None, None, tested)


def effectiveness_equivalence_probe(
    g: Graph, max_n_guard: int = DEFAULT_FIXER_GUARD
) -> list[dict]:
    """Permutations where prism-gamma equality and effectiveness disagree.

    For every permutation, gamma staying fixed should coincide with some
    separable record being effective.  Edgeless graphs are rejected (their
    full vertex set makes the criterion vacuous); graphs with isolated
    vertices are deliberately in scope.  Expected empty.
    """
    if g.n > max_n_guard:
        raise GuardExceededError(
            f"equivalence probe guarded to n <= {max_n_guard}, got {g.n}"
        )
    if g.edge_count() == 0:
        raise ValueError("probe requires a graph with at least one edge")
    gamma = domination_number(g).gamma
    discrepancies = []
    for pi in itertools.permutations(range(g.n)):
        masks, full = prism_closed_masks(g, pi)
        gamma_fixed = find_dominating_set_at_most(masks, full, gamma) is not None
        effective = exists_effective(g, pi) is not None
        if gamma_fixed != effective:
            discrepancies.append(
                {
                    "graph6": to_graph6(g),
                    "pi": tuple(pi),
                    "prism_gamma": prism_gamma(g, pi),
                    "gamma": gamma,
                    "has_effective_record": effective,
                }
            )
    return discrepancies


# ---------------------------------------------------------------------------
# Corpus sweep
# ---------------------------------------------------------------------------

def analyze_graph6_line(line: str, fixer_guard: int = DEFAULT_FIXER_GUARD) -> dict:
    """Per-graph sweep record: fixer verdict plus adversary flags.

    Returns a JSON-ready dict; parse failures are reported inside the
    record instead of raised so one bad line cannot abort a sweep.
    """
    record: dict = {"input": line}
    try:
        g = parse_graph6(line)
    except GraphParseError as exc:
        record["error"] = str(exc)
        return record
    try:
        verdict = is_universal_fixer(g, fixer_guard)
    except GuardExceededError as exc:
        record["error"] = str(exc)
        return record
    record.update(
        {
            "graph6": verdict.graph6,
            "n": g.n,
            "edges": g.edge_count(),
            "gamma": verdict.gamma,
            "fixer": fixer_verdict_payload(verdict),
        }
    )
    cert = check_graph(g, max_n_guard=max(DEFAULT_CHECK_GUARD, fixer_guard))
    record["adversary"] = certificate_payload(cert) if cert else None
    return record


def conjecture_sweep(
    lines: Iterable[str], fixer_guard: int = DEFAULT_FIXER_GUARD
) -> tuple[list[dict], dict]:
    """Sweep a graph6 stream; per-graph records plus a closing summary.

    The summary's headline fact: the universal fixers found are exactly
    the edgeless graphs in the corpus.
    """
    records = [
        analyze_graph6_line(line, fixer_guard)
        for _, line in _numbered_nonempty(lines)
    ]
    records.sort(key=lambda r: r["input"])
    fixers = sorted(
        r["graph6"] for r in records if "fixer" in r and r["fixer"]["is_universal_fixer"]
    )
    edgeless = sorted(r["graph6"] for r in records if r.get("edges") == 0)
    applicable = [r for r in records if r.get("adversary")]
    summary = {
        "graphs": sum(1 for r in records if "error" not in r),
        "parse_failures": sum(1 for r in records if "error" in r),
        "fixers": fixers,
        "fixer_count": len(fixers),
        "edgeless_count": len(edgeless),
        "fixers_equal_edgeless": fixers == edgeless,
        "adversary_applicable": len(applicable),
        "adversary_all_passed": all(r["adversary"]["passed"] for r in applicable),
    }
    return records, summary


def _numbered_nonempty(lines: Iterable[str]):
    for i, line in enumerate(lines, start=1):
        line = line.strip()
        if line:
            yield i, line


# ---------------------------------------------------------------------------
# JSON payload builders (schema documented in the cli module)
# ---------------------------------------------------------------------------

def separable_payload(sep: SeparableSet) -> dict:
    return {
        "set": mask_to_list(sep.dom_set),
        "part1": mask_to_list(sep.part1),
        "part2": mask_to_list(sep.part2),
    }


def certificate_payload(cert: AdversaryCertificate) -> dict:
    return {
        "graph6": cert.graph6,
        "x": cert.x,
        "pi": list(cert.pi),
        "gamma": cert.gamma,
        "prism_gamma": cert.prism_gamma,
        "records": [
            {
                **separable_payload(sep),
                "case": case.tag if case else None,
                "detail": dict(sorted(case.detail.items())) if case else None,
            }
            for sep, case in cert.records
        ],
        "flags": {
            "bounds_ok": cert.bounds_ok,
            "no_effective_ok": cert.no_effective_ok,
            "gamma_strict_increase_ok": cert.gamma_strict_increase_ok,
        },
        "anomalies": list(cert.anomalies),
        "passed": cert.passed,
    }


def fixer_verdict_payload(verdict: FixerVerdict) -> dict:
    return {
        "graph6": verdict.graph6,
        "gamma": verdict.gamma,
        "is_universal_fixer": verdict.is_universal_fixer,
        "witness_pi": list(verdict.witness_pi) if verdict.witness_pi is not None else None,
        "witness_prism_gamma": verdict.witness_prism_gamma,
        "permutations_tested": verdict.permutations_tested,
    }
