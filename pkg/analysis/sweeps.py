"""
Exhaustive property sweeps
Named checks applied to every instance of a small-digraph family, with
deterministic JSON/DataFrame reports
"""

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
import pandas as pd

from analysis.circular_ones import (
    brute_force_row_cop_ordering,
    enumerate_row_cop_orderings,
    find_row_cop_ordering,
    has_circular_ones,
)
from analysis.enumeration import (
    enumerate_labeled_digraphs,
    enumerate_oriented_digraphs,
    enumerate_tournaments,
    random_representation,
)
from analysis.oracles import grid_representation_oracle, round_enumeration_oracle
from analysis.oriented_cacd import (
    find_hamiltonian_cycle,
    hamiltonian_path,
    is_hamiltonian_path,
    is_round_enumeration,
    outdegree_zero_witness,
    recognize_oriented_proper_cacd,
    round_orientation_from_representation,
)
from analysis.proper_cacd import check_conditions, recognize_proper_cacd
from analysis.recognition import is_cacd, recognize_cacd, recognize_tournament_cacd
from config.settings import (
    CANONICAL_FORM_MAX_N,
    COMPLEMENT_CYCLE_SWEEP_SIZES,
    LABELED_SWEEP_MAX_N,
    ORIENTED_SWEEP_MAX_N,
    RANDOM_DRAW_FACTOR,
    RANDOM_PROPER_COUNT,
    RANDOM_PROPER_MAX_N,
    RANDOM_ROUNDTRIP_COUNT,
    RANDOM_ROUNDTRIP_MAX_N,
    RANDOM_SEED,
    REPORT_SCHEMA,
    SWEEP_CHUNK_SIZE,
    TOURNAMENT_MAX_N,
)
from core.binary_matrix import augmented_adjacency
from core.digraph import (
    canonical_form,
    complement_cycle,
    is_oriented,
    predicates,
    underlying_graph,
    undirected_edges,
    weak_components,
)
from core.errors import CacdError, PreconditionError, SizeBoundError, UnknownCheckError
from core.representation import realize, verify
from utils.helpers import resolve_worker_count

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Outcome:
    """Result of one check on one instance: skipped, passed, or failed with a reason."""

    status: str
    detail: Optional[str] = None
    tag: Optional[str] = None


SKIPPED = Outcome("skipped")
PASSED = Outcome("passed")


def failed(detail):
    return Outcome("failed", detail=detail)


@dataclass(frozen=True)
class SweepCheck:
    name: str
    family: str
    max_n: int
    description: str
    test: Callable


@dataclass
class SweepReport:
    check: str
    n: int
    family: str
    instances: int
    counterexamples: list = field(default_factory=list)
    statistics: dict = field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def passed(self):
        return not self.counterexamples

    def to_dict(self):
        return {
            "schema": REPORT_SCHEMA,
            "check": self.check,
            "n": self.n,
            "family": self.family,
            "instances": self.instances,
            "counterexamples": self.counterexamples,
            "statistics": self.statistics,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_frame(self):
        rows = [("instances", self.instances), ("counterexamples", len(self.counterexamples))]
        rows += sorted(self.statistics.items())
        rows.append(("elapsed_ms", self.elapsed_ms))
        return pd.DataFrame(rows, columns=["statistic", "value"])


# ----------------------------------------------------------------------
# Checks
# ----------------------------------------------------------------------

def _check_outdegree_zero(g):
    if find_hamiltonian_cycle(g) is not None:
        return SKIPPED
    try:
        v = outdegree_zero_witness(g)
    except CacdError as e:
        return failed(str(e))
    return PASSED if g.out_degree(v) == 0 else failed(f"vertex {v} has outdegree {g.out_degree(v)}")


def _check_hamiltonian_path(g):
    if not predicates(g).is_unilateral:
        return SKIPPED
    try:
        path = hamiltonian_path(g)
    except CacdError as e:
        return failed(str(e))
    return PASSED if is_hamiltonian_path(g, path) else failed(f"invalid path {path}")


def _check_proper_subset(g):
    if not recognize_proper_cacd(g).accepted:
        return Outcome("passed", tag="not-proper")
    if not recognize_cacd(g).accepted:
        return failed("proper CACD rejected by the CACD recognizer")
    return Outcome("passed", tag="proper")


def _check_grid_oracle(g):
    proper = recognize_proper_cacd(g).accepted
    grid = grid_representation_oracle(g)
    if proper != grid:
        return failed(f"recognizer says {proper}, grid search says {grid}")
    return Outcome("passed", tag="proper" if proper else "not-proper")


def _check_oriented_proper(g):
    quadruple = recognize_oriented_proper_cacd(g, cross_check=False).accepted
    proper = recognize_proper_cacd(g).accepted
    if quadruple != proper:
        return failed(f"quadruple search says {quadruple}, proper recognizer says {proper}")
    return Outcome("passed", tag="oriented-proper" if proper else "not-proper")


def _check_cacd_agreement(g):
    verdict = recognize_cacd(g)
    if verdict.accepted != is_cacd(g):
        return failed(f"ordering search says {verdict.accepted}, circular-ones backend disagrees")
    if verdict.accepted and not verify(verdict.certificate.representation, g):
        return failed("certificate does not verify")
    return Outcome("passed", tag="cacd" if verdict.accepted else "not-cacd")


def _check_underlying_round(g):
    verdict = recognize_proper_cacd(g)
    if not verdict.accepted:
        return SKIPPED
    shadow = underlying_graph(g)
    for component in weak_components(shadow):
        if not round_enumeration_oracle(shadow.induced(component)):
            return failed(f"component {component} of the underlying graph has no round enumeration")
    order, oriented = round_orientation_from_representation(verdict.certificate.representation)
    holds, witness = is_round_enumeration(oriented, order)
    if not holds:
        return failed(f"point-order orientation is not round: {witness}")
    return PASSED


def _check_tucker_backend(g):
    a = augmented_adjacency(g)
    polynomial = has_circular_ones(a.row_masks(), a.cols)
    search = find_row_cop_ordering(a) is not None
    brute = brute_force_row_cop_ordering(a) is not None
    if not polynomial == search == brute:
        return failed(f"polynomial={polynomial}, search={search}, brute force={brute}")
    return PASSED


def _check_tournament_catalog(g):
    try:
        verdict = recognize_tournament_cacd(g)
    except CacdError as e:
        return failed(str(e))
    return Outcome("passed", tag="cacd" if verdict.accepted else "forbidden")


def _check_condition_orderings(g):
    if not recognize_proper_cacd(g).accepted:
        return SKIPPED
    a = augmented_adjacency(g)
    holding = total = 0
    for order in enumerate_row_cop_orderings(a):
        total += 1
        b0 = a.permute_columns(order)
        rows = find_row_cop_ordering(b0.transpose())
        if rows is not None and check_conditions(b0.permute_rows(rows)).ok:
            holding += 1
    return Outcome("passed", tag="all-orderings" if holding == total else "some-orderings")


CHECKS = {
    check.name: check
    for check in (
        SweepCheck("outdegree-zero-lemma", "oriented-cacd", 5,
                   "oriented CACDs without a Hamiltonian cycle have a sink", _check_outdegree_zero),
        SweepCheck("hamiltonian-path", "oriented-cacd", ORIENTED_SWEEP_MAX_N,
                   "unilateral oriented CACDs have a Hamiltonian path", _check_hamiltonian_path),
        SweepCheck("proper-subset-cacd", "labeled", LABELED_SWEEP_MAX_N,
                   "every proper CACD is a CACD", _check_proper_subset),
        SweepCheck("proper-grid-oracle", "labeled", LABELED_SWEEP_MAX_N,
                   "proper recognizer agrees with the grid search", _check_grid_oracle),
        SweepCheck("oriented-proper-characterization", "oriented", 5,
                   "quadruple condition agrees with the proper recognizer", _check_oriented_proper),
        SweepCheck("cacd-exhaustive-agreement", "labeled", LABELED_SWEEP_MAX_N,
                   "ordering search agrees with the circular-ones backend", _check_cacd_agreement),
        SweepCheck("underlying-round", "oriented", 5,
                   "underlying graphs of oriented proper CACDs are round", _check_underlying_round),
        SweepCheck("tucker-backend-agreement", "labeled", LABELED_SWEEP_MAX_N,
                   "polynomial, search and brute-force COP tests agree", _check_tucker_backend),
        SweepCheck("tournament-catalog", "tournament", TOURNAMENT_MAX_N,
                   "catalog recognizer agrees with the CACD recognizer", _check_tournament_catalog),
        SweepCheck("condition-ordering-independence", "labeled", LABELED_SWEEP_MAX_N,
                   "whether conditions 2-3 hold on every COP ordering (statistics only)",
                   _check_condition_orderings),
    )
}


def _family(name, n):
    if name == "labeled":
        return list(enumerate_labeled_digraphs(n))
    if name == "oriented":
        return enumerate_oriented_digraphs(n)
    if name == "oriented-cacd":
        return enumerate_oriented_digraphs(n, keep=is_cacd)
    if name == "tournament":
        return enumerate_tournaments(n)
    raise ValueError(f"unknown family {name!r}")


def _run_check(name, g):
    return CHECKS[name].test(g)


def _counterexample(g, detail):
    entry = {"digraph": g.to_json_dict(), "detail": detail}
    if g.n <= CANONICAL_FORM_MAX_N:
        entry["canonical"] = canonical_form(g).hex()
    return entry


def sweep_digraphs(n, check, workers=1):
    """
    Apply a named check to every instance of its family on n vertices.

    Parameters:
    n (int): Vertex count, at most the check's bound
    check (str): Key of CHECKS
    workers (int): Worker processes; None reads CACD_WORKERS

    Returns:
    SweepReport: Counterexamples (sorted by canonical form) and outcome counts
    """
    if check not in CHECKS:
        raise UnknownCheckError(check)
    entry = CHECKS[check]
    if n > entry.max_n:
        raise SizeBoundError(f"sweep {check}", n, entry.max_n)

    started = time.perf_counter()
    instances = _family(entry.family, n)
    workers = resolve_worker_count(workers)
    logger.info("sweep %s: %d %s instances on %d vertices, %d worker(s)",
                check, len(instances), entry.family, n, workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_check, [check] * len(instances), instances,
                                     chunksize=max(1, len(instances) // (4 * workers))))
    else:
        outcomes = [entry.test(g) for g in instances]

    statistics = Counter()
    counterexamples = []
    for g, outcome in zip(instances, outcomes):
        statistics[outcome.status] += 1
        if outcome.tag:
            statistics[outcome.tag] += 1
        if outcome.status == "failed":
            counterexamples.append(_counterexample(g, outcome.detail))
    counterexamples.sort(key=lambda entry: entry.get("canonical", ""))
    if counterexamples:
        logger.error("sweep %s on n=%d: %d counterexample(s)", check, n, len(counterexamples))

    return SweepReport(
        check=check,
        n=n,
        family=entry.family,
        instances=len(instances),
        counterexamples=counterexamples,
        statistics=dict(sorted(statistics.items())),
        elapsed_ms=int((time.perf_counter() - started) * 1000),
    )


def ordering_independence_survey(n, workers=1):
    return sweep_digraphs(n, "condition-ordering-independence", workers)


# ----------------------------------------------------------------------
# Orientations of complement cycles
# ----------------------------------------------------------------------

def _orientation_chunk(k, start, stop):
    """Count orientations in [start, stop) of the complement k-cycle that are CACDs."""
    pairs = undirected_edges(complement_cycle(k))
    accepted = []
    count = 0
    for mask in range(start, stop):
        rows = [1 << v for v in range(k)]
        for bit, (i, j) in enumerate(pairs):
            if (mask >> bit) & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
        if has_circular_ones(rows, k):
            count += 1
            if len(accepted) < 16:
                accepted.append(mask)
    return count, accepted


def complement_cycle_orientation_sweep(k, workers=None):
    """
    Test every orientation of the complement k-cycle for CACD membership.

    Orientations are indexed like core.digraph.orient. For k >= 8 every
    acceptance is a counterexample; smaller k are controls.
    """
    if k not in COMPLEMENT_CYCLE_SWEEP_SIZES:
        raise PreconditionError("complement_cycle_orientation_sweep",
                                f"k must be one of {COMPLEMENT_CYCLE_SWEEP_SIZES}, got {k}")
    started = time.perf_counter()
    total = 1 << len(undirected_edges(complement_cycle(k)))
    bounds = [(s, min(s + SWEEP_CHUNK_SIZE, total)) for s in range(0, total, SWEEP_CHUNK_SIZE)]
    workers = resolve_worker_count(workers)
    logger.info("orientations of complement %d-cycle: %d instances, %d worker(s)", k, total, workers)

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_orientation_chunk, [k] * len(bounds),
                                    [s for s, _ in bounds], [e for _, e in bounds]))
    else:
        results = [_orientation_chunk(k, s, e) for s, e in bounds]

    acceptances = sum(count for count, _ in results)
    samples = sorted(mask for _, masks in results for mask in masks)
    counterexamples = []
    if k >= 8:
        counterexamples = [{"orientation": mask} for mask in samples]
        if acceptances:
            logger.error("%d orientations of the complement %d-cycle are CACDs", acceptances, k)

    return SweepReport(
        check=f"complement-cycle-{k}-orientations",
        n=k,
        family="orientations",
        instances=total,
        counterexamples=counterexamples,
        statistics={"acceptances": acceptances, "sample_orientations": samples[:16]},
        elapsed_ms=int((time.perf_counter() - started) * 1000),
    )


def cbar8_orientation_sweep(workers=None):
    return complement_cycle_orientation_sweep(8, workers)


# ----------------------------------------------------------------------
# Seeded random representations
# ----------------------------------------------------------------------

def _roundtrip_failure(rep):
    g = realize(rep)
    if not verify(rep, g):
        return "representation does not realize its own digraph"
    verdict = recognize_cacd(g)
    if not verdict.accepted:
        return "realized digraph rejected by the CACD recognizer"
    if not verify(verdict.certificate.representation, g):
        return "certificate does not verify"
    return None


def _proper_round_failure(rep):
    g = realize(rep)
    if not is_oriented(g):
        return "skipped"
    if not recognize_proper_cacd(g).accepted:
        return "realized digraph rejected by the proper recognizer"
    shadow = underlying_graph(g)
    for component in weak_components(shadow):
        if not round_enumeration_oracle(shadow.induced(component)):
            return f"component {component} of the underlying graph has no round enumeration"
    order, oriented = round_orientation_from_representation(rep)
    holds, witness = is_round_enumeration(oriented, order)
    if not holds:
        return f"point-order orientation is not round: {witness}"
    return None


RANDOM_CHECKS = {
    "random-roundtrip": (False, RANDOM_ROUNDTRIP_COUNT, RANDOM_ROUNDTRIP_MAX_N, _roundtrip_failure),
    "random-proper-round": (True, RANDOM_PROPER_COUNT, RANDOM_PROPER_MAX_N, _proper_round_failure),
}


def random_representation_sweep(check, count=None, max_n=None, seed=RANDOM_SEED):
    """
    Apply a named check to seeded random representations.

    Parameters:
    check (str): "random-roundtrip" or "random-proper-round"
    count (int): Representations to check, default from settings; skipped
        draws are replaced by fresh ones up to RANDOM_DRAW_FACTOR * count draws
    max_n (int): Largest vertex count drawn
    seed (int): numpy seed; equal seeds give equal reports

    Returns:
    SweepReport: Failures carry the offending representation
    """
    if check not in RANDOM_CHECKS:
        raise UnknownCheckError(check)
    proper, default_count, bound, inspect_rep = RANDOM_CHECKS[check]
    count = default_count if count is None else count
    max_n = bound if max_n is None else max_n
    if max_n > bound:
        raise SizeBoundError(f"sweep {check}", max_n, bound)

    started = time.perf_counter()
    rng = np.random.default_rng(seed)
    statistics = Counter()
    counterexamples = []
    checked = drawn = 0
    limit = RANDOM_DRAW_FACTOR * count
    while checked < count and drawn < limit:
        index = drawn
        drawn += 1
        rep = random_representation(rng, int(rng.integers(1, max_n + 1)), proper=proper)
        try:
            problem = inspect_rep(rep)
        except CacdError as e:
            problem = str(e)
        if problem == "skipped":
            statistics["skipped"] += 1
            continue
        checked += 1
        if problem is None:
            statistics["passed"] += 1
        else:
            statistics["failed"] += 1
            counterexamples.append({"index": index, "representation": rep.to_json_dict(), "detail": problem})
    if checked < count:
        logger.warning("sweep %s: only %d of %d samples checked after %d draws", check, checked, count, drawn)
    if counterexamples:
        logger.error("sweep %s: %d counterexample(s)", check, len(counterexamples))

    statistics["seed"] = seed
    statistics["drawn"] = drawn
    return SweepReport(
        check=check,
        n=max_n,
        family="random-proper" if proper else "random",
        instances=checked,
        counterexamples=counterexamples,
        statistics=dict(sorted(statistics.items())),
        elapsed_ms=int((time.perf_counter() - started) * 1000),
    )
