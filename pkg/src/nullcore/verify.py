"""Randomized verification battery for the structural guarantees.

Each suite draws reproducible random graphs, evaluates every guarantee
that applies, and tallies exact pass/fail counts, keeping failing
graphs for replay.  Trials may run on a thread pool sized by the
NULLCORE_THREADS environment variable; per-trial seeds are fixed up
front and results merge in trial order, so equal inputs and seeds give
identical summaries at any thread count.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .analysis import (
    classify_vertices,
    no_single_core_neighbour_check,
    nullity,
    slim_reduce,
    unicyclic_analysis,
    verify_block_theorems,
)
from .errors import TheoremViolationError
from .graphs import (
    Graph,
    gen_cycle,
    gen_random_bipartite,
    gen_random_graph,
    gen_random_tree,
    gen_random_unicyclic,
    induced_subgraph,
    subdivision,
)
from .minimal import (
    bipartite_mc_slim_equivalence,
    bipartite_nullity1_structure,
    bipartite_parity_check,
    is_minimal_configuration,
)
from .perturb import apply_and_report, candidate_edges, verify_cv_ncv_theorem
from .rng import SplitMix64
from .trees import (
    cfvr_perfect_matching,
    end_vertex_core_vertices,
    incidence_rank_check,
    inverse_subdivision,
    is_mc_tree,
    subdivision_charpoly_identity,
    tree_nullity_identity,
)

SUITES = ("trees", "bipartite", "subdivisions", "perturbations", "unicyclic")

_COUNTEREXAMPLE_CAP = 100


@dataclass(frozen=True)
class VerifySuiteConfig:
    suite: str
    max_n: int
    trials: int
    seed: int

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITES:
            raise ValueError("unknown suite %r" % self.suite)
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")


@dataclass(frozen=True)
class SuiteResult:
    config: VerifySuiteConfig
    tallies: dict  # check name -> [passes, fails]
    counterexamples: tuple  # (check name, Graph), capped

    @property
    def ok(self) -> bool:
        return all(fails == 0 for _, fails in self.tallies.values())

    def summary_lines(self) -> list:
        lines = []
        for name in sorted(self.tallies):
            passes, fails = self.tallies[name]
            lines.append("%s: %d pass, %d fail" % (name, passes, fails))
        return lines


def _size(rng: SplitMix64, lo: int, max_n: int) -> int:
    return lo + rng.below(max_n - lo + 1)


def _trial_trees(seed: int, max_n: int) -> list:
    if max_n < 2:
        return []
    rng = SplitMix64(seed)
    t = gen_random_tree(_size(rng, 2, max_n), rng.next_u64())
    part = classify_vertices(t)
    out = [
        ("nullity_three_way", tree_nullity_identity(t).all_equal, t),
        ("core_independent", part.independent_cv, t),
        (
            "mc_routes_agree",
            is_mc_tree(t).by_definition == (inverse_subdivision(t) is not None),
            t,
        ),
    ]
    # Pendant-pair deletions keep the nullity and every survivor's class.
    pair_ok = True
    for u in range(t.n):
        if t.degree(u) != 1:
            continue
        w = t.adjacency[u][0]
        keep = [v for v in range(t.n) if v not in (u, w)]
        sub, prov = induced_subgraph(t, keep)
        sub_part = classify_vertices(sub)
        if sub_part.nullity != part.nullity or any(
            sub_part.class_of[new] is not part.class_of[old]
            for new, old in prov.vertex_map().items()
        ):
            pair_ok = False
            break
    out.append(("pendant_pair_classes", pair_ok, t))
    if part.nullity > 0:
        out.append(
            ("two_core_end_vertices",
             len(end_vertex_core_vertices(t).vertices) >= 2, t)
        )
        out.append(
            ("no_single_core_neighbour",
             no_single_core_neighbour_check(t, part).holds, t)
        )
        blocks_ok = all(c.holds for c in verify_block_theorems(t))
        out.append(("block_identities", blocks_ok, t))
        out.append(
            ("remote_perfect_matching",
             cfvr_perfect_matching(t) is not None, t)
        )
        try:
            slim_reduce(t)
            out.append(("slim_reduction_faithful", True, t))
        except TheoremViolationError:
            out.append(("slim_reduction_faithful", False, t))
    return out


def _trial_bipartite(seed: int, max_n: int) -> list:
    if max_n < 2:
        return []
    rng = SplitMix64(seed)
    g = gen_random_bipartite(_size(rng, 2, max_n), rng.next_u64())
    out = [("nullity_parity", bipartite_parity_check(g), g)]
    if nullity(g) == 1:
        out.append(
            ("nullity1_structure",
             bipartite_nullity1_structure(g).all_hold(), g)
        )
    eq = bipartite_mc_slim_equivalence(g)
    if eq.hypothesis_met:
        out.append(("mc_slim_equivalence", eq.equal, g))
    return out


def _trial_subdivisions(seed: int, max_n: int) -> list:
    rng = SplitMix64(seed)
    t = gen_random_tree(_size(rng, 1, max_n), rng.next_u64())
    s, _ = subdivision(t)
    part = classify_vertices(s)
    inserted = tuple(range(t.n, t.n + t.m))
    mc = is_minimal_configuration(s)
    mc_tree = is_mc_tree(s)
    out = [
        ("unit_nullity", part.nullity == 1, s),
        ("core_set_is_original", part.cv_set == tuple(range(t.n)), s),
        (
            "periphery_is_inserted",
            mc.is_mc and mc.periphery == inserted, s,
        ),
        (
            "matching_count_is_ncv",
            mc_tree.t_matches_ncv and mc_tree.q_full_column_rank is True, s,
        ),
        ("incidence_rank", incidence_rank_check(t), t),
    ]
    inv = inverse_subdivision(s)
    out.append(
        ("inverse_roundtrip", inv is not None and inv[0] == t, s)
    )
    if s.n <= 16:
        out.append(
            ("charpoly_factorization", subdivision_charpoly_identity(t), t)
        )
    return out


def _trial_unicyclic(seed: int, max_n: int) -> list:
    if max_n < 3:
        return []
    rng = SplitMix64(seed)
    g = gen_random_unicyclic(_size(rng, 3, max_n), rng.next_u64())
    out = [
        (report_check.name, report_check.holds, g)
        for report_check in unicyclic_analysis(g).checks
    ]
    r = _size(rng, 3, max_n)
    cycle = gen_cycle(r)
    expected = 2 if r % 4 == 0 else 0
    out.append(("cycle_nullity_rule", nullity(cycle) == expected, cycle))
    return out


def _independent_cv_graph(rng: SplitMix64, max_n: int):
    """A random graph with independent core vertices, or a tree fallback
    so the trial always has a subject."""
    n = _size(rng, 2, max_n)
    for _ in range(20):
        g = gen_random_graph(n, 1, 2, rng.next_u64())
        if classify_vertices(g).independent_cv:
            return g
    return gen_random_tree(n, rng.next_u64())


def _trial_perturbations(seed: int, max_n: int, index: int) -> list:
    if max_n < 2:
        return []
    rng = SplitMix64(seed)
    if index % 2 == 0:
        g = gen_random_tree(_size(rng, 2, max_n), rng.next_u64())
    else:
        g = _independent_cv_graph(rng, min(max_n, 10))
    part = classify_vertices(g)
    out = []
    for cand in candidate_edges(g, part):
        if cand.type_pair in ("NCV-NCV", "NCV-CFVR", "CFVR-CFVR"):
            try:
                apply_and_report(g, cand, part)
                out.append(("cfv_addition_theorems", True, g))
            except TheoremViolationError:
                out.append(("cfv_addition_theorems", False, g))
        elif cand.type_pair == "CV-NCV" and part.independent_cv:
            try:
                verify_cv_ncv_theorem(g, cand, part)
                out.append(("cv_ncv_conditional", True, g))
            except TheoremViolationError:
                out.append(("cv_ncv_conditional", False, g))
    return out


def _run_trial(suite: str, index: int, seed: int, max_n: int) -> list:
    if suite == "trees":
        return _trial_trees(seed, max_n)
    if suite == "bipartite":
        return _trial_bipartite(seed, max_n)
    if suite == "subdivisions":
        return _trial_subdivisions(seed, max_n)
    if suite == "unicyclic":
        return _trial_unicyclic(seed, max_n)
    return _trial_perturbations(seed, max_n, index)


def thread_count() -> int:
    raw = os.environ.get("NULLCORE_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suite(config: VerifySuiteConfig) -> SuiteResult:
    suites = SUITES if config.suite == "all" else (config.suite,)
    master = SplitMix64(config.seed)
    tasks = [
        (suite, i, master.next_u64())
        for suite in suites
        for i in range(config.trials)
    ]

    def run_one(task):
        suite, index, seed = task
        return suite, _run_trial(suite, index, seed, config.max_n)

    workers = thread_count()
    if workers == 1:
        produced = map(run_one, tasks)
    else:
        pool = ThreadPoolExecutor(max_workers=workers)
        produced = pool.map(run_one, tasks)

    tallies = {}
    counterexamples = []
    for suite, findings in produced:
        for check, ok, graph in findings:
            key = suite + "/" + check
            cell = tallies.setdefault(key, [0, 0])
            cell[0 if ok else 1] += 1
            if not ok and len(counterexamples) < _COUNTEREXAMPLE_CAP:
                counterexamples.append((key, graph))
    if workers != 1:
        pool.shutdown()
    return SuiteResult(config, tallies, tuple(counterexamples))
