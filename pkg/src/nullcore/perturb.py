"""Edge perturbations and what they do to the adjacency nullspace.

Candidate edges are tagged by the classes of their endpoints (core, core
neighbour, remote).  Applying a candidate produces a before/after report
with exact preservation flags; additions inside the core-forbidden part
carry hard structural guarantees that are re-checked on every call.
"""

from dataclasses import dataclass
from typing import Optional

from .analysis import (
    VertexPartition,
    classify_vertices,
    require_independent_cv,
)
from .errors import PreconditionError, TheoremViolationError
from .graphs import Graph, add_edge, delete_edge, adjacency_matrix
from .linalg import KernelBasis, RatVector, mat_vec, nullspace_basis

# Tag components in display order; joining order below never changes.
_PART_ORDER = {"CV": 0, "NCV": 1, "CFVR": 2}


def _part_name(v: int, partition: VertexPartition) -> str:
    if v in partition.cv_set:
        return "CV"
    if v in partition.ncv_set:
        return "NCV"
    return "CFVR"


def _type_pair(u: int, w: int, partition: VertexPartition) -> str:
    a = _part_name(u, partition)
    b = _part_name(w, partition)
    if _PART_ORDER[a] > _PART_ORDER[b]:
        a, b = b, a
    return a + "-" + b


@dataclass(frozen=True)
class EdgeCandidate:
    """A non-edge of the base graph tagged by its endpoint classes.

    type_pair is one of CV-CV, CV-NCV, CV-CFVR, NCV-NCV, NCV-CFVR,
    CFVR-CFVR, always written with the earlier part first.
    """

    u: int
    w: int
    type_pair: str


@dataclass(frozen=True)
class PerturbationReport:
    """Exact before/after comparison for a single edge change.

    preserved flags:
      nullity        eta unchanged
      cv_set         core vertex set unchanged
      nullspace      canonical kernel bases identical
      core_labelling cv_set unchanged, still independent, and the
                     core-neighbour / remote split unchanged
    """

    edge: EdgeCandidate
    operation: str  # "add" or "remove"
    eta_before: int
    eta_after: int
    cv_before: tuple
    cv_after: tuple
    kernel_before: KernelBasis
    kernel_after: KernelBasis
    preserved: dict

    def to_json(self) -> dict:
        return {
            "edge": [self.edge.u, self.edge.w],
            "type": self.edge.type_pair,
            "eta": [self.eta_before, self.eta_after],
            "cv": [list(self.cv_before), list(self.cv_after)],
            "preserved": dict(self.preserved),
        }


# Families named by their endpoint tags.  Additions within the
# core-forbidden part obey: eta preserved <=> CV preserved, and eta
# preserved => nullspace and labelling preserved.
CFV_FAMILY = frozenset({"NCV-NCV", "NCV-CFVR", "CFVR-CFVR"})


def candidate_edges(g: Graph, partition: Optional[VertexPartition] = None):
    """All non-adjacent vertex pairs of g, tagged and sorted by (u, w).

    Tags always reflect the current partition; they carry labelling
    semantics only when the core vertices are independent.
    """
    part = classify_vertices(g) if partition is None else partition
    out = []
    for u in range(g.n):
        row = set(g.adjacency[u])
        for w in range(u + 1, g.n):
            if w not in row:
                out.append(EdgeCandidate(u, w, _type_pair(u, w, part)))
    return out


def _labelling_preserved(
    before: VertexPartition, after: VertexPartition
) -> bool:
    return (
        before.cv_set == after.cv_set
        and after.independent_cv
        and before.ncv_set == after.ncv_set
        and before.cfvr_set == after.cfvr_set
    )


def _build_report(
    g: Graph,
    h: Graph,
    edge: EdgeCandidate,
    operation: str,
    part_before: VertexPartition,
    basis_before: KernelBasis,
) -> PerturbationReport:
    basis_after = nullspace_basis(adjacency_matrix(h))
    part_after = classify_vertices(h, basis_after)
    preserved = {
        "nullity": part_before.nullity == part_after.nullity,
        "cv_set": part_before.cv_set == part_after.cv_set,
        "nullspace": basis_before.vectors == basis_after.vectors,
        "core_labelling": _labelling_preserved(part_before, part_after),
    }
    report = PerturbationReport(
        edge=edge,
        operation=operation,
        eta_before=part_before.nullity,
        eta_after=part_after.nullity,
        cv_before=part_before.cv_set,
        cv_after=part_after.cv_set,
        kernel_before=basis_before,
        kernel_after=basis_after,
        preserved=preserved,
    )
    # A single symmetric edge flip is a rank-2 update, so eta moves by
    # at most 2 in either direction.
    assert abs(report.eta_after - report.eta_before) <= 2
    # Identical bases force identical supports and dimensions.
    if preserved["nullspace"]:
        assert preserved["cv_set"] and preserved["nullity"]
    return report


def apply_and_report(
    g: Graph, e: EdgeCandidate, partition: Optional[VertexPartition] = None
) -> PerturbationReport:
    """Add the candidate edge and report exactly what survived.

    For candidates inside the core-forbidden part (NCV-NCV, NCV-CFVR,
    CFVR-CFVR) of a graph with independent core vertices, two structural
    guarantees are re-checked on every call and a TheoremViolationError
    is raised if either fails:
      - nullity is preserved if and only if the core set is preserved;
      - if nullity is preserved, the canonical kernel basis and the
        whole core labelling are preserved too.
    """
    part = classify_vertices(g) if partition is None else partition
    if not (0 <= e.u < g.n and 0 <= e.w < g.n) or e.u == e.w:
        raise PreconditionError(
            "candidate endpoints (%r, %r) invalid for a %d-vertex graph"
            % (e.u, e.w, g.n)
        )
    if g.has_edge(e.u, e.w):
        raise PreconditionError(
            "candidate (%d, %d) is already an edge" % (e.u, e.w)
        )
    expected = _type_pair(e.u, e.w, part)
    if e.type_pair != expected:
        raise PreconditionError(
            "candidate (%d, %d) tagged %s but the partition says %s"
            % (e.u, e.w, e.type_pair, expected)
        )
    basis = nullspace_basis(adjacency_matrix(g))
    report = _build_report(g, add_edge(g, e.u, e.w), e, "add", part, basis)

    if part.independent_cv and e.type_pair in CFV_FAMILY:
        flags = report.preserved
        if flags["nullity"] != flags["cv_set"]:
            raise TheoremViolationError(
                "core-forbidden edge addition broke the nullity/core "
                "biconditional on (%d, %d)" % (e.u, e.w),
                report=report.to_json() | {"edges": list(g.edges())},
            )
        if flags["nullity"] and not (
            flags["nullspace"] and flags["core_labelling"]
        ):
            raise TheoremViolationError(
                "nullity-preserving core-forbidden addition (%d, %d) "
                "failed to preserve the nullspace and labelling"
                % (e.u, e.w),
                report=report.to_json() | {"edges": list(g.edges())},
            )
    return report


def remove_and_report(g: Graph, u: int, w: int) -> PerturbationReport:
    """Delete an existing edge and report the same preservation flags.

    Deletions carry no structural guarantees; the report is purely
    descriptive and either direction of nullity change is possible.
    """
    part = classify_vertices(g)
    # delete_edge validates existence and range.
    h = delete_edge(g, u, w)
    a, b = (u, w) if u < w else (w, u)
    edge = EdgeCandidate(a, b, _type_pair(a, b, part))
    basis = nullspace_basis(adjacency_matrix(g))
    return _build_report(g, h, edge, "remove", part, basis)


@dataclass(frozen=True)
class CvNcvReport:
    """Outcome of checking a core / core-neighbour edge addition.

    When the addition keeps the whole core labelling intact, nullity
    must be unchanged, and two explicit witnesses are exhibited:
    x_witness is a kernel vector of the base graph that leaves the
    kernel after the addition, y_witness a kernel vector of the new
    graph absent from the old kernel.  When the labelling shifts, the
    hypothesis is unmet and no conclusion is drawn.
    """

    report: PerturbationReport
    hypothesis_met: bool
    x_witness: Optional[tuple]
    y_witness: Optional[tuple]


def _kernel_vector_hitting(basis: KernelBasis, v: int) -> tuple:
    for vec in basis.vectors:
        if vec[v] != 0:
            return vec
    raise AssertionError("no kernel vector is non-zero at %d" % v)


def verify_cv_ncv_theorem(
    g: Graph, e: EdgeCandidate, partition: Optional[VertexPartition] = None
) -> CvNcvReport:
    """Check a CV-NCV addition against its conditional guarantee.

    Requires independent core vertices and a CV-NCV candidate.  If the
    core labelling survives the addition, nullity equality is asserted
    (TheoremViolationError on failure) and both kernel-exchange
    witnesses are produced with exact matrix-vector products.
    """
    part = classify_vertices(g) if partition is None else partition
    require_independent_cv(g, part)
    if e.type_pair != "CV-NCV":
        raise PreconditionError(
            "expected a CV-NCV candidate, got %s" % e.type_pair
        )
    report = apply_and_report(g, e, part)
    after = classify_vertices(add_edge(g, e.u, e.w), report.kernel_after)
    if not _labelling_preserved(part, after):
        return CvNcvReport(report, False, None, None)

    if not report.preserved["nullity"]:
        raise TheoremViolationError(
            "labelling-preserving CV-NCV addition (%d, %d) changed the "
            "nullity from %d to %d"
            % (e.u, e.w, report.eta_before, report.eta_after),
            report=report.to_json() | {"edges": list(g.edges())},
        )

    cv_end = e.u if e.u in part.cv_set else e.w
    a_before = adjacency_matrix(g)
    a_after = adjacency_matrix(add_edge(g, e.u, e.w))
    x = _kernel_vector_hitting(report.kernel_before, cv_end)
    y = _kernel_vector_hitting(report.kernel_after, cv_end)
    # The new row at the non-core end picks up the core entry, so each
    # witness must leave the other graph's kernel.
    if mat_vec(a_after, RatVector(x)).is_zero():
        raise TheoremViolationError(
            "old kernel vector unexpectedly survived the addition",
            report=report.to_json() | {"edges": list(g.edges())},
        )
    if mat_vec(a_before, RatVector(y)).is_zero():
        raise TheoremViolationError(
            "new kernel vector unexpectedly lies in the old kernel",
            report=report.to_json() | {"edges": list(g.edges())},
        )
    return CvNcvReport(report, True, x, y)


_PRESERVE_FLAGS = ("nullity", "cv_set", "nullspace")


def safe_additions(g: Graph, preserve: str):
    """Candidates whose addition keeps the requested property.

    preserve is one of nullity, cv_set, nullspace.  CV-CV and CV-CFVR
    candidates are never offered: an edge inside the core or from the
    core to the remote part invalidates the labelling scheme itself,
    whatever it does to the chosen flag.
    """
    if preserve not in _PRESERVE_FLAGS:
        raise PreconditionError(
            "preserve must be one of %s, got %r"
            % ("/".join(_PRESERVE_FLAGS), preserve)
        )
    part = classify_vertices(g)
    out = []
    for cand in candidate_edges(g, part):
        if cand.type_pair in ("CV-CV", "CV-CFVR"):
            continue
        report = apply_and_report(g, cand, part)
        if report.preserved[preserve]:
            out.append(cand)
    return out


def greedy_densify(g: Graph, preserve: str):
    """Add safe edges lexicographically-first until none remains.

    Returns (final graph, tuple of added edges).  The preserved
    property is re-checked against the original graph after every
    accepted edge, so the result is maximal by inclusion, not a claimed
    maximum-cardinality optimum.
    """
    base = classify_vertices(g)
    basis0 = nullspace_basis(adjacency_matrix(g))
    current = g
    added = []
    while True:
        step = safe_additions(current, preserve)
        if not step:
            break
        first = step[0]
        current = add_edge(current, first.u, first.w)
        added.append((first.u, first.w))
        # Per-step flags compare equalities, so preservation against
        # the previous graph chains back to the original; verify that
        # directly anyway.
        now_basis = nullspace_basis(adjacency_matrix(current))
        now = classify_vertices(current, now_basis)
        if preserve == "nullity":
            assert now.nullity == base.nullity
        elif preserve == "cv_set":
            assert now.cv_set == base.cv_set
        else:
            assert now_basis.vectors == basis0.vectors
    return current, tuple(added)
