from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from app.common.exceptions import (
    InternalInvariantError,
    LemmaPreconditionError,
    MalformedLabelingError,
    UnsupportedGraphError,
)
from app.config.logging import logger
from app.schemas.labeling_schemas import (
    FeasibilityCondition,
    FeasibilityDecision,
    FeasibilityVerdict,
    TwoColorCertificate,
    VerificationReport,
)
from app.services.graph.analysis import bipartition, connected_components, is_connected
from app.services.graph.graph import Graph
from app.services.labeling.labeling import EdgeLabeling
from app.services.labeling.verifier import verify


def _require_same_graph(g: Graph, f: EdgeLabeling) -> None:
    if f.graph != g:
        raise MalformedLabelingError("labeling is defined on a different edge set")


def complement(g: Graph, f: EdgeLabeling) -> EdgeLabeling:
    """e -> q + 1 - f(e)."""
    _require_same_graph(g, f)
    return EdgeLabeling(g, tuple(g.q + 1 - label for label in f.labels))


# ------------------------- extreme-edge deletion ------------------------- #


@dataclass(frozen=True)
class DeletionCandidate:
    recipe: str
    labeling: EdgeLabeling
    report: VerificationReport


@dataclass(frozen=True)
class DeletionResult:
    graph: Graph
    labeling: EdgeLabeling
    report: VerificationReport
    construction_failed: bool
    recipe: str
    candidates: tuple[DeletionCandidate, ...] = field(default=(), repr=False)


def _restrict(h: Graph, f: EdgeLabeling, edge: int, shift: int) -> EdgeLabeling:
    remaining = f.labels[:edge] + f.labels[edge + 1 :]
    return EdgeLabeling(h, tuple(label - shift for label in remaining))


def delete_extreme_edge(g: Graph, f: EdgeLabeling, edge: int) -> DeletionResult:
    """
    Labeling of G - e from a proper labeling of regular G whose label on e is
    1 or q.

    Candidates are f and its complement, each either restricted (when e carries
    q) or restricted and shifted down by one (when e carries 1). Only candidates
    whose labels are a bijection onto [1, q-1] are kept; the proper one with the
    fewest colors wins, ties going to the earlier recipe. When none is proper the
    result carries `construction_failed` and the first candidate.
    """
    _require_same_graph(g, f)
    if not g.is_regular:
        raise LemmaPreconditionError("graph must be regular")
    if not 0 <= edge < g.q:
        raise LemmaPreconditionError(f"edge index {edge} out of range")
    base_report = verify(g, f)
    if not base_report.is_local_antimagic:
        raise LemmaPreconditionError("labeling must be a local antimagic labeling")
    if f.label(edge) not in (1, g.q):
        raise LemmaPreconditionError(
            f"edge {edge} carries label {f.label(edge)}, expected 1 or {g.q}"
        )

    h = g.remove_edge(edge)
    target = list(range(1, g.q))
    candidates: list[DeletionCandidate] = []
    for base_name, base in (("f", f), ("complement", complement(g, f))):
        for recipe_name, shift in (("restrict", 0), ("shift", 1)):
            candidate = _restrict(h, base, edge, shift) if _fits(base, edge, shift) else None
            if candidate is None or sorted(candidate.labels) != target:
                continue
            candidates.append(
                DeletionCandidate(
                    recipe=f"{base_name}/{recipe_name}",
                    labeling=candidate,
                    report=verify(h, candidate),
                )
            )

    proper = [c for c in candidates if c.report.is_proper]
    if proper:
        best = min(proper, key=lambda c: c.report.color_count)
        failed = False
    else:
        best = candidates[0]
        failed = True
        logger.warning(
            "extreme_edge_deletion_failed",
            q=g.q,
            edge=edge,
            candidates=[c.recipe for c in candidates],
        )

    logger.debug(
        "extreme_edge_deleted",
        q=g.q,
        edge=edge,
        recipe=best.recipe,
        colors=best.report.color_count,
        construction_failed=failed,
    )
    return DeletionResult(
        graph=h,
        labeling=best.labeling,
        report=best.report,
        construction_failed=failed,
        recipe=best.recipe,
        candidates=tuple(candidates),
    )


def _fits(base: EdgeLabeling, edge: int, shift: int) -> bool:
    # restriction needs the deleted label to be q, the shift needs it to be 1
    return base.label(edge) == (1 if shift else base.q)


# ------------------------- two-color balance ------------------------- #


def two_coloring_certificate(g: Graph, f: EdgeLabeling) -> Optional[TwoColorCertificate]:
    """
    For a proper labeling with exactly two colors x < y and classes X, Y:
    x|X| = y|Y| = q(q+1)/2, |X| > |Y| and (X, Y) is a bipartition.
    """
    _require_same_graph(g, f)
    if any(d == 0 for d in g.degrees):
        raise LemmaPreconditionError("graph has isolated vertices")
    report = verify(g, f)
    if not report.is_local_antimagic:
        raise LemmaPreconditionError("labeling must be a local antimagic labeling")
    if report.color_count != 2:
        return None

    x, y = report.colors
    X = [v for v, s in enumerate(report.vertex_sums) if s == x]
    Y = [v for v, s in enumerate(report.vertex_sums) if s == y]
    half_total = g.q * (g.q + 1) // 2

    crossing = all((u in X) != (v in X) for u, v in g.edges)
    if not (x * len(X) == y * len(Y) == half_total and len(X) > len(Y) and crossing):
        logger.error(
            "two_color_identity_failed",
            x=x,
            y=y,
            size_x=len(X),
            size_y=len(Y),
            half_total=half_total,
        )
        raise InternalInvariantError(
            f"two-color identity fails: {x}*{len(X)}, {y}*{len(Y)}, q(q+1)/2={half_total}"
        )
    return TwoColorCertificate(x=x, y=y, X=X, Y=Y, half_total=half_total)


def chi_la2_feasible(g: Graph) -> FeasibilityDecision:
    """Necessary conditions for two colors on a connected graph."""
    if not is_connected(g):
        raise UnsupportedGraphError("two-color feasibility is defined for connected graphs")
    if g.q == 0:
        raise UnsupportedGraphError("graph has no edges")

    parts = bipartition(g)
    if parts is None:
        return FeasibilityDecision(
            verdict=FeasibilityVerdict.NECESSARY_CONDITIONS_FAIL,
            condition=FeasibilityCondition.NON_BIPARTITE,
            reason="graph is not bipartite, so at least 3 colors are needed",
        )

    a, b = (len(part) for part in parts)
    half_total = g.q * (g.q + 1) // 2
    if a == b:
        return FeasibilityDecision(
            verdict=FeasibilityVerdict.NECESSARY_CONDITIONS_FAIL,
            condition=FeasibilityCondition.EQUAL_PARTS,
            reason=f"parts have equal size {a}",
        )
    if half_total % a or half_total % b:
        return FeasibilityDecision(
            verdict=FeasibilityVerdict.NECESSARY_CONDITIONS_FAIL,
            condition=FeasibilityCondition.DIVISIBILITY,
            reason=f"q(q+1)/2 = {half_total} is not divisible by both {a} and {b}",
        )
    return FeasibilityDecision(
        verdict=FeasibilityVerdict.UNKNOWN,
        reason="necessary conditions hold; two colors are not ruled out",
    )


def two_color_admissible(g: Graph) -> bool:
    """
    Whether the balance identity leaves room for exactly two colors.

    Works on disconnected graphs: each component's sides may land in either
    color class, so every reachable class size |X| is tried.
    """
    if g.q == 0 or any(d == 0 for d in g.degrees):
        return False
    parts = bipartition(g)
    if parts is None:
        return False

    side = {v: 0 for v in parts[0]} | {v: 1 for v in parts[1]}
    reachable = {0}
    for component in connected_components(g):
        first = sum(1 for v in component if side[v] == 0)
        second = len(component) - first
        reachable = {s + first for s in reachable} | {s + second for s in reachable}

    half_total = g.q * (g.q + 1) // 2
    p = g.vertex_count
    return any(
        size > p - size > 0 and half_total % size == 0 and half_total % (p - size) == 0
        for size in reachable
    )
