"""Parallel classes, resolutions, compatible resolutions and plane reconstruction.

All three searches are fixed-size clique enumerations:

* parallel classes: v/k-cliques of the block-disjointness graph,
* resolutions: r-cliques of the graph on classes sharing no block,
* maximum compatible sets: (sk-k+1)s-cliques of the compatibility graph.

Classes and resolutions are referred to by index into the canonical (sorted)
lists returned here.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Any, Sequence

from .arcs import Arc
from .design import Design
from .errors import ParameterError, ParseError, ValidationError
from .geometry import ProjectivePlane, validate_plane
from .search import BitGraph, enumerate_cliques, graph_from_relation


@dataclass(frozen=True)
class ParallelClass:
    blocks: tuple[int, ...]

    @property
    def mask(self) -> int:
        """Bit set over block indices."""
        m = 0
        for b in self.blocks:
            m |= 1 << b
        return m


@dataclass(frozen=True)
class Resolution:
    classes: tuple[int, ...]


@dataclass(frozen=True)
class CompatibleSet:
    resolutions: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.resolutions)


def block_graph(design: Design) -> BitGraph:
    """Blocks adjacent iff disjoint."""
    return graph_from_relation(design.block_masks, lambda a, b: not a & b)


def class_graph(classes: Sequence[ParallelClass]) -> BitGraph:
    """Parallel classes adjacent iff they share no block."""
    return graph_from_relation([c.mask for c in classes], lambda a, b: not a & b)


def parallel_classes(design: Design, jobs: int = 1) -> list[ParallelClass]:
    v, k = design.v, design.k
    if v % k:
        raise ParameterError(f"k={k} does not divide v={v}: no parallel classes")
    full = (1 << v) - 1
    out = []
    for clique in enumerate_cliques(block_graph(design), v // k, jobs=jobs):
        cover = 0
        for b in clique:
            cover |= design.block_masks[b]
        if cover != full:
            raise AssertionError(f"blocks {clique} are disjoint but do not cover the points")
        out.append(ParallelClass(clique))
    return out


def _check_resolution(design: Design, classes: Sequence[ParallelClass], res: Sequence[int]) -> None:
    seen = Counter(b for c in res for b in classes[c].blocks)
    if set(seen) != set(range(len(design.blocks))) or any(n != 1 for n in seen.values()):
        raise AssertionError(f"classes {tuple(res)} do not partition the blocks")
    full = (1 << design.v) - 1
    for c in res:
        cover = 0
        for b in classes[c].blocks:
            if cover & design.block_masks[b]:
                raise AssertionError(f"class {c} has overlapping blocks")
            cover |= design.block_masks[b]
        if cover != full:
            raise AssertionError(f"class {c} does not cover every point")


def resolutions(design: Design, classes: Sequence[ParallelClass], jobs: int = 1) -> list[Resolution]:
    out = []
    for clique in enumerate_cliques(class_graph(classes), design.params.r, jobs=jobs):
        _check_resolution(design, classes, clique)
        out.append(Resolution(clique))
    return out


def compatible(r1: Resolution, r2: Resolution, classes: Sequence[ParallelClass]) -> bool:
    """Exactly one shared class, and any other class of r1 meets any other class
    of r2 in at most one block."""
    shared = set(r1.classes) & set(r2.classes)
    if not shared:
        return False
    c = min(shared)
    for a in r1.classes:
        if a == c:
            continue
        ma = classes[a].mask
        for b in r2.classes:
            if b != c and (ma & classes[b].mask).bit_count() > 1:
                return False
    # a second shared class would meet itself in n blocks above
    assert len(shared) == 1
    return True


def compatibility_graph(resolutions: Sequence[Resolution], classes: Sequence[ParallelClass]) -> BitGraph:
    return graph_from_relation(resolutions, lambda a, b: compatible(a, b, classes))


def max_compatible_sets(
    design: Design,
    resolutions: Sequence[Resolution],
    classes: Sequence[ParallelClass],
    jobs: int = 1,
) -> list[CompatibleSet]:
    """Every set of (sk-k+1)s pairwise compatible resolutions."""
    bound = design.params.max_compatible
    if bound is None:
        raise ParameterError(f"{design!r} is not of maximal-arc shape 2-((sk-s+1)k,k,1)")
    graph = compatibility_graph(resolutions, classes)
    return [CompatibleSet(c) for c in enumerate_cliques(graph, bound, jobs=jobs)]


def embed(
    design: Design,
    cset: CompatibleSet,
    resolutions: Sequence[Resolution],
    classes: Sequence[ParallelClass],
) -> ProjectivePlane:
    """Projective plane of order sk in which ``design`` sits as a maximal arc.

    Points: the v design points, then one point per class used by the chosen
    resolutions (in class-index order). Lines: each block plus the points of
    the chosen classes containing it, then one line per chosen resolution
    made of its class points.
    """
    p = design.params
    if p.s is None or p.q is None:
        raise ParameterError(f"{design!r} is not of maximal-arc shape 2-((sk-s+1)k,k,1)")
    if p.s == 1:
        raise ParameterError("s = 1: an affine plane has a single resolution, nothing to embed")
    if cset.m != p.max_compatible:
        raise ParameterError(f"compatible set has {cset.m} resolutions, need {p.max_compatible}")
    chosen = [resolutions[i] for i in cset.resolutions]
    used = sorted({c for res in chosen for c in res.classes})
    class_point = {c: p.v + i for i, c in enumerate(used)}
    ext: list[list[int]] = [list(blk) for blk in design.blocks]
    for c in used:
        for b in classes[c].blocks:
            ext[b].append(class_point[c])
    lines = ext + [[class_point[c] for c in res.classes] for res in chosen]
    if p.v + len(used) != p.q * p.q + p.q + 1:
        raise ValidationError(
            f"compatible set does not induce a plane: {p.v + len(used)} points for order {p.q}"
        )
    plane = ProjectivePlane(
        p.q,
        lines,
        label=f"embedding of 2-({p.v},{p.k},1)",
        provenance={
            "arc_points": tuple(range(p.v)),
            "k": p.k,
            "class_points": class_point,
            "resolutions": cset.resolutions,
        },
    )
    report = validate_plane(plane)
    if not report.valid:
        raise ValidationError("compatible set does not induce a plane", report)
    return plane


def embedded_arc(plane: ProjectivePlane) -> Arc:
    """The design's point set inside a plane returned by :func:`embed`."""
    prov = plane.provenance
    if "arc_points" not in prov:
        raise ParameterError("plane has no recorded arc")
    return Arc(plane, frozenset(prov["arc_points"]), prov["k"])


def class_multiplicities(cset: CompatibleSet, resolutions: Sequence[Resolution]) -> Counter[int]:
    """How many chosen resolutions contain each class."""
    return Counter(c for i in cset.resolutions for c in resolutions[i].classes)


# JSON, index-based against the design's block order


def to_json(
    design: Design,
    classes: Sequence[ParallelClass] | None = None,
    resolutions: Sequence[Resolution] | None = None,
    compatible_sets: Sequence[CompatibleSet] | None = None,
) -> dict[str, Any]:
    out: dict[str, Any] = {"design": design.params.to_dict()}
    if classes is not None:
        out["parallel_classes"] = [list(c.blocks) for c in classes]
    if resolutions is not None:
        out["resolutions"] = [list(r.classes) for r in resolutions]
    if compatible_sets is not None:
        out["compatible_sets"] = [list(s.resolutions) for s in compatible_sets]
    return out


def from_json(data: dict[str, Any] | str) -> dict[str, Any]:
    """Inverse of :func:`to_json`; returns typed lists under the same keys."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        out: dict[str, Any] = {"design": data["design"]}
        if "parallel_classes" in data:
            out["parallel_classes"] = [ParallelClass(tuple(c)) for c in data["parallel_classes"]]
        if "resolutions" in data:
            out["resolutions"] = [Resolution(tuple(r)) for r in data["resolutions"]]
        if "compatible_sets" in data:
            out["compatible_sets"] = [CompatibleSet(tuple(s)) for s in data["compatible_sets"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed resolution data: {exc}") from None
    return out


def distinct_class_count(m: int, r: int) -> int:
    """Classes used by a full compatible set: every one lies in exactly two resolutions."""
    return m * r - m * (m - 1) // 2

