"""Steiner 2-designs: parameters, validation, incidence matrices and 2-rank.

Design file format: first row ``v k lambda``, then one block per row as
whitespace-separated point indices (0-based).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence, TextIO

import numpy as np

from .errors import ParameterError, ParseError, ValidationReport


@dataclass(frozen=True)
class DesignParams:
    """Parameters of a 2-(v,k,lambda) design.

    ``n``, ``s`` and ``q`` describe the maximal-arc shape v = (sk-s+1)k and
    are None when k does not divide v or (k-1) does not divide (n-1).
    """

    v: int
    k: int
    lam: int
    r: int
    b: int
    n: int | None = None
    s: int | None = None
    q: int | None = None

    @property
    def max_compatible(self) -> int | None:
        """Largest possible number of mutually compatible resolutions, (sk-k+1)s."""
        if self.s is None:
            return None
        return (self.s * self.k - self.k + 1) * self.s

    def to_dict(self) -> dict[str, Any]:
        return {
            "v": self.v, "k": self.k, "lambda": self.lam, "r": self.r, "b": self.b,
            "n": self.n, "s": self.s, "q": self.q,
        }


def derive_params(v: int, k: int, lam: int = 1) -> DesignParams:
    if not (v > k >= 2 and lam >= 1):
        raise ParameterError(f"need v > k >= 2 and lambda >= 1, got ({v}, {k}, {lam})")
    r, rem = divmod(lam * (v - 1), k - 1)
    if rem:
        raise ParameterError(f"inadmissible parameters: r = {lam * (v - 1)}/{k - 1} is not an integer")
    b, rem = divmod(v * r, k)
    if rem:
        raise ParameterError(f"inadmissible parameters: b = {v * r}/{k} is not an integer")
    n = s = q = None
    if v % k == 0:
        n = v // k
        if (n - 1) % (k - 1) == 0:
            s = (n - 1) // (k - 1)
            q = s * k
    return DesignParams(v, k, lam, r, b, n, s, q)


@dataclass(frozen=True)
class DesignProvenance:
    """Where a design came from: plane point ``arc_points[i]`` is design point i,
    plane line ``line_indices[j]`` carries block j."""

    plane: Any
    arc_points: tuple[int, ...]
    line_indices: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Design:
    params: DesignParams
    blocks: tuple[tuple[int, ...], ...]
    provenance: DesignProvenance | None = field(default=None, compare=False)

    block_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))
        masks = []
        for blk in self.blocks:
            m = 0
            for p in blk:
                m |= 1 << p
            masks.append(m)
        object.__setattr__(self, "block_masks", tuple(masks))

    @classmethod
    def from_blocks(cls, v: int, blocks: Iterable[Iterable[int]], lam: int = 1, **kw: Any) -> "Design":
        blocks = [tuple(b) for b in blocks]
        k = len(blocks[0]) if blocks else 2
        return cls(derive_params(v, k, lam), tuple(blocks), **kw)

    @property
    def v(self) -> int:
        return self.params.v

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def b(self) -> int:
        return len(self.blocks)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Design) and (self.params, self.blocks) == (other.params, other.blocks)

    def __hash__(self) -> int:
        return hash((self.params, self.blocks))

    def __repr__(self) -> str:
        p = self.params
        return f"Design(2-({p.v},{p.k},{p.lam}), b={len(self.blocks)})"

    def point_blocks(self, p: int) -> list[int]:
        return [i for i, blk in enumerate(self.blocks) if p in blk]


def validate_design(design: Design) -> ValidationReport:
    """Exact pair-coverage, replication and block-size check."""
    p = design.params
    report = ValidationReport(f"2-({p.v},{p.k},{p.lam}) design")
    if len(design.blocks) != p.b:
        report.add("block_count", expected=p.b, found=len(design.blocks))
    pair = np.zeros((p.v, p.v), dtype=np.int32)
    for i, blk in enumerate(design.blocks):
        if len(blk) != p.k:
            report.add("block_size", block=i, expected=p.k, found=len(blk))
        if len(set(blk)) != len(blk):
            report.add("duplicate_point_in_block", block=i)
            continue
        if any(not 0 <= x < p.v for x in blk):
            report.add("index_out_of_range", block=i)
            continue
        idx = np.asarray(blk, dtype=np.intp)
        pair[np.ix_(idx, idx)] += 1
    reps = np.diagonal(pair)
    for x in np.flatnonzero(reps != p.r):
        report.add("replication", point=int(x), expected=p.r, found=int(reps[x]))
    iu, ju = np.triu_indices(p.v, 1)
    counts = pair[iu, ju]
    for idx in np.flatnonzero(counts > p.lam):
        report.add("pair covered twice", pair=(int(iu[idx]), int(ju[idx])), count=int(counts[idx]))
    for idx in np.flatnonzero(counts < p.lam):
        report.add("pair uncovered", pair=(int(iu[idx]), int(ju[idx])), count=int(counts[idx]))
    return report


@dataclass(frozen=True)
class BitMatrix:
    """Row-major 0/1 matrix; row i is an int whose bit j is entry (i, j)."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    @classmethod
    def from_array(cls, a: Sequence[Sequence[int]] | np.ndarray) -> "BitMatrix":
        a = np.asarray(a)
        if a.ndim != 2:
            raise ParameterError("expected a 2-d array")
        rows = []
        for row in a:
            m = 0
            for j in np.flatnonzero(row % 2):
                m |= 1 << int(j)
            rows.append(m)
        return cls(a.shape[0], a.shape[1], tuple(rows))

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=np.uint8)
        for i, m in enumerate(self.rows):
            for j in range(self.ncols):
                if (m >> j) & 1:
                    out[i, j] = 1
        return out

    def row_weights(self) -> list[int]:
        return [m.bit_count() for m in self.rows]

    def col_weights(self) -> list[int]:
        return [sum((m >> j) & 1 for m in self.rows) for j in range(self.ncols)]


def incidence_matrix(design: Design) -> BitMatrix:
    """Blocks x points matrix with a_ij = 1 iff block i contains point j."""
    return BitMatrix(len(design.blocks), design.v, design.block_masks)


def rank2(matrix: BitMatrix) -> int:
    """Rank over GF(2) by Gaussian elimination on packed rows."""
    work = list(matrix.rows)
    rank = 0
    for col in range(matrix.ncols):
        bit = 1 << col
        pivot = next((i for i in range(rank, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for i in range(rank + 1, len(work)):
            if work[i] & bit:
                work[i] ^= prow
        rank += 1
        if rank == len(work):
            break
    return rank


@dataclass(frozen=True)
class ConjectureReport:
    t: int
    rank: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.rank >= self.bound

    @property
    def equality(self) -> bool:
        return self.rank == self.bound

    def to_dict(self) -> dict[str, Any]:
        return {"t": self.t, "rank": self.rank, "bound": self.bound,
                "holds": self.holds, "equality": self.equality}


def check_rank_conjecture(design: Design, t: int) -> ConjectureReport:
    """Compare the 2-rank of a 2-(2^(2t-1)-2^(t-1), 2^(t-1), 1) design with 3^t - 2^t."""
    p = design.params
    v = 2 ** (2 * t - 1) - 2 ** (t - 1)
    k = 2 ** (t - 1)
    if t < 2 or (p.v, p.k, p.lam) != (v, k, 1):
        raise ParameterError(
            f"not a conjecture-shape design: expected 2-({v},{k},1) for t={t}, "
            f"got 2-({p.v},{p.k},{p.lam})"
        )
    return ConjectureReport(t, rank2(incidence_matrix(design)), 3**t - 2**t)


def load_design(source: TextIO) -> Design:
    rows = []
    for lineno, raw in enumerate(source, start=1):
        text = raw.split("#", 1)[0].strip()
        if text:
            try:
                rows.append((lineno, [int(x) for x in text.split()]))
            except ValueError as exc:
                raise ParseError(f"non-integer token: {exc}", lineno) from None
    if not rows:
        raise ParseError("empty design file")
    lineno, header = rows[0]
    if len(header) != 3:
        raise ParseError("header must be 'v k lambda'", lineno)
    params = derive_params(*header)
    blocks = []
    for lineno, row in rows[1:]:
        if len(row) != params.k:
            raise ParseError(f"expected {params.k} points, found {len(row)}", lineno)
        blocks.append(tuple(row))
    if len(blocks) != params.b:
        raise ParseError(f"expected {params.b} blocks, found {len(blocks)}")
    return Design(params, tuple(blocks))


def dump_design(design: Design, out: TextIO) -> None:
    p = design.params
    out.write(f"{p.v} {p.k} {p.lam}\n")
    for blk in design.blocks:
        out.write(" ".join(map(str, blk)) + "\n")

