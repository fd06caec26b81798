"""End-to-end runs: hyperoval -> dual arc -> design -> classes -> resolutions ->
maximum compatible sets -> embedding, plus batch runs over a manifest.

Manifest format: CSV with columns hyperoval_id, plane_label, plane_path,
hyperoval_path. ``hyperoval_path`` may be the token ``regular`` (conic plus
nucleus, plane must be the canonical PG(2,q)); ``plane_path`` may be
``PG(2,q)`` to build the plane instead of reading it.
"""

from __future__ import annotations

import csv
import hashlib
import json
import logging
import os
import re
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Iterable

from .arcs import Arc, dual_arc, dump_arc, extract_design, load_arc, regular_hyperoval
from .design import Design, dump_design, incidence_matrix, rank2
from .errors import MaxArcError
from .geometry import ProjectivePlane, build_pg2, dump_plane, load_plane, read_indices
from .gf import Field
from .resolve import (
    embed,
    embedded_arc,
    max_compatible_sets,
    parallel_classes,
    resolutions,
    to_json,
)

log = logging.getLogger(__name__)

DATA_ENV = "MAXARC_DATA"
REGULAR = "regular"
_PG_RE = re.compile(r"^PG\(2,\s*(\d+)\)$", re.IGNORECASE)

REPORT_FIELDS = [
    "hyperoval_id", "plane_label", "rank2", "n_parallel_classes", "n_resolutions",
    "n_max_compatible_sets", "embed_valid", "error",
]


@dataclass
class ReportRow:
    hyperoval_id: str
    plane_label: str
    rank2: int | None = None
    n_parallel_classes: int | None = None
    n_resolutions: int | None = None
    n_max_compatible_sets: int | None = None
    embed_valid: bool | None = None
    timings: dict[str, float] = field(default_factory=dict)
    error: str | None = None
    input_hash: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "ReportRow":
        known = {f for f in cls.__dataclass_fields__}
        return cls(**{k: v for k, v in d.items() if k in known})


def infer_order(path: str | os.PathLike) -> int:
    """Plane order from the width of the first row of a lines-format file."""
    with open(path, encoding="utf-8") as fh:
        rows = read_indices(fh)
    if not rows:
        raise MaxArcError(f"{path}: no rows")
    return len(rows[0][1]) - 1


def open_plane(source: str, order: int | None = None, modulus: int | None = None, label: str = "") -> ProjectivePlane:
    """A plane from a lines-format file, or built when ``source`` reads ``PG(2,q)``.

    A file identical to the canonical PG(2,q) gets its coordinates attached,
    so the regular hyperoval can be constructed in it.
    """
    m = _PG_RE.match(source.strip())
    if m:
        return build_pg2(Field.of_order(int(m.group(1)), modulus))
    n = order or infer_order(source)
    with open(source, encoding="utf-8") as fh:
        plane = load_plane(fh, n, label=label or Path(source).stem)
    if n >= 2 and n & (n - 1) == 0:
        canonical = build_pg2(Field.of_order(n, modulus))
        if canonical.lines == plane.lines:
            canonical.label = plane.label or canonical.label
            return canonical
    return plane


def open_hyperoval(source: str, plane: ProjectivePlane, k: int = 2) -> Arc:
    if source == REGULAR:
        return regular_hyperoval(plane)
    with open(source, encoding="utf-8") as fh:
        return load_arc(fh, plane, k)


@dataclass
class PipelineResult:
    row: ReportRow
    dual_arc: Arc
    design: Design
    classes: list
    resolutions: list
    compatible_sets: list
    embedded: ProjectivePlane | None


def run_pipeline(
    plane: ProjectivePlane,
    hyperoval: Arc,
    *,
    hyperoval_id: str = "",
    plane_label: str | None = None,
    out: str | os.PathLike | None = None,
    jobs: int = 1,
) -> PipelineResult:
    """Run every stage; write artifacts to ``out`` when given.

    Errors propagate; the stage name is added to the message.
    """
    row = ReportRow(hyperoval_id, plane.label if plane_label is None else plane_label)
    stage = "dual_arc"
    clock = time.perf_counter()

    def lap(name: str) -> None:
        nonlocal clock
        now = time.perf_counter()
        row.timings[name] = round(now - clock, 6)
        clock = now

    try:
        darc = dual_arc(plane, hyperoval)
        lap(stage)
        stage = "extract_design"
        design = extract_design(darc.plane, darc)
        lap(stage)
        stage = "rank2"
        row.rank2 = rank2(incidence_matrix(design))
        lap(stage)
        stage = "parallel_classes"
        classes = parallel_classes(design, jobs=jobs)
        row.n_parallel_classes = len(classes)
        lap(stage)
        stage = "resolutions"
        res = resolutions(design, classes, jobs=jobs)
        row.n_resolutions = len(res)
        lap(stage)
        stage = "max_compatible_sets"
        csets = max_compatible_sets(design, res, classes, jobs=jobs)
        row.n_max_compatible_sets = len(csets)
        lap(stage)
        stage = "embed"
        embedded = None
        if csets:
            embedded = embed(design, csets[0], res, classes)
            back = extract_design(embedded, embedded_arc(embedded))
            row.embed_valid = back.blocks == design.blocks
        lap(stage)
    except MaxArcError as exc:
        exc.args = (f"stage {stage}: {exc}",) + exc.args[1:]
        raise
    result = PipelineResult(row, darc, design, classes, res, csets, embedded)
    if out is not None:
        write_artifacts(result, hyperoval, Path(out))
    return result


def write_artifacts(result: PipelineResult, hyperoval: Arc, out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "hyperoval.txt", "w", encoding="utf-8") as fh:
        dump_arc(hyperoval, fh)
    with open(out / "dual_arc.txt", "w", encoding="utf-8") as fh:
        dump_arc(result.dual_arc, fh)
    with open(out / "design.txt", "w", encoding="utf-8") as fh:
        dump_design(result.design, fh)
    data = to_json(result.design, result.classes, result.resolutions, result.compatible_sets)
    with open(out / "resolutions.json", "w", encoding="utf-8") as fh:
        json.dump(data, fh)
    if result.embedded is not None:
        with open(out / "embedded_plane.txt", "w", encoding="utf-8") as fh:
            dump_plane(result.embedded, fh)
    with open(out / "report.json", "w", encoding="utf-8") as fh:
        json.dump(result.row.to_dict(), fh, indent=2)


# batch


@dataclass(frozen=True)
class ManifestRow:
    hyperoval_id: str
    plane_label: str
    plane_path: str
    hyperoval_path: str


def read_manifest(path: str | os.PathLike, data_dir: str | os.PathLike | None = None) -> list[ManifestRow]:
    """Relative paths resolve against ``data_dir`` (default $MAXARC_DATA, else the manifest's folder)."""
    base = Path(data_dir or os.environ.get(DATA_ENV) or Path(path).parent)
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        for rec in csv.DictReader(fh):
            if not rec or not (rec.get("hyperoval_id") or "").strip():
                continue
            rows.append(ManifestRow(
                rec["hyperoval_id"].strip(),
                rec["plane_label"].strip(),
                _resolve(rec["plane_path"].strip(), base),
                _resolve(rec["hyperoval_path"].strip(), base),
            ))
    return rows


def _resolve(p: str, base: Path) -> str:
    if p == REGULAR or _PG_RE.match(p) or os.path.isabs(p):
        return p
    return str(base / p)


def _slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]+", "_", text).strip("_") or "row"


def row_dir(out: Path, mrow: ManifestRow) -> Path:
    return out / f"{_slug(mrow.plane_label)}__{_slug(mrow.hyperoval_id)}"


def input_hash(mrow: ManifestRow, modulus: int | None = None) -> str:
    h = hashlib.sha256()
    for p in (mrow.plane_path, mrow.hyperoval_path):
        if p == REGULAR or _PG_RE.match(p):
            h.update(p.encode())
        else:
            h.update(Path(p).read_bytes())
        h.update(b"\0")
    h.update(str(modulus).encode())
    return h.hexdigest()


def _batch_one(args: tuple[ManifestRow, str, int | None]) -> ReportRow:
    mrow, out, modulus = args
    target = row_dir(Path(out), mrow)
    try:
        digest = input_hash(mrow, modulus)
    except OSError as exc:
        return ReportRow(mrow.hyperoval_id, mrow.plane_label, error=f"io: {exc}")
    done = target / "report.json"
    if done.exists():
        try:
            old = ReportRow.from_dict(json.loads(done.read_text(encoding="utf-8")))
        except (ValueError, TypeError):
            old = None
        if old is not None and old.input_hash == digest and old.error is None:
            log.info("skipping %s/%s: up to date", mrow.plane_label, mrow.hyperoval_id)
            return old
    try:
        plane = open_plane(mrow.plane_path, modulus=modulus, label=mrow.plane_label)
        hyperoval = open_hyperoval(mrow.hyperoval_path, plane)
        result = run_pipeline(plane, hyperoval, hyperoval_id=mrow.hyperoval_id, plane_label=mrow.plane_label)
        result.row.input_hash = digest
        write_artifacts(result, hyperoval, target)
        return result.row
    except (MaxArcError, OSError) as exc:
        log.warning("row %s/%s failed: %s", mrow.plane_label, mrow.hyperoval_id, exc)
        return ReportRow(mrow.hyperoval_id, mrow.plane_label, error=str(exc), input_hash=digest)


def run_batch(
    manifest: Iterable[ManifestRow],
    out: str | os.PathLike,
    jobs: int = 1,
    modulus: int | None = None,
) -> list[ReportRow]:
    """One report row per manifest row, in manifest order; failures are recorded, not raised.

    Rows whose outputs exist for identical inputs are not recomputed.
    """
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    tasks = [(m, str(out), modulus) for m in manifest]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_batch_one, tasks, chunksize=1))
    else:
        rows = [_batch_one(t) for t in tasks]
    write_table(rows, out / "report.json", "json")
    write_table(rows, out / "report.csv", "csv")
    return rows


def write_table(rows: list[ReportRow], path: str | os.PathLike, fmt: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(format_table(rows, fmt))


def format_table(rows: list[ReportRow], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in rows], indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    import io

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REPORT_FIELDS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: ("" if v is None else v) for k, v in r.to_dict().items()})
    return buf.getvalue()


def read_table(path: str | os.PathLike) -> list[ReportRow]:
    """Load a report written by :func:`write_table` (format from the extension)."""
    text = Path(path).read_text(encoding="utf-8")
    if str(path).endswith(".json"):
        data = json.loads(text)
        if isinstance(data, dict):
            data = [data]
        return [ReportRow.from_dict(d) for d in data]
    rows = []
    for rec in csv.DictReader(text.splitlines()):
        row = ReportRow(rec["hyperoval_id"], rec["plane_label"])
        for key in ("rank2", "n_parallel_classes", "n_resolutions", "n_max_compatible_sets"):
            if rec.get(key):
                setattr(row, key, int(rec[key]))
        if rec.get("embed_valid"):
            row.embed_valid = rec["embed_valid"] == "True"
        row.error = rec.get("error") or None
        rows.append(row)
    return rows


def rank_histogram(rows: Iterable[ReportRow]) -> dict[int, int]:
    """2-rank -> number of rows, sorted by rank; rows without a rank are ignored."""
    counts = Counter(r.rank2 for r in rows if r.rank2 is not None)
    return dict(sorted(counts.items()))

