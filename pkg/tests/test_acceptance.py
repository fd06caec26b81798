"""Acceptance criteria, one test per criterion.

Each test appends a ``[PASS]``/``[FAIL]`` line that is printed in the terminal
summary (see conftest). The dataset criterion is skipped without $MAXARC_DATA.
"""

import itertools
import os
import random
import time
from collections import Counter
from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from maxarc.arcs import dual_arc, extract_design, regular_hyperoval
from maxarc.design import BitMatrix, derive_params, incidence_matrix, rank2, validate_design
from maxarc.geometry import build_pg2, validate_plane
from maxarc.gf import Field
from maxarc.pipeline import DATA_ENV, ManifestRow, rank_histogram, read_manifest, run_batch, run_pipeline
from maxarc.resolve import embed, embedded_arc, max_compatible_sets, parallel_classes, resolutions
from maxarc.search import BitGraph, enumerate_cliques
from oracles import cliques_by_subset_scan, compatible_sets, gf2_rank_by_kernel, is_projective_plane
from reference_tables import KNOWN_BY_KEY, RANK_FREQUENCIES


@contextmanager
def criterion(tag: str, title: str):
    """Record one pass/fail line for ``tag``; details are filled in by the body."""
    info: dict = {}
    start = time.perf_counter()
    try:
        yield info
    except BaseException as exc:
        if isinstance(exc, pytest.skip.Exception):
            ACCEPTANCE_LINES.append(f"[SKIP] {tag} {title}: {exc}")
        else:
            ACCEPTANCE_LINES.append(f"[FAIL] {tag} {title}: {type(exc).__name__}: {exc}")
        raise
    took = time.perf_counter() - start
    detail = info.get("detail", "")
    ACCEPTANCE_LINES.append(f"[PASS] {tag} {title}: {detail} ({took:.2f} s)")


def counts(row):
    return row.rank2, row.n_parallel_classes, row.n_resolutions, row.n_max_compatible_sets, row.embed_valid


def test_ac1_pg16_construction():
    with criterion("AC1", "PG(2,16) construction") as info:
        start = time.perf_counter()
        plane = build_pg2(Field.of_order(16))
        report = validate_plane(plane)
        took = time.perf_counter() - start
        assert report.valid, report.summary()
        assert plane.num_points == 273 and len(plane.lines) == 273
        assert {len(l) for l in plane.lines} == {17}
        # every pair of points on exactly one line, counted directly
        pairs = Counter(p for l in plane.lines for p in itertools.combinations(l, 2))
        assert len(pairs) == 273 * 272 // 2 and set(pairs.values()) == {1}
        assert took < 1.0, f"took {took:.2f} s"
        info["detail"] = f"273 points, 273 lines of 17, all {len(pairs)} pairs covered once"


@pytest.fixture(scope="module")
def regular16():
    plane = build_pg2(Field.of_order(16))
    start = time.perf_counter()
    result = run_pipeline(plane, regular_hyperoval(plane), hyperoval_id="2", plane_label="PG(2,16)")
    return result, time.perf_counter() - start


def test_ac2_regular_hyperoval_pipeline(regular16):
    with criterion("AC2", "regular hyperoval of PG(2,16)") as info:
        result, took = regular16
        got = counts(result.row)[:4]
        assert got == (65, 221, 137, 1), got
        assert all(len(s.resolutions) == 18 for s in result.compatible_sets)
        assert took <= 1800, f"took {took:.0f} s"
        info["detail"] = f"rank 65, 221 classes, 137 resolutions, 1 compatible 18-set, pipeline {took:.2f} s"


def test_ac3_embedding_round_trip(regular16):
    with criterion("AC3", "embedding of the unique 18-set") as info:
        result, _ = regular16
        plane = embed(result.design, result.compatible_sets[0], result.resolutions, result.classes)
        report = validate_plane(plane)
        assert report.valid, report.summary()
        assert plane.order == 16 and plane.num_points == 273
        back = extract_design(plane, embedded_arc(plane))
        assert sorted(back.blocks) == sorted(result.design.blocks)
        assert len(back.blocks) == 255
        info["detail"] = "valid order-16 plane, all 255 blocks recovered"


def test_ac4_pg4_against_brute_force():
    with criterion("AC4", "PG(2,4) / K6 against brute force") as info:
        start = time.perf_counter()
        plane = build_pg2(Field.of_order(4))
        darc = dual_arc(plane, regular_hyperoval(plane))
        design = extract_design(darc.plane, darc)
        classes = parallel_classes(design)
        res = resolutions(design, classes)
        csets = max_compatible_sets(design, res, classes)
        rank = rank2(incidence_matrix(design))
        embedded = embed(design, csets[0], res, classes)
        took = time.perf_counter() - start

        blocks = [frozenset(b) for b in design.blocks]
        assert (design.params.v, design.params.k, len(blocks)) == (6, 2, 15)
        # classes: every 3 of the 15 blocks that partition the points
        brute_classes = [c for c in itertools.combinations(range(15), 3) if len(frozenset().union(*(blocks[i] for i in c))) == 6]
        assert sorted(c.blocks for c in classes) == brute_classes and len(classes) == 15
        # resolutions: every 5 of the 15 classes that use each block once
        brute_res = [
            r for r in itertools.combinations(range(15), 5)
            if len({b for i in r for b in brute_classes[i]}) == 15
        ]
        assert sorted(r.classes for r in res) == brute_res and len(res) == 6
        res_sets = [frozenset(frozenset(blocks[b] for b in brute_classes[i]) for i in r) for r in brute_res]
        assert compatible_sets(res_sets, 6) == [tuple(range(6))]
        assert len(csets) == 1 and len(csets[0].resolutions) == derive_params(6, 2, 1).max_compatible == 6
        assert rank == gf2_rank_by_kernel(incidence_matrix(design).to_array().tolist()) == 3**2 - 2**2
        assert validate_plane(embedded).valid and embedded.order == 4
        assert is_projective_plane(embedded.lines, 4)
        assert took < 1.0, f"took {took:.2f} s"
        info["detail"] = "15 classes, 6 resolutions, 1 compatible 6-set, rank 5, valid order-4 plane"


def test_ac5_clique_engine_oracle():
    with criterion("AC5", "clique engine vs subset scan") as info:
        rnd = random.Random(20240601)
        checked = 0
        for _ in range(200):
            n = rnd.randint(0, 18)
            p = rnd.uniform(0.05, 0.95)
            edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rnd.random() < p]
            g = BitGraph.from_edges(n, edges)
            eset = {frozenset(e) for e in edges}
            for size in range(2, 7):
                assert enumerate_cliques(g, size) == cliques_by_subset_scan(n, eset, size), (n, size)
                checked += 1
        info["detail"] = f"200 graphs, {checked} (graph, size) pairs agree"


def test_ac6_bundled_pg16_rows(tmp_path, data_dir):
    with criterion("AC6a", "reference rows for PG(2,16)") as info:
        manifest = [
            ManifestRow("1", "PG(2,16)", "PG(2,16)", str(data_dir / "pg16_lunelli_sce.txt")),
            ManifestRow("2", "PG(2,16)", "PG(2,16)", "regular"),
        ]
        rows = run_batch(manifest, tmp_path)
        for row in rows:
            assert row.error is None, row.error
            expected = KNOWN_BY_KEY[(row.plane_label, row.hyperoval_id)]
            assert counts(row)[:3] == expected, (row.hyperoval_id, counts(row))
            assert row.n_max_compatible_sets == 1 and row.embed_valid
        assert rank_histogram(rows) == {65: 2}
        info["detail"] = "(65, 153, 18) and (65, 221, 137), one compatible set each, both embed"


@pytest.mark.slow
def test_ac6_full_dataset(tmp_path):
    with criterion("AC6b", "full dataset against reference counts") as info:
        root = os.environ.get(DATA_ENV)
        manifest = Path(root) / "manifest.csv" if root else None
        if manifest is None or not manifest.exists():
            pytest.skip(f"set ${DATA_ENV} to a directory holding manifest.csv")
        rows = run_batch(read_manifest(manifest), tmp_path, jobs=os.cpu_count() or 1)
        failed = [(r.plane_label, r.hyperoval_id, r.error) for r in rows if r.error]
        assert not failed, failed
        unknown = []
        for row in rows:
            expected = KNOWN_BY_KEY.get((row.plane_label, row.hyperoval_id))
            if expected is None:
                unknown.append((row.plane_label, row.hyperoval_id))
                continue
            assert counts(row)[:3] == expected, (row.plane_label, row.hyperoval_id, counts(row))
        bad = [(r.plane_label, r.hyperoval_id) for r in rows if r.n_max_compatible_sets != 1 or not r.embed_valid]
        assert not bad, bad
        if len(rows) == sum(RANK_FREQUENCIES.values()):
            assert rank_histogram(rows) == RANK_FREQUENCIES, rank_histogram(rows)
            hist = "rank histogram reproduced"
        else:
            hist = f"{len(rows)} rows, histogram not compared"
        info["detail"] = f"{len(rows) - len(unknown)} rows match, {len(unknown)} without a table entry, {hist}"


def test_ac7_property_suites(pg4, pg16):
    with criterion("AC7", "design, resolution, rank and determinism properties") as info:
        for pipe in (pg4, pg16):
            d = pipe.design
            assert validate_design(d).valid
            for c in pipe.classes:
                pts = Counter(p for b in c.blocks for p in d.blocks[b])
                assert set(pts) == set(range(d.params.v)) and set(pts.values()) == {1}
            for r in pipe.resolutions:
                used = Counter(b for c in r.classes for b in pipe.classes[c].blocks)
                assert set(used) == set(range(d.params.b)) and set(used.values()) == {1}
        a = incidence_matrix(pg16.design).to_array()
        rnd = np.random.default_rng(5)
        for _ in range(5):
            shuffled = a[rnd.permutation(a.shape[0])][:, rnd.permutation(a.shape[1])]
            assert rank2(BitMatrix.from_array(shuffled)) == 65
        for jobs in (2, 3):
            classes = parallel_classes(pg16.design, jobs=jobs)
            res = resolutions(pg16.design, classes, jobs=jobs)
            csets = max_compatible_sets(pg16.design, res, classes, jobs=jobs)
            assert (classes, res, csets) == (pg16.classes, pg16.resolutions, pg16.csets), jobs
        info["detail"] = "axioms, partitions, rank under 5 shuffles, identical output for jobs 1/2/3"
