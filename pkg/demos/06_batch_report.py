"""Batch runs over a manifest of planes and hyperovals, with a rank histogram.

Set MAXARC_DATA to a directory with manifest.csv to run a full dataset;
otherwise the two PG(2,16) hyperovals bundled with the tests are used.
"""

import os
import sys
import tempfile
from pathlib import Path

from maxarc.pipeline import DATA_ENV, ManifestRow, format_table, rank_histogram, read_manifest, run_batch

here = Path(__file__).resolve().parent
root = os.environ.get(DATA_ENV)
if root and (Path(root) / "manifest.csv").exists():
    manifest = read_manifest(Path(root) / "manifest.csv")
else:
    manifest = [
        ManifestRow("1", "PG(2,16)", "PG(2,16)", str(here.parent / "tests" / "data" / "pg16_lunelli_sce.txt")),
        ManifestRow("2", "PG(2,16)", "PG(2,16)", "regular"),
    ]

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="maxarc-"))
rows = run_batch(manifest, out, jobs=os.cpu_count() or 1)
print(format_table(rows, "csv"))
print("2-rank histogram:", rank_histogram(rows))
print("artifacts in", out)
