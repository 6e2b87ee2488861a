#!/usr/bin/env python3
"""End-to-end figure pipeline: CSV from the CLI, panels from figplots.

Run:  python3 demos/figure_pipeline.py
Requires the figplots package (see figplots/ at the repository root).
"""

import subprocess
import sys
from pathlib import Path

out_dir = Path("demo-output")
out_dir.mkdir(exist_ok=True)
csv_path = out_dir / "real_cyclic_1e5.csv"

print("computing M(O_K) for all real cyclic quartic fields with disc <= 1e5 ...")
subprocess.run(
    [sys.executable, "-m", "quartic_mahler.cli", "figure-data",
     "--max-disc", "100000", "--out", str(csv_path)],
    check=True,
)
print(f"wrote {csv_path}")

for panel in ("raw", "norm14", "norm16"):
    target = out_dir / f"panel_{panel}"
    subprocess.run(
        [sys.executable, "-m", "figplots.cli", str(csv_path),
         "--panel", panel, "--out", str(target)],
        check=True,
    )
    print(f"rendered {target}.png / {target}.svg")
