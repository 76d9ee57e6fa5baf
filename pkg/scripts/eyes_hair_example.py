"""Run SymCA on the eye/hair colour interval table and draw the principal plane.

    python scripts/eyes_hair_example.py [--out-dir out/]
"""

import argparse
from pathlib import Path

from symca.datasets import eyes_hair_table
from symca.fileio import write_result_json
from symca.projection import symca
from symca.svg import render_principal_plane_svg


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", default="out")
    args = ap.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    res = symca(eyes_hair_table())
    ca = res.ca
    print("eigenvalues :", " ".join(f"{v:.6f}" for v in ca.eigenvalues))
    print("inertia (%) :", " ".join(f"{100 * v:.2f}" for v in ca.inertia_share))
    print()
    print(f"{'modality':<10} {'axis 1':>22} {'axis 2':>22} {'area':>9}")
    for side, labels, lo, hi in (
        ("row", ca.row_labels, res.row_lo, res.row_hi),
        ("column", ca.col_labels, res.col_lo, res.col_hi),
    ):
        for k, label in enumerate(labels):
            cells = [f"[{lo[a, k]:+.4f}, {hi[a, k]:+.4f}]" for a in (0, 1)]
            print(f"{label:<10} {cells[0]:>22} {cells[1]:>22} {res.plane_area(side, k):9.5f}")

    (out / "eyes_hair_result.json").write_bytes(write_result_json(res))
    (out / "eyes_hair_plane.svg").write_bytes(render_principal_plane_svg(res))
    print(f"\nwrote {out / 'eyes_hair_result.json'} and {out / 'eyes_hair_plane.svg'}")


if __name__ == "__main__":
    main()
