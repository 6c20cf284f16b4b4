"""Reproduce the seven-vertex worked example: trajectory, decoded walk labels, class."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from holonomy.classification import classify_graph, stabilization_analysis
from holonomy.converting import is_sentinel, iterate_convert, reverse_depth
from holonomy.io import parse_edge_list

ROOT = Path(__file__).resolve().parent.parent


@dataclass(frozen=True)
class Config:
    fixture: Path = ROOT / "fixtures" / "hq1.edges"
    steps: int = 3
    reverse_cap: int = 5


def run(cfg: Config) -> None:
    g = parse_edge_list(cfg.fixture.read_text())
    traj = iterate_convert(g, cfg.steps)
    print("step   n   m  nu  form")
    for j, s in enumerate(traj.steps):
        print(f"{j:>4} {s.n:>3} {s.m:>3} {s.nu:>3}  {s.matrix_form.name}")

    for j in range(2, cfg.steps + 1):
        walks = sorted(
            "".join(lab) for lab in traj.labels(j).values() if not any(map(is_sentinel, lab))
        )
        print(f"\nstep {j}: {len(walks)} sentinel-free labels")
        print("  " + " ".join(walks))

    report = classify_graph(g)
    stab = stabilization_analysis(g, cfg.steps + 3)
    print(f"\nclass {report.graph_class.short}, j_max {report.j_max}, stabilization step {report.stabilization_step}")
    print(f"observed: stabilized={stab.stabilized} at step {stab.step} with nu {stab.nu}")
    print(f"reverse depth of the last graph (cap {cfg.reverse_cap}): {reverse_depth(traj.final, cfg.reverse_cap)}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fixture", type=Path, default=Config.fixture)
    parser.add_argument("--steps", type=int, default=Config.steps)
    args = parser.parse_args()
    run(Config(fixture=args.fixture, steps=args.steps))


if __name__ == "__main__":
    main()
