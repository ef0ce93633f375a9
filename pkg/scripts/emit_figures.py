"""Write curve files for every direction sweep (figures 2-9) and the
delay-spread curves (figure 10), optionally rendering PNGs with matplotlib."""
import argparse
import subprocess
import sys
from pathlib import Path


def render(outdir: Path) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    groups: dict[str, list[Path]] = {}
    for path in sorted(outdir.glob("fig*.dat")):
        groups.setdefault(path.name.split("_")[0], []).append(path)
    for fig, paths in groups.items():
        ax = plt.figure(figsize=(5, 3.5)).gca()
        for path in paths:
            x, y = np.loadtxt(path, unpack=True)
            ax.plot(x, y, marker=".", label=path.stem.split("_", 1)[1])
        xlabel = open(paths[0]).readline().split()[1]
        ax.set_xlabel(xlabel)
        ax.set_ylabel("AS (deg)")
        ax.legend(fontsize=7)
        ax.grid(alpha=0.3)
        plt.tight_layout()
        plt.savefig(outdir / f"{fig}.png", dpi=120)
        plt.close()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="figures")
    ap.add_argument("--samples", default="200000")
    ap.add_argument("--grid", default="0:180:5")
    ap.add_argument("--png", action="store_true", help="also render PNGs (needs matplotlib)")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    common = ["--outdir", str(outdir), "--samples", args.samples]
    for fig in range(2, 10):
        for tdl in ("TDL-A", "TDL-B"):
            subprocess.run([sys.executable, "-m", "mpmspread", "plotdata", "--figure", str(fig), "--tdl", tdl,
                            "--grid", args.grid, *common], check=True)
    for tx in ("nba", "wba"):
        for tdl in ("TDL-A", "TDL-B"):
            subprocess.run([sys.executable, "-m", "mpmspread", "plotdata", "--figure", "10", "--tdl", tdl,
                            "--tx", tx, *common], check=True)
    if args.png:
        render(outdir)


if __name__ == "__main__":
    main()
