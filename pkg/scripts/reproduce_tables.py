"""Print the reception-point and Rx-output grids next to the reference values."""
import argparse
import time

from mpmspread import reference
from mpmspread.pas import LocalScatterConfig
from mpmspread.runner import RunConfig, table_reception, table_rx_output


def show(title, cells, value, target):
    print(f"\n{title}")
    print(f"{'scenario':>8} {'DS':>5} {'tdl':>6} {'beam':>4} {'model':>8} {'ref':>6} {'rel':>6}")
    for c in cells:
        got = value(c.result)
        ref = target(c.scenario.id, c.profile.value, c.antenna)
        print(f"{c.scenario.id:>8} {c.scenario.ds_ns:5g} {c.profile.value:>6} {c.antenna:>4} "
              f"{got:8.2f} {ref:6.1f} {(got - ref) / ref:+6.0%}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=200_000)
    ap.add_argument("--kappa", type=float, default=50.0)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    base = RunConfig(local=LocalScatterConfig(args.kappa), n_per_component=args.samples, base_seed=args.seed)
    t0 = time.perf_counter()
    show("AS at the reception point (deg)", table_reception(base),
         lambda r: r.as_reception_deg, reference.reception_target)
    show("AS at the Rx antenna output (deg)", table_rx_output(base),
         lambda r: r.as_rx_output_deg, reference.rx_output_target)
    print(f"\n{time.perf_counter() - t0:.0f} s")


if __name__ == "__main__":
    main()
