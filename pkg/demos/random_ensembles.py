"""Monte Carlo means against the exact expectations."""
import sys

from viskit import ensembles


def main(trials=2000):
    for model, stat in (("semibar", "edges"), ("semiarc", "center_only")):
        for n, k in ((50, 0), (100, 1), (200, 1)):
            st = ensembles.monte_carlo(model, n, k, stat, trials, seed=11)
            ref = "n/a" if st.exact_reference is None else f"{float(st.exact_reference):.3f}"
            print(f"{model:7s} {stat:11s} n={n:3d} k={k} mean={st.mean:9.3f} "
                  f"+-{st.confidence_radius:.3f} {st.reference_kind}={ref}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 2000)
