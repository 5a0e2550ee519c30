"""Reproduce the accuracy-vs-dimension experiment on a generated graph.

Sweeps k, building one model per dimension count, and reports how many
pair queries stay definite after compression and how often the fuzzy
answers land on the right side of 0.5. Smaller k compresses harder; the
CSV lets you study the trade-off (the interesting trends are very much
graph-dependent).
"""

from fuzzmap import preferential_attachment_graph, reports_to_csv, sweep_k


def main():
    g = preferential_attachment_graph(600, 8, seed=42)
    print(f"social-style graph: n={g.n}, avg degree {2 * g.num_edges / g.n:.1f}")
    print("sweeping k = 2..8 (same build seed per k)...\n")

    reports = sweep_k(g, list(range(2, 9)), quantize=True, seed=42, sample_size=None)
    print(reports_to_csv(reports))

    print("reading the rows:")
    for rep in reports:
        yes = "n/a" if rep.fuzzy_sound_yes_pct is None else f"{rep.fuzzy_sound_yes_pct:5.1f}%"
        no = "n/a" if rep.fuzzy_sound_no_pct is None else f"{rep.fuzzy_sound_no_pct:5.1f}%"
        print(f"  k={rep.k}: {rep.definite_pct:5.1f}% definite "
              f"(all correct), sound fuzzy yes {yes} / no {no}")


if __name__ == "__main__":
    main()
