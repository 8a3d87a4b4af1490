"""Recompute the aggregates CSV of `observa mc` from its records CSV."""

import csv
import os
import statistics
import subprocess
import sys
import tempfile


def sig6(x):
    return float("%.6g" % x)


def moments(xs):
    if not xs:
        return 0.0, 0.0
    mean = statistics.fmean(xs)
    std = statistics.stdev(xs, mean) if len(xs) > 1 else 0.0
    return mean, std


def main(cli):
    with tempfile.TemporaryDirectory() as tmp:
        records = os.path.join(tmp, "records.csv")
        aggregates = os.path.join(tmp, "aggregates.csv")
        subprocess.run(
            [cli, "mc", "--kinds", "sf,csf", "--n-values", "100:400:100",
             "--realizations", "15", "--jobs", "2", "--quiet",
             "--records", records, "--aggregates", aggregates],
            check=True)
        with open(records, newline="") as f:
            rows = list(csv.DictReader(f))
        with open(aggregates, newline="") as f:
            agg = list(csv.DictReader(line for line in f if not line.startswith("#")))

    groups = {}
    for r in rows:
        for key in ((r["kind"], r["n"]), (r["kind"], "all")):
            groups.setdefault(key, []).append(r)

    failures = 0
    for a in agg:
        group = groups[(a["kind"], a["n"])]
        counts = [float(r["num_contractions"]) for r in group]
        sizes = [float(r["mean_contraction_size"]) for r in group if int(r["num_contractions"]) > 0]
        columns = {
            "num_contractions": moments(counts),
            "contraction_size": moments(sizes),
            "gcc": moments([float(r["gcc"]) for r in group]),
            "average_degree": moments([float(r["average_degree"]) for r in group]),
        }
        expected = {"realizations": len(group), "size_realizations": len(sizes)}
        for name, (mean, std) in columns.items():
            expected["mean_" + name] = sig6(mean)
            expected["std_" + name] = sig6(std)
        for col, want in expected.items():
            got = float(a[col])
            if abs(got - want) > 1e-9 * max(1.0, abs(want)):
                print(f"mismatch {a['kind']} n={a['n']} {col}: csv {got} recomputed {want}")
                failures += 1
    print(f"checked {len(agg)} aggregate rows from {len(rows)} records, {failures} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
