"""Compare the reduced cover search and the symmetry predicate against the
brute-force oracles on many random inputs, reporting agreement and timing."""

import argparse
import random
import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from oracles import exhaustive_unbranched  # noqa: E402
from spinalbook.covers import exists_cover  # noqa: E402
from spinalbook.obstructions import brute_force_symmetry_oracle, is_symmetric  # noqa: E402
from spinalbook.sampling import random_book, random_cover_spec  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--covers", type=int, default=2000)
    ap.add_argument("--books", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    by_degree: Counter = Counter()
    mismatches = []
    t_search = t_oracle = 0.0
    for _ in range(args.covers):
        spec = random_cover_spec(rng, max_degree=4)
        t0 = time.perf_counter()
        got = exists_cover(spec).exists
        t1 = time.perf_counter()
        want = exhaustive_unbranched(spec.base.genus, spec.boundary_types, spec.degree, spec.require_connected)
        t_oracle += time.perf_counter() - t1
        t_search += t1 - t0
        by_degree[spec.degree, got] += 1
        if got != want:
            mismatches.append(spec)
    print(f"covers: {args.covers - len(mismatches)}/{args.covers} agree; "
          f"search {t_search:.2f}s, oracle {t_oracle:.2f}s")
    for (k, exists), n in sorted(by_degree.items()):
        print(f"  degree {k}, exists={exists}: {n}")
    for spec in mismatches[:5]:
        print("  MISMATCH", spec)

    bad = 0
    t0 = time.perf_counter()
    for _ in range(args.books):
        sob = random_book(rng, tori=rng.random() < 0.2)
        bad += bool(is_symmetric(sob)) != brute_force_symmetry_oracle(sob)
    print(f"symmetry: {args.books - bad}/{args.books} agree in {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
