"""Benchmark the compiled alignment kernel against the pure-Python twin.

Run from a checkout with the package installed::

    python benchmarks/bench_alignment.py
    python benchmarks/bench_alignment.py --sizes 500,2000,8000 --repeat 5

Both kernels compute identical (substitutions, deletions, insertions)
triples; the point of the table is the cost of the quadratic DP loop,
which is why hour-long transcript pairs (~10k words) want the extension.
"""

from __future__ import annotations

import argparse
import random
import statistics
import time
from array import array

from transcriptkit import alignment
from transcriptkit._edit_align_py import align_counts as align_pure

try:
    from transcriptkit._edit_align import align_counts as align_compiled
except ImportError:
    align_compiled = None


def make_pair(size: int, rng: random.Random) -> tuple[array, array]:
    # ~7% token vocabulary and a mutated copy: roughly what a real
    # pre-transcript vs corrected transcript pair looks like.
    vocab = max(2, size // 15)
    ref = [rng.randrange(vocab) for _ in range(size)]
    hyp = list(ref)
    for _ in range(max(1, size // 6)):
        op = rng.randrange(3)
        pos = rng.randrange(len(hyp)) if hyp else 0
        if op == 0 and hyp:
            hyp[pos] = rng.randrange(vocab)
        elif op == 1 and hyp:
            del hyp[pos]
        else:
            hyp.insert(pos, rng.randrange(vocab))
    return array("i", ref), array("i", hyp)


def best_of(fn, ref, hyp, repeat: int) -> tuple[float, tuple[int, int, int]]:
    timings = []
    result = None
    for _ in range(repeat):
        started = time.perf_counter()
        result = tuple(fn(ref, hyp))
        timings.append(time.perf_counter() - started)
    return min(timings), result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="200,500,1500", help="comma-separated sequence lengths")
    parser.add_argument("--repeat", type=int, default=3, help="repetitions per measurement")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    rng = random.Random(args.seed)

    print(f"active backend: {alignment.backend_name()}")
    if align_compiled is None:
        print("compiled kernel unavailable; timing the pure-Python kernel only\n")
    header = f"{'size':>7}  {'pure-python':>12}  {'c-extension':>12}  {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for size in sizes:
        ref, hyp = make_pair(size, rng)
        pure_time, pure_counts = best_of(align_pure, ref, hyp, args.repeat)
        if align_compiled is not None:
            ext_time, ext_counts = best_of(align_compiled, ref, hyp, args.repeat)
            if ext_counts != pure_counts:
                raise SystemExit(f"backend mismatch at size {size}: {ext_counts} != {pure_counts}")
            print(f"{size:>7}  {pure_time:>11.4f}s  {ext_time:>11.4f}s  {pure_time / ext_time:>7.1f}x")
        else:
            print(f"{size:>7}  {pure_time:>11.4f}s  {'-':>12}  {'-':>8}")

    cells = statistics.fmean(sizes) ** 2
    print(f"\n(medium size ~{cells / 1e6:.1f}M DP cells; a pair of hour-long transcripts is ~10^8)")


if __name__ == "__main__":
    main()
