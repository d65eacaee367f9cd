#!/usr/bin/env python3
"""Independent class counts for T_n.

Uses the rotation characterization (some rotation of the image sequence is
non-decreasing / non-increasing), not descent counting, so it shares no logic
with the C++ implementation.

    count_classes.py N            print the counts line for N
    count_classes.py N BINARY     compare against `BINARY count --n N`
"""
import itertools
import subprocess
import sys


def rotations(seq):
    return [seq[i:] + seq[:i] for i in range(len(seq))]


def cyclic(seq):
    return any(all(r[k] <= r[k + 1] for k in range(len(r) - 1)) for r in rotations(seq))


def anticyclic(seq):
    return any(all(r[k] >= r[k + 1] for k in range(len(r) - 1)) for r in rotations(seq))


def counts(n):
    total = op = orr = p = both = low = 0
    for images in itertools.product(range(n), repeat=n):
        images = list(images)
        c, a = cyclic(images), anticyclic(images)
        total += 1
        op += c
        orr += a
        p += c or a
        both += c and a
        low += (c or a) and len(set(images)) <= 2
    return total, op, orr, p, both, low


def line(n):
    total, op, orr, p, both, low = counts(n)
    consistent = p == op + orr - both and both == low
    return (f"n={n} total={total} op={op} or={orr} p={p} op_and_or={both} "
            f"low_rank_in_p={low} consistent={'true' if consistent else 'false'}")


def main():
    n = int(sys.argv[1])
    expected = line(n)
    if len(sys.argv) < 3:
        print(expected)
        return 0
    got = subprocess.run([sys.argv[2], "count", "--n", str(n)], capture_output=True, text=True, check=True)
    actual = got.stdout.strip()
    print("oracle:", expected)
    print("binary:", actual)
    return 0 if actual == expected else 1


if __name__ == "__main__":
    sys.exit(main())
