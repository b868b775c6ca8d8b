#!/usr/bin/env python3
"""Certify every well-formed index-one family up to a weight bound and
summarize the verdict distribution.

Usage: python scripts/enumerate_families.py [n] [max_weight]
"""

import sys
from collections import Counter

from wfano.engine import enumerate_data


def main() -> None:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    max_weight = int(sys.argv[2]) if len(sys.argv) > 2 else 10
    verdicts = Counter()
    worst = None
    for row in enumerate_data(n=n, max_weight=max_weight, index=1):
        cert = row.certificate
        verdicts[cert.verdict] += 1
        key = cert.anticanonical_bound
        if worst is None or key < worst[0]:
            worst = (key, row.datum.ambient.text(), row.datum.d)
    total = sum(verdicts.values())
    print(f"families of dimension {n} with weights <= {max_weight}: {total}")
    for verdict, count in sorted(verdicts.items()):
        print(f"  {verdict:<14} {count}")
    if worst:
        print(f"smallest anticanonical lower bound: {worst[0]} "
              f"for P({worst[1]}), degree {worst[2]}")


if __name__ == "__main__":
    main()
