"""Census of periodicity and transfer over the small-ring catalog.

Sweeps every ring in the catalog up to a chosen order for one family
and prints the verdict table: predicted vs classified vs brute-forced
periodicity, exact periods, and all transfer pairs.

Run with  python3 demos/transfer_census.py [max_order] [family]
"""

import sys

from ringwalk import verify


def main():
    max_order = int(sys.argv[1]) if len(sys.argv) > 1 else 16
    family = sys.argv[2] if len(sys.argv) > 2 else "unitary"
    records = verify.sweep(max_order, family)

    header = (f"{'ring':<16} {'per?':<5} {'period':<7} "
              f"{'transfer pairs':<26} status")
    print(f"family: {family}, orders 2..{max_order}, "
          f"{len(records)} rings\n")
    print(header)
    print("-" * len(header))
    for rec in records:
        periodic = "yes" if rec.classifier_periodic else "no"
        period = rec.period if rec.period is not None else "-"
        pairs = ", ".join(
            f"{p.source}->{p.target}@{p.time}" for p in rec.pst_pairs
            if p.source < p.target) or "-"
        if pairs != "-" and not rec.connected:
            pairs += " (component)"
        print(f"{rec.token:<16} {periodic:<5} {period!s:<7} "
              f"{pairs:<26} {rec.status}")

    positives = sorted(r.token for r in records if r.pst_positive)
    print(f"\nrings with perfect state transfer: {positives}")
    bad = [r.token for r in records if not r.ok]
    print(f"internal disagreements: {bad or 'none'}")


if __name__ == "__main__":
    main()
