"""Sweep k CP2 # l CP2bar # m (S2xS2) over a box and report which survive the filter."""

import argparse

from torusfan.surfaces import ConnectedSum, donaldson_filter, has_integral_todd, invariants


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("bounds", type=int, nargs=3, metavar=("KMAX", "LMAX", "MMAX"), default=[5, 5, 5])
    ap.add_argument("--rejected", action="store_true", help="also list rejected triples with witnesses")
    args = ap.parse_args()
    kmax, lmax, mmax = args.bounds
    for k in range(kmax + 1):
        for l in range(lmax + 1):
            for m in range(mmax + 1):
                if (k, l, m) == (0, 0, 0):
                    continue
                c = ConnectedSum(k, l, m)
                inv = invariants(c)
                if not has_integral_todd(c):
                    continue
                res = donaldson_filter(c)
                if res.admissible:
                    print(f"admissible  {k} {l} {m}  chi={inv.euler} sigma={inv.signature} todd={inv.todd}  {c}")
                elif args.rejected:
                    y1, y2 = res.witness
                    print(f"rejected    {k} {l} {m}  split {y1} | {y2}")


if __name__ == "__main__":
    main()
