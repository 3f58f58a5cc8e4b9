"""Classify every built-in fixture (or the given JSON files) and print a table."""

import argparse
import sys

from torusfan import fixtures as fx
from torusfan.documents import DocumentError, parse_multifan
from torusfan.multifan import classify

COLUMNS = ("nonsingular", "ordinary_fan", "complete", "unit_weights", "todd", "v_independent")


def load(paths):
    if not paths:
        return fx.corpus()
    out = {}
    for p in paths:
        try:
            with open(p, encoding="utf-8") as fh:
                out[p] = parse_multifan(fh.read())
        except (OSError, DocumentError) as exc:
            sys.exit(f"{p}: {exc}")
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("files", nargs="*")
    ap.add_argument("--samples", type=int, default=64)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    fans = load(args.files)
    width = max(len(n) for n in fans)
    print(f"{'fan':<{width}}  " + "  ".join(COLUMNS) + "  toric")
    for name, f in fans.items():
        r = classify(f, args.samples, args.seed)
        cells = [str(getattr(r, c)).lower().ljust(len(c)) for c in COLUMNS]
        print(f"{name:<{width}}  " + "  ".join(cells) + f"  {str(r.is_toric_fan).lower()}")


if __name__ == "__main__":
    main()
