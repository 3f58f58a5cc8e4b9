"""Write the built-in fixture corpus as JSON documents into data/."""

import argparse
from pathlib import Path

from torusfan import fixtures as fx
from torusfan.documents import serialize_multifan

EXTRA = {
    "f0": fx.line(),
    "f1": fx.projective_plane(),
    "f2": fx.double_wrap(),
    "f3": fx.hirzebruch(2),
    "square_pair": fx.cp1_cp1(),
    "punctured_cp2": fx.punctured_projective_plane(),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=Path(__file__).resolve().parents[1] / "data", type=Path)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    items = dict(EXTRA)
    items.update({name.lower().replace("^", "_pow"): f for name, f in fx.corpus().items()})
    for name, f in sorted(items.items()):
        path = args.out / f"{name}.json"
        path.write_text(serialize_multifan(f, {"name": name}) + "\n", encoding="utf-8")
        print(path)


if __name__ == "__main__":
    main()
