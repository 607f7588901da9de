"""Regenerate the bundled corpus group files under src/pikernels/data/corpus."""

import json
import sys
from pathlib import Path

from pikernels.groups import CORPUS_NAMES, named_group

OUT = Path(__file__).resolve().parent.parent / "src" / "pikernels" / "data" / "corpus"

# 2-modular Brauer table of A5 on the 2-regular classes 1a, 3a, 5a, 5b
# (b5 = zeta5 + zeta5^4, b5* = zeta5^2 + zeta5^3), in this corpus' class order.
B5 = {"n": 5, "coeffs": [[-1, 1], [0, 1], [-1, 1], [-1, 1]]}
B5S = {"n": 5, "coeffs": [[0, 1], [0, 1], [1, 1], [1, 1]]}
A5_BRAUER_2 = {
    "group": "a5",
    "mode": "brauer",
    "p": 2,
    "classes": [{"order": 1, "size": 1}, {"order": 3, "size": 20},
                {"order": 5, "size": 12}, {"order": 5, "size": 12}],
    "chars": [[1, 1, 1, 1], [2, -1, B5, B5S], [2, -1, B5S, B5], [4, 1, -1, -1]],
}


def main() -> int:
    OUT.mkdir(parents=True, exist_ok=True)
    for name in CORPUS_NAMES:
        G = named_group(name)
        obj = G.to_json()
        if name == "a5":
            obj["tables"] = ["a5_brauer2.table.json"]
        (OUT / f"{name}.json").write_text(json.dumps(obj) + "\n")
    (OUT / "a5_brauer2.table.json").write_text(json.dumps(A5_BRAUER_2, indent=1) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
