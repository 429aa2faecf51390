"""Regenerate the bundled zoo JSON files and the expected classify outputs."""

from pathlib import Path

from spinalbook import zoo
from spinalbook.cli import classify
from spinalbook.io import dumps, lefschetz_to_json, multicurve_to_json, sob_to_json

OUT = Path(__file__).resolve().parents[1] / "src" / "spinalbook" / "zoo"


def main() -> None:
    (OUT / "expected").mkdir(exist_ok=True)
    for name, entry in zoo.ENTRIES.items():
        obj = entry.build()
        data = {"book": sob_to_json, "multicurve": multicurve_to_json, "lefschetz": lefschetz_to_json}[entry.kind](obj)
        (OUT / f"{name}.json").write_text(dumps(data))
        if entry.kind == "book":
            (OUT / "expected" / f"{name}.classify.json").write_text(dumps(classify(obj)))
        print("wrote", name)


if __name__ == "__main__":
    main()
