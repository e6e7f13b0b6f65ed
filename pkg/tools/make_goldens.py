"""Regenerate the golden text files under src/levelkit/data.

The outputs were checked row by row against the published tables and lists
before being frozen; rerun only after such a review.
"""

import sys
from pathlib import Path

from levelkit.checks import FILTER_PREDICATES, GOLDEN_LEVEL2_DIMS, golden_texts

OUT = Path(__file__).resolve().parent.parent / "src" / "levelkit" / "data"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    texts = golden_texts()
    for name, text in texts.items():
        (OUT / name).write_text(text, encoding="utf-8")
    print(f"wrote {len(texts)} files ({len(GOLDEN_LEVEL2_DIMS)} dims, "
          f"{len(FILTER_PREDICATES)} predicates) to {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
