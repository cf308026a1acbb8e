#!/usr/bin/env python3
"""Refresh the bundled b-file fixtures from oeis.org.

Not part of the test suite or CLI: the repository ships static fixtures
so every cross-check runs offline.  Run this only when you want to
extend or re-validate them against the live database; it refuses to
overwrite a fixture whose overlapping terms disagree with the download.
"""

import sys
import urllib.request
from pathlib import Path

SEQUENCES = ["A007405", "A050488", "A355164", "A355167"]
DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "flatstir" / "data"


def fetch(sequence_id: str) -> str:
    number = sequence_id.lstrip("A")
    url = f"https://oeis.org/{sequence_id}/b{number}.txt"
    with urllib.request.urlopen(url, timeout=30) as resp:
        return resp.read().decode("utf-8")


def parse(text: str) -> dict[int, int]:
    terms = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        index, value = line.split()
        terms[int(index)] = int(value)
    return terms


def main() -> int:
    for sequence_id in SEQUENCES:
        path = DATA_DIR / f"b{sequence_id.lstrip('A')}.txt"
        downloaded = parse(fetch(sequence_id))
        local = parse(path.read_text()) if path.exists() else {}
        clashes = {i: (local[i], downloaded[i]) for i in local if i in downloaded
                   and local[i] != downloaded[i]}
        if clashes:
            print(f"{sequence_id}: refusing to overwrite, terms disagree: {clashes}")
            return 1
        with open(path, "w") as fh:
            for index in sorted(downloaded):
                fh.write(f"{index} {downloaded[index]}\n")
        print(f"{sequence_id}: wrote {len(downloaded)} terms to {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
