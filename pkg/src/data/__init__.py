"""Published tables shipped with the package, with their checksum manifest."""

from pathlib import Path

DATA_DIR = Path(__file__).parent
CHECKSUMS_FILE = "checksums.json"
ERRATA_FILE = "errata.json"
