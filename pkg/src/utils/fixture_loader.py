import csv
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from ..data import CHECKSUMS_FILE, DATA_DIR, ERRATA_FILE
from ..models.claim_models import TableFixture
from ..models.errors import InvalidParameterError, TGraphError
from .file_handler import FileHandler

logger = logging.getLogger(__name__)

DISTANCE_TABLE = "T1-distances"
COMPONENT_TABLES = {2: "T2-components", 3: "T3-components"}

_FILES = {
    DISTANCE_TABLE: "table1_distances.csv",
    "T2-components": "table2_components.csv",
    "T3-components": "table3_components.csv",
}


class FixtureLoader:
    """
    Fixture Loader.

    Reads the published tables from the data directory. Every file is checked
    against the sha256 manifest before it is parsed.
    """

    def __init__(self, data_dir: Optional[str] = None):
        """
        Initialize fixture loader.

        Args:
            data_dir (str, optional): Directory with fixture files.
                                      If None, uses the packaged data.
        """
        self.data_dir = DATA_DIR if data_dir is None else Path(data_dir)
        self.file_handler = FileHandler()
        self._checksums: Optional[Dict[str, str]] = None

    @property
    def checksums(self) -> Dict[str, str]:
        if self._checksums is None:
            path = self.data_dir / CHECKSUMS_FILE
            try:
                self._checksums = json.loads(self.file_handler.read_text_file(str(path)))
            except (FileNotFoundError, json.JSONDecodeError) as manifest_err:
                raise TGraphError(f"Unreadable checksum manifest {path}: {manifest_err}")
        return self._checksums

    def verify(self, file_name: str) -> Path:
        """Return the path of a fixture whose digest matches the manifest."""
        path = self.data_dir / file_name
        expected = self.checksums.get(file_name)
        if expected is None:
            raise TGraphError(f"Fixture {file_name} is not listed in {CHECKSUMS_FILE}")
        if not path.exists():
            raise TGraphError(f"Fixture {file_name} is missing from {self.data_dir}")
        actual = self.file_handler.sha256(str(path))
        if actual != expected:
            raise TGraphError(
                f"Fixture {file_name} failed its checksum: expected {expected}, got {actual}"
            )
        return path

    def _read_rows(self, file_name: str) -> List[List[str]]:
        path = self.verify(file_name)
        with open(path, "r", encoding="utf-8", newline="") as f:
            return [row for row in csv.reader(f) if row]

    def load_errata(self) -> Dict[str, List[Tuple[str, str]]]:
        path = self.verify(ERRATA_FILE)
        raw = json.loads(self.file_handler.read_text_file(str(path)))
        return {name: [tuple(cell) for cell in cells] for name, cells in raw.items()}

    def load_table(self, table_id: str) -> TableFixture:
        """
        Load one published table.

        Args:
            table_id (str): "T1-distances", "T2-components" or "T3-components".

        Returns:
            TableFixture: Printed values, blanks as None, with the erratum mask.
        """
        if table_id not in _FILES:
            raise InvalidParameterError(f"Unknown table {table_id!r}")
        file_name = _FILES[table_id]
        header, *body = self._read_rows(file_name)
        cells = tuple(
            tuple(int(v) if v.strip() else None for v in row[1:]) for row in body
        )
        errata = self.load_errata().get(Path(file_name).stem, [])
        logger.debug("Loaded %s: %d rows, %d errata", table_id, len(body), len(errata))
        return TableFixture(
            table_id=table_id,
            row_labels=tuple(row[0] for row in body),
            column_labels=tuple(header[1:]),
            cells=cells,
            erratum=frozenset(errata),
        )

    def load_distance_table(self) -> TableFixture:
        return self.load_table(DISTANCE_TABLE)

    def load_component_table(self, m: int) -> TableFixture:
        if m not in COMPONENT_TABLES:
            raise InvalidParameterError(f"Component tables exist for m in (2, 3), got {m}")
        return self.load_table(COMPONENT_TABLES[m])
