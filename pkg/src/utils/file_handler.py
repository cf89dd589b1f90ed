import csv
import hashlib
import io
import os
from pathlib import Path
from typing import Iterable, Sequence


class FileHandler:
    """
    A class for reading fixtures and writing reports.
    """

    @staticmethod
    def read_text_file(file_path: str, encoding: str = "utf-8") -> str:
        """Reads a text file."""
        if not os.path.exists(file_path):
            raise FileNotFoundError(f"File not found: {file_path}")
        with open(file_path, "r", encoding=encoding) as f:
            return f.read()

    @staticmethod
    def sha256(file_path: str) -> str:
        """Hex digest of the file's bytes."""
        digest = hashlib.sha256()
        with open(file_path, "rb") as f:
            for chunk in iter(lambda: f.read(65536), b""):
                digest.update(chunk)
        return digest.hexdigest()

    @staticmethod
    def write_file(file_path: str, content: str, encoding: str = "utf-8") -> None:
        """Writes content to file, creating parent directories."""
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, "w", encoding=encoding, newline="") as f:
            f.write(content)

    @staticmethod
    def csv_text(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
        """Render rows as CSV with "\\n" line endings."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()
