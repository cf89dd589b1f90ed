import pytest

from src.utils.file_handler import FileHandler


def test_write_and_read(tmp_path):
    target = tmp_path / "nested" / "out.csv"
    FileHandler.write_file(str(target), FileHandler.csv_text(["a", "b"], [["1", "x,y"]]))
    assert FileHandler.read_text_file(str(target)) == 'a,b\n1,"x,y"\n'


def test_read_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        FileHandler.read_text_file(str(tmp_path / "none.txt"))


def test_sha256(tmp_path):
    target = tmp_path / "abc.txt"
    target.write_bytes(b"abc")
    assert FileHandler.sha256(str(target)) == (
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
    )
