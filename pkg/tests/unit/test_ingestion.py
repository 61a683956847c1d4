"""Unit tests for delimited z-score tables."""

import numpy as np
import pytest

from src.errors import DataError
from src.ingestion import DelimitedZScoreSource, read_zscore_matrix, write_zscore_matrix
from src.ingestion.delimited import detect_separator
from src.models.analysis import ZScoreMatrix


def _matrix(rng):
    return ZScoreMatrix(
        marker_ids=("rs1", "rs2", "rs3"),
        study_ids=("primary", "study1"),
        z=rng.standard_normal((2, 3)) * 3,
    )


@pytest.mark.parametrize("name", ["z.tsv", "z.csv"])
def test_round_trip_is_exact(tmp_path, rng, name):
    matrix = _matrix(rng)
    path = tmp_path / name
    write_zscore_matrix(matrix, path)
    loaded = read_zscore_matrix(path)
    assert loaded.marker_ids == matrix.marker_ids
    assert loaded.study_ids == matrix.study_ids
    assert np.array_equal(loaded.z, matrix.z)


def test_comments_and_sniffed_separator(tmp_path):
    path = tmp_path / "z.txt"
    path.write_text("# exported z-scores\nmarker\tA\tB\nm1\t1.5\t-2\nm2\t0\t3.25\n")
    assert detect_separator(path) == "\t"
    matrix = read_zscore_matrix(path)
    assert matrix.study_ids == ("A", "B")
    assert np.array_equal(matrix.z, [[1.5, 0.0], [-2.0, 3.25]])


@pytest.mark.parametrize("body", [
    "marker,A,B\nm1,1.0,\nm2,0,1\n",
    "marker,A,B\nm1,1.0,abc\nm2,0,1\n",
    "marker,A,B\nm1,1.0,2\nm1,0,1\n",
    "marker,A,A\nm1,1.0,2\n",
])
def test_bad_tables(tmp_path, body):
    path = tmp_path / "z.csv"
    path.write_text(body)
    with pytest.raises(DataError):
        read_zscore_matrix(path)


def test_missing_file(tmp_path):
    source = DelimitedZScoreSource("z", {"path": str(tmp_path / "none.csv")})
    assert source.health_check() is False
    with pytest.raises(FileNotFoundError):
        source.load()
    with pytest.raises(DataError):
        DelimitedZScoreSource("z", {})


def test_matrix_validation():
    with pytest.raises(DataError):
        ZScoreMatrix(("m1",), ("a", "b"), np.zeros((2, 2)))
    with pytest.raises(DataError):
        ZScoreMatrix(("m1",), ("a",), np.array([[np.nan]]))
    matrix = ZScoreMatrix(("m1",), ("a", "b"), np.zeros((2, 1)))
    assert matrix.study_index("b") == 1
    with pytest.raises(DataError):
        matrix.study_index("c")
