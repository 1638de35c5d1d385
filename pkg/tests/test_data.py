"""CSV ingestion, validation errors, and round-tripping."""

import numpy as np
import pytest

from scalefree.data import Dataset, load_csv, save_csv
from scalefree.errors import (
    EmptyDataset,
    EmptyFile,
    MissingLabelColumn,
    NonFiniteValue,
    ParseError,
)
from scalefree.transforms import fit_transformer


def _write(tmp_path, text, name="data.csv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


class TestLoadCsv:
    def test_small_numeric_file(self, tmp_path):
        path = _write(tmp_path, "a,b\n1.5,2\n-3,4.25\n")
        ds = load_csv(path)
        assert ds.n_rows == 2 and ds.n_features == 2
        assert ds.name == "data"
        assert ds.feature_names == ["a", "b"]
        assert np.array_equal(ds.features, [[1.5, 2.0], [-3.0, 4.25]])
        assert ds.labels is None

    def test_label_by_name(self, tmp_path):
        path = _write(tmp_path, "x,cls,y\n1,a,2\n3,b,4\n")
        ds = load_csv(path, label_column="cls")
        assert ds.feature_names == ["x", "y"]
        assert ds.labels.tolist() == ["a", "b"]
        assert ds.label_name == "cls"

    def test_label_by_index(self, tmp_path):
        path = _write(tmp_path, "x,cls,y\n1,a,2\n3,b,4\n")
        ds = load_csv(path, label_column=1)
        assert ds.labels.tolist() == ["a", "b"]
        assert np.array_equal(ds.features, [[1.0, 2.0], [3.0, 4.0]])

    def test_unparseable_cell_reports_coordinates(self, tmp_path):
        path = _write(tmp_path, "a,b\n1,2\n3,abc\n")
        with pytest.raises(ParseError) as exc_info:
            load_csv(path)
        assert exc_info.value.row == 3
        assert exc_info.value.column == "b"
        assert "abc" in str(exc_info.value)

    def test_missing_cell_rejected(self, tmp_path):
        path = _write(tmp_path, "a,b\n1,\n")
        with pytest.raises(ParseError):
            load_csv(path)

    def test_ragged_row_rejected(self, tmp_path):
        path = _write(tmp_path, "a,b\n1,2,3\n")
        with pytest.raises(ParseError):
            load_csv(path)

    def test_nan_and_inf_rejected(self, tmp_path):
        with pytest.raises(NonFiniteValue):
            load_csv(_write(tmp_path, "a\nnan\n", "n.csv"))
        with pytest.raises(NonFiniteValue):
            load_csv(_write(tmp_path, "a\n1e999\n", "i.csv"))

    def test_missing_label_column(self, tmp_path):
        path = _write(tmp_path, "a,b\n1,2\n")
        with pytest.raises(MissingLabelColumn):
            load_csv(path, label_column="target")
        with pytest.raises(MissingLabelColumn):
            load_csv(path, label_column=5)

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("", encoding="utf-8")
        with pytest.raises(EmptyFile):
            load_csv(path)

    def test_header_only_loads_zero_rows(self, tmp_path):
        ds = load_csv(_write(tmp_path, "a,b\n"))
        assert ds.n_rows == 0
        with pytest.raises(EmptyDataset):
            fit_transformer(ds.features, "minmax")

    def test_class_count_preserved(self, tmp_path):
        """A file shaped like a small multi-class set keeps all its labels."""
        rng = np.random.default_rng(81)
        lines = ["f1,f2,f3,f4,f5,f6,f7,f8,f9,type"]
        for i in range(214):
            values = ",".join(repr(float(v)) for v in rng.normal(size=9))
            lines.append(f"{values},{i % 6}")
        path = _write(tmp_path, "\n".join(lines) + "\n")
        ds = load_csv(path, label_column="type")
        assert ds.n_rows == 214 and ds.n_features == 9
        assert len(np.unique(ds.labels)) == 6


class TestSaveCsv:
    def test_round_trip_bitwise(self, tmp_path):
        rng = np.random.default_rng(82)
        ds = Dataset(
            "rt",
            rng.normal(scale=1e7, size=(25, 3)) * 10.0 ** rng.integers(-12, 12, size=3),
            feature_names=["p", "q", "r"],
            labels=rng.integers(0, 3, size=25),
            label_name="cls",
        )
        path = tmp_path / "rt.csv"
        save_csv(ds, path)
        back = load_csv(path, label_column="cls")
        assert back.features.tobytes() == ds.features.tobytes()
        assert back.labels.tolist() == [str(v) for v in ds.labels]
        assert back.feature_names == ds.feature_names

    def test_round_trip_without_labels(self, tmp_path):
        ds = Dataset("plain", np.array([[0.1, 0.2], [0.3, 0.4]]))
        path = tmp_path / "plain.csv"
        save_csv(ds, path)
        back = load_csv(path)
        assert back.features.tobytes() == ds.features.tobytes()
        assert back.labels is None

    def test_write_is_deterministic(self, tmp_path):
        ds = Dataset("det", np.random.default_rng(83).normal(size=(10, 2)))
        p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
        save_csv(ds, p1)
        save_csv(ds, p2)
        assert p1.read_bytes() == p2.read_bytes()


class TestDatasetValidation:
    def test_non_finite_rejected(self):
        with pytest.raises(NonFiniteValue):
            Dataset("bad", np.array([[1.0, np.nan]]))

    def test_label_length_mismatch(self):
        with pytest.raises(ValueError):
            Dataset("bad", np.ones((3, 2)), labels=np.arange(2))

    def test_default_feature_names(self):
        ds = Dataset("d", np.ones((2, 3)))
        assert ds.feature_names == ["f0", "f1", "f2"]
