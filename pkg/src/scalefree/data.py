"""Dataset container and strict CSV ingestion/emission.

CSV contract: UTF-8, one header row, comma separated, '.' decimal point.
Every non-label cell must parse as a finite real; missing or malformed cells
are rejected with 1-based file coordinates rather than imputed, because
silently filled values would contaminate the scale-invariance guarantees
downstream.
"""

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import EmptyFile, MissingLabelColumn, NonFiniteValue, ParseError


@dataclass
class Dataset:
    """Column-oriented numeric matrix with an optional label column.

    Treated as immutable after construction; safe to share across workers.
    """

    name: str
    features: np.ndarray
    feature_names: list[str] = field(default_factory=list)
    labels: np.ndarray | None = None
    label_name: str | None = None

    def __post_init__(self):
        self.features = np.ascontiguousarray(self.features, dtype=np.float64)
        if self.features.ndim != 2:
            raise ValueError("features must be a 2-D array (rows x columns)")
        if not np.isfinite(self.features).all():
            raise NonFiniteValue(f"dataset {self.name!r} contains non-finite feature values")
        if not self.feature_names:
            self.feature_names = [f"f{i}" for i in range(self.features.shape[1])]
        if len(self.feature_names) != self.features.shape[1]:
            raise ValueError("feature_names length does not match column count")
        if self.labels is not None:
            self.labels = np.asarray(self.labels)
            if self.labels.shape[0] != self.features.shape[0]:
                raise ValueError("labels length does not match row count")
            if self.label_name is None:
                self.label_name = "label"

    @property
    def n_rows(self) -> int:
        return self.features.shape[0]

    @property
    def n_features(self) -> int:
        return self.features.shape[1]

    def with_features(self, features: np.ndarray) -> "Dataset":
        """Copy of this dataset with replaced feature matrix, labels untouched."""
        return Dataset(
            name=self.name,
            features=features,
            feature_names=list(self.feature_names),
            labels=self.labels,
            label_name=self.label_name,
        )


def _resolve_label_index(header: list[str], label_column) -> int:
    if isinstance(label_column, bool):
        raise TypeError("label_column must be a name or integer index")
    if isinstance(label_column, int):
        if not 0 <= label_column < len(header):
            raise MissingLabelColumn(
                f"label column index {label_column} out of range for {len(header)} columns"
            )
        return label_column
    if label_column in header:
        return header.index(label_column)
    raise MissingLabelColumn(f"no column named {label_column!r} in header {header}")


def load_csv(path, label_column=None, name: str | None = None) -> Dataset:
    """Read a CSV file into a Dataset.

    label_column selects the label column by header name or zero-based index;
    None means every column is a feature. Parse failures report the 1-based
    file row (header is row 1) and the offending column name.
    """
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyFile(f"{path}: no header row") from None
        rows = list(reader)

    if not header or all(h.strip() == "" for h in header):
        raise EmptyFile(f"{path}: empty header row")

    label_idx = None
    if label_column is not None:
        label_idx = _resolve_label_index(header, label_column)
    feature_idx = [i for i in range(len(header)) if i != label_idx]
    if not feature_idx:
        raise ParseError(f"{path}: no feature columns besides the label", row=1)

    n = len(rows)
    features = np.empty((n, len(feature_idx)), dtype=np.float64)
    labels = [] if label_idx is not None else None

    for r, row in enumerate(rows, start=2):
        if len(row) != len(header):
            raise ParseError(
                f"{path}: row {r} has {len(row)} cells, header has {len(header)}",
                row=r,
            )
        for out_c, c in enumerate(feature_idx):
            cell = row[c]
            try:
                value = float(cell)
            except ValueError:
                raise ParseError(
                    f"{path}: row {r}, column {header[c]!r}: "
                    f"cannot parse {cell!r} as a number",
                    row=r,
                    column=header[c],
                ) from None
            if not np.isfinite(value):
                raise NonFiniteValue(
                    f"{path}: row {r}, column {header[c]!r}: non-finite value {cell!r}"
                )
            features[r - 2, out_c] = value
        if labels is not None:
            labels.append(row[label_idx])

    return Dataset(
        name=name if name is not None else path.stem,
        features=features,
        feature_names=[header[i] for i in feature_idx],
        labels=np.array(labels) if labels is not None else None,
        label_name=header[label_idx] if label_idx is not None else None,
    )


def save_csv(dataset: Dataset, path) -> None:
    """Write a Dataset back to CSV, label column (if any) last.

    Feature values render with shortest round-trip precision, so
    load_csv(save_csv(ds)) reproduces every value bit for bit.
    """
    header = list(dataset.feature_names)
    if dataset.labels is not None:
        header.append(dataset.label_name)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for r in range(dataset.n_rows):
            row = [repr(float(v)) for v in dataset.features[r]]
            if dataset.labels is not None:
                row.append(str(dataset.labels[r]))
            writer.writerow(row)
