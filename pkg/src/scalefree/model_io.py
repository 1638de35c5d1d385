"""Fitted-transformer persistence.

Model files are self-describing JSON with an explicit format_version; the
ares entry keys (psi, t) follow the file-format contract. Floats serialize
with shortest round-trip precision, so a saved and reloaded transformer
produces bitwise-identical outputs on every input.
"""

import hashlib
import json
from pathlib import Path

import numpy as np

from .errors import CorruptModel, UnsupportedVersion
from .transforms import AresModel, FittedTransformer, MinMaxParams, RankModel

FORMAT_VERSION = 1


def _fingerprint(n_features: int) -> str:
    return hashlib.sha256(f"columns:{n_features}".encode()).hexdigest()


def save_model(transformer: FittedTransformer, path) -> None:
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": transformer.kind,
        "fingerprint": _fingerprint(transformer.n_features),
    }
    if transformer.kind == "ares":
        doc["psi"] = transformer.subsample_size
        doc["t"] = transformer.n_subsamples
        doc["seed"] = transformer.seed

    columns = []
    for params in transformer.columns:
        if transformer.kind == "minmax":
            columns.append({"min": params.min, "max": params.max})
        elif transformer.kind == "rank":
            columns.append({"sorted_train": params.sorted_train.tolist()})
        else:
            columns.append({"subsamples": params.subsamples.tolist()})
    doc["columns"] = columns

    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_model(path) -> FittedTransformer:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CorruptModel(f"{path}: not valid JSON ({exc})") from None

    if not isinstance(doc, dict):
        raise CorruptModel(f"{path}: expected a JSON object at top level")
    version = doc.get("format_version")
    if not isinstance(version, int):
        raise CorruptModel(f"{path}: missing or invalid format_version")
    if version != FORMAT_VERSION:
        raise UnsupportedVersion(
            f"{path}: format_version {version} not supported (expected {FORMAT_VERSION})"
        )

    kind = doc.get("kind")
    if kind not in ("minmax", "rank", "ares"):
        raise CorruptModel(f"{path}: unknown transformer kind {kind!r}")
    raw_columns = doc.get("columns")
    if not isinstance(raw_columns, list) or not raw_columns:
        raise CorruptModel(f"{path}: missing or empty columns")

    try:
        columns = []
        for block in raw_columns:
            if kind == "minmax":
                columns.append(MinMaxParams(min=float(block["min"]), max=float(block["max"])))
            elif kind == "rank":
                columns.append(
                    RankModel(sorted_train=np.asarray(block["sorted_train"], dtype=np.float64))
                )
            else:
                columns.append(
                    AresModel(
                        subsamples=np.asarray(block["subsamples"], dtype=np.float64),
                        seed=int(doc["seed"]),
                    )
                )
        if kind == "ares":
            psi = int(doc["psi"])
            t = int(doc["t"])
            for params in columns:
                if params.subsample_size != psi or params.n_subsamples != t:
                    raise ValueError("sub-sample block shape disagrees with psi/t")
            transformer = FittedTransformer(
                kind=kind,
                columns=columns,
                subsample_size=psi,
                n_subsamples=t,
                seed=int(doc["seed"]),
            )
        else:
            transformer = FittedTransformer(kind=kind, columns=columns)
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptModel(f"{path}: malformed column parameters ({exc})") from None

    if doc.get("fingerprint") != _fingerprint(transformer.n_features):
        raise CorruptModel(f"{path}: fingerprint does not match column count")
    return transformer
