"""Dense vector stores for word and sentence embeddings.

File format (text, UTF-8, whitespace-separated):

    <count> <dim>
    <key> <f1> ... <fdim>
    ...

The header declares the entry count and dimensionality; every row must
carry exactly `dim` floats. Keys are word forms for static stores or
embedding refs for sidecar stores.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import DimMismatch, DuplicateKey, ParseError


class VectorStore:
    """Immutable key -> float64 vector map with a lowercased-key fallback."""

    def __init__(self, dim: int, entries: dict[str, np.ndarray]):
        if dim <= 0:
            raise ValueError("dim must be positive")
        for key, vec in entries.items():
            if vec.shape != (dim,):
                raise DimMismatch(f"entry {key!r} has length {vec.shape[0]}, expected {dim}")
        self.dim = dim
        self._entries = dict(entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: str) -> bool:
        return key in self._entries

    def keys(self):
        return self._entries.keys()

    def get(self, key: str) -> np.ndarray | None:
        """Exact-key lookup only (used for embedding refs)."""
        return self._entries.get(key)

    def lookup(self, key: str) -> np.ndarray | None:
        """Exact-key lookup with a lowercased-key fallback (word forms)."""
        vec = self._entries.get(key)
        if vec is None:
            vec = self._entries.get(key.lower())
        return vec


def load_vectors(path: str | os.PathLike) -> VectorStore:
    """Load a text vector file into a VectorStore."""
    path = str(path)
    with open(path, encoding="utf-8") as fh:
        header = fh.readline()
        parts = header.split()
        if len(parts) != 2:
            raise ParseError("header must be '<count> <dim>'", path, 1)
        try:
            count, dim = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("header must contain two integers", path, 1)
        if dim <= 0:
            raise ParseError("dim must be positive", path, 1)
        entries: dict[str, np.ndarray] = {}
        for lineno, line in enumerate(fh, 2):
            if not line.strip():
                continue
            fields = line.split()
            key = fields[0]
            if key in entries:
                raise DuplicateKey(f"{path}:{lineno}: duplicate key {key!r}")
            if len(fields) - 1 != dim:
                raise DimMismatch(
                    f"{path}:{lineno}: row has {len(fields) - 1} values, header declares dim {dim}")
            try:
                vec = np.array([float(x) for x in fields[1:]], dtype=np.float64)
            except ValueError:
                raise ParseError(f"non-numeric value in row for key {key!r}", path, lineno)
            entries[key] = vec
    if count != len(entries):
        raise ParseError(f"header declares {count} entries, file has {len(entries)}", path, 1)
    return VectorStore(dim=dim, entries=entries)


def save_vectors(store: VectorStore, path: str | os.PathLike):
    """Write a VectorStore back to the text format (full float precision)."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{len(store)} {store.dim}\n")
        for key in store.keys():
            vec = store.get(key)
            fh.write(key + " " + " ".join(repr(float(x)) for x in vec) + "\n")


def cosine(a: np.ndarray, b: np.ndarray) -> float | None:
    """Cosine similarity; None when either vector has zero norm."""
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        return None
    return float(np.dot(a, b) / (na * nb))
