"""The compressed-graph model: build, query, persist.

A CompressedGraph holds only linear-in-n state: n x k coordinates, two
radii per node, the id map, and the fuzzy system's FCL source. Queries
answer definite yes/no when a radius guarantees the truth, otherwise a
fuzzy likelihood. Models persist in the FZG1 binary format with a CRC32
trailer.
"""

from __future__ import annotations

import struct
import zlib
from dataclasses import dataclass, field
from typing import IO, Optional

import numpy as np

from .fastmap import Embedding, fastmap_embed
from .fuzzy import FuzzySystem, default_system, evaluate_many, parse_fcl, to_fcl
from .graph import Graph
from .radii import NodeRadii, compute_all_radii, pair_distances

MAGIC = b"FZG1"
FORMAT_VERSION = 1
_FLAG_DIRECTED = 1
_FLAG_QUANTIZED = 2
_HEADER = struct.Struct("<4sIIQII")  # magic, version, flags, n, k, fcl_len

DEFINITE = "definite"
FUZZY = "fuzzy"


class ModelFormatError(ValueError):
    """Raised when an FZG1 stream is malformed."""


@dataclass(frozen=True)
class Answer:
    """Query verdict: Definite 1/0, or a fuzzy likelihood in [0, 1]."""

    kind: str  # DEFINITE or FUZZY
    value: float

    @classmethod
    def definite(cls, yes: bool) -> "Answer":
        return cls(DEFINITE, 1.0 if yes else 0.0)

    @classmethod
    def fuzzy(cls, likelihood: float) -> "Answer":
        return cls(FUZZY, float(likelihood))

    @property
    def is_definite(self) -> bool:
        return self.kind == DEFINITE


@dataclass(eq=False)
class CompressedGraph:
    """Embedding + radii + fuzzy system: the persisted adjacency oracle."""

    embedding: Embedding
    radii: NodeRadii
    directed: bool
    fuzzy: FuzzySystem
    external_ids: np.ndarray  # (n,) uint64
    fcl_text: str
    _ext2int: dict[int, int] = field(repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        if not self._ext2int:
            self._ext2int = {int(e): i for i, e in enumerate(self.external_ids)}

    @property
    def n(self) -> int:
        return self.embedding.n

    @property
    def k(self) -> int:
        return self.embedding.k

    def internal_id(self, external: int) -> int:
        try:
            return self._ext2int[int(external)]
        except KeyError:
            raise ValueError(f"unknown external node id {external}") from None

    def external_id(self, internal: int) -> int:
        return int(self.external_ids[internal])


def build(
    g: Graph,
    k: int,
    seed: int,
    quantize: bool = True,
    fuzzy: Optional[FuzzySystem] = None,
    fcl_text: Optional[str] = None,
) -> CompressedGraph:
    """Embed the graph, compute all radii, and attach the fuzzy system.

    The model embeds its FCL source (``fcl_text`` when given, otherwise
    the system serialized) so a saved file is self-contained.
    """
    if g.n < 2:
        raise ValueError("graph must have at least 2 nodes")
    if k < 1:
        raise ValueError("k must be >= 1")
    system = fuzzy if fuzzy is not None else default_system()
    embedding = fastmap_embed(g, k, seed)
    radii = compute_all_radii(g, embedding, quantize=quantize)
    return CompressedGraph(
        embedding=embedding,
        radii=radii,
        directed=g.directed,
        fuzzy=system,
        external_ids=g.external_ids.copy(),
        fcl_text=fcl_text if fcl_text is not None else to_fcl(system),
    )


def _check_pair(cg: CompressedGraph, u: int, v: int) -> None:
    if not (0 <= u < cg.n and 0 <= v < cg.n):
        raise ValueError(f"node id out of range [0, {cg.n})")
    if u == v:
        raise ValueError("self query")


def query_arrays(
    cg: CompressedGraph, us: np.ndarray, vs: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized adjacency decision over aligned id arrays.

    Returns (definite, value): a bool mask and, per pair, 1.0/0.0 for
    definite answers or the fuzzy likelihood. Directed models use only
    the source side; undirected combine both sides with minimum. The
    scalar query ops delegate here, so all paths agree bit for bit.
    """
    us = np.asarray(us, dtype=np.int64)
    vs = np.asarray(vs, dtype=np.int64)
    r, R = cg.radii.r, cg.radii.R
    d = pair_distances(cg.embedding.coords, us, vs)

    if cg.directed:
        yes = d <= r[us]
        no = ~yes & (d >= R[us])
    else:
        yes = (d <= r[us]) | (d <= r[vs])
        no = ~yes & ((d >= R[us]) | (d >= R[vs]))

    value = np.where(yes, 1.0, 0.0)
    fuzzy_mask = ~(yes | no)
    if fuzzy_mask.any():
        idx = np.flatnonzero(fuzzy_mask)
        fd = d[idx]
        sides = [us[idx]] if cg.directed else [us[idx], vs[idx]]
        outs = np.full((len(sides), idx.shape[0]), np.nan)
        for s, sw in enumerate(sides):
            ok = (r[sw] != -1.0) & np.isfinite(R[sw])  # sentinel sides contribute nothing
            if ok.any():
                x = (R[sw[ok]] - fd[ok]) / (R[sw[ok]] - r[sw[ok]])
                outs[s, ok] = evaluate_many(cg.fuzzy, np.clip(x, 0.0, 1.0))
        if len(sides) > 1:
            a, b = outs
            combined = np.where(
                np.isnan(a), b, np.where(np.isnan(b), a, np.minimum(a, b))
            )
        else:
            combined = outs[0]
        value[idx] = np.where(np.isnan(combined), 0.5, combined)  # all sides degenerate
    return ~fuzzy_mask, value


def query(cg: CompressedGraph, u: int, v: int) -> Answer:
    """Adjacency query on an undirected model.

    Definite 1 when d <= r on either side, Definite 0 when d >= R on
    either side, otherwise the minimum of the two sides' fuzzy outputs.
    Internal ids; u != v.
    """
    if cg.directed:
        raise ValueError("model is directed; use query_directed")
    _check_pair(cg, u, v)
    definite, value = query_arrays(cg, np.array([u]), np.array([v]))
    return Answer(DEFINITE if definite[0] else FUZZY, float(value[0]))


def query_directed(cg: CompressedGraph, u: int, v: int) -> Answer:
    """Arc query u -> v on a directed model; uses r(u), R(u) only."""
    if not cg.directed:
        raise ValueError("model is undirected; use query")
    _check_pair(cg, u, v)
    definite, value = query_arrays(cg, np.array([u]), np.array([v]))
    return Answer(DEFINITE if definite[0] else FUZZY, float(value[0]))


# --- FZG1 persistence --------------------------------------------------------


def save(cg: CompressedGraph, sink: IO[bytes]) -> int:
    """Write the FZG1 stream; returns the byte count.

    Layout (little-endian): 28-byte header (magic, version, flags, n, k,
    fcl_len), n x u64 external ids, n x k f64 coords, n x (f64 r, f64 R),
    fcl_len bytes of UTF-8 FCL, CRC32 of everything preceding.
    """
    n, k = cg.n, cg.k
    fcl = cg.fcl_text.encode("utf-8")
    flags = (_FLAG_DIRECTED if cg.directed else 0) | (_FLAG_QUANTIZED if cg.radii.quantized else 0)
    parts = [
        _HEADER.pack(MAGIC, FORMAT_VERSION, flags, n, k, len(fcl)),
        np.ascontiguousarray(cg.external_ids, dtype="<u8").tobytes(),
        np.ascontiguousarray(cg.embedding.coords, dtype="<f8").tobytes(),
        np.ascontiguousarray(np.column_stack([cg.radii.r, cg.radii.R]), dtype="<f8").tobytes(),
        fcl,
    ]
    blob = b"".join(parts)
    blob += struct.pack("<I", zlib.crc32(blob))
    sink.write(blob)
    return len(blob)


def load(source: IO[bytes]) -> CompressedGraph:
    """Read an FZG1 stream back into a model; errors name the byte offset."""
    blob = source.read()
    if len(blob) < _HEADER.size:
        raise ModelFormatError(f"truncated header: {len(blob)} bytes (offset {len(blob)})")
    magic, version, flags, n, k, fcl_len = _HEADER.unpack_from(blob, 0)
    if magic != MAGIC:
        raise ModelFormatError(f"bad magic {magic!r} at offset 0")
    if version != FORMAT_VERSION:
        raise ModelFormatError(f"unsupported format version {version} at offset 4")
    expected = _HEADER.size + 8 * n + 8 * n * k + 16 * n + fcl_len + 4
    if len(blob) != expected:
        raise ModelFormatError(
            f"truncated or oversized stream: expected {expected} bytes, got {len(blob)}"
            f" (offset {min(len(blob), expected)})"
        )
    (crc,) = struct.unpack_from("<I", blob, expected - 4)
    if crc != zlib.crc32(blob[:-4]):
        raise ModelFormatError(f"CRC mismatch at offset {expected - 4}")

    off = _HEADER.size
    external_ids = np.frombuffer(blob, dtype="<u8", count=n, offset=off).astype(np.uint64)
    off += 8 * n
    coords = np.frombuffer(blob, dtype="<f8", count=n * k, offset=off).reshape(n, k).copy()
    off += 8 * n * k
    radii_flat = np.frombuffer(blob, dtype="<f8", count=2 * n, offset=off).reshape(n, 2)
    off += 16 * n
    try:
        fcl_text = blob[off : off + fcl_len].decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ModelFormatError(f"FCL block is not UTF-8 at offset {off + exc.start}") from None

    return CompressedGraph(
        embedding=Embedding(coords=coords, pivots=None, seed=None),
        radii=NodeRadii(
            r=radii_flat[:, 0].copy(),
            R=radii_flat[:, 1].copy(),
            quantized=bool(flags & _FLAG_QUANTIZED),
        ),
        directed=bool(flags & _FLAG_DIRECTED),
        fuzzy=parse_fcl(fcl_text),
        external_ids=external_ids,
        fcl_text=fcl_text,
    )


def save_file(cg: CompressedGraph, path: str) -> int:
    with open(path, "wb") as f:
        return save(cg, f)


def load_file(path: str) -> CompressedGraph:
    with open(path, "rb") as f:
        return load(f)
