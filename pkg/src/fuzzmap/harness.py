"""Accuracy measurements: definite-answer coverage and fuzzy soundness vs k.

Definite answers are sound by construction, so definite_correct_pct must
always be 100; the interesting quantities are how many pairs stay
definite after compression and how often fuzzy likelihoods fall on the
right side of 0.5. A likelihood of exactly 0.5 counts as unsound for
both classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Optional, Sequence

import numpy as np

from .graph import Graph
from .oracle import CompressedGraph, build, query_arrays

DEFAULT_SAMPLE = 1_000_000

CSV_HEADER = (
    "k,pairs,definite_pct,definite_correct_pct,fuzzy_pairs,"
    "fuzzy_sound_yes_pct,fuzzy_sound_no_pct,seed,sample_size"
)


@dataclass(frozen=True)
class EvalReport:
    """Tallies for one model; percentages derive exactly from the counts."""

    k: int
    pairs: int
    definite: int
    definite_correct: int
    fuzzy_pairs: int
    fuzzy_true: int  # fuzzy-queried pairs that are real neighbors
    fuzzy_sound_yes: int  # of fuzzy_true, likelihood > 0.5
    fuzzy_sound_no: int  # of fuzzy_pairs - fuzzy_true, likelihood < 0.5
    seed: int
    sample_size: Optional[int]  # None = ALL

    @property
    def definite_pct(self) -> float:
        return 100.0 * self.definite / self.pairs

    @property
    def definite_correct_pct(self) -> float:
        # vacuously 100 when no definite answers exist
        return 100.0 * self.definite_correct / self.definite if self.definite else 100.0

    @property
    def fuzzy_false(self) -> int:
        return self.fuzzy_pairs - self.fuzzy_true

    @property
    def fuzzy_sound_yes_pct(self) -> Optional[float]:
        if self.fuzzy_true == 0:
            return None
        return 100.0 * self.fuzzy_sound_yes / self.fuzzy_true

    @property
    def fuzzy_sound_no_pct(self) -> Optional[float]:
        if self.fuzzy_false == 0:
            return None
        return 100.0 * self.fuzzy_sound_no / self.fuzzy_false


def _sample_pairs(
    n: int, directed: bool, sample_size: Optional[int], seed: int
) -> tuple[np.ndarray, np.ndarray]:
    """Distinct node pairs, uniform without replacement, seeded.

    Unordered pairs for undirected graphs, ordered for directed. Linear
    pair indices are decoded with exact integer arithmetic.
    """
    total = n * (n - 1) if directed else n * (n - 1) // 2
    if sample_size is not None and sample_size < 1:
        raise ValueError("sample_size must be >= 1")
    if sample_size is None or sample_size >= total:
        idx = np.arange(total, dtype=np.int64)
    else:
        rng = np.random.default_rng(seed)
        idx = rng.permutation(total)[:sample_size].astype(np.int64)

    if directed:
        us = idx // (n - 1)
        rem = idx % (n - 1)
        vs = rem + (rem >= us)
        return us, vs
    # unordered: row u owns pairs (u, u+1..n-1); cumulative row offsets
    row_ends = np.cumsum(np.arange(n - 1, 0, -1, dtype=np.int64))
    us = np.searchsorted(row_ends, idx, side="right")
    row_starts = row_ends - np.arange(n - 1, 0, -1, dtype=np.int64)
    vs = idx - row_starts[us] + us + 1
    return us, vs


def _edge_keys(g: Graph) -> np.ndarray:
    keys = [
        np.int64(u) * g.n + v
        for u in range(g.n)
        for v in g.adjacency[u]
        if g.directed or u < v
    ]
    return np.sort(np.array(keys, dtype=np.int64))


def evaluate_model(
    cg: CompressedGraph,
    g: Graph,
    sample_size: Optional[int] = DEFAULT_SAMPLE,
    seed: int = 0,
) -> EvalReport:
    """Query sampled pairs and tally the report against ground truth."""
    if cg.n != g.n:
        raise ValueError(f"model has {cg.n} nodes but graph has {g.n}")
    if cg.directed != g.directed:
        raise ValueError("model and graph disagree on directedness")

    us, vs = _sample_pairs(g.n, g.directed, sample_size, seed)
    definite, value = query_arrays(cg, us, vs)

    keys = us * np.int64(g.n) + vs if g.directed else np.minimum(us, vs) * np.int64(g.n) + np.maximum(us, vs)
    truth = np.isin(keys, _edge_keys(g))

    def_mask = definite
    fuz_mask = ~definite
    correct = (value[def_mask] == 1.0) == truth[def_mask]
    fuzzy_true = truth[fuz_mask]
    fuzzy_val = value[fuz_mask]

    return EvalReport(
        k=cg.k,
        pairs=int(us.shape[0]),
        definite=int(def_mask.sum()),
        definite_correct=int(correct.sum()),
        fuzzy_pairs=int(fuz_mask.sum()),
        fuzzy_true=int(fuzzy_true.sum()),
        fuzzy_sound_yes=int((fuzzy_val[fuzzy_true] > 0.5).sum()),
        fuzzy_sound_no=int((fuzzy_val[~fuzzy_true] < 0.5).sum()),
        seed=seed,
        sample_size=sample_size,
    )


def sweep_k(
    g: Graph,
    k_values: Sequence[int],
    quantize: bool = True,
    seed: int = 0,
    sample_size: Optional[int] = DEFAULT_SAMPLE,
) -> list[EvalReport]:
    """Build one model per k (same seed) and evaluate each."""
    if not k_values:
        raise ValueError("k_values must be non-empty")
    reports = []
    for k in k_values:
        cg = build(g, k=k, seed=seed, quantize=quantize)
        reports.append(evaluate_model(cg, g, sample_size=sample_size, seed=seed))
    return reports


def _pct_field(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.4f}"


def reports_to_csv(reports: Sequence[EvalReport]) -> str:
    """CSV with one row per report; '\\n' endings, 4 decimal places."""
    lines = [CSV_HEADER]
    for rep in reports:
        sample = "ALL" if rep.sample_size is None else str(rep.sample_size)
        lines.append(
            f"{rep.k},{rep.pairs},{rep.definite_pct:.4f},{rep.definite_correct_pct:.4f},"
            f"{rep.fuzzy_pairs},{_pct_field(rep.fuzzy_sound_yes_pct)},"
            f"{_pct_field(rep.fuzzy_sound_no_pct)},{rep.seed},{sample}"
        )
    return "\n".join(lines) + "\n"


def write_csv(reports: Sequence[EvalReport], sink: IO[str]) -> None:
    sink.write(reports_to_csv(reports))
