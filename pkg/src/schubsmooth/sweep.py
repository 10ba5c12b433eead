"""Whole-group sweeps with deterministic, line-oriented JSON output."""

from __future__ import annotations

import json
import os
import tempfile
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator

from .bruhat import DEFAULT_MAX_INTERVAL, IntervalBudgetError
from .criterion import Status, Verdict, is_smooth, smooth_by_pattern, weyl_to_permutation
from .rootsys import CartanType, RootSystem, build_root_system
from .weyl import enumerate_group, from_word, reduced_word, weyl_group_order

__all__ = [
    "FULL_SWEEP_MAX_ORDER",
    "SweepRecord",
    "SweepSummary",
    "group_words",
    "oracle_report",
    "record_from_verdict",
    "sweep",
    "write_records",
]

# full-group sweeps are allowed through E7 by default
FULL_SWEEP_MAX_ORDER = 2_903_040


@dataclass(frozen=True)
class SweepRecord:
    type: str
    rank: int
    word: list
    length: int
    poincare: list
    palindromic: bool
    curve_roots: list
    hull_violations: list
    verdict: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> "SweepRecord":
        return cls(**json.loads(line))


def record_from_verdict(ct: CartanType, v: Verdict) -> SweepRecord:
    return SweepRecord(
        type=ct.letter,
        rank=ct.rank,
        word=list(v.w_word),
        length=v.length,
        poincare=list(v.poincare or ()),
        palindromic=v.palindromic,
        curve_roots=[list(r) for r in v.curve_roots or ()],
        hull_violations=[list(r) for r in v.hull_violations or ()],
        verdict=v.status.value,
    )


@dataclass
class SweepSummary:
    type: str
    rank: int
    total: int = 0
    smooth: int = 0
    singular: int = 0
    inapplicable: int = 0

    def add(self, rec: SweepRecord):
        self.total += 1
        if rec.verdict == Status.SMOOTH.value:
            self.smooth += 1
        elif rec.verdict == Status.SINGULAR.value:
            self.singular += 1
        else:
            self.inapplicable += 1

    def to_json(self) -> str:
        return json.dumps({"summary": asdict(self)}, separators=(",", ":"))


class SweepError(RuntimeError):
    pass


def check_sweep_feasible(ct: CartanType, max_interval: int, i_know: bool = False) -> int:
    """Raise before any output if the sweep cannot finish within budget."""
    order = weyl_group_order(ct)
    if order > FULL_SWEEP_MAX_ORDER and not i_know:
        raise SweepError(f"|W({ct})| = {order} exceeds the default sweep limit; pass --i-know")
    # the longest element has the whole group as its interval
    if order > max_interval:
        raise IntervalBudgetError(f"[e, w0] in {ct} has {order} elements > budget {max_interval}")
    return order


def group_words(rs: RootSystem) -> list[tuple[int, ...]]:
    """Canonical reduced words of every element, ordered by length then word."""
    words = [tuple(reduced_word(w)) for w in enumerate_group(rs)]
    words.sort(key=lambda t: (len(t), t))
    return words


_worker_state: dict = {}


def _init_worker(ct: CartanType, allow_g2: bool, max_interval: int):
    _worker_state["rs"] = build_root_system(ct)
    _worker_state["opts"] = dict(allow_g2=allow_g2, max_interval=max_interval)


def _evaluate(word) -> str:
    rs = _worker_state["rs"]
    v = is_smooth(rs, from_word(rs, word), **_worker_state["opts"])
    return record_from_verdict(rs.cartan_type, v).to_json()


def sweep(
    ct: CartanType,
    *,
    jobs: int = 1,
    allow_g2: bool = False,
    max_interval: int = DEFAULT_MAX_INTERVAL,
    i_know: bool = False,
) -> Iterator[SweepRecord]:
    """Yield one record per group element in canonical order.

    The output does not depend on ``jobs``: chunks are evaluated in worker
    processes and merged back in submission order.
    """
    check_sweep_feasible(ct, max_interval, i_know)
    rs = build_root_system(ct)
    words = group_words(rs)
    if jobs <= 1:
        _init_worker(ct, allow_g2, max_interval)
        for word in words:
            yield SweepRecord.from_json(_evaluate(word))
        return
    chunk = max(1, len(words) // (jobs * 8))
    with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(ct, allow_g2, max_interval)) as pool:
        for line in pool.map(_evaluate, words, chunksize=chunk):
            yield SweepRecord.from_json(line)


def write_records(records: Iterable[SweepRecord], out_path: str | None, stream) -> SweepSummary | None:
    """Write records and return the summary.

    With ``out_path`` the file only appears once every record has been
    computed, so a failure leaves nothing behind. Without it, records are
    buffered and written to ``stream`` at the end for the same reason.
    """
    summary = None
    lines = []
    for rec in records:
        if summary is None:
            summary = SweepSummary(type=rec.type, rank=rec.rank)
        summary.add(rec)
        lines.append(rec.to_json() + "\n")
    if out_path is None:
        stream.writelines(lines)
        return summary
    directory = os.path.dirname(os.path.abspath(out_path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".sweep-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.writelines(lines)
        os.replace(tmp, out_path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return summary


@dataclass
class OracleReport:
    rank: int
    total: int
    smooth: int
    mismatches: list
    # length -> (elements, mismatches)
    by_length: dict

    @property
    def ok(self) -> bool:
        return not self.mismatches


def oracle_report(rank: int, jobs: int = 1, max_interval: int = DEFAULT_MAX_INTERVAL) -> OracleReport:
    """Compare criterion verdicts with 3412/4231 avoidance over all of W(A_rank)."""
    ct = CartanType("A", rank)
    rs = build_root_system(ct)
    total = smooth = 0
    mismatches = []
    by_length: Counter = Counter()
    bad_by_length: Counter = Counter()
    for rec in sweep(ct, jobs=jobs, max_interval=max_interval):
        w = from_word(rs, rec.word)
        perm = weyl_to_permutation(rs, w)
        expected = smooth_by_pattern(perm)
        got = rec.verdict == Status.SMOOTH.value
        total += 1
        smooth += got
        by_length[rec.length] += 1
        if got != expected:
            mismatches.append((str(perm), rec.verdict, expected))
            bad_by_length[rec.length] += 1
    table = {k: (by_length[k], bad_by_length[k]) for k in sorted(by_length)}
    return OracleReport(rank, total, smooth, mismatches, table)
