"""Operation accounting: counters, branch frequencies, read/write tapes.

Costs follow the read/write abstraction used throughout the analysis:
only fetches and stores of composition-array elements are charged, at
the buffer positions involved (1-based).  Initialization writes are
excluded from totals unless the run opts in via ``include_init``.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .errors import AlreadyStarted, NotATape
from .generators import GeneratorSpec, Hooks, Visitor, iterate


class Mode(Enum):
    COUNTS_ONLY = "counts-only"
    FULL_TAPE = "full-tape"


@dataclass
class OpCounts:
    """Tallies for one generator run."""

    reads: int = 0
    writes: int = 0
    invocations: int = 0
    branch: Dict[str, int] = field(default_factory=dict)
    include_init: bool = False


@dataclass
class TapeRecord:
    """Array positions touched since the previous visit.

    ``ops`` preserves true chronological order as ("R"|"W", index)
    pairs; the per-kind index lists are derived from it.
    """

    visit_index: int  # 1-based ordinal
    ops: List[Tuple[str, int]] = field(default_factory=list)

    @property
    def read_indices(self) -> List[int]:
        return [i for kind, i in self.ops if kind == "R"]

    @property
    def write_indices(self) -> List[int]:
        return [i for kind, i in self.ops if kind == "W"]


class Recorder(Hooks):
    """Hooks implementation feeding an OpCounts and optional tape."""

    def __init__(self, mode: Mode, include_init: bool = False):
        self.mode = mode
        self.counts = OpCounts(include_init=include_init)
        self.tape: Optional[List[TapeRecord]] = [] if mode is Mode.FULL_TAPE else None
        self._pending: List[Tuple[str, int]] = []

    def on_read(self, index: int) -> None:
        self.counts.reads += 1
        if self.tape is not None:
            self._pending.append(("R", index))

    def on_write(self, index: int) -> None:
        self.counts.writes += 1
        if self.tape is not None:
            self._pending.append(("W", index))

    def on_invoke(self) -> None:
        self.counts.invocations += 1

    def on_branch(self, label: str) -> None:
        self.counts.branch[label] = self.counts.branch.get(label, 0) + 1

    def on_visit(self) -> None:
        if self.tape is not None:
            self.tape.append(TapeRecord(len(self.tape) + 1, self._pending))
            self._pending = []

    def flush(self) -> None:
        # Ops trailing the final visit (e.g. recursive backup writes) are
        # attached to the last record so tape totals match the counters.
        if self.tape is not None and self._pending:
            if self.tape:
                self.tape[-1].ops.extend(self._pending)
            self._pending = []


@dataclass
class RunResult:
    counts: OpCounts
    tape: Optional[List[TapeRecord]]
    visits: int


class InstrumentedRun:
    """Single-use handle pairing a generator spec with a recorder."""

    def __init__(self, spec: GeneratorSpec, mode: Mode):
        self.spec = spec
        self.mode = mode
        self._started = False

    def run(self, visitor: Optional[Visitor] = None) -> RunResult:
        if self._started:
            raise AlreadyStarted("this handle has already run; attach a new one")
        self._started = True
        recorder = Recorder(self.mode, include_init=self.spec.include_init)
        spec = GeneratorSpec(self.spec.algo, self.spec.n, self.spec.m,
                             hooks=recorder, include_init=self.spec.include_init)
        visits = 0
        for buf, lo, hi in iterate(spec):
            visits += 1
            if visitor is not None:
                visitor(buf, lo, hi)
        recorder.flush()
        return RunResult(recorder.counts, recorder.tape, visits)


def attach(spec: GeneratorSpec, mode: Mode = Mode.COUNTS_ONLY) -> InstrumentedRun:
    """Prepare an instrumented run of ``spec`` (not yet started)."""
    return InstrumentedRun(spec, mode)


def tape_to_csv(tape: List[TapeRecord]) -> str:
    """Serialize a tape as ``visit,kind,index`` rows in chronological order."""
    if not tape:
        raise NotATape("no tape records; run with Mode.FULL_TAPE")
    out = io.StringIO()
    out.write("visit,kind,index\n")
    for record in tape:
        for kind, index in record.ops:
            out.write(f"{record.visit_index},{kind},{index}\n")
    return out.getvalue()
