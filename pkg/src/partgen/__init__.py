"""Integer partition generation, counting, instrumentation and analysis.

Six in-place generators produce every partition of n exactly once,
three in each part-order encoding (nondecreasing and nonincreasing).
Supporting layers provide exact counting tables, read/write operation
accounting with full tapes, closed-form operation totals with ratio
predictions, a cross-verification suite, and a wall-clock benchmark
harness.  The ``partgen`` console script exposes all of it.
"""

from .analysis import (Basis, OpPrediction, Pair, RatioReport, avg_cost_table,
                       closed_form, predicted_ratio)
from .bench import (BenchConfig, Sink, bench_pair, run_benchmark, run_kernel,
                    time_algorithm)
from .core import (Composition, Order, TerminalClass, classify, lexmin_asc,
                   lexsucc_asc, lexsucc_desc, validate)
from .counting import (ApproxKind, CountTable, approx_ratio, build_tables,
                       nonterminal_count, ones_total, pentagonal_pn,
                       pn_via_largest_parts, terminal_count)
from .errors import (AlreadyStarted, CapacityError, DomainError, EmptyInput,
                     GuardViolation, NoSuccessor, NotATape, NotTabulated,
                     OrderViolation, PartgenError)
from .generators import (Algorithm, ASCENDING_ALGOS, CompositionView,
                         DESCENDING_ALGOS, GeneratorSpec, Hooks, accel_asc,
                         accel_desc, iterate, rec_asc, rec_desc, rec_desc_raw,
                         rule_asc, rule_desc, stream)
from .instrument import (InstrumentedRun, Mode, OpCounts, Recorder, RunResult,
                         TapeRecord, attach, tape_to_csv)
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "Algorithm", "AlreadyStarted", "ApproxKind", "ASCENDING_ALGOS", "Basis",
    "BenchConfig", "CapacityError", "Composition", "CompositionView",
    "CountTable", "DESCENDING_ALGOS", "DomainError", "EmptyInput",
    "GeneratorSpec", "GuardViolation", "Hooks", "InstrumentedRun", "Mode",
    "NoSuccessor", "NotATape", "NotTabulated", "OpCounts", "OpPrediction",
    "Order", "OrderViolation", "Pair", "PartgenError", "RatioReport",
    "Recorder", "RunResult", "Sink", "TapeRecord", "TerminalClass",
    "accel_asc", "accel_desc", "approx_ratio", "attach", "avg_cost_table",
    "bench_pair", "build_tables", "classify", "closed_form", "iterate",
    "lexmin_asc", "lexsucc_asc", "lexsucc_desc", "nonterminal_count",
    "ones_total", "pentagonal_pn", "pn_via_largest_parts", "predicted_ratio",
    "rec_asc", "rec_desc", "rec_desc_raw", "rule_asc", "rule_desc",
    "run_benchmark", "run_kernel", "run_suite", "stream", "tape_to_csv",
    "terminal_count", "time_algorithm", "validate",
]
