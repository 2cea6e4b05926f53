"""The six partition generation algorithms over a single parts buffer.

Three ascending-composition generators (recursive, succession-rule,
accelerated) and their three descending counterparts.  Each algorithm is
written once as a Python generator that yields ``(buf, lo, hi)`` where
the current composition is ``buf[lo:hi]`` -- a zero-copy view of the
live buffer, valid until the next step.  Visitor-driven wrappers and a
pull-based :func:`stream` adapter are layered on top.

Array indices are 1-based (slot 0 of each buffer is unused) so that
instrumented tapes report part positions starting at 1.

Recursion depth of the two recursive algorithms is bounded by n; desk
scale (n up to a few hundred) stays well inside the interpreter limit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, List, Optional, Tuple

from .errors import DomainError

Visitor = Callable[[List[int], int, int], None]
Step = Tuple[List[int], int, int]


class Algorithm(Enum):
    REC_ASC = "rec-asc"
    REC_DESC = "rec-desc"
    RULE_ASC = "rule-asc"
    RULE_DESC = "rule-desc"
    ACCEL_ASC = "accel-asc"
    ACCEL_DESC = "accel-desc"


ASCENDING_ALGOS = (Algorithm.REC_ASC, Algorithm.RULE_ASC, Algorithm.ACCEL_ASC)
DESCENDING_ALGOS = (Algorithm.REC_DESC, Algorithm.RULE_DESC, Algorithm.ACCEL_DESC)


class Hooks:
    """Instrumentation sink; all callbacks default to no-ops.

    ``on_read``/``on_write`` receive 1-based buffer positions.  A "read"
    is any fetch of a buffer element into a scalar, a "write" any store
    to a buffer element; loop-variable arithmetic is free.  ``on_visit``
    fires when a composition is made available, before the visitor runs.
    """

    def on_read(self, index: int) -> None:
        pass

    def on_write(self, index: int) -> None:
        pass

    def on_invoke(self) -> None:
        pass

    def on_branch(self, label: str) -> None:
        pass

    def on_visit(self) -> None:
        pass


class _TracedArray:
    """List wrapper reporting every element access to the hooks."""

    __slots__ = ("data", "hooks")

    def __init__(self, data: List[int], hooks: Hooks):
        self.data = data
        self.hooks = hooks

    def __getitem__(self, index: int) -> int:
        self.hooks.on_read(index)
        return self.data[index]

    def __setitem__(self, index: int, value: int) -> None:
        self.hooks.on_write(index)
        self.data[index] = value


def _arrays(buf, hooks, include_init):
    """(loop array, init array): init writes bypass hooks unless opted in."""
    if hooks is None:
        return buf, buf
    arr = _TracedArray(buf, hooks)
    return arr, (arr if include_init else buf)


# ---------------------------------------------------------------------------
# Recursive algorithms


def iter_rec_asc(n: int, m: int = 1, hooks: Optional[Hooks] = None,
                 include_init: bool = False) -> Iterator[Step]:
    """Ascending compositions of n with first part >= m, lexicographic."""
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    buf = [0] * (n + 2)
    arr, _ = _arrays(buf, hooks, include_init)

    def go(n: int, m: int, k: int) -> Iterator[Step]:
        if hooks is not None:
            hooks.on_invoke()
        x = m
        while 2 * x <= n:
            arr[k] = x
            yield from go(n - x, x, k + 1)
            x += 1
        arr[k] = n
        if hooks is not None:
            hooks.on_visit()
        yield (buf, 1, k + 1)

    yield from go(n, m, 1)


def _iter_rec_desc_raw(buf, arr, hooks, n, m, k, lo) -> Iterator[Step]:
    # Requires d_j = 1 for j > k on entry; restores d_j = 1 for j >= k
    # on exit so sibling calls still see an all-ones tail.
    if hooks is not None:
        hooks.on_invoke()
    arr[k] = m
    if n == m or m == 1:
        if hooks is not None:
            hooks.on_visit()
        yield (buf, lo, k + n - m + 1)
        if m != 1:
            arr[k] = 1
    else:
        for x in range(1, min(m, n - m) + 1):
            yield from _iter_rec_desc_raw(buf, arr, hooks, n - m, x, k + 1, lo)
        arr[k] = 1


def iter_rec_desc_raw(n: int, m: int, hooks: Optional[Hooks] = None,
                      include_init: bool = False) -> Iterator[Step]:
    """Descending compositions of n with first part exactly m, lexicographic."""
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    buf = [1] * (n + 2)
    arr, _ = _arrays(buf, hooks, include_init)
    yield from _iter_rec_desc_raw(buf, arr, hooks, n, m, 1, 1)


def iter_rec_desc(n: int, hooks: Optional[Hooks] = None,
                  include_init: bool = False) -> Iterator[Step]:
    """All descending compositions of n in lexicographic order.

    Runs the raw recursion as (2n, n, 1) and suppresses the artificial
    first part of size n at visit time.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    buf = [1] * (n + 3)
    arr, _ = _arrays(buf, hooks, include_init)
    yield from _iter_rec_desc_raw(buf, arr, hooks, 2 * n, n, 1, 2)


# ---------------------------------------------------------------------------
# Succession-rule algorithms


def iter_rule_asc(n: int, hooks: Optional[Hooks] = None,
                  include_init: bool = False) -> Iterator[Step]:
    """Ascending compositions of n via the iterated succession rule."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    buf = [0] * (n + 2)
    arr, init = _arrays(buf, hooks, include_init)
    k = 2
    init[1] = 0
    init[2] = n
    while k != 1:
        y = arr[k] - 1
        k -= 1
        x = arr[k] + 1
        while x <= y:
            arr[k] = x
            y -= x
            k += 1
        arr[k] = x + y
        if hooks is not None:
            hooks.on_visit()
        yield (buf, 1, k + 1)


def iter_rule_desc(n: int, hooks: Optional[Hooks] = None,
                   include_init: bool = False) -> Iterator[Step]:
    """Descending compositions of n in reverse lexicographic order.

    Each transition scans right-to-left for the rightmost part > 1, then
    redistributes the freed amount as equal parts plus a remainder.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    buf = [0] * (n + 2)
    arr, init = _arrays(buf, hooks, include_init)
    init[1] = n
    k = 1
    if hooks is not None:
        hooks.on_visit()
    yield (buf, 1, 2)
    while k != n:
        length = k
        m = arr[k]
        while m == 1:
            k -= 1
            if hooks is not None:
                hooks.on_branch("rule-desc-k=k-1")
            m = arr[k]
        rest = m + length - k
        m -= 1
        while m < rest:
            arr[k] = m
            rest -= m
            k += 1
        arr[k] = rest
        if hooks is not None:
            hooks.on_visit()
        yield (buf, 1, k + 1)


# ---------------------------------------------------------------------------
# Accelerated algorithms


def iter_accel_asc(n: int, hooks: Optional[Hooks] = None,
                   include_init: bool = False) -> Iterator[Step]:
    """Ascending compositions of n, nonterminal successors on a fast path.

    While the current composition is nonterminal its successor only
    needs the last two parts adjusted, so whole blocks are emitted from
    the inner visit loop with no buffer reads at all.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    buf = [0] * (n + 3)
    arr, init = _arrays(buf, hooks, include_init)
    k = 2
    init[1] = 0
    y = n - 1
    while k != 1:
        k -= 1
        x = arr[k] + 1
        while 2 * x <= y:
            arr[k] = x
            y -= x
            k += 1
        last = k + 1
        while x <= y:
            arr[k] = x
            arr[last] = y
            if hooks is not None:
                hooks.on_branch("accel-asc-visit-v")
                hooks.on_visit()
            yield (buf, 1, last + 1)
            x += 1
            y -= 1
        y += x - 1
        arr[k] = y + 1
        if hooks is not None:
            hooks.on_branch("accel-asc-visit-o")
            hooks.on_visit()
        yield (buf, 1, k + 1)


def iter_accel_desc(n: int, hooks: Optional[Hooks] = None,
                    include_init: bool = False) -> Iterator[Step]:
    """Descending compositions of n in reverse lexicographic order.

    Tracks the rightmost part > 1 between transitions instead of
    rescanning, and special-cases d_q = 2: the all-ones prefill means
    shrinking a 2 to a 1 and growing the tail needs a single write.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    buf = [0] * (n + 2)
    arr, init = _arrays(buf, hooks, include_init)
    k = 1
    q = 1
    for j in range(2, n + 1):
        init[j] = 1
    init[1] = n
    if hooks is not None:
        hooks.on_visit()
    yield (buf, 1, 2)
    if n == 1:
        return  # <1> has no successor; the transition loop assumes n >= 2
    while q != 0:
        if arr[q] == 2:
            k += 1
            arr[q] = 1
            q -= 1
            if hooks is not None:
                hooks.on_branch("accel-desc-q=q-1")
        else:
            m = arr[q] - 1
            rest = k - q + 1
            arr[q] = m
            while rest >= m:
                q += 1
                if hooks is not None:
                    hooks.on_branch("accel-desc-q=q+1-e")
                arr[q] = m
                rest -= m
            if rest == 0:
                k = q
            else:
                k = q + 1
                if rest > 1:
                    q += 1
                    if hooks is not None:
                        hooks.on_branch("accel-desc-q=q+1-p")
                    arr[q] = rest
        if hooks is not None:
            hooks.on_visit()
        yield (buf, 1, k + 1)


# ---------------------------------------------------------------------------
# Uniform driving surface

_ITERATORS = {
    Algorithm.REC_DESC: iter_rec_desc,
    Algorithm.RULE_ASC: iter_rule_asc,
    Algorithm.RULE_DESC: iter_rule_desc,
    Algorithm.ACCEL_ASC: iter_accel_asc,
    Algorithm.ACCEL_DESC: iter_accel_desc,
}


@dataclass
class GeneratorSpec:
    """Which algorithm to run, for which n, with optional instrumentation."""

    algo: Algorithm
    n: int
    m: int = 1  # rec-asc only
    hooks: Optional[Hooks] = field(default=None, repr=False)
    include_init: bool = False


def iterate(spec: GeneratorSpec) -> Iterator[Step]:
    """Step through the compositions of ``spec`` as (buf, lo, hi) views."""
    if spec.algo is Algorithm.REC_ASC:
        return iter_rec_asc(spec.n, spec.m, spec.hooks, spec.include_init)
    if spec.m != 1:
        raise DomainError(f"m is only meaningful for rec-asc, got m={spec.m}")
    return _ITERATORS[spec.algo](spec.n, spec.hooks, spec.include_init)


def _drive(steps: Iterator[Step], visitor: Optional[Visitor]) -> int:
    count = 0
    if visitor is None:
        for _ in steps:
            count += 1
    else:
        for buf, lo, hi in steps:
            count += 1
            visitor(buf, lo, hi)
    return count


def rec_asc(n: int, m: int = 1, visitor: Optional[Visitor] = None,
            hooks: Optional[Hooks] = None) -> int:
    """Visit A(n, m) in lexicographic order; returns the visit count."""
    return _drive(iter_rec_asc(n, m, hooks), visitor)


def rec_desc(n: int, visitor: Optional[Visitor] = None,
             hooks: Optional[Hooks] = None) -> int:
    """Visit all descending compositions of n in lexicographic order."""
    return _drive(iter_rec_desc(n, hooks), visitor)


def rec_desc_raw(n: int, m: int, visitor: Optional[Visitor] = None,
                 hooks: Optional[Hooks] = None) -> int:
    """Visit descending compositions of n with first part exactly m."""
    return _drive(iter_rec_desc_raw(n, m, hooks), visitor)


def rule_asc(n: int, visitor: Optional[Visitor] = None,
             hooks: Optional[Hooks] = None, include_init: bool = False) -> int:
    return _drive(iter_rule_asc(n, hooks, include_init), visitor)


def rule_desc(n: int, visitor: Optional[Visitor] = None,
              hooks: Optional[Hooks] = None, include_init: bool = False) -> int:
    return _drive(iter_rule_desc(n, hooks, include_init), visitor)


def accel_asc(n: int, visitor: Optional[Visitor] = None,
              hooks: Optional[Hooks] = None, include_init: bool = False) -> int:
    return _drive(iter_accel_asc(n, hooks, include_init), visitor)


def accel_desc(n: int, visitor: Optional[Visitor] = None,
               hooks: Optional[Hooks] = None, include_init: bool = False) -> int:
    return _drive(iter_accel_desc(n, hooks, include_init), visitor)


class CompositionView:
    """Read-only window onto the live parts buffer; valid until the next pull."""

    __slots__ = ("_buf", "_lo", "_hi")

    def __init__(self, buf: List[int], lo: int, hi: int):
        self._buf = buf
        self._lo = lo
        self._hi = hi

    def __len__(self) -> int:
        return self._hi - self._lo

    def __getitem__(self, i: int):
        return tuple(self._buf[self._lo:self._hi])[i]

    def __iter__(self):
        return iter(self._buf[self._lo:self._hi])

    def to_tuple(self) -> Tuple[int, ...]:
        return tuple(self._buf[self._lo:self._hi])

    def __repr__(self) -> str:
        return f"CompositionView{self.to_tuple()}"


def stream(spec: GeneratorSpec, materialize: bool = False):
    """Pull-based resumable sequence over any of the six generators.

    Yields zero-copy :class:`CompositionView` items by default; with
    ``materialize=True`` each composition is copied out as a tuple.
    """
    view = CompositionView([], 0, 0)
    for buf, lo, hi in iterate(spec):
        if materialize:
            yield tuple(buf[lo:hi])
        else:
            view._buf, view._lo, view._hi = buf, lo, hi
            yield view
