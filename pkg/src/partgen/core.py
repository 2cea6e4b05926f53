"""Composition data model and the pure succession rules.

Ascending compositions are nondecreasing part sequences, descending
compositions nonincreasing; either encoding covers every partition of n
exactly once.  The succession rules here are standalone reference
functions: they build a brand new Composition per step and serve as the
oracle against which the in-place generators are tested.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

from .errors import DomainError, EmptyInput, NoSuccessor, OrderViolation


class Order(Enum):
    ASCENDING = "ascending"
    DESCENDING = "descending"


class TerminalClass(Enum):
    TERMINAL = "terminal"
    NONTERMINAL = "nonterminal"


@dataclass(frozen=True)
class Composition:
    """An ordered sequence of positive parts with a cached sum.

    Parts are 1-indexed in all documentation (part 1 is ``parts[0]``).
    Instances are immutable; use :func:`validate` to construct one with
    the order discipline checked.
    """

    parts: Tuple[int, ...]
    n: int
    order: Order

    @property
    def k(self) -> int:
        return len(self.parts)

    def reversed(self) -> "Composition":
        """The same partition in the opposite order discipline."""
        other = Order.DESCENDING if self.order is Order.ASCENDING else Order.ASCENDING
        return Composition(tuple(reversed(self.parts)), self.n, other)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)


def validate(parts: Sequence[int], order: Order) -> Composition:
    """Check parts against the order discipline and cache the sum.

    Raises EmptyInput for an empty sequence, OrderViolation if any part
    is < 1 or the monotonicity for `order` fails.
    """
    parts = tuple(parts)
    if not parts:
        raise EmptyInput("composition needs at least one part")
    if any(p < 1 for p in parts):
        raise OrderViolation(f"parts must be positive: {parts}")
    for a, b in zip(parts, parts[1:]):
        if order is Order.ASCENDING and a > b:
            raise OrderViolation(f"{parts} is not nondecreasing")
        if order is Order.DESCENDING and a < b:
            raise OrderViolation(f"{parts} is not nonincreasing")
    return Composition(parts, sum(parts), order)


def lexmin_asc(n: int, m: int) -> Composition:
    """Lexicographically least ascending composition of n with first part >= m.

    The result is mu copies of m followed by n - mu*m, mu = floor(n/m) - 1.
    """
    if m < 1 or m > n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    mu = n // m - 1
    parts = (m,) * mu + (n - mu * m,)
    return Composition(parts, n, Order.ASCENDING)


def lexsucc_asc(c: Composition) -> Composition:
    """Immediate lexicographic successor of an ascending composition.

    Replaces the last two parts a_{k-1}, a_k with the lexicographically
    least completion starting from a_{k-1} + 1.  Raises NoSuccessor on
    the singleton <n>, which is last in lexicographic order.
    """
    if c.order is not Order.ASCENDING:
        raise DomainError("lexsucc_asc needs an ascending composition")
    if c.k == 1:
        raise NoSuccessor(f"<{c.n}> is the final ascending composition")
    m = c.parts[-2] + 1
    n_rest = c.parts[-2] + c.parts[-1]
    mu = n_rest // m - 1
    parts = c.parts[:-2] + (m,) * mu + (n_rest - mu * m,)
    return Composition(parts, c.n, Order.ASCENDING)


def lexsucc_desc(c: Composition) -> Composition:
    """Reverse-lexicographic successor of a descending composition.

    With q the rightmost index carrying a part > 1, the suffix from q is
    replaced by mu copies of m = d_q - 1 plus a remainder, redistributing
    n' = d_q + k - q.  Raises NoSuccessor on the all-ones composition.
    """
    if c.order is not Order.DESCENDING:
        raise DomainError("lexsucc_desc needs a descending composition")
    if c.parts[0] == 1:
        raise NoSuccessor("the all-ones composition is the final one")
    q = max(i for i, p in enumerate(c.parts) if p > 1)
    m = c.parts[q] - 1
    n_rest = c.parts[q] + (c.k - 1 - q)
    mu = n_rest // m - (1 if n_rest % m == 0 else 0)
    rest = n_rest - mu * m
    parts = c.parts[:q] + (m,) * mu + ((rest,) if rest > 0 else ())
    return Composition(parts, c.n, Order.DESCENDING)


def classify(c: Composition) -> TerminalClass:
    """Terminal iff k = 1 or twice the second-last part is at most the last."""
    if c.order is not Order.ASCENDING:
        raise DomainError("only ascending compositions are classified")
    if c.k == 1 or 2 * c.parts[-2] <= c.parts[-1]:
        return TerminalClass.TERMINAL
    return TerminalClass.NONTERMINAL
