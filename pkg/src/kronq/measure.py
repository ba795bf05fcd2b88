"""Total order on finite sets of positive integers used as filtration measures.

A measure is a finite strictly increasing tuple of positive integers,
recording the lengths along a chain of submodules.  Two measures I, J are
compared by the smallest element of their symmetric difference: I < J
exactly when min(I xor J) lies in J.

That definition is equivalent to the following walk, which is what
``compare`` implements.  Scan both tuples in increasing order.  At the
first position where they disagree, every earlier element is shared, so
the two candidates for min(I xor J) are the two disagreeing elements;
the smaller of the two is the minimum of the symmetric difference and
belongs to exactly one side, making that side the larger measure.  If
one tuple is a proper prefix of the other, the symmetric difference is
the tail of the longer tuple, so the longer tuple is larger.  Equal
tuples have empty symmetric difference and are equal.  In particular
the empty measure is the minimum and {1} < {1,2} < {1,2,3} < ... while
{1,3} < {1,2} (the disagreement 2 vs 3 is won by the side holding 2).

Three families recur throughout:

    mu_uniserial(t) = {1, 2, ..., t}
    mu_regular(t)   = {1, 2, 4, 6, ..., 2t}
    mu_upper(t)     = {1, 2, 4, 6, ..., 2t, 2t+1}

Every mu_regular(t) is below every mu_upper(s), and mu_upper(t+1) <
mu_upper(t): the upper family decreases as it lengthens.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class GRMeasure:
    """Immutable strictly increasing tuple of positive integers."""

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[int] = ()):
        elems = tuple(int(x) for x in elements)
        for a, b in zip(elems, elems[1:]):
            if a >= b:
                raise ValueError(f"elements must strictly increase, got {elems}")
        if elems and elems[0] < 1:
            raise ValueError(f"elements must be positive, got {elems}")
        object.__setattr__(self, "elements", elems)

    def __setattr__(self, name, value):
        raise AttributeError("GRMeasure is immutable")

    def __getstate__(self):
        return self.elements

    def __setstate__(self, state):
        object.__setattr__(self, "elements", state)

    # --- basic protocol ---

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, GRMeasure) and self.elements == other.elements

    def __repr__(self) -> str:
        return f"GRMeasure({list(self.elements)})"

    def __str__(self) -> str:
        return format_measure(self)

    # --- the total order ---

    def compare(self, other: "GRMeasure") -> int:
        """Return -1, 0, or 1 as self <, ==, > other in the measure order."""
        a, b = self.elements, other.elements
        for x, y in zip(a, b):
            if x != y:
                # smaller disagreeing element wins
                return 1 if x < y else -1
        if len(a) == len(b):
            return 0
        # proper prefix loses to the longer tuple
        return 1 if len(a) > len(b) else -1

    def __lt__(self, other: "GRMeasure") -> bool:
        return self.compare(other) < 0

    def __le__(self, other: "GRMeasure") -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: "GRMeasure") -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: "GRMeasure") -> bool:
        return self.compare(other) >= 0

    # --- structural relations ---

    def ll_relation(self, other: "GRMeasure") -> bool:
        """True when self is a proper subset of other and max(self) < min(other - self).

        The empty measure relates to every nonempty one.  When the relation
        holds, other = self + (a strictly larger tail), so self is an
        initial segment of other.
        """
        a, b = self.elements, other.elements
        if len(a) >= len(b):
            return False
        if a != b[: len(a)]:
            return False
        return True

    def starts_with(self, prefix: "GRMeasure") -> bool:
        """True when prefix is an initial segment of self (equality allowed)."""
        return self.elements[: len(prefix.elements)] == prefix.elements

    def extend(self, value: int) -> "GRMeasure":
        """Append one element, which must exceed the current maximum."""
        if self.elements and value <= self.elements[-1]:
            raise ValueError(f"cannot extend {self.elements} by {value}")
        return GRMeasure(self.elements + (int(value),))

    @property
    def top(self) -> int:
        if not self.elements:
            raise ValueError("empty measure has no top")
        return self.elements[-1]

    def drop_top(self) -> "GRMeasure":
        if not self.elements:
            raise ValueError("empty measure has no top")
        return GRMeasure(self.elements[:-1])


EMPTY = GRMeasure(())


def mu_uniserial(t: int) -> GRMeasure:
    """{1, 2, ..., t}; the measure of a chain with simple filtration steps."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return GRMeasure(range(1, t + 1))


def mu_regular(t: int) -> GRMeasure:
    """{1, 2, 4, 6, ..., 2t}; realized by the square regular family of length 2t."""
    if t < 1:
        raise ValueError("t must be positive")
    return GRMeasure((1,) + tuple(range(2, 2 * t + 1, 2)))


def mu_upper(t: int) -> GRMeasure:
    """{1, 2, 4, 6, ..., 2t, 2t+1}.

    For t = 0 this is {1}.  The family strictly decreases in t while the
    lengths 2t+1 grow, and every mu_regular(s) lies below every mu_upper(t).
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    return GRMeasure((1,) + tuple(range(2, 2 * t + 1, 2)) + ((2 * t + 1,) if t >= 1 else ()))


def find_between(lo: GRMeasure, hi: GRMeasure, measures: Iterable[GRMeasure]) -> list[GRMeasure]:
    """All measures from the iterable strictly between lo and hi, sorted ascending."""
    found = sorted(m for m in measures if lo < m < hi)
    return found


def format_measure(m: GRMeasure) -> str:
    return "{" + ",".join(str(x) for x in m.elements) + "}"


def parse_measure(text: str) -> GRMeasure:
    """Parse '{1,2,4}' or '1,2,4' (whitespace tolerated, '{}' is empty)."""
    s = text.strip()
    if s.startswith("{"):
        if not s.endswith("}"):
            raise ValueError(f"unbalanced braces in {text!r}")
        s = s[1:-1]
    s = s.strip()
    if not s:
        return EMPTY
    try:
        parts = tuple(int(p.strip()) for p in s.split(","))
    except ValueError:
        raise ValueError(f"cannot parse measure from {text!r}") from None
    return GRMeasure(parts)
