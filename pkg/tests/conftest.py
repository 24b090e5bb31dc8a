"""Shared helpers for the test suite."""

from __future__ import annotations

from rookbound import FerrersDiagram, enumerate_diagrams


def all_diagrams(max_n: int, max_m: int):
    """Every diagram on every board up to max_n x max_m."""
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            yield from enumerate_diagrams(n, m)


def diagrams_up_to_size(max_size: int):
    """Every diagram with at most max_size dots, one per column-height
    multiset (independent of the board-by-board enumerator)."""
    out = []

    def rec(prefix: list[int], remaining: int, lo: int):
        if prefix:
            out.append(FerrersDiagram(tuple(prefix)))
        for c in range(lo, remaining + 1):
            prefix.append(c)
            rec(prefix, remaining - c, c)
            prefix.pop()

    rec([], max_size, 1)
    return out
