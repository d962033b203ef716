"""Brute-force reference implementations for small dimensions.

Everything here is deliberately written against different machinery than the
fast paths it validates: the input order is derived by sorting subsets in
reverse colex order (not by the bit-complement formula), monotonicity checks
every comparable pair (not just covering pairs), orbits come from explicit
set relabeling (not index-bit relocation), and the n = 5 monotone census is a
recursive incomparable-family search (not profile-guided extension).
Agreement with the fast modules is evidence, not tautology.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .truthtable import TruthTable

_BRUTE_TABLE_LIMIT = 4
_BRUTE_CLASS_LIMIT = 5


@lru_cache(maxsize=None)
def _input_order(n: int) -> tuple[frozenset[int], ...]:
    """The 2**n input sets in reverse colex order, largest-indexed first."""
    subsets = [frozenset(s) for r in range(n + 1) for s in itertools.combinations(range(1, n + 1), r)]

    def colex(s: frozenset[int]):
        return tuple(1 if v in s else 0 for v in range(1, n + 1))[::-1]

    return tuple(sorted(subsets, key=colex, reverse=True))


@lru_cache(maxsize=None)
def _comparable_pairs(n: int) -> tuple[tuple[int, int], ...]:
    order = _input_order(n)
    pairs = []
    for i, a in enumerate(order):
        for j, b in enumerate(order):
            if i != j and a < b:
                pairs.append((i, j))  # f(a) <= f(b) required
    return tuple(pairs)


def _row_monotone(row: tuple[int, ...], pairs) -> bool:
    for i, j in pairs:
        if row[i] > row[j]:
            return False
    return True


def _row_to_table(row: tuple[int, ...], n: int) -> TruthTable:
    return TruthTable.from_string("".join(str(v) for v in row))


def brute_monotone_tables(n: int) -> list[TruthTable]:
    """Every monotone table, by filtering all 2**(2**n) output vectors."""
    if n > _BRUTE_TABLE_LIMIT:
        raise ValueError(f"exhaustive table filter supports n <= {_BRUTE_TABLE_LIMIT}")
    size = 1 << n
    pairs = _comparable_pairs(n)
    out = []
    for assignment in range(1 << size):
        row = tuple((assignment >> i) & 1 for i in range(size))
        if _row_monotone(row, pairs):
            out.append(_row_to_table(row, n))
    return out


def _antichain_rows(n: int) -> list[tuple[int, ...]]:
    """Monotone output rows via incomparable-family search (n = 5 scale)."""
    order = _input_order(n)
    nonempty = [s for s in order if s]
    rows = []

    def row_of(family: list[frozenset[int]]) -> tuple[int, ...]:
        return tuple(1 if any(t <= s for t in family) else 0 for s in order)

    def rec(start: int, family: list[frozenset[int]]) -> None:
        rows.append(row_of(family))
        for i in range(start, len(nonempty)):
            s = nonempty[i]
            if all(not (s <= t or t <= s) for t in family):
                family.append(s)
                rec(i + 1, family)
                family.pop()

    rec(0, [])
    rows.append(tuple(1 for _ in order))  # constant 1 (the empty-set term)
    return rows


def _monotone_rows(n: int) -> list[tuple[int, ...]]:
    if n <= _BRUTE_TABLE_LIMIT:
        size = 1 << n
        pairs = _comparable_pairs(n)
        return [
            tuple((a >> i) & 1 for i in range(size))
            for a in range(1 << size)
            if _row_monotone(tuple((a >> i) & 1 for i in range(size)), pairs)
        ]
    return _antichain_rows(n)


def brute_classes(n: int) -> list[list[TruthTable]]:
    """Orbits of all monotone tables under explicit variable relabeling."""
    if n > _BRUTE_CLASS_LIMIT:
        raise ValueError(f"orbit partition supports n <= {_BRUTE_CLASS_LIMIT}")
    order = _input_order(n)
    index = {s: i for i, s in enumerate(order)}
    perms = list(itertools.permutations(range(1, n + 1)))
    remaps = []
    for perm in perms:
        mapping = {v: perm[v - 1] for v in range(1, n + 1)}
        remaps.append(tuple(index[frozenset(mapping[v] for v in s)] for s in order))

    rows = _monotone_rows(n)
    seen: set[tuple[int, ...]] = set()
    classes = []
    for row in rows:
        if row in seen:
            continue
        orbit = {tuple(row[r[i]] for i in range(len(order))) for r in remaps}
        seen |= orbit
        classes.append(sorted(orbit))
    return [[_row_to_table(r, n) for r in orbit] for orbit in classes]


def brute_min_shadow(n: int, r: int, x: int) -> int:
    """Exact minimum shadow by trying every family of x r-subsets of [n]."""
    if not 0 < r <= n:
        raise ValueError(f"need 0 < r <= n, got r={r}, n={n}")
    rsets = [frozenset(c) for c in itertools.combinations(range(1, n + 1), r)]
    if not 0 <= x <= len(rsets):
        raise ValueError(f"need 0 <= x <= C({n},{r})={len(rsets)}, got x={x}")
    if x == 0:
        return 0
    best = None
    for family in itertools.combinations(rsets, x):
        shadow = {s - {e} for s in family for e in s}
        if best is None or len(shadow) < best:
            best = len(shadow)
    return best
