"""Profile vectors and their algebra.

The profile of a monotone function (other than constant 1) is the length-n
vector whose i-th entry counts minimal terms of cardinality i.  Profiles obey
three count-preserving identities used throughout the counting pipeline:

* complement within one level: a single nonzero entry a_i may be replaced by
  C(n,i) - a_i;
* singleton stripping: a_1 > 0 forces a_n = 0, and dropping one singleton
  yields a profile on n-1 variables (class counts carry over; labeled-function
  counts instead satisfy D(p) = C(n, a_1) * D of (0, a_2, ..., a_{n-a_1}));
* reversal duality: complementing every term in [n] reverses the first n-1
  entries and fixes the last.

``generate_profiles`` emits every realizable profile exactly once via a
dynamic program: a profile whose rightmost nonzero entry is x at position r is
obtained from one ending at position r-1 by trading shadow_bound(r, x) many
(r-1)-sets for x r-sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

Profile = tuple[int, ...]

MAX_GEN_VARS = 9

_shadow_cache: dict[tuple[int, int], int] = {}


def _shadow(r: int, x: int) -> int:
    """Minimum number of (r-1)-sets contained in some family of x r-sets.

    Kruskal-Katona style recurrence: with m the largest integer such that
    C(m, r) <= x, a shadow-minimal family takes all r-subsets of [m] plus
    x - C(m, r) sets through element m+1.
    """
    if x == 0:
        return 0
    if r == 1:
        return 1
    key = (r, x)
    cached = _shadow_cache.get(key)
    if cached is not None:
        return cached
    m = r
    while comb(m + 1, r) <= x:
        m += 1
    val = _shadow(r - 1, x - comb(m, r)) + comb(m, r - 1)
    _shadow_cache[key] = val
    return val


def shadow_bound(n: int, r: int, x: int) -> int:
    """Exact minimum shadow of x r-subsets of an n-set.

    Counts the (r-1)-sets comparable to (contained in) some family member,
    minimized over all families of x distinct r-subsets of [n].
    """
    if not 0 < r <= n:
        raise ValueError(f"need 0 < r <= n, got r={r}, n={n}")
    if not 0 <= x <= comb(n, r):
        raise ValueError(f"need 0 <= x <= C({n},{r})={comb(n, r)}, got x={x}")
    return _shadow(r, x)


@dataclass(frozen=True)
class ProfileGenState:
    """Intermediate state of the profile generator, kept for inspection.

    ``count_matrix[r][x]`` is the number of profiles whose rightmost nonzero
    entry is x at position r (column 0 carries the running total offset used
    by the recurrence); ``bound_matrix[r][x]`` is shadow_bound(r, x).
    """

    n: int
    count_matrix: np.ndarray
    bound_matrix: np.ndarray
    profiles: np.ndarray


def profile_generation_state(n: int) -> ProfileGenState:
    """Run the profile-generation dynamic program and keep its matrices."""
    if not 0 <= n <= MAX_GEN_VARS:
        raise ValueError(f"profile generation supports 0 <= n <= {MAX_GEN_VARS}")
    if n == 0:
        return ProfileGenState(
            0,
            np.array([[1, 1]], dtype=np.int64),
            np.zeros((1, 2), dtype=np.int64),
            np.zeros((1, 0), dtype=np.int16),
        )
    width = comb(n, n // 2)
    cmat = np.zeros((n + 1, width + 1), dtype=np.int64)
    kmat = np.zeros((n + 1, width + 1), dtype=np.int64)
    cmat[0, 0] = cmat[0, 1] = 1
    s = 2

    init = np.zeros((n + 1, n), dtype=np.int16)
    init[:, 0] = np.arange(n + 1)
    blocks = [init]
    recent = init[1:]  # rows whose rightmost nonzero entry sits at position r-1

    for r in range(1, n + 1):
        d = s
        j = 0
        s = 0
        xmax = comb(n, r)
        for x in range(xmax + 1):
            k = _shadow(r, x) if x else 0
            kmat[r, x] = k
            while j < k:
                d -= cmat[r - 1, j]
                j += 1
            cmat[r, x] = d
            s += d
        if r >= 2:
            new = []
            for x in range(1, xmax + 1):
                k = int(kmat[r, x])
                cand = recent[recent[:, r - 2] >= k].copy()
                cand[:, r - 2] -= k
                cand[:, r - 1] = x
                if len(cand) != cmat[r, x]:
                    raise AssertionError(
                        f"generator bookkeeping mismatch at r={r}, x={x}: "
                        f"{len(cand)} rows vs count {cmat[r, x]}"
                    )
                new.append(cand)
            recent = (
                np.concatenate(new) if new else np.zeros((0, n), dtype=np.int16)
            )
            blocks.append(recent)

    rows = np.concatenate(blocks)
    rows = rows[np.lexsort(rows.T[::-1])]
    return ProfileGenState(n, cmat, kmat, rows)


def generate_profiles(n: int) -> np.ndarray:
    """All realizable profiles on n variables, one per row, sorted lex.

    Includes the all-zero profile (constant 0); the constant-1 function has
    no profile and is accounted for separately by the counting layer.
    """
    return profile_generation_state(n).profiles


def profiles_as_tuples(n: int) -> list[Profile]:
    """Convenience view of :func:`generate_profiles` as plain tuples."""
    return [tuple(int(v) for v in row) for row in generate_profiles(n)]


def profile_of(m) -> Profile:
    """Profile vector of a minimal-term antichain (constant 1 has none)."""
    if 0 in m.terms:
        raise ValueError("the constant-1 function has no profile")
    entries = [0] * m.n
    for t in m.terms:
        entries[t.bit_count() - 1] += 1
    return tuple(entries)


def _validate(p: Profile) -> int:
    n = len(p)
    if any(v < 0 for v in p):
        raise ValueError(f"profile entries must be non-negative: {p}")
    return n


def complement_profile(p: Profile) -> Profile:
    """Swap the single nonzero level a_i for C(n,i) - a_i; count-preserving."""
    n = _validate(p)
    nonzero = [i for i, v in enumerate(p) if v]
    if len(nonzero) != 1:
        raise ValueError(f"complement needs exactly one nonzero entry, got {p}")
    i = nonzero[0]
    c = comb(n, i + 1)
    if p[i] > c:
        raise ValueError(f"entry {p[i]} exceeds C({n},{i + 1})={c}")
    out = [0] * n
    out[i] = c - p[i]
    return tuple(out)


def reverse_dual_profile(p: Profile) -> Profile:
    """Reverse the first n-1 entries, fix the last; count-preserving involution."""
    n = _validate(p)
    if n <= 1:
        return p
    return tuple(reversed(p[: n - 1])) + (p[n - 1],)


def strip_singleton(p: Profile) -> Profile:
    """Drop one singleton term: (a_1, ..., a_n) -> (a_1 - 1, ..., a_{n-1}).

    Valid only when a_1 > 0, which forces a_n = 0.  Class counts over n
    variables equal class counts of the result over n-1 variables.
    """
    n = _validate(p)
    if n == 0 or p[0] == 0:
        raise ValueError(f"profile {p} has no singleton entry to strip")
    if n == 1:
        return ()
    if p[n - 1] != 0:
        raise ValueError(f"invalid profile {p}: a_1 > 0 forces a_n = 0")
    return (p[0] - 1,) + p[1 : n - 1]


def profile_feasible(p: Profile) -> bool:
    """Whether some monotone function on len(p) variables has this profile.

    Runs the generation step backwards: the rightmost nonzero entry x at
    position r must have been traded for shadow_bound(r, x) many (r-1)-sets.
    Equivalent to membership in :func:`generate_profiles` output.
    """
    n = len(p)
    if n > MAX_GEN_VARS:
        raise ValueError(f"feasibility check supports n <= {MAX_GEN_VARS}")
    if any(v < 0 for v in p):
        return False
    work = list(p)
    for r in range(n, 1, -1):
        x = work[r - 1]
        if x == 0:
            continue
        if x > comb(n, r):
            return False
        work[r - 2] += _shadow(r, x)
        work[r - 1] = 0
    return work[0] <= n if n else True


def format_profile(p: Profile) -> str:
    """Render as the conventional parenthesized string, e.g. ``(0,2,2,0,0)``."""
    return "(" + ",".join(str(v) for v in p) + ")"


def parse_profile(s: str) -> Profile:
    """Inverse of :func:`format_profile`."""
    body = s.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"profile must look like (a1,...,an): {s!r}")
    inner = body[1:-1].strip()
    if not inner:
        return ()
    try:
        p = tuple(int(v) for v in inner.split(","))
    except ValueError as exc:
        raise ValueError(f"bad profile string {s!r}") from exc
    _validate(p)
    return p
