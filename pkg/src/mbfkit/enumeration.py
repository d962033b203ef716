"""Profile-by-profile enumeration of inequivalent monotone functions.

The engine builds, for one profile at a time, the set of inequivalent
functions with that profile: start from the empty antichain, repeatedly
disjoin one more j-set that is incomparable to every existing minimal term,
canonicalize, and deduplicate.  Each profile extends the profile that has its
rightmost nonzero entry decremented, so sets arrive in ascending size and a
candidate j-set only needs f(s) = 0 to be incomparable to the terms below it.

Full counts avoid generating most profiles outright:

* constant: the all-zero profile is the constant-0 class;
* strip: a_1 > 0 profiles take class counts from the (n-1)-variable profile
  with one singleton removed, labeled counts from
  C(n, a_1) * D of (0, a_2, ..., a_{n-a_1}) over n - a_1 variables
  (stripping does not preserve labeled counts, only class counts);
* dual: a profile and its term-complement reversal count identically;
* complement: a lone level entry a_i counts like C(n,i) - a_i.

Reports carry, per profile: class count (R), labeled count (D), number of
classes with trivial stabilizer, and elapsed time.  Totals add one for the
constant-1 function, which has no profile.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import comb, factorial
from pathlib import Path

import mpmath as mp

from .classlist import ProfileClassList
from .profiles import (
    Profile,
    format_profile,
    complement_profile,
    profile_feasible,
    profiles_as_tuples,
    reverse_dual_profile,
    strip_singleton,
)
from .store import ResultsDB, load_profile_list, profile_list_filename, save_profile_list, StoreError
from .symmetry import batch_canonical_words, words_to_tables
from .truthtable import minimal_term_masks, monomial_table

_log = logging.getLogger(__name__)

# Labeled-function counts for n = 0..8 (OEIS A000372), used by estimates and
# the command-line front end.
KNOWN_DEDEKIND = {
    0: 2,
    1: 3,
    2: 6,
    3: 20,
    4: 168,
    5: 7581,
    6: 7828354,
    7: 2414682040998,
    8: 56130437228687557907788,
}

# Class counts for n = 0..7 (OEIS A003182).
KNOWN_CLASS_COUNTS = {0: 2, 1: 3, 2: 5, 3: 10, 4: 30, 5: 210, 6: 16353, 7: 490013148}

_CONSTANT = "constant"
_GENERATED = "generated"
_STRIP = "strip"
_DUAL = "dual"
_COMPLEMENT = "complement"


class ComputationInterrupted(RuntimeError):
    """Raised when a run hits its profile budget; checkpoints stay valid."""


@dataclass(frozen=True)
class CountOptions:
    """Knobs for :func:`count_all`."""

    jobs: int = 1
    checkpoint_dir: Path | None = None
    extended: bool = False
    max_minterms: int | None = None
    # stop after this many generated profiles (recovery/testing hook)
    stop_after_profiles: int | None = None


@dataclass(frozen=True)
class ProfileCount:
    r_count: int
    d_count: int
    aut1_count: int
    elapsed: float
    method: str


@dataclass
class CountsReport:
    """Per-profile counts for one dimension plus derived totals."""

    n: int
    per_profile: dict[Profile, ProfileCount]
    max_minterms: int | None = None
    elapsed: float = 0.0

    @property
    def r_total(self) -> int:
        """Class count; the +1 is the constant-1 function (no profile)."""
        return 1 + sum(c.r_count for c in self.per_profile.values())

    @property
    def d_total(self) -> int:
        return 1 + sum(c.d_count for c in self.per_profile.values())

    @property
    def asymmetric_total(self) -> int:
        """Classes with trivial stabilizer; zero when the group is trivial."""
        if factorial(self.n) == 1:
            return 0
        return sum(c.aut1_count for c in self.per_profile.values())

    def by_minterms(self) -> dict[int, int]:
        """Class counts keyed by number of minimal terms (constant-1 excluded)."""
        out: dict[int, int] = {}
        for p, c in self.per_profile.items():
            out[sum(p)] = out.get(sum(p), 0) + c.r_count
        return out

    def write_csv(self, path) -> None:
        import csv

        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["profile", "R_count", "D_count", "elapsed_seconds"])
            for p in sorted(self.per_profile):
                c = self.per_profile[p]
                w.writerow([format_profile(p), c.r_count, c.d_count, f"{c.elapsed:.6f}"])
            w.writerow(["TOTAL", self.r_total, self.d_total, f"{self.elapsed:.6f}"])


# ---------------------------------------------------------------------------
# single-profile generation
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _level_candidates(n: int, j: int) -> tuple[tuple[int, int, int], ...]:
    """(position, monomial table, term mask) for every j-subset of [n]."""
    full = (1 << n) - 1
    out = []
    for pos in range(1 << n):
        mask = ~pos & full
        if mask.bit_count() == j:
            out.append((pos, monomial_table(n, mask), mask))
    return tuple(out)


def constant_zero_list(n: int) -> ProfileClassList:
    return ProfileClassList(n, (0,) * n, {0: 1})


def extend_profile(base: ProfileClassList, j: int) -> ProfileClassList:
    """All inequivalent functions whose profile is base's with entry j + 1.

    Disjoins every j-set incomparable to each base class's minimal terms,
    then canonicalizes and deduplicates.  Raises for an unrealizable target;
    an empty result for a realizable target is an engine defect and is logged
    as such.
    """
    n = base.n
    if not 1 <= j <= n:
        raise ValueError(f"term size {j} out of 1..{n}")
    target = list(base.profile)
    target[j - 1] += 1
    target = tuple(target)
    if not profile_feasible(target):
        raise ValueError(f"profile {format_profile(target)} is not realizable for n={n}")

    candidates = _level_candidates(n, j)
    has_bigger = any(base.profile[i] for i in range(j, n))
    raw: set[int] = set()
    for table in base.classes:
        if has_bigger:
            big = [t for t in minimal_term_masks(table, n) if t.bit_count() > j]
            for pos, mono, smask in candidates:
                # f(s) = 0 rules out s containing a term; also reject s
                # inside a larger term
                if (table >> pos) & 1:
                    continue
                if any(b & smask == smask for b in big):
                    continue
                raw.add(table | mono)
        else:
            for pos, mono, _ in candidates:
                if not (table >> pos) & 1:
                    raw.add(table | mono)

    if not raw:
        _log.error(
            "realizable profile %s yielded no extensions from %s; "
            "this contradicts completeness of the profile list",
            format_profile(target),
            format_profile(base.profile),
        )
        return ProfileClassList(n, target, {})

    ordered = sorted(raw)
    words, auts = batch_canonical_words(n, ordered)
    nf = factorial(n)
    first_idx: dict[bytes, int] = {}
    for i in range(len(ordered)):
        key = words[i].tobytes()
        if key not in first_idx:
            first_idx[key] = i
    idxs = sorted(first_idx.values())
    tables = words_to_tables(n, words[idxs])
    classes = {t: nf // int(auts[i]) for t, i in zip(tables, idxs)}
    out = ProfileClassList(n, target, classes)
    _spot_check(out)
    return out


def _spot_check(plist: ProfileClassList, limit: int = 1000) -> None:
    """Verify the minimal-term profile of a prefix of freshly built classes."""
    want = plist.profile
    for table in list(plist.classes)[:limit]:
        got = [0] * plist.n
        for mask in minimal_term_masks(table, plist.n):
            got[mask.bit_count() - 1] += 1
        if tuple(got) != want:
            raise AssertionError(
                f"generated table {table:#x} has profile {tuple(got)}, "
                f"expected {format_profile(want)}"
            )


def seed_profile(n: int, i: int, k: int) -> ProfileClassList:
    """Inequivalent antichains of exactly k distinct i-subsets of [n]."""
    if not 1 <= i <= n:
        raise ValueError(f"term size {i} out of 1..{n}")
    if not 1 <= k <= comb(n, i):
        raise ValueError(f"need 1 <= k <= C({n},{i}) = {comb(n, i)}, got {k}")
    plist = constant_zero_list(n)
    for _ in range(k):
        plist = extend_profile(plist, i)
    return plist


def _rightmost_base(p: Profile) -> tuple[Profile, int]:
    """Predecessor profile (rightmost nonzero entry decremented) and its level."""
    r = max(i for i, v in enumerate(p) if v)
    out = list(p)
    out[r] -= 1
    return tuple(out), r + 1


def build_class_list(
    n: int, p: Profile, cache: dict[Profile, ProfileClassList] | None = None
) -> ProfileClassList:
    """Generate the class list for one profile along its extension chain."""
    if len(p) != n:
        raise ValueError(f"profile length {len(p)} != n={n}")
    if not profile_feasible(p):
        raise ValueError(f"profile {format_profile(p)} is not realizable for n={n}")
    if cache is None:
        cache = {}
    chain: list[Profile] = []
    cur = p
    while any(cur) and cur not in cache:
        chain.append(cur)
        cur, _ = _rightmost_base(cur)
    for q in reversed(chain):
        base_p, level = _rightmost_base(q)
        base = cache[base_p] if any(base_p) else constant_zero_list(n)
        cache[q] = extend_profile(base, level)
    return cache[p] if any(p) else constant_zero_list(n)


def count_profile(n: int, p: Profile) -> tuple[int, int]:
    """(class count, labeled count) for one profile, by direct generation."""
    plist = build_class_list(n, p)
    return plist.r_count, plist.d_count


# ---------------------------------------------------------------------------
# full counting with shortcuts
# ---------------------------------------------------------------------------


def _plan_methods(n: int, profiles: list[Profile]) -> dict[Profile, str]:
    """Assign each profile the cheapest way to obtain its counts."""
    method: dict[Profile, str | None] = {}
    pset = set(profiles)
    for p in profiles:
        if not any(p):
            method[p] = _CONSTANT
        elif p[0] > 0:
            method[p] = _STRIP
        elif n >= 2 and p[n - 2] > 0:
            # reversal dual starts with a singleton entry, handled above
            method[p] = _DUAL
        else:
            method[p] = None

    for p in profiles:
        if method[p] is not None:
            continue
        nz = [i for i, v in enumerate(p) if v]
        if len(nz) == 1:
            i = nz[0]
            if 2 * p[i] > comb(n, i + 1) and complement_profile(p) in pset:
                method[p] = _COMPLEMENT

    for p in sorted(pset):
        if method[p] is not None:
            continue
        q = reverse_dual_profile(p)
        if q == p or q not in pset:
            method[p] = _GENERATED
        elif method[q] is None:
            method[p] = _GENERATED
            method[q] = _DUAL
        else:
            method[p] = _DUAL if method[q] == _GENERATED else _GENERATED

    # every generated profile needs its whole extension chain generated
    stack = [p for p, m in method.items() if m == _GENERATED]
    while stack:
        p = stack.pop()
        base, _ = _rightmost_base(p)
        if any(base) and method[base] != _GENERATED:
            method[base] = _GENERATED
            stack.append(base)

    assert all(m is not None for m in method.values())
    return method  # type: ignore[return-value]


def _stats_from_list(plist: ProfileClassList, elapsed: float) -> ProfileCount:
    return ProfileCount(
        plist.r_count, plist.d_count, plist.aut1_count, elapsed, _GENERATED
    )


def _generation_task(args):
    """Worker: extend one profile from its base list (jobs > 1 path)."""
    n, target, base_profile, base_classes, save_path = args
    start = time.perf_counter()
    base = (
        ProfileClassList(n, base_profile, base_classes)
        if any(base_profile)
        else constant_zero_list(n)
    )
    _, level = _rightmost_base(target)
    out = extend_profile(base, level)
    if save_path is not None:
        save_profile_list(out, save_path)
    return target, out.classes, time.perf_counter() - start


class _LevelRun:
    """Generation pass for one dimension: waves of extensions by term count."""

    def __init__(self, n: int, options: CountOptions, db: ResultsDB | None, budget):
        self.n = n
        self.options = options
        self.db = db
        self.budget = budget  # mutable [remaining] or None
        self.lists: dict[Profile, ProfileClassList] = {}
        self.stats: dict[Profile, ProfileCount] = {}
        self.dir: Path | None = None
        if options.checkpoint_dir is not None:
            self.dir = Path(options.checkpoint_dir) / f"n{n}"
            self.dir.mkdir(parents=True, exist_ok=True)

    def _path(self, p: Profile) -> Path | None:
        return None if self.dir is None else self.dir / profile_list_filename(p)

    def _try_resume(self, p: Profile) -> bool:
        """Reuse a checkpointed list when both the file and its row agree."""
        path = self._path(p)
        if path is None or self.db is None or not path.exists():
            return False
        if (self.n, p) not in self.db:
            return False
        try:
            plist = load_profile_list(path, expect_n=self.n, expect_profile=p)
        except StoreError as exc:
            _log.warning("discarding unusable checkpoint %s: %s", path, exc)
            return False
        self.db.record(self.n, p, plist.r_count, plist.d_count, 0.0)
        self.lists[p] = plist
        self.stats[p] = _stats_from_list(plist, 0.0)
        return True

    def _record(self, p: Profile, plist: ProfileClassList, elapsed: float) -> None:
        self.lists[p] = plist
        self.stats[p] = _stats_from_list(plist, elapsed)
        if self.db is not None:
            self.db.record(self.n, p, plist.r_count, plist.d_count, elapsed)
        if self.budget is not None:
            self.budget[0] -= 1
            if self.budget[0] <= 0:
                raise ComputationInterrupted(
                    f"profile budget exhausted after n={self.n} {format_profile(p)}"
                )

    def _base_list(self, p: Profile) -> ProfileClassList:
        base, _ = _rightmost_base(p)
        if not any(base):
            return constant_zero_list(self.n)
        got = self.lists.get(base)
        if got is None:
            raise AssertionError(f"base list {format_profile(base)} missing")
        return got

    def run(self, targets: list[Profile]) -> dict[Profile, ProfileCount]:
        waves: dict[int, list[Profile]] = {}
        for p in targets:
            waves.setdefault(sum(p), []).append(p)
        jobs = max(1, self.options.jobs)
        for s in sorted(waves):
            wave = sorted(waves[s])
            pending = [p for p in wave if not self._try_resume(p)]
            if jobs > 1 and len(pending) > 1:
                self._run_wave_parallel(pending, jobs)
            else:
                for p in pending:
                    start = time.perf_counter()
                    _, level = _rightmost_base(p)
                    plist = extend_profile(self._base_list(p), level)
                    if (path := self._path(p)) is not None:
                        save_profile_list(plist, path)
                    self._record(p, plist, time.perf_counter() - start)
            # lists two waves back can no longer be extension bases
            for p in list(self.lists):
                if sum(p) < s:
                    del self.lists[p]
        return self.stats

    def _run_wave_parallel(self, wave: list[Profile], jobs: int) -> None:
        tasks = []
        for p in wave:
            base, _ = _rightmost_base(p)
            base_classes = self.lists[base].classes if any(base) else {}
            tasks.append((self.n, p, base, base_classes, self._path(p)))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for target, classes, elapsed in pool.map(_generation_task, tasks):
                self._record(target, ProfileClassList(self.n, target, classes), elapsed)


def _reduced_profile(p: Profile) -> Profile:
    """Profile left on the other n - a_1 variables after removing all singletons."""
    n = len(p)
    s = p[0]
    m = n - s
    if any(p[i] for i in range(max(m, 1), n)):
        raise AssertionError(f"profile {p} has terms too large for its singletons")
    return (0,) * min(1, m) + p[1:m]


def _count_level(
    n: int,
    reports: dict[int, dict[Profile, ProfileCount]],
    options: CountOptions,
    db: ResultsDB | None,
    budget,
) -> dict[Profile, ProfileCount]:
    profiles = profiles_as_tuples(n)
    if options.max_minterms is not None:
        profiles = [p for p in profiles if sum(p) <= options.max_minterms]
    method = _plan_methods(n, profiles)

    out: dict[Profile, ProfileCount] = {}
    trivial_aut1 = 1 if factorial(n) == 1 else 0
    for p in profiles:
        if method[p] == _CONSTANT:
            out[p] = ProfileCount(1, 1, trivial_aut1, 0.0, _CONSTANT)

    run = _LevelRun(n, options, db, budget)
    generated = [p for p in profiles if method[p] == _GENERATED]
    out.update(run.run(generated))

    for p in profiles:
        if method[p] != _STRIP:
            continue
        start = time.perf_counter()
        stripped = strip_singleton(p)
        src = reports[n - 1][stripped]
        s = p[0]
        reduced = _reduced_profile(p)
        d = comb(n, s) * reports[n - s][reduced].d_count
        aut1 = src.aut1_count if s == 1 else 0
        out[p] = ProfileCount(src.r_count, d, aut1, time.perf_counter() - start, _STRIP)

    pending = [p for p in profiles if p not in out]
    while pending:
        still = []
        for p in pending:
            src_p = (
                reverse_dual_profile(p) if method[p] == _DUAL else complement_profile(p)
            )
            src = out.get(src_p)
            if src is None:
                still.append(p)
                continue
            out[p] = ProfileCount(src.r_count, src.d_count, src.aut1_count, 0.0, method[p])
        if len(still) == len(pending):
            raise AssertionError(f"unresolvable shortcut chain: {still[:5]}")
        pending = still

    # redundancy: independently generated dual pairs must agree
    for p in generated:
        q = reverse_dual_profile(p)
        if q != p and q in out and method.get(q) == _GENERATED:
            a, b = out[p], out[q]
            if (a.r_count, a.d_count, a.aut1_count) != (b.r_count, b.d_count, b.aut1_count):
                raise AssertionError(
                    f"dual profiles disagree: {format_profile(p)} vs {format_profile(q)}"
                )
    if db is not None:
        for p, c in out.items():
            db.record(n, p, c.r_count, c.d_count, c.elapsed)
    return out


def count_all(n: int, options: CountOptions | None = None) -> CountsReport:
    """Counts for every profile of dimension n, with totals and breakdowns.

    Dimensions below n are computed along the way (the singleton-strip
    shortcut consumes them).  n = 7 is cluster-scale and must be requested
    with ``extended`` unless the run is capped at few minimal terms.
    """
    options = options or CountOptions()
    if n < 0:
        raise ValueError("n must be non-negative")
    small_cap = options.max_minterms is not None and options.max_minterms <= 4
    if n == 7 and not (options.extended or small_cap):
        raise ValueError(
            "n=7 is a cluster-scale computation; pass extended=True "
            "(checkpointing strongly recommended)"
        )
    if n > 7:
        raise ValueError(f"counting beyond n=7 is out of scope (got n={n})")

    db = None
    if options.checkpoint_dir is not None:
        Path(options.checkpoint_dir).mkdir(parents=True, exist_ok=True)
        db = ResultsDB(Path(options.checkpoint_dir) / "results.csv")
    budget = (
        [options.stop_after_profiles] if options.stop_after_profiles is not None else None
    )

    start = time.perf_counter()
    reports: dict[int, dict[Profile, ProfileCount]] = {}
    for m in range(n + 1):
        reports[m] = _count_level(m, reports, options, db, budget)
    return CountsReport(
        n, reports[n], max_minterms=options.max_minterms,
        elapsed=time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# derived quantities
# ---------------------------------------------------------------------------


def count_by_minterms(report: CountsReport, k: int) -> int:
    """Number of classes with exactly k minimal terms (constant-1 excluded)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if report.max_minterms is not None and k > report.max_minterms:
        raise ValueError(
            f"report only covers profiles with at most {report.max_minterms} terms"
        )
    return report.by_minterms().get(k, 0)


def count_asymmetric(report: CountsReport) -> int:
    """Classes whose only automorphism is the identity."""
    return report.asymmetric_total


def lower_bound_R(
    n: int, d_n: int, *, refined: bool = False, report: CountsReport | None = None
) -> int:
    """Lower bound on the class count from the labeled count.

    The plain bound is ceil(D / n!).  The refined bound enumerates every
    class with at most four minimal terms (plus both constants) and replaces
    their n!-sized allowance with exact orbit sizes; only classes with
    nontrivial symmetry raise the bound.
    """
    nf = factorial(n)
    naive = -(-d_n // nf)
    if not refined:
        return naive
    if report is None:
        report = count_all(n, CountOptions(max_minterms=4))
    if report.max_minterms is not None and report.max_minterms < 4:
        raise ValueError("refined bound needs profiles up to four minimal terms")
    known_classes = report.r_total
    known_functions = report.d_total
    if known_functions > d_n:
        raise ValueError("partial labeled count exceeds the claimed total")
    return known_classes + -(-(d_n - known_functions) // nf)


def korshunov_estimate(n: int) -> mp.mpf:
    """Closed-form asymptotic estimate of the labeled count D(n)."""
    if n < 2:
        raise ValueError("the asymptotic form needs n >= 2")
    with mp.workprec(256):
        if n % 2 == 0:
            h = n // 2
            bracket = (
                mp.power(2, -h)
                + n * n * mp.power(2, -(n + 5))
                - n * mp.power(2, -(n + 4))
            )
            est = mp.power(2, comb(n, h)) * mp.exp(comb(n, h - 1) * bracket)
        else:
            b1 = (
                mp.power(2, (-n - 3) // 2)
                - n * n * mp.power(2, -(n + 5))
                - n * mp.power(2, -(n + 3))
            )
            b2 = mp.power(2, (-n - 1) // 2) - n * n * mp.power(2, -(n + 4))
            est = mp.power(2, comb(n, (n - 1) // 2) + 1) * mp.exp(
                comb(n, (n - 3) // 2) * b1 + comb(n, (n - 1) // 2) * b2
            )
        return +est
