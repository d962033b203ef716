"""Checkpoint persistence: per-profile class-list files and the results CSV.

Class lists are written as a short text header (format version, n, profile,
record count) followed by a binary body of fixed-size records: the canonical
table as little-endian 32-bit words, then the orbit size as one more 32-bit
word.  Files are written to a temporary name and renamed into place, so a
partial write never passes validation under the final name.

The results database is an append-only CSV keyed by (n, profile).  Recording
an already-finalized key is a no-op when the counts agree and a hard error
when they do not; recomputation doubles as a redundancy check.
"""

from __future__ import annotations

import csv
import os
import struct
from datetime import datetime, timezone
from pathlib import Path

from .classlist import ProfileClassList
from .profiles import Profile, format_profile, parse_profile
from .truthtable import MAX_VARS, word_count

MAGIC = "mbf-profile-list"
FORMAT_VERSION = 1

# full canonicality validation is O(n! * records); past this many records we
# spot-check a prefix, like the sampled minimal-term audits of long runs
FULL_CHECK_LIMIT = 100_000


class StoreError(Exception):
    """Base class for persistence failures."""


class StoreVersionError(StoreError):
    """File carries an unsupported format version."""


class StoreValidationError(StoreError):
    """File contents fail structural or mathematical validation."""


class StoreDimensionError(StoreError):
    """File holds a different n or profile than the caller expects."""


class ResultsMismatchError(StoreError):
    """A recomputed result disagrees with the finalized row."""


def profile_list_filename(profile: Profile) -> str:
    return "p" + "_".join(str(v) for v in profile) + ".mbfl"


def save_profile_list(plist: ProfileClassList, path) -> None:
    """Write a finalized class list; bit-exact round trip via load."""
    path = Path(path)
    words = word_count(plist.n)
    header = (
        f"{MAGIC} v{FORMAT_VERSION}\n"
        f"n={plist.n}\n"
        f"profile={format_profile(plist.profile)}\n"
        f"classes={plist.r_count}\n"
        "---\n"
    )
    tmp = path.with_name(path.name + ".tmp")
    fmt = f"<{words + 1}I"
    mask = (1 << 32) - 1
    with open(tmp, "wb") as fh:
        fh.write(header.encode("ascii"))
        for table, orbit in sorted(plist.classes.items()):
            vals = [(table >> (32 * w)) & mask for w in range(words)]
            vals.append(orbit)
            fh.write(struct.pack(fmt, *vals))
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def load_profile_list(
    path,
    *,
    expect_n: int | None = None,
    expect_profile: Profile | None = None,
) -> ProfileClassList:
    """Read and fully validate a class-list file.

    Raises StoreVersionError / StoreValidationError / StoreDimensionError for
    the distinct failure modes.
    """
    path = Path(path)
    with open(path, "rb") as fh:
        blob = fh.read()
    try:
        head_end = blob.index(b"---\n") + 4
    except ValueError:
        raise StoreValidationError(f"{path}: missing header terminator")
    try:
        lines = blob[:head_end].decode("ascii").splitlines()
    except UnicodeDecodeError:
        raise StoreValidationError(f"{path}: header is not ascii text")
    if not lines or not lines[0].startswith(MAGIC):
        raise StoreValidationError(f"{path}: not a profile-list file")
    version = lines[0][len(MAGIC) :].strip()
    if version != f"v{FORMAT_VERSION}":
        raise StoreVersionError(f"{path}: unsupported format version {version!r}")
    fields = {}
    for line in lines[1:]:
        if line == "---":
            break
        key, _, value = line.partition("=")
        fields[key] = value
    try:
        n = int(fields["n"])
        profile = parse_profile(fields["profile"])
        count = int(fields["classes"])
    except (KeyError, ValueError) as exc:
        raise StoreValidationError(f"{path}: malformed header ({exc})")
    if not 0 <= n <= MAX_VARS:
        raise StoreValidationError(f"{path}: n={n} out of range")
    if len(profile) != n:
        raise StoreValidationError(f"{path}: profile length != n")
    if expect_n is not None and n != expect_n:
        raise StoreDimensionError(f"{path}: file has n={n}, expected n={expect_n}")
    if expect_profile is not None and profile != expect_profile:
        raise StoreDimensionError(
            f"{path}: file holds {format_profile(profile)}, "
            f"expected {format_profile(expect_profile)}"
        )

    words = word_count(n)
    rec_size = 4 * (words + 1)
    body = blob[head_end:]
    if len(body) != count * rec_size:
        raise StoreValidationError(
            f"{path}: body holds {len(body)} bytes, "
            f"expected {count} records of {rec_size}"
        )
    table_bits = 1 << n
    fmt = f"<{words + 1}I"
    classes: dict[int, int] = {}
    for rec in range(count):
        vals = struct.unpack_from(fmt, body, rec * rec_size)
        table = 0
        for w in range(words):
            table |= vals[w] << (32 * w)
        if table >> table_bits:
            raise StoreValidationError(f"{path}: record {rec} has nonzero padding bits")
        if table in classes:
            raise StoreValidationError(f"{path}: duplicate table in record {rec}")
        classes[table] = vals[words]
    plist = ProfileClassList(n, profile, classes)
    sample = None if count <= FULL_CHECK_LIMIT else 10_000
    try:
        plist.validate(canonical_sample=sample)
    except ValueError as exc:
        raise StoreValidationError(f"{path}: {exc}")
    return plist


class ResultsDB:
    """Append-only CSV of per-profile results with duplicate cross-checking."""

    FIELDS = ("n", "profile", "r_count", "d_count", "elapsed_seconds", "timestamp")

    def __init__(self, path) -> None:
        self.path = Path(path)
        self._rows: dict[tuple[int, Profile], tuple[int, int]] = {}
        if self.path.exists():
            with open(self.path, newline="") as fh:
                for row in csv.DictReader(fh):
                    key = (int(row["n"]), parse_profile(row["profile"]))
                    self._rows[key] = (int(row["r_count"]), int(row["d_count"]))
        else:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "w", newline="") as fh:
                csv.writer(fh).writerow(self.FIELDS)

    def __contains__(self, key: tuple[int, Profile]) -> bool:
        return key in self._rows

    def get(self, n: int, profile: Profile) -> tuple[int, int] | None:
        return self._rows.get((n, profile))

    def record(
        self, n: int, profile: Profile, r_count: int, d_count: int, elapsed: float
    ) -> bool:
        """Append one finalized row; re-recording must confirm the original.

        Returns True when a new row was written, False for a confirming
        recomputation; raises ResultsMismatchError on disagreement.
        """
        key = (n, profile)
        prior = self._rows.get(key)
        if prior is not None:
            if prior != (r_count, d_count):
                raise ResultsMismatchError(
                    f"recomputation of n={n} {format_profile(profile)} gave "
                    f"(R={r_count}, D={d_count}), prior row has "
                    f"(R={prior[0]}, D={prior[1]})"
                )
            return False
        with open(self.path, "a", newline="") as fh:
            csv.writer(fh).writerow(
                [
                    n,
                    format_profile(profile),
                    r_count,
                    d_count,
                    f"{elapsed:.6f}",
                    datetime.now(timezone.utc).isoformat(),
                ]
            )
            fh.flush()
            os.fsync(fh.fileno())
        self._rows[key] = (r_count, d_count)
        return True

    def counts_for(self, n: int) -> dict[Profile, tuple[int, int]]:
        return {p: v for (m, p), v in self._rows.items() if m == n}
