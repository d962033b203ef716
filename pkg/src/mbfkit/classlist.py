"""Per-profile collections of inequivalent monotone functions."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .profiles import Profile, format_profile
from .symmetry import ClassRecord, batch_canonical_words, words_to_tables
from .truthtable import TruthTable, is_monotone_bits, minimal_term_masks


@dataclass
class ProfileClassList:
    """All inequivalent monotone functions sharing one profile.

    ``classes`` maps each canonical (least-representative) table to its orbit
    size; stabilizer sizes follow from orbit * aut = n!.
    """

    n: int
    profile: Profile
    classes: dict[int, int] = field(default_factory=dict)

    @property
    def r_count(self) -> int:
        return len(self.classes)

    @property
    def d_count(self) -> int:
        return sum(self.classes.values())

    @property
    def aut1_count(self) -> int:
        """Classes fixed only by the identity (full orbit)."""
        nf = factorial(self.n)
        return sum(1 for o in self.classes.values() if o == nf)

    def records(self) -> list[ClassRecord]:
        nf = factorial(self.n)
        return [
            ClassRecord(TruthTable(self.n, t), orbit, nf // orbit)
            for t, orbit in sorted(self.classes.items())
        ]

    def validate(self, canonical_sample: int | None = None) -> None:
        """Check monotonicity, profile, and canonicality of every member.

        ``canonical_sample`` caps how many entries go through the full n!
        canonicality re-check (monotonicity and profile are always checked
        for all entries); None means all.
        """
        nf = factorial(self.n)
        want = self.profile
        tables = sorted(self.classes)
        for t in tables:
            if not is_monotone_bits(t, self.n):
                raise ValueError(f"stored table {t:#x} is not monotone")
            got = [0] * self.n
            for mask in minimal_term_masks(t, self.n):
                got[mask.bit_count() - 1] += 1
            if tuple(got) != want:
                raise ValueError(
                    f"table {t:#x} has profile {format_profile(tuple(got))}, "
                    f"expected {format_profile(want)}"
                )
            orbit = self.classes[t]
            if orbit <= 0 or nf % orbit:
                raise ValueError(f"orbit size {orbit} does not divide {self.n}! = {nf}")
        check = tables if canonical_sample is None else tables[:canonical_sample]
        if check:
            words, auts = batch_canonical_words(self.n, check)
            decoded = words_to_tables(self.n, words)
            for i, t in enumerate(check):
                if decoded[i] != t:
                    raise ValueError(f"table {t:#x} is not canonical")
                if nf // int(auts[i]) != self.classes[t]:
                    raise ValueError(
                        f"table {t:#x} claims orbit {self.classes[t]}, "
                        f"actual {nf // int(auts[i])}"
                    )
