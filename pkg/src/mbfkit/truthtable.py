"""Truth tables for monotone Boolean functions in reverse colex input order.

A function on ``n`` variables is stored as the integer whose bit ``q`` holds
the output at *position* ``q``.  Position ``q`` corresponds to the input set
that contains variable ``i`` exactly when bit ``i-1`` of ``q`` is clear, so
position 0 is the all-ones input and position ``2**n - 1`` the all-zeros
input.  Read position 0 first, ``x1 or (x2 and x3)`` prints as ``11101010``
with input column order {1,2,3}, {2,3}, {1,3}, {3}, {1,2}, {2}, {1}, {}.

Terms (inputs) are encoded as variable bitmasks: bit ``i-1`` set means
variable ``i`` belongs to the set.  ``mask = ~position & (2**n - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_VARS = 10
WORD_BITS = 32


def word_count(n: int) -> int:
    """Number of 32-bit words in the packed form of an n-variable table."""
    return max(1, (1 << n) // WORD_BITS)


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_VARS:
        raise ValueError(f"variable count must be in 0..{MAX_VARS}, got {n}")


@lru_cache(maxsize=None)
def _level_clear_mask(n: int, b: int) -> int:
    """Mask over the 2**n positions whose index has bit b clear."""
    half = 1 << b
    ones = (1 << half) - 1
    m = 0
    for start in range(0, 1 << n, 2 * half):
        m |= ones << start
    return m


@lru_cache(maxsize=None)
def monomial_table(n: int, term: int) -> int:
    """Table bits of the single conjunction given by a variable bitmask.

    Output 1 exactly at positions whose input contains every variable of
    ``term``; the empty term gives the constant-1 table.
    """
    _check_n(n)
    if term >> n:
        raise ValueError(f"term {term:#b} uses variables beyond {n}")
    bits = (1 << (1 << n)) - 1
    for b in range(n):
        if (term >> b) & 1:
            bits &= _level_clear_mask(n, b)
    return bits


@dataclass(frozen=True)
class TruthTable:
    """Immutable 2**n-bit output vector, bit q = output at position q."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if not 0 <= self.bits < (1 << (1 << self.n)):
            raise ValueError(f"table for n={self.n} needs exactly {1 << self.n} bits")

    @classmethod
    def from_string(cls, s: str) -> TruthTable:
        """Parse a 0/1 string that reads position 0 first."""
        size = len(s)
        if size & (size - 1) or not size:
            raise ValueError(f"string length {size} is not a power of two")
        n = size.bit_length() - 1
        bits = 0
        for q, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << q
            elif ch != "0":
                raise ValueError(f"invalid character {ch!r} in truth table string")
        return cls(n, bits)

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> q) & 1 else "0" for q in range(1 << self.n))

    def value_at(self, term: int) -> int:
        """Output on the input set given as a variable bitmask."""
        return (self.bits >> (~term & ((1 << self.n) - 1))) & 1

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class MinimalTermSet:
    """Antichain of variable subsets; the disjunctive core of a monotone function.

    ``terms`` holds variable bitmasks.  Empty set = constant 0; the single
    empty mask = constant 1.
    """

    n: int
    terms: frozenset[int]

    def __post_init__(self) -> None:
        _check_n(self.n)
        ts = sorted(self.terms)
        for t in ts:
            if t >> self.n:
                raise ValueError(f"term {t:#b} uses variables beyond {self.n}")
        for i, a in enumerate(ts):
            for b in ts[i + 1 :]:
                if a & b == a or a & b == b:
                    raise ValueError(
                        f"terms {_term_repr(a)} and {_term_repr(b)} are comparable; not an antichain"
                    )

    def as_variable_sets(self) -> list[tuple[int, ...]]:
        """Terms as sorted tuples of 1-based variable indices, sorted by (size, content)."""
        out = [tuple(v + 1 for v in range(self.n) if (t >> v) & 1) for t in self.terms]
        return sorted(out, key=lambda s: (len(s), s))

    def __len__(self) -> int:
        return len(self.terms)


def _term_repr(t: int) -> str:
    return "{" + ",".join(str(v + 1) for v in range(MAX_VARS) if (t >> v) & 1) + "}"


def is_monotone_bits(bits: int, n: int) -> bool:
    """Covering-pair monotonicity test on raw table bits.

    Clearing bit b of a position adds variable b+1 to the input, so the
    output there must be >= the output at the original position.
    """
    for b in range(n):
        mask = _level_clear_mask(n, b)
        high = (bits >> (1 << b)) & mask
        if high & ~bits & mask:
            return False
    return True


def is_monotone(t: TruthTable) -> bool:
    return is_monotone_bits(t.bits, t.n)


def minimal_term_masks(bits: int, n: int) -> list[int]:
    """Variable bitmasks of the minimal true inputs of a monotone table."""
    full = (1 << n) - 1
    out = []
    for q in range(1 << n):
        if not (bits >> q) & 1:
            continue
        minimal = True
        for b in range(n):
            # variable b+1 is in the input iff bit b of q is clear; dropping
            # it moves to position q | 1<<b, which must be a zero of f
            if not (q >> b) & 1 and (bits >> (q | (1 << b))) & 1:
                minimal = False
                break
        if minimal:
            out.append(~q & full)
    return out


def to_minimal_terms(t: TruthTable) -> MinimalTermSet:
    """Minimal true inputs of a monotone table, as an antichain."""
    if not is_monotone(t):
        raise ValueError("table is not monotone")
    return MinimalTermSet(t.n, frozenset(minimal_term_masks(t.bits, t.n)))


def table_of_terms(terms, n: int) -> int:
    """Raw table bits of the disjunction of the given term masks."""
    bits = 0
    for t in terms:
        bits |= monomial_table(n, t)
    return bits


def from_minimal_terms(m: MinimalTermSet) -> TruthTable:
    """Disjunction of an antichain of terms; inverse of :func:`to_minimal_terms`."""
    return TruthTable(m.n, table_of_terms(m.terms, m.n))


def pack(t: TruthTable) -> tuple[int, ...]:
    """Split the table into 32-bit words, word w = sum of bit (32w+k) << k.

    Tables shorter than one word are zero-padded on the right.
    """
    full = (1 << WORD_BITS) - 1
    return tuple((t.bits >> (WORD_BITS * w)) & full for w in range(word_count(t.n)))


def unpack(words, n: int) -> TruthTable:
    """Rebuild a table from its packed 32-bit words; inverse of :func:`pack`."""
    _check_n(n)
    words = tuple(words)
    if len(words) != word_count(n):
        raise ValueError(f"expected {word_count(n)} words for n={n}, got {len(words)}")
    bits = 0
    for w, val in enumerate(words):
        if not 0 <= val < (1 << WORD_BITS):
            raise ValueError(f"word {w} out of 32-bit range: {val}")
        bits |= val << (WORD_BITS * w)
    if bits >> (1 << n):
        raise ValueError("nonzero padding bits beyond table length")
    return TruthTable(n, bits)
