"""Symmetric-group action on truth tables and least-representative forms.

Renaming variables by a permutation permutes the bits of the position index,
so each permutation acts on a table as a gather over positions.  The
canonical form of a monotone function is the lexicographically smallest table
in its orbit, comparing position 0 first with '0' < '1'.

The batch canonicalizer walks all n! permutations in Steinhaus-Johnson-
Trotter order: successive permutations differ by one adjacent-variable
transposition, which on a bit-packed table is a constant number of masked
shift/xor word operations.  That keeps the full n! scan affordable for the
enumeration engine at n = 6 and 7.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np

from .truthtable import TruthTable, is_monotone_bits

MAX_SYM_VARS = 8
_CHUNK = 8192
_HALF = np.uint64(0xFFFFFFFF)


@dataclass(frozen=True)
class VariablePermutation:
    """Bijection on variables {1..n}; ``mapping[i-1]`` is the image of i."""

    n: int
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mapping) != self.n or sorted(self.mapping) != list(
            range(1, self.n + 1)
        ):
            raise ValueError(f"not a bijection on 1..{self.n}: {self.mapping}")

    @classmethod
    def identity(cls, n: int) -> VariablePermutation:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def all(cls, n: int):
        for m in itertools.permutations(range(1, n + 1)):
            yield cls(n, m)

    def inverse(self) -> VariablePermutation:
        inv = [0] * self.n
        for i, img in enumerate(self.mapping):
            inv[img - 1] = i + 1
        return VariablePermutation(self.n, tuple(inv))

    def compose(self, other: VariablePermutation) -> VariablePermutation:
        """self after other: i -> self(other(i))."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return VariablePermutation(
            self.n, tuple(self.mapping[other.mapping[i] - 1] for i in range(self.n))
        )


@dataclass(frozen=True)
class ClassRecord:
    """One equivalence class: least representative, orbit size, stabilizer size."""

    canonical: TruthTable
    orbit_size: int
    automorphism_count: int


# ---------------------------------------------------------------------------
# bit-level machinery
# ---------------------------------------------------------------------------


def _relocation_map(n: int, target: tuple[int, ...]) -> np.ndarray:
    """Position map sending bit b of the index to bit target[b]."""
    q = np.arange(1 << n, dtype=np.int32)
    out = np.zeros_like(q)
    for b in range(n):
        out |= ((q >> b) & 1) << target[b]
    return out


@lru_cache(maxsize=None)
def _sjt_swaps(n: int) -> tuple[int, ...]:
    """Adjacent transpositions (swap variables b+1, b+2) visiting all of S_n.

    Applying the swaps in order to a start table yields every orbit member
    exactly once (the start itself is the identity visit).
    """
    perm = list(range(n))
    dirs = [-1] * n
    swaps = []
    while True:
        mobile, mi = -1, -1
        for i in range(n):
            j = i + dirs[i]
            if 0 <= j < n and perm[i] > perm[j] and perm[i] > mobile:
                mobile, mi = perm[i], i
        if mi < 0:
            break
        j = mi + dirs[mi]
        swaps.append(min(mi, j))
        perm[mi], perm[j] = perm[j], perm[mi]
        dirs[mi], dirs[j] = dirs[j], dirs[mi]
        for i in range(n):
            if perm[i] > mobile:
                dirs[i] = -dirs[i]
    if len(swaps) != factorial(n) - 1:
        raise AssertionError("permutation walk construction is broken")
    return tuple(swaps)


@lru_cache(maxsize=None)
def _inword_swap_mask(b: int) -> np.uint64:
    """64-bit mask of indices with bit b set and bit b+1 clear (swap lower ends)."""
    m = 0
    for beta in range(64):
        if (beta >> b) & 1 and not (beta >> (b + 1)) & 1:
            m |= 1 << beta
    return np.uint64(m)


def _apply_adjacent_swap(kw: np.ndarray, b: int) -> None:
    """Swap index bits b and b+1 of the packed tables, in place.

    ``kw`` has shape (B, w); column j covers reversed-position indices
    [64j, 64j+64), bit beta of column j being index 64j+beta.
    """
    if b <= 4:
        d = np.uint64(1 << b)
        mask = _inword_swap_mask(b)
        t = ((kw >> d) ^ kw) & mask
        kw ^= t ^ (t << d)
    elif b == 5:
        thirtytwo = np.uint64(32)
        for j in range(0, kw.shape[1], 2):
            lo, hi = kw[:, j], kw[:, j + 1]
            t = ((lo >> thirtytwo) ^ hi) & _HALF
            lo ^= t << thirtytwo
            hi ^= t
    elif b == 6:
        kw[:, [1, 2]] = kw[:, [2, 1]]
    else:
        raise AssertionError(f"unsupported swap bit {b}")


def _encode_kwords(n: int, tables) -> np.ndarray:
    """(B, w) uint64; bit beta of column j = output at position m-1-(64j+beta)."""
    m = 1 << n
    nbytes = max(1, m // 8)
    buf = b"".join(int(t).to_bytes(nbytes, "little") for t in tables)
    raw = np.frombuffer(buf, dtype=np.uint8).reshape(len(tables), nbytes)
    bits = np.unpackbits(raw, axis=1, bitorder="little")[:, :m]
    rev = np.ascontiguousarray(bits[:, ::-1])
    if m < 64:
        pad = np.zeros((len(tables), 64 - m), dtype=np.uint8)
        rev = np.concatenate([rev, pad], axis=1)
    packed = np.ascontiguousarray(np.packbits(rev, axis=1, bitorder="little"))
    return packed.view("<u8").astype(np.uint64)


def _kwords_to_external(n: int, kw: np.ndarray) -> np.ndarray:
    """Reorder to the interchange layout: word 0 first, position 0 at its MSB."""
    out = np.ascontiguousarray(kw[:, ::-1])
    m = 1 << n
    if m < 64:
        out = out << np.uint64(64 - m)
    return out


def _lex_less(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Rowwise comparison of kword arrays, highest column most significant."""
    w = a.shape[1]
    out = a[:, w - 1] < b[:, w - 1]
    tie = a[:, w - 1] == b[:, w - 1]
    for j in range(w - 2, -1, -1):
        out |= tie & (a[:, j] < b[:, j])
        tie &= a[:, j] == b[:, j]
    return out


def batch_canonical_words(n: int, tables) -> tuple[np.ndarray, np.ndarray]:
    """Canonicalize raw table ints in bulk.

    Returns ``(words, aut)``: ``words`` is a (B, w) uint64 array whose rows
    compare exactly like the canonical tables (word 0 first, position 0 at
    the most significant bit), ``aut`` the stabilizer sizes.
    """
    if not 0 <= n <= MAX_SYM_VARS:
        raise ValueError(f"canonicalization supports 0 <= n <= {MAX_SYM_VARS}")
    total = len(tables)
    w = max(1, (1 << n) // 64)
    words = np.empty((total, w), dtype=np.uint64)
    auts = np.empty(total, dtype=np.int64)
    swaps = _sjt_swaps(n)
    for start in range(0, total, _CHUNK):
        chunk = tables[start : start + _CHUNK]
        kw = _encode_kwords(n, chunk)
        orig = kw.copy()
        cur = kw.copy()
        aut = np.ones(len(chunk), dtype=np.int64)
        for b in swaps:
            _apply_adjacent_swap(kw, b)
            less = _lex_less(kw, cur)
            if less.any():
                cur[less] = kw[less]
            if w == 1:
                aut += kw[:, 0] == orig[:, 0]
            else:
                aut += (kw == orig).all(axis=1)
        words[start : start + len(chunk)] = _kwords_to_external(n, cur)
        auts[start : start + len(chunk)] = aut
    return words, auts


def words_to_tables(n: int, words: np.ndarray) -> list[int]:
    """Decode canonical word rows back to raw table ints."""
    m = 1 << n
    big = np.ascontiguousarray(words).astype(">u8")
    raw = np.frombuffer(big.tobytes(), dtype=np.uint8).reshape(words.shape[0], -1)
    bits = np.unpackbits(raw, axis=1, bitorder="big")
    little = np.packbits(bits, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") & ((1 << m) - 1) for row in little]


# ---------------------------------------------------------------------------
# reference canonicalizer: per-permutation position gathers, kept as an
# independent check on the swap-walk implementation
# ---------------------------------------------------------------------------


@lru_cache(maxsize=4)
def _position_maps(n: int) -> np.ndarray:
    m = 1 << n
    pad = max(64, ((m + 63) // 64) * 64)
    perms = sorted(itertools.permutations(range(n)))
    maps = np.empty((len(perms), pad), dtype=np.int16)
    tail = np.arange(m, pad, dtype=np.int16)
    for idx, p in enumerate(perms):
        maps[idx, :m] = _relocation_map(n, p).astype(np.int16)
        maps[idx, m:] = tail
    return maps


def _batch_canonical_words_reference(n: int, tables) -> tuple[np.ndarray, np.ndarray]:
    maps = _position_maps(n)
    m = 1 << n
    pad = maps.shape[1]
    nbytes = pad // 8
    buf = b"".join(int(t).to_bytes(nbytes, "little") for t in tables)
    raw = np.frombuffer(buf, dtype=np.uint8).reshape(len(tables), nbytes)
    bits = np.unpackbits(raw, axis=1, bitorder="little")

    def lex_words(bt):
        packed = np.ascontiguousarray(np.packbits(bt, axis=1, bitorder="big"))
        return packed.view(">u8").astype(np.uint64)

    orig = lex_words(bits)
    cur = orig.copy()
    aut = np.ones(len(tables), dtype=np.int64)
    for p in range(1, maps.shape[0]):
        pw = lex_words(bits[:, maps[p]])
        less = pw[:, 0] < cur[:, 0]
        tie = pw[:, 0] == cur[:, 0]
        for j in range(1, pw.shape[1]):
            less |= tie & (pw[:, j] < cur[:, j])
            tie &= pw[:, j] == cur[:, j]
        if less.any():
            cur[less] = pw[less]
        aut += (pw == orig).all(axis=1)
    return cur, aut


# ---------------------------------------------------------------------------
# public single-table operations
# ---------------------------------------------------------------------------


def apply_permutation(t: TruthTable, p: VariablePermutation) -> TruthTable:
    """Rename variables: term T of the input becomes p(T) in the output."""
    if t.n != p.n:
        raise ValueError(f"dimension mismatch: table n={t.n}, permutation n={p.n}")
    if t.n == 0:
        return t
    inv0 = tuple(v - 1 for v in p.inverse().mapping)
    posmap = _relocation_map(t.n, inv0)
    bits = 0
    src = t.bits
    for q in range(1 << t.n):
        if (src >> int(posmap[q])) & 1:
            bits |= 1 << q
    return TruthTable(t.n, bits)


def canonical_form(t: TruthTable) -> ClassRecord:
    """Least representative of the orbit of a monotone table."""
    if not is_monotone_bits(t.bits, t.n):
        raise ValueError("canonical form is defined for monotone tables only")
    words, auts = batch_canonical_words(t.n, [t.bits])
    aut = int(auts[0])
    canon = words_to_tables(t.n, words)[0]
    return ClassRecord(
        canonical=TruthTable(t.n, canon),
        orbit_size=factorial(t.n) // aut,
        automorphism_count=aut,
    )


def is_asymmetric(t: TruthTable) -> bool:
    """True when only the identity renaming fixes the function.

    Trivially-symmetric dimensions (n <= 1, where the identity is the whole
    group) do not count as asymmetric.
    """
    if not is_monotone_bits(t.bits, t.n):
        raise ValueError("asymmetry is defined for monotone tables only")
    if factorial(t.n) == 1:
        return False
    return canonical_form(t).automorphism_count == 1
